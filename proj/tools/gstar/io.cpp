#include "io.hpp"

#include <fstream>

namespace gstar::cli {

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("malformed_input", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("malformed_input", path + ": " + e.what());
    }
}

mpq_class parse_rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return mpq_class(v.get<long>());
    if (v.is_string()) {
        try {
            mpq_class q(v.get<std::string>());
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw ValidationError("malformed_input", where + ": bad rational literal");
        }
    }
    throw ValidationError("malformed_input",
                          where + ": coefficients must be integers or \"p/q\" strings");
}

Scalar parse_scalar(const json& v, const FieldSpec& field, const std::string& where) {
    mpq_class q = parse_rational(v, where);
    if (field.is_rational()) return Scalar::of_rational(q);
    mpz_class den = q.get_den() % field.p;
    if (den == 0)
        throw ValidationError("malformed_input", where + ": denominator vanishes mod p");
    mpz_class num = q.get_num() % field.p;
    if (num < 0) num += field.p;
    std::uint32_t r = fp::mul(std::uint32_t(num.get_ui()),
                              fp::inv(std::uint32_t(den.get_ui()), field.p), field.p);
    return Scalar::of_residue(r, field);
}

std::vector<std::string> parse_variables(const json& doc, std::size_t coeff_len) {
    if (!doc.contains("variables") || !doc["variables"].is_array())
        throw ValidationError("malformed_input", "missing \"variables\" array");
    std::vector<std::string> names;
    for (const json& v : doc["variables"]) {
        if (!v.is_string())
            throw ValidationError("malformed_input", "variable names must be strings");
        names.push_back(v.get<std::string>());
    }
    if (names.empty() || names.size() != coeff_len)
        throw ValidationError("malformed_input",
                              "coefficient vectors must match the declared variables");
    return names;
}

std::vector<Scalar> parse_vector(const json& row, const FieldSpec& field,
                                 const std::string& where) {
    if (!row.is_array() || row.empty())
        throw ValidationError("malformed_input", where + ": expected a coefficient array");
    std::vector<Scalar> out;
    for (const json& v : row) out.push_back(parse_scalar(v, field, where));
    return out;
}

}  // namespace

json RunConfig::echo() const {
    json j;
    j["field"] = field.str();
    j["verify_primes"] = verify_primes;
    j["subset_budget"] = subset_budget;
    j["scan_budget"] = scan_budget;
    j["output"] = output;
    j["seed"] = seed;
    return j;
}

FieldSpec parse_field(const std::string& spec) {
    if (spec == "rational") return FieldSpec::rationals();
    if (spec.rfind("fp:", 0) == 0) {
        try {
            unsigned long p = std::stoul(spec.substr(3));
            return FieldSpec::prime(std::uint32_t(p));
        } catch (const std::logic_error&) {
            throw ValidationError("invalid_field", "cannot parse modulus in " + spec);
        }
    }
    throw ValidationError("invalid_field", "field must be rational or fp:<p>, got " + spec);
}

LambdaInput load_lambda(const std::string& path, const FieldSpec& field) {
    json doc = load_json(path);
    if (!doc.contains("forms") || !doc["forms"].is_array() || doc["forms"].empty())
        throw ValidationError("malformed_input", "missing \"forms\" array");
    std::size_t k = doc["forms"][0].is_array() ? doc["forms"][0].size() : 0;
    std::vector<std::string> names = parse_variables(doc, k);

    std::vector<LinearForm> forms;
    for (std::size_t i = 0; i < doc["forms"].size(); ++i) {
        std::vector<Scalar> coeffs =
            parse_vector(doc["forms"][i], field, "forms[" + std::to_string(i) + "]");
        if (coeffs.size() != k)
            throw ValidationError("malformed_input", "forms have inconsistent lengths");
        forms.push_back(LinearForm::from_coeffs(std::move(coeffs)));
    }
    return LambdaInput{std::move(names), FormList(std::move(forms))};
}

ArrangementInput load_arrangement(const std::string& path, const FieldSpec& field) {
    json doc = load_json(path);
    if (!doc.contains("components") || !doc["components"].is_array() ||
        doc["components"].empty())
        throw ValidationError("malformed_input", "missing \"components\" array");
    const json& first = doc["components"][0];
    if (!first.is_object() || !first.contains("generators") || !first["generators"].is_array() ||
        first["generators"].empty())
        throw ValidationError("malformed_input", "components need a \"generators\" array");
    std::size_t k = first["generators"][0].size();
    std::vector<std::string> names = parse_variables(doc, k);

    std::vector<Matrix> components;
    for (std::size_t c = 0; c < doc["components"].size(); ++c) {
        const json& comp = doc["components"][c];
        if (!comp.is_object() || !comp.contains("generators") || !comp["generators"].is_array() ||
            comp["generators"].empty())
            throw ValidationError("malformed_input", "components need a \"generators\" array");
        std::vector<std::vector<Scalar>> rows;
        for (std::size_t r = 0; r < comp["generators"].size(); ++r) {
            std::vector<Scalar> row =
                parse_vector(comp["generators"][r], field,
                             "components[" + std::to_string(c) + "].generators[" +
                                 std::to_string(r) + "]");
            if (row.size() != k)
                throw ValidationError("malformed_input", "generators have inconsistent lengths");
            rows.push_back(std::move(row));
        }
        components.push_back(Matrix::from_rows(rows, k, field));
    }
    return ArrangementInput{std::move(names), std::move(components)};
}

std::vector<ProjPoint> load_points(const std::string& path) {
    json doc = load_json(path);
    if (!doc.contains("points") || !doc["points"].is_array() || doc["points"].empty())
        throw ValidationError("malformed_input", "missing \"points\" array");
    std::vector<ProjPoint> points;
    for (std::size_t i = 0; i < doc["points"].size(); ++i) {
        const json& row = doc["points"][i];
        if (!row.is_array() || row.size() != 3)
            throw ValidationError("malformed_input",
                                  "points[" + std::to_string(i) + "] must have 3 coordinates");
        std::array<mpq_class, 3> q;
        for (std::size_t j = 0; j < 3; ++j)
            q[j] = parse_rational(row[j], "points[" + std::to_string(i) + "]");
        points.push_back(ProjPoint::from_rationals(q));
    }
    return points;
}

}  // namespace gstar::cli
