#include "gstar/forms.hpp"

#include <algorithm>
#include <sstream>

namespace gstar {

LinearForm LinearForm::from_coeffs(std::vector<Scalar> coeffs) {
    if (coeffs.empty())
        throw ValidationError("zero_form", "a linear form needs at least one coefficient");
    const FieldSpec& f = coeffs.front().field();
    std::size_t lead = coeffs.size();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (!(coeffs[j].field() == f))
            throw ValidationError("field_mismatch", "coefficients over different fields");
        if (lead == coeffs.size() && !coeffs[j].is_zero()) lead = j;
    }
    if (lead == coeffs.size())
        throw ValidationError("zero_form", "the zero vector is not a linear form");
    Scalar inv = coeffs[lead].inverse();
    for (Scalar& c : coeffs) c = c * inv;
    return LinearForm(std::move(coeffs));
}

LinearForm LinearForm::from_ints(const std::vector<long>& coeffs, const FieldSpec& f) {
    std::vector<Scalar> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.push_back(Scalar::of_int(c, f));
    return from_coeffs(std::move(v));
}

Scalar LinearForm::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != coeffs_.size())
        throw ValidationError("shape_mismatch", "point length differs from ambient dimension");
    Scalar acc = Scalar::zero(field());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) acc = acc + coeffs_[j] * point[j];
    return acc;
}

int LinearForm::compare(const LinearForm& o) const {
    if (coeffs_.size() != o.coeffs_.size())
        return coeffs_.size() < o.coeffs_.size() ? -1 : 1;
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (int c = coeffs_[j].compare(o.coeffs_[j]); c != 0) return c;
    return 0;
}

FormList::FormList(std::vector<LinearForm> forms) : forms_(std::move(forms)) {
    if (forms_.empty()) throw ValidationError("empty_form_list", "need at least one form");
    for (const LinearForm& f : forms_) {
        if (f.ambient() != forms_.front().ambient())
            throw ValidationError("shape_mismatch", "forms with different ambient dimensions");
        if (!(f.field() == forms_.front().field()))
            throw ValidationError("field_mismatch", "forms over different fields");
    }
}

Matrix FormList::coefficient_matrix() const {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(forms_.size());
    for (const LinearForm& f : forms_) rows.push_back(f.coeffs());
    return Matrix::from_rows(rows, ambient(), field());
}

LinearSpan LinearSpan::from_rows(const Matrix& rows) {
    RrefResult rr = rref_rank(rows);
    if (rr.rank == 0)
        throw ValidationError("zero_span", "a linear span needs a nonzero generator");
    Matrix basis(rr.rank, rows.cols(), rows.field());
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = rr.rref.at(i, j);
    return LinearSpan(std::move(basis));
}

LinearSpan LinearSpan::from_forms(const std::vector<LinearForm>& forms) {
    if (forms.empty())
        throw ValidationError("zero_span", "a linear span needs a nonzero generator");
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(forms.size());
    for (const LinearForm& f : forms) rows.push_back(f.coeffs());
    return from_rows(Matrix::from_rows(rows, forms.front().ambient(), forms.front().field()));
}

bool LinearSpan::contains_form(const LinearForm& f) const {
    Matrix one = Matrix::from_rows({f.coeffs()}, f.ambient(), f.field());
    return span_contains(one, basis_);
}

bool LinearSpan::contains(const LinearSpan& o) const { return span_contains(o.basis_, basis_); }

LinearSpan span_of(const std::vector<LinearForm>& forms) { return LinearSpan::from_forms(forms); }

bool is_essential(const FormList& lambda) {
    return rank_of(lambda.coefficient_matrix()) == lambda.ambient();
}

bool is_essential(const Arrangement& a) {
    Matrix stack(0, a.ambient, a.field);
    for (const LinearSpan& s : a.components) stack = Matrix::stacked(stack, s.basis());
    return rank_of(stack) == a.ambient;
}

ValidationReport validate_arrangement(const std::vector<Matrix>& raw_components) {
    ValidationReport report;
    if (raw_components.empty())
        throw ValidationError("too_few_components", "an arrangement needs components");

    const std::size_t k = raw_components.front().cols();
    const FieldSpec field = raw_components.front().field();
    for (const Matrix& m : raw_components) {
        if (m.cols() != k)
            throw ValidationError("shape_mismatch", "components with different ambient dimensions");
        if (!(m.field() == field))
            throw ValidationError("field_mismatch", "components over different fields");
    }

    if (raw_components.size() < 2)
        report.issues.push_back({"too_few_components",
                                 "need at least two components, got " +
                                     std::to_string(raw_components.size())});

    std::vector<LinearSpan> spans;
    for (std::size_t i = 0; i < raw_components.size(); ++i) {
        std::size_t r = rank_of(raw_components[i]);
        if (r == 0 || r == k) {
            report.issues.push_back({"component_codim_out_of_range",
                                     "component " + std::to_string(i + 1) + " has codim " +
                                         std::to_string(r) + ", outside [1, " +
                                         std::to_string(k - 1) + "]"});
            continue;
        }
        spans.push_back(LinearSpan::from_rows(raw_components[i]));
    }

    if (spans.size() == raw_components.size()) {
        for (std::size_t i = 0; i < spans.size(); ++i)
            for (std::size_t j = i + 1; j < spans.size(); ++j)
                if (spans[i].contains(spans[j]) || spans[j].contains(spans[i]))
                    report.issues.push_back(
                        {"comparable_components", "components " + std::to_string(i + 1) + " and " +
                                                      std::to_string(j + 1) + " are comparable"});

        Arrangement a{spans, k, field};
        if (!is_essential(a))
            report.issues.push_back(
                {"not_essential", "component ideals do not sum to the irrelevant ideal"});
        report.normalized = std::move(a);
    }

    report.valid = report.issues.empty();
    return report;
}

Arrangement make_arrangement(const std::vector<Matrix>& raw_components) {
    ValidationReport r = validate_arrangement(raw_components);
    if (!r.valid)
        throw ValidationError(r.issues.front().code, r.issues.front().detail);
    return r.normalized;
}

std::vector<mpz_class> primitive_integer_coeffs(const LinearForm& f) {
    if (!f.field().is_rational())
        throw ValidationError("field_mismatch", "integer coefficients need a rational form");
    mpz_class lcm_den(1);
    for (const Scalar& c : f.coeffs())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den().get_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(f.ambient());
    mpz_class content(0);
    for (const Scalar& c : f.coeffs()) {
        mpq_class scaled = c.rational() * lcm_den;
        out.push_back(scaled.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
    }
    for (mpz_class& z : out) z /= content;
    // canonical forms lead with +1, so the first nonzero entry is already positive
    return out;
}

std::vector<std::uint32_t> form_mod_p(const LinearForm& f, std::uint32_t p) {
    std::vector<std::uint32_t> out;
    out.reserve(f.ambient());
    if (f.field().is_rational()) {
        for (const mpz_class& z : primitive_integer_coeffs(f)) {
            mpz_class r = z % p;
            if (r < 0) r += p;
            out.push_back(std::uint32_t(r.get_ui()));
        }
    } else {
        if (f.field().p != p)
            throw ValidationError("field_mismatch", "form already lives over a different prime");
        for (const Scalar& c : f.coeffs()) out.push_back(c.residue());
    }
    return out;
}

std::string render_form(const LinearForm& f, const std::vector<std::string>& names) {
    if (names.size() != f.ambient())
        throw ValidationError("shape_mismatch", "variable name count differs from ambient");
    std::ostringstream os;
    bool first = true;
    if (f.field().is_rational()) {
        std::vector<mpz_class> z = primitive_integer_coeffs(f);
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (z[j] == 0) continue;
            if (z[j] > 0 && !first) os << "+";
            if (z[j] == -1)
                os << "-";
            else if (z[j] != 1)
                os << z[j].get_str();
            os << names[j];
            first = false;
        }
    } else {
        for (std::size_t j = 0; j < f.ambient(); ++j) {
            const Scalar& c = f.coeffs()[j];
            if (c.is_zero()) continue;
            if (!first) os << "+";
            if (!c.is_one()) os << c.str();
            os << names[j];
            first = false;
        }
    }
    return os.str();
}

}  // namespace gstar
