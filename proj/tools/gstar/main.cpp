#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>

#include "reports.hpp"

namespace gstar::cli {

namespace {

json with_envelope(const std::string& command, const RunConfig& config, json result) {
    json report;
    report["command"] = command;
    report["config"] = config.echo();
    report["result"] = std::move(result);
    return report;
}

int emit_error(const std::string& command, const RunConfig& config, const std::string& code,
               const std::string& message, int exit_code) {
    json report;
    report["command"] = command;
    report["config"] = config.echo();
    report["error"] = {{"code", code}, {"message", message}};
    emit(report, config);
    return exit_code;
}

int guarded(const std::string& command, const RunConfig& config,
            const std::function<int()>& body) {
    try {
        return body();
    } catch (const BudgetError& e) {
        return emit_error(command, config, "budget_exceeded", e.what(), 4);
    } catch (const VerificationError& e) {
        return emit_error(command, config, "verification_failed", e.what(), 3);
    } catch (const ValidationError& e) {
        return emit_error(command, config, e.code(), e.what(), 2);
    }
}

// verify primes with good reduction, topping up from the fallback list
std::vector<std::uint32_t> usable_primes(const FormList& lambda,
                                         const std::vector<std::uint32_t>& wanted) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p : wanted)
        if (is_prime_u32(p) && reduction_is_good(lambda, p)) out.push_back(p);
    for (std::uint32_t p : kScanPrimes) {
        if (out.size() >= wanted.size()) break;
        if (std::find(out.begin(), out.end(), p) == out.end() && reduction_is_good(lambda, p))
            out.push_back(p);
    }
    if (out.empty())
        throw ValidationError("bad_reduction", "no verification prime reduces well");
    return out;
}

int run_gsc(const std::string& path, std::size_t a, const RunConfig& config) {
    LambdaInput in = load_lambda(path, config.field);
    StarConfig g(in.lambda, a);
    MinimalPrimeSet mp = minimal_primes(g, config.subset_budget);
    Classification cls = classify(g, config.subset_budget);
    emit(with_envelope("gsc", config, gsc_report(in.variables, g, mp, cls)), config);
    return 0;
}

int run_interpolate(const std::string& path, const RunConfig& config) {
    ArrangementInput in = load_arrangement(path, config.field);
    ValidationReport v = validate_arrangement(in.components);
    if (!v.valid) {
        json issues = json::array();
        for (const ValidationIssue& issue : v.issues)
            issues.push_back({{"code", issue.code}, {"detail", issue.detail}});
        json result;
        result["valid"] = false;
        result["issues"] = issues;
        emit(with_envelope("interpolate", config, result), config);
        return 2;
    }
    InterpolationResult r = interpolate(v.normalized, config.subset_budget);
    bool pigeonhole_ok = verify_pigeonhole(r, config.subset_budget);
    emit(with_envelope("interpolate", config, interpolate_report(in.variables, r, pigeonhole_ok)),
         config);
    return pigeonhole_ok ? 0 : 3;
}

int run_planar(const std::string& path, const RunConfig& config) {
    std::vector<ProjPoint> points = load_points(path);
    PlanarInterpolation p = planar_interpolate(points, config.subset_budget);
    emit(with_envelope("planar", config, planar_report(p)), config);
    return p.verified && p.profile_ok && p.poincare_matches ? 0 : 3;
}

int run_code(const std::string& path, std::size_t a, const RunConfig& config) {
    LambdaInput in = load_lambda(path, config.field);
    StarConfig g(in.lambda, a);
    GeneratorMatrix gen = GeneratorMatrix::from_forms(in.lambda);

    std::uint32_t p;
    if (in.lambda.field().is_rational()) {
        std::vector<std::uint32_t> candidates = config.verify_primes;
        candidates.insert(candidates.end(), kScanPrimes.begin(), kScanPrimes.end());
        p = good_primes(in.lambda, 1, candidates).front();
    } else {
        p = in.lambda.field().p;
    }

    std::size_t dist = min_distance(gen, p, config.scan_budget);
    std::vector<CodewordClass> classes =
        a >= 1 ? minimal_codewords_upto(gen, a - 1, p, config.scan_budget)
               : std::vector<CodewordClass>{};
    std::vector<Subcode> maximal =
        maximal_subcodes_of_support_at_most(gen, a - 1, config.subset_budget);
    MinimalPrimeSet mp = minimal_primes(g, config.subset_budget);
    std::vector<LinearSpan> spans;
    for (const WitnessedSpan& w : mp.primes) spans.push_back(w.span);
    std::vector<Subcode> components = component_subcodes(gen, spans);

    emit(with_envelope("code", config,
                       code_report(in.variables, gen, a, p, dist, classes, maximal, components,
                                   mp)),
         config);
    return 0;
}

int run_ara(const std::string& path, std::size_t a, std::uint32_t exponent,
            const RunConfig& config) {
    LambdaInput in = load_lambda(path, config.field);
    StarConfig g(in.lambda, a);
    check_subset_budget(in.lambda.size(), in.lambda.size() - a, config.subset_budget,
                        "generator expansion");
    SVSystem sys = sv_generators(in.lambda, a, exponent);
    SvConditionReport conditions = verify_sv_conditions(sys.partition);
    BoundReport b = bounds(g, config.subset_budget);

    LocusMatchReport locus;
    if (in.lambda.field().is_rational()) {
        std::vector<std::uint32_t> primes = usable_primes(in.lambda, config.verify_primes);
        locus = verify_zero_locus_match(sys, g, primes, config.subset_budget, config.scan_budget);
    } else {
        locus = verify_zero_locus_match(sys, g, {in.lambda.field().p}, config.subset_budget,
                                        config.scan_budget);
    }

    emit(with_envelope("ara", config, ara_report(in.variables, sys, conditions, b, locus)),
         config);
    return conditions.ok && locus.symbolic_containment && locus.all_match ? 0 : 3;
}

LinearForm mk_form(const std::vector<long>& coeffs) {
    return LinearForm::from_ints(coeffs, FieldSpec::rationals());
}

FormList mk_lambda(const std::vector<std::vector<long>>& rows) {
    std::vector<LinearForm> forms;
    forms.reserve(rows.size());
    for (const auto& r : rows) forms.push_back(mk_form(r));
    return FormList(std::move(forms));
}

Matrix mk_matrix(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    std::vector<std::vector<Scalar>> srows;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (long v : r) row.push_back(Scalar::of_int(v, FieldSpec::rationals()));
        srows.push_back(std::move(row));
    }
    return Matrix::from_rows(srows, cols, FieldSpec::rationals());
}

int run_demo_hartshorne(const RunConfig& config) {
    const std::vector<std::string> names{"x1", "x2", "x3", "x4"};
    FormList lambda = mk_lambda(
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
    StarConfig g(lambda, 4);

    MinimalPrimeSet mp = minimal_primes(g, config.subset_budget);
    Classification cls = classify(g, config.subset_budget);
    SVSystem sys = sv_generators(lambda, 4);
    SvConditionReport conditions = verify_sv_conditions(sys.partition);
    BoundReport b = bounds(g, config.subset_budget);
    LocusMatchReport locus =
        verify_zero_locus_match(sys, g, {5, 7}, config.subset_budget, config.scan_budget);

    LinearSpan lines12 = span_of({mk_form({1, 0, 0, 0}), mk_form({0, 1, 0, 0})});
    LinearSpan lines34 = span_of({mk_form({0, 0, 1, 0}), mk_form({0, 0, 0, 1})});
    auto has_span = [&](const LinearSpan& s) {
        return std::any_of(mp.primes.begin(), mp.primes.end(),
                           [&](const WitnessedSpan& w) { return w.span == s; });
    };

    json checks;
    checks["minimal_primes_are_the_two_lines"] =
        mp.primes.size() == 2 && has_span(lines12) && has_span(lines34);
    checks["height_is_2"] = mp.height == 2;
    checks["partition_sizes_1_4_10"] =
        sys.partition.families.size() == 3 && sys.partition.families[0].size() == 1 &&
        sys.partition.families[1].size() == 4 && sys.partition.families[2].size() == 10;
    checks["conditions_ok"] = conditions.ok;
    checks["three_generators"] = sys.generators.size() == 3;
    checks["locus_matches_mod_5_and_7"] = locus.all_match;
    checks["not_stci"] = !b.stci_certified;

    bool all = true;
    for (const auto& [key, value] : checks.items()) all = all && value.get<bool>();

    json result;
    result["gsc"] = gsc_report(names, g, mp, cls);
    result["ara"] = ara_report(names, sys, conditions, b, locus);
    result["checks"] = checks;
    result["all_checks_pass"] = all;
    emit(with_envelope("demo hartshorne", config, result), config);
    return all ? 0 : 3;
}

int run_demo_example22(const RunConfig& config) {
    const std::vector<std::string> names{"x", "y", "z", "w"};
    FormList lambda = mk_lambda({{1, 0, 0, 0},
                                 {0, 0, 1, 0},
                                 {0, 0, 0, 1},
                                 {1, 0, 1, 1},
                                 {0, 1, 0, 0},
                                 {1, 1, 0, 0},
                                 {1, -1, 0, 0}});
    StarConfig g(lambda, 4);
    MinimalPrimeSet mp = minimal_primes(g, config.subset_budget);
    Classification cls = classify(g, config.subset_budget);

    Arrangement arr = make_arrangement(
        {mk_matrix({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 4),
         mk_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4)});
    EqualityReport eq = radical_equals_arrangement(g, arr, config.subset_budget);
    InterpolationResult r = interpolate(arr, config.subset_budget);
    bool pigeonhole_ok = verify_pigeonhole(r, config.subset_budget);
    BoundReport b = bounds(arr);

    LinearSpan sxzw = span_of({mk_form({1, 0, 0, 0}), mk_form({0, 0, 1, 0}),
                               mk_form({0, 0, 0, 1})});
    LinearSpan sxy = span_of({mk_form({1, 0, 0, 0}), mk_form({0, 1, 0, 0})});
    auto has_span = [&](const LinearSpan& s) {
        return std::any_of(mp.primes.begin(), mp.primes.end(),
                           [&](const WitnessedSpan& w) { return w.span == s; });
    };

    json checks;
    checks["minimal_primes_match"] = mp.primes.size() == 2 && has_span(sxzw) && has_span(sxy);
    checks["radical_equality"] = eq.equal;
    checks["aleph_is_4"] = r.aleph == 4;
    checks["pigeonhole_verified"] = pigeonhole_ok;
    checks["sv_bound_4"] = b.sv_bound == 4;
    checks["ee_bound_3"] = b.ee_bound == 3;

    bool all = true;
    for (const auto& [key, value] : checks.items()) all = all && value.get<bool>();

    json result;
    result["gsc"] = gsc_report(names, g, mp, cls);
    result["radical_equality"] = equality_json(eq, names);
    result["interpolate"] = interpolate_report(names, r, pigeonhole_ok);
    result["bounds"] = bounds_json(b);
    result["checks"] = checks;
    result["all_checks_pass"] = all;
    emit(with_envelope("demo example22", config, result), config);
    return all ? 0 : 3;
}

int run_demo_example24(const RunConfig& config) {
    std::vector<ProjPoint> points{ProjPoint::from_ints(0, 0, 1), ProjPoint::from_ints(0, 1, 1),
                                  ProjPoint::from_ints(0, 2, 1), ProjPoint::from_ints(1, 0, 1),
                                  ProjPoint::from_ints(1, 1, 1)};
    PlanarInterpolation p = planar_interpolate(points, config.subset_budget);

    GeneratorMatrix gen = GeneratorMatrix::from_forms(p.lambda_x);
    std::vector<std::uint32_t> candidates = config.verify_primes;
    candidates.insert(candidates.end(), kScanPrimes.begin(), kScanPrimes.end());
    std::uint32_t prime = good_primes(p.lambda_x, 1, candidates).front();
    std::size_t dist = min_distance(gen, prime, config.scan_budget);
    std::vector<CodewordClass> classes =
        minimal_codewords_upto(gen, p.a - 1, prime, config.scan_budget);
    std::vector<Subcode> maximal =
        maximal_subcodes_of_support_at_most(gen, p.a - 1, config.subset_budget);
    std::vector<LinearSpan> spans;
    for (const WitnessedSpan& w : p.primes.primes) spans.push_back(w.span);
    std::vector<Subcode> components = component_subcodes(gen, spans);

    std::size_t four_count = 0;
    for (const SingularPoint& s : p.singular_table)
        if (s.in_x && s.nu == 4) ++four_count;

    json checks;
    checks["nine_forms"] = p.lambda_x.size() == 9;
    checks["a_is_6"] = p.a == 6;
    checks["five_point_ideals"] = p.verified && p.primes.primes.size() == 5;
    checks["nu_profile"] = p.profile_ok && four_count == 5;
    checks["moebius_sum_9"] = p.sum_mu == 9 && p.poincare_matches;
    checks["min_distance_5"] = dist == 5;
    checks["five_minimal_codeword_classes"] = classes.size() == 5;
    checks["five_maximal_subcodes"] = maximal.size() == 5;

    bool all = true;
    for (const auto& [key, value] : checks.items()) all = all && value.get<bool>();

    json result;
    result["planar"] = planar_report(p);
    result["code"] = code_report({"x", "y", "z"}, gen, p.a, prime, dist, classes, maximal,
                                 components, p.primes);
    result["checks"] = checks;
    result["all_checks_pass"] = all;
    emit(with_envelope("demo example24", config, result), config);
    return all ? 0 : 3;
}

int run_demo_triangle(const RunConfig& config) {
    std::vector<ProjPoint> points{ProjPoint::from_ints(1, 0, 0), ProjPoint::from_ints(0, 1, 0),
                                  ProjPoint::from_ints(0, 0, 1)};
    PlanarInterpolation p = planar_interpolate(points, config.subset_budget);

    json checks;
    checks["three_lines"] = p.lambda_x.size() == 3;
    checks["a_is_2"] = p.a == 2;
    checks["three_point_ideals"] = p.verified && p.primes.primes.size() == 3;
    checks["profile_ok"] = p.profile_ok;
    bool all = true;
    for (const auto& [key, value] : checks.items()) all = all && value.get<bool>();

    json result;
    result["planar"] = planar_report(p);
    result["checks"] = checks;
    result["all_checks_pass"] = all;
    emit(with_envelope("demo triangle", config, result), config);
    return all ? 0 : 3;
}

int run_demo(const std::string& name, const RunConfig& config) {
    if (name == "hartshorne") return run_demo_hartshorne(config);
    if (name == "example22") return run_demo_example22(config);
    if (name == "example24") return run_demo_example24(config);
    if (name == "triangle") return run_demo_triangle(config);
    throw ValidationError("unknown_demo",
                          "demo must be hartshorne, example22, example24 or triangle");
}

}  // namespace

}  // namespace gstar::cli

int main(int argc, char** argv) {
    using namespace gstar::cli;

    CLI::App app{"generalized star configurations: interpolation, codes and arithmetic rank"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig config;
    std::string field_spec = "rational";
    std::vector<std::uint32_t> primes;
    app.add_option("--field", field_spec, "coefficient field: rational or fp:<p>");
    app.add_option("--verify-prime", primes, "finite-field verification prime (repeatable)");
    app.add_option("--subset-budget", config.subset_budget, "max subsets per enumeration");
    app.add_option("--scan-budget", config.scan_budget, "max projective points per scan");
    app.add_option("--output", config.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", config.seed, "seed echoed into reports");

    auto* gsc_cmd = app.add_subcommand("gsc", "minimal primes, height and classification");
    std::string gsc_path;
    std::size_t gsc_a = 0;
    gsc_cmd->add_option("input", gsc_path, "lambda.json")->required();
    gsc_cmd->add_option("--a", gsc_a, "product size a")->required();

    auto* interp_cmd = app.add_subcommand("interpolate", "realize an arrangement");
    std::string interp_path;
    interp_cmd->add_option("input", interp_path, "arrangement.json")->required();

    auto* planar_cmd = app.add_subcommand("planar", "interpolate plane points");
    std::string planar_path;
    planar_cmd->add_option("input", planar_path, "points.json")->required();

    auto* code_cmd = app.add_subcommand("code", "linear-code analysis");
    std::string code_path;
    std::size_t code_a = 0;
    code_cmd->add_option("input", code_path, "lambda.json")->required();
    code_cmd->add_option("--a", code_a, "product size a")->required();

    auto* ara_cmd = app.add_subcommand("ara", "generator systems and bounds");
    std::string ara_path;
    std::size_t ara_a = 0;
    std::uint32_t ara_exp = 1;
    ara_cmd->add_option("input", ara_path, "lambda.json")->required();
    ara_cmd->add_option("--a", ara_a, "product size a")->required();
    ara_cmd->add_option("--exponent", ara_exp, "uniform generator exponent e >= 1");

    auto* demo_cmd = app.add_subcommand("demo", "golden reproductions");
    std::string demo_name;
    demo_cmd->add_option("name", demo_name, "hartshorne|example22|example24|triangle")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!primes.empty()) config.verify_primes = primes;

    std::string command = app.get_subcommands().front()->get_name();
    auto started = std::chrono::steady_clock::now();
    int code = guarded(command, config, [&]() -> int {
        config.field = parse_field(field_spec);
        if (gsc_cmd->parsed()) return run_gsc(gsc_path, gsc_a, config);
        if (interp_cmd->parsed()) return run_interpolate(interp_path, config);
        if (planar_cmd->parsed()) return run_planar(planar_path, config);
        if (code_cmd->parsed()) return run_code(code_path, code_a, config);
        if (ara_cmd->parsed()) return run_ara(ara_path, ara_a, ara_exp, config);
        if (demo_cmd->parsed()) return run_demo(demo_name, config);
        return 2;
    });
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "elapsed_ms=" << elapsed << "\n";
    return code;
}
