#include "reports.hpp"

#include <iostream>
#include <sstream>

namespace gstar::cli {

json forms_json(const FormList& l, const std::vector<std::string>& names) {
    json out = json::array();
    for (const LinearForm& f : l.forms()) out.push_back(render_form(f, names));
    return out;
}

json span_json(const LinearSpan& s, const std::vector<std::string>& names) {
    json out;
    out["codim"] = s.codim();
    json basis = json::array();
    for (std::size_t i = 0; i < s.basis().rows(); ++i)
        basis.push_back(render_form(LinearForm::from_coeffs(s.basis().row(i)), names));
    out["basis"] = basis;
    return out;
}

json primes_json(const MinimalPrimeSet& mp, const std::vector<std::string>& names) {
    json out;
    out["count"] = mp.primes.size();
    out["height"] = mp.height;
    out["empty_variety"] = mp.empty_variety;
    json list = json::array();
    for (const WitnessedSpan& w : mp.primes) {
        json entry = span_json(w.span, names);
        entry["witness"] = w.witness;
        list.push_back(entry);
    }
    out["primes"] = list;
    return out;
}

json equality_json(const EqualityReport& r, const std::vector<std::string>& names) {
    json out;
    out["equal"] = r.equal;
    json missing = json::array(), extra = json::array();
    for (const LinearSpan& s : r.missing) missing.push_back(span_json(s, names));
    for (const LinearSpan& s : r.extra) extra.push_back(span_json(s, names));
    out["missing"] = missing;
    out["extra"] = extra;
    return out;
}

json matrix_rows_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json subcode_json(const Subcode& d) {
    json out;
    out["dimension"] = d.dimension();
    out["support"] = d.support;
    out["support_size"] = d.support_size();
    out["preimage"] = matrix_rows_json(d.preimage);
    out["image"] = matrix_rows_json(d.image);
    return out;
}

json bounds_json(const BoundReport& b) {
    json out;
    out["sv_bound"] = b.sv_bound;
    out["ee_bound"] = b.ee_bound;
    out["ee_applicable"] = b.ee_applicable;
    out["best_bound"] = b.ee_applicable ? std::min(b.sv_bound, b.ee_bound) : b.sv_bound;
    out["height"] = b.height;
    out["stci_certified"] = b.stci_certified;
    return out;
}

namespace {

json point_fp_json(const PointFp& p) {
    json out = json::array();
    for (std::uint32_t c : p) out.push_back(c);
    return out;
}

}  // namespace

json locus_match_json(const LocusMatchReport& r) {
    json out;
    out["symbolic_containment"] = r.symbolic_containment;
    out["all_match"] = r.all_match;
    json per = json::array();
    for (const PrimeLocusMatch& e : r.per_prime) {
        json entry;
        entry["p"] = e.p;
        entry["match"] = e.match;
        entry["system_locus_size"] = e.system_size;
        entry["formula_locus_size"] = e.formula_size;
        json only_sys = json::array(), only_formula = json::array();
        for (const PointFp& pt : e.only_system) only_sys.push_back(point_fp_json(pt));
        for (const PointFp& pt : e.only_formula) only_formula.push_back(point_fp_json(pt));
        entry["only_system"] = only_sys;
        entry["only_formula"] = only_formula;
        per.push_back(entry);
    }
    out["per_prime"] = per;
    return out;
}

json gsc_report(const std::vector<std::string>& names, const StarConfig& g,
                const MinimalPrimeSet& mp, const Classification& cls) {
    json out;
    out["variables"] = names;
    out["field"] = g.lambda.field().str();
    out["n"] = g.n();
    out["k"] = g.ambient();
    out["a"] = g.a;
    out["lambda"] = forms_json(g.lambda, names);
    out["minimal_primes"] = primes_json(mp, names);
    out["classification"] = {{"usual_star", cls.usual_star}, {"codim", cls.codim}};
    return out;
}

json interpolate_report(const std::vector<std::string>& names, const InterpolationResult& r,
                        bool pigeonhole_ok) {
    json out;
    out["variables"] = names;
    out["field"] = r.lambda.field().str();
    json comps = json::array();
    for (const LinearSpan& s : r.arrangement.components) comps.push_back(span_json(s, names));
    out["components"] = comps;
    out["aleph"] = r.aleph;
    out["n"] = r.lambda.size();
    out["a"] = r.a;
    out["lambda"] = forms_json(r.lambda, names);
    json frames = json::array();
    for (const FormList& f : r.frames) frames.push_back(forms_json(f, names));
    out["frames"] = frames;
    json dedups = json::array();
    for (const DedupMerge& d : r.dedup_log) {
        json entry;
        entry["form"] = render_form(d.form, names);
        entry["kept_component"] = d.kept_component;
        entry["merged_component"] = d.merged_component;
        dedups.push_back(entry);
    }
    out["dedup_log"] = dedups;
    out["radical_verified"] = true;  // interpolate throws otherwise
    out["pigeonhole_verified"] = pigeonhole_ok;
    return out;
}

json planar_report(const PlanarInterpolation& p) {
    const std::vector<std::string> names{"x", "y", "z"};
    json out;
    out["variables"] = names;
    json pts = json::array();
    for (const ProjPoint& q : p.points) pts.push_back(q.str());
    out["points"] = pts;
    out["m"] = p.points.size();

    json lines = json::array();
    for (const ConnectingLine& l : p.lines) {
        json entry;
        entry["form"] = render_form(l.form, names);
        entry["points_on"] = l.points_on;
        entry["multiplicity"] = l.multiplicity;
        lines.push_back(entry);
    }
    out["lines"] = lines;
    out["lambda_x"] = forms_json(p.lambda_x, names);
    out["n"] = p.lambda_x.size();
    out["a"] = p.a;

    json table = json::array();
    for (const SingularPoint& s : p.singular_table) {
        json entry;
        entry["point"] = s.point.str();
        entry["nu"] = s.nu;
        entry["in_x"] = s.in_x;
        entry["lines"] = s.line_indices;
        table.push_back(entry);
    }
    out["singular_table"] = table;
    out["profile_ok"] = p.profile_ok;
    out["minimal_primes"] = primes_json(p.primes, names);
    out["radical_verified"] = p.verified;
    out["moebius_rank2_sum"] = p.sum_mu;
    out["poincare_matches"] = p.poincare_matches;
    return out;
}

json code_report(const std::vector<std::string>& names, const GeneratorMatrix& g, std::size_t a,
                 std::uint32_t scan_prime, std::size_t min_dist,
                 const std::vector<CodewordClass>& classes, const std::vector<Subcode>& maximal,
                 const std::vector<Subcode>& components, const MinimalPrimeSet& mp) {
    json out;
    out["variables"] = names;
    out["field"] = g.lambda.field().str();
    out["n"] = g.n();
    out["k"] = g.k();
    out["a"] = a;
    out["lambda"] = forms_json(g.lambda, names);
    out["generator_matrix"] = matrix_rows_json(g.mat);
    out["scan_prime"] = scan_prime;
    out["min_distance"] = min_dist;

    json cls = json::array();
    for (const CodewordClass& c : classes) {
        json entry;
        entry["message"] = point_fp_json(c.message);
        json word = json::array();
        for (std::uint32_t v : c.word) word.push_back(v);
        entry["word"] = word;
        entry["weight"] = c.weight;
        entry["support"] = c.support;
        cls.push_back(entry);
    }
    out["minimal_codewords"] = cls;

    json maxi = json::array();
    for (const Subcode& d : maximal) maxi.push_back(subcode_json(d));
    out["maximal_subcodes"] = maxi;

    json corr = json::array();
    for (std::size_t i = 0; i < components.size(); ++i) {
        json entry;
        entry["component"] = span_json(mp.primes[i].span, names);
        entry["subcode"] = subcode_json(components[i]);
        bool found = false;
        for (const Subcode& m : maximal)
            if (m.preimage == components[i].preimage) found = true;
        entry["is_maximal_subcode"] = found;
        corr.push_back(entry);
    }
    out["component_subcodes"] = corr;
    return out;
}

json ara_report(const std::vector<std::string>& names, const SVSystem& sys,
                const SvConditionReport& conditions, const BoundReport& bounds,
                const LocusMatchReport& locus) {
    json out;
    out["variables"] = names;
    out["field"] = sys.lambda.field().str();
    out["n"] = sys.lambda.size();
    out["a"] = sys.partition.a;
    out["lambda"] = forms_json(sys.lambda, names);

    json sizes = json::array();
    for (const auto& fam : sys.partition.families) sizes.push_back(fam.size());
    out["partition_sizes"] = sizes;
    out["partition_total"] = sys.partition.total();

    out["conditions"] = {{"ok", conditions.ok},
                         {"violated", conditions.violated},
                         {"witness", conditions.witness}};

    json gens = json::array();
    for (const Polynomial& q : sys.generators) gens.push_back(render_poly(q, names));
    out["generators"] = gens;
    out["generator_count"] = sys.generators.size();

    out["bounds"] = bounds_json(bounds);
    out["zero_locus_match"] = locus_match_json(locus);
    return out;
}

namespace {

bool is_scalar_array(const json& j) {
    if (!j.is_array()) return false;
    for (const json& v : j)
        if (v.is_object() || v.is_array()) return false;
    return true;
}

void render_text(const json& j, std::ostream& os, int depth) {
    const std::string pad(std::size_t(depth) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object()) {
                os << pad << key << ":\n";
                render_text(value, os, depth + 1);
            } else if (value.is_array() && !is_scalar_array(value)) {
                os << pad << key << ":\n";
                render_text(value, os, depth + 1);
            } else {
                os << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const json& v : j) {
            if (v.is_object() && !v.empty()) {
                bool first = true;
                for (const auto& [key, value] : v.items()) {
                    os << pad << (first ? "- " : "  ");
                    first = false;
                    if (value.is_object() || (value.is_array() && !is_scalar_array(value))) {
                        os << key << ":\n";
                        render_text(value, os, depth + 2);
                    } else {
                        os << key << ": " << value.dump() << "\n";
                    }
                }
            } else if (v.is_array() && !is_scalar_array(v)) {
                os << pad << "-\n";
                render_text(v, os, depth + 1);
            } else {
                os << pad << "- " << v.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

}  // namespace

std::string to_text(const json& j) {
    std::ostringstream os;
    render_text(j, os, 0);
    return os.str();
}

void emit(const json& report, const RunConfig& config) {
    if (config.output == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << to_text(report);
}

}  // namespace gstar::cli
