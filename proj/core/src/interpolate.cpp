#include "gstar/interpolate.hpp"

#include <map>

namespace gstar {

FormList component_frame(const LinearSpan& s, std::size_t aleph,
                         const std::vector<Scalar>& params) {
    if (params.size() != aleph)
        throw ValidationError("bad_params", "need exactly aleph parameters");
    for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j])
                throw ValidationError("bad_params", "parameters must be pairwise distinct");

    const std::size_t c = s.codim();
    std::vector<LinearForm> forms;
    forms.reserve(aleph);
    for (const Scalar& t : params) {
        std::vector<Scalar> coeffs(s.ambient(), Scalar::zero(s.field()));
        Scalar tpow = Scalar::one(s.field());
        for (std::size_t u = 0; u < c; ++u) {
            for (std::size_t j = 0; j < s.ambient(); ++j)
                coeffs[j] = coeffs[j] + tpow * s.basis().at(u, j);
            tpow = tpow * t;
        }
        forms.push_back(LinearForm::from_coeffs(std::move(coeffs)));
    }

    // Vandermonde guarantees it; check it anyway.
    FormList frame(forms);
    if (!is_c_general_position(frame, c))
        throw VerificationError("component frame has a dependent codim-sized subset");
    return frame;
}

namespace {

void ensure_valid(const Arrangement& arr) {
    std::vector<Matrix> raw;
    raw.reserve(arr.components.size());
    for (const LinearSpan& s : arr.components) raw.push_back(s.basis());
    ValidationReport report = validate_arrangement(raw);
    if (!report.valid)
        throw ValidationError(report.issues.front().code, report.issues.front().detail);
}

struct FormLess {
    bool operator()(const LinearForm& a, const LinearForm& b) const { return a.compare(b) < 0; }
};

}  // namespace

InterpolationResult interpolate(const Arrangement& arr, std::uint64_t subset_budget) {
    ensure_valid(arr);

    std::size_t aleph = 1;
    for (const LinearSpan& s : arr.components) aleph += s.codim() - 1;

    if (!arr.field.is_rational() && arr.field.p < aleph)
        throw ValidationError("field_too_small",
                              "need " + std::to_string(aleph) +
                                  " distinct parameters, field has only " +
                                  std::to_string(arr.field.p) + " elements");

    std::vector<Scalar> params;
    params.reserve(aleph);
    for (std::size_t t = 0; t < aleph; ++t) params.push_back(Scalar::of_int(long(t), arr.field));

    // proportionality class -> copies already emitted into lambda
    std::map<LinearForm, std::pair<std::size_t, std::size_t>, FormLess> emitted;  // count, first comp
    std::vector<LinearForm> lambda;
    std::vector<FormList> frames;
    std::vector<DedupMerge> dedup_log;
    for (std::size_t ci = 0; ci < arr.components.size(); ++ci) {
        FormList frame = component_frame(arr.components[ci], aleph, params);
        std::map<LinearForm, std::size_t, FormLess> in_frame;
        for (const LinearForm& f : frame.forms()) {
            std::size_t seen_here = ++in_frame[f];
            auto it = emitted.find(f);
            if (it == emitted.end()) {
                emitted.emplace(f, std::make_pair(std::size_t(1), ci + 1));
                lambda.push_back(f);
            } else if (seen_here > it->second.first) {
                // a codim-1 frame carries proportional copies; keep the extras
                ++it->second.first;
                lambda.push_back(f);
            } else {
                dedup_log.push_back({f, it->second.second, ci + 1});
            }
        }
        frames.push_back(std::move(frame));
    }

    FormList merged(std::move(lambda));
    const std::size_t a = merged.size() - aleph + 1;

    StarConfig g(merged, a);
    EqualityReport eq = radical_equals_arrangement(g, arr, subset_budget);
    if (!eq.equal)
        throw VerificationError("interpolation failed to reproduce the arrangement");
    return InterpolationResult{arr, std::move(merged), a, aleph, std::move(frames),
                               std::move(dedup_log)};
}

bool verify_pigeonhole(const InterpolationResult& r, std::uint64_t subset_budget) {
    const std::size_t n = r.lambda.size();
    check_subset_budget(n, r.aleph, subset_budget, "pigeonhole enumeration");

    const std::size_t m = r.arrangement.components.size();
    std::vector<std::vector<bool>> member(n, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < m; ++c)
            member[i][c] = r.arrangement.components[c].contains_form(r.lambda[i]);

    bool all_pass = true;
    for_each_combination(n, r.aleph, [&](const std::vector<std::size_t>& idx0) {
        if (!all_pass) return;
        bool subset_ok = false;
        for (std::size_t c = 0; c < m && !subset_ok; ++c) {
            std::size_t count = 0;
            for (std::size_t i : idx0) count += member[i][c] ? 1 : 0;
            if (count >= r.arrangement.components[c].codim()) subset_ok = true;
        }
        if (!subset_ok) all_pass = false;
    });
    return all_pass;
}

}  // namespace gstar
