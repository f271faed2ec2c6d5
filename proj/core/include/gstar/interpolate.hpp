#pragma once

#include "gstar/gsc.hpp"

namespace gstar {

struct DedupMerge {
    LinearForm form;
    std::size_t kept_component;    // 1-based component whose frame first contributed the form
    std::size_t merged_component;  // component whose proportional copy was dropped
};

struct InterpolationResult {
    Arrangement arrangement;
    FormList lambda;
    std::size_t a = 0;
    std::size_t aleph = 0;
    std::vector<FormList> frames;  // per component, each of size aleph
    std::vector<DedupMerge> dedup_log;
};

// The forms sum_u params[j]^(u-1) * g_u over the canonical basis g of s;
// pairwise-distinct params make every codim(s)-subset independent, and the
// property is checked exhaustively rather than assumed.
FormList component_frame(const LinearSpan& s, std::size_t aleph,
                         const std::vector<Scalar>& params);

// Builds (Lambda, a) realizing the arrangement and verifies the radical
// equality before returning.  Cross-component proportional duplicates are
// merged; the copies a codim-1 frame needs are kept.
InterpolationResult interpolate(const Arrangement& arr, std::uint64_t subset_budget);

// Every aleph-subset of lambda holds at least c_i forms lying in some
// component i's span.
bool verify_pigeonhole(const InterpolationResult& r, std::uint64_t subset_budget);

}  // namespace gstar
