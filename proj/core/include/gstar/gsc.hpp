#pragma once

#include "gstar/combinatorics.hpp"
#include "gstar/forms.hpp"

namespace gstar {

// The pair (Lambda, a): the ideal of all a-fold products of the forms.
struct StarConfig {
    FormList lambda;
    std::size_t a;

    StarConfig(FormList l, std::size_t a_);  // requires essential lambda, 1 <= a <= n
    std::size_t n() const { return lambda.size(); }
    std::size_t ambient() const { return lambda.ambient(); }
};

struct WitnessedSpan {
    LinearSpan span;
    std::vector<std::size_t> witness;  // one witnessing (n-a+1)-subset, 1-based
};

struct MinimalPrimeSet {
    std::vector<WitnessedSpan> primes;  // inclusion-minimal, deterministically sorted
    std::size_t height = 0;             // minimal codim among all enumerated spans
    bool empty_variety = false;         // single prime of full codim
};

// Spans of all (n-a+1)-subsets of Lambda, deduplicated and reduced to the
// inclusion-minimal set.
MinimalPrimeSet minimal_primes(const StarConfig& g, std::uint64_t subset_budget);

std::size_t height(const StarConfig& g, std::uint64_t subset_budget);

struct EqualityReport {
    bool equal = false;
    std::vector<LinearSpan> missing;  // arrangement components absent from the primes
    std::vector<LinearSpan> extra;    // primes absent from the arrangement
};

EqualityReport radical_equals_arrangement(const StarConfig& g, const Arrangement& a,
                                          std::uint64_t subset_budget);

// Normalized projective point over F_p: first nonzero coordinate is 1.
using PointFp = std::vector<std::uint32_t>;

std::uint64_t projective_point_count(std::uint32_t p, std::size_t k);

// All projective F_p-points killing every a-fold product; sorted.
std::vector<PointFp> zero_locus_mod_p(const StarConfig& g, std::uint32_t p,
                                      std::uint64_t scan_budget);

// The F_p-points of the subspace a span cuts out; sorted.
std::vector<PointFp> span_points_mod_p(const LinearSpan& s, std::uint32_t p,
                                       std::uint64_t scan_budget);

// Every c-subset of the forms has rank c.
bool is_c_general_position(const FormList& lambda, std::size_t c);

struct Classification {
    bool usual_star = false;
    std::size_t codim = 0;
};

Classification classify(const StarConfig& g, std::uint64_t subset_budget);

}  // namespace gstar
