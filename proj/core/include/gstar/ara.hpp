#pragma once

#include "gstar/gsc.hpp"
#include "gstar/poly.hpp"

namespace gstar {

// Partition of all (n-j)-subsets of {1..n} into families P_0..P_j keyed by
// the smallest index: P_0 holds the single subset {j+1,..,n}, and P_u the
// subsets with minimum j-u+1.
struct SVPartition {
    std::size_t n = 0, a = 0, j = 0;  // j = n - a
    std::vector<std::vector<std::vector<std::size_t>>> families;  // 1-based sorted index sets

    std::size_t total() const;
};

SVPartition sv_partition(std::size_t n, std::size_t a);

struct SvConditionReport {
    bool ok = false;
    std::string violated;  // "i", "ii" or "iii" when not ok
    std::string witness;
};

// Checks the three partition conditions; for pairs in P_u the divisor search
// works at the index level.
SvConditionReport verify_sv_conditions(const SVPartition& part);

struct SVSystem {
    FormList lambda;
    SVPartition partition;
    std::vector<std::vector<std::uint32_t>> exponents;  // parallel to families, all >= 1
    std::vector<Polynomial> generators;                 // q_0..q_j
};

SVSystem sv_generators(const FormList& lambda, std::size_t a,
                       std::uint32_t uniform_exponent = 1);
SVSystem sv_generators(const FormList& lambda, std::size_t a,
                       const std::vector<std::vector<std::uint32_t>>& exponents);

struct PrimeLocusMatch {
    std::uint32_t p = 0;
    bool match = false;
    std::size_t system_size = 0;   // points killing every generator
    std::size_t formula_size = 0;  // points of the radical-formula locus
    std::vector<PointFp> only_system, only_formula;  // at most a few witnesses each
};

struct LocusMatchReport {
    bool symbolic_containment = false;  // every generator vanishes on every minimal prime
    std::vector<PrimeLocusMatch> per_prime;
    bool all_match = false;
};

LocusMatchReport verify_zero_locus_match(const SVSystem& sys, const StarConfig& g,
                                         const std::vector<std::uint32_t>& primes,
                                         std::uint64_t subset_budget,
                                         std::uint64_t scan_budget);

struct BoundReport {
    std::size_t sv_bound = 0;
    std::size_t ee_bound = 0;   // k - 1
    bool ee_applicable = true;  // false on the empty variety
    std::size_t height = 0;
    bool stci_certified = false;
};

BoundReport bounds(const Arrangement& arr);
BoundReport bounds(const StarConfig& g, std::uint64_t subset_budget);

// stci_certified iff height equals n-a+1; the generator system is then an
// explicit witness of that many elements.
BoundReport stci_certificate(const StarConfig& g, std::uint64_t subset_budget);

}  // namespace gstar
