#pragma once

#include <array>

#include "gstar/gsc.hpp"

namespace gstar {

// Point of the projective plane as a primitive integer triple, first nonzero
// entry positive.  Rational input is cleared of denominators.
struct ProjPoint {
    std::array<mpz_class, 3> coords;

    static ProjPoint from_rationals(const std::array<mpq_class, 3>& q);
    static ProjPoint from_ints(long a, long b, long c);

    bool operator==(const ProjPoint& o) const { return coords == o.coords; }
    int compare(const ProjPoint& o) const;
    std::string str() const;  // "[a,b,c]"
};

// Drops repeated points, keeping first-occurrence order.
std::vector<ProjPoint> dedup_points(const std::vector<ProjPoint>& pts);

// The codim-2 span of linear forms vanishing at the point.
LinearSpan point_ideal(const ProjPoint& p);

struct ConnectingLine {
    LinearForm form;                    // over the rationals
    std::vector<std::size_t> points_on; // 1-based indices into X, ascending
    std::size_t multiplicity = 0;       // s - 1 for s points on the line
};

// One line per collinear group of X, in discovery order over pairs (i < j).
// Requires >= 3 distinct points, not all collinear.
std::vector<ConnectingLine> connecting_lines(const std::vector<ProjPoint>& x);

struct SingularPoint {
    ProjPoint point;
    std::size_t nu = 0;  // lines through it, counted with multiplicity
    bool in_x = false;
    std::vector<std::size_t> line_indices;  // 1-based, ascending
};

// All pairwise intersection points of distinct lines.  profile_ok iff
// nu = m-1 on X and nu <= m-2 off X.
std::pair<std::vector<SingularPoint>, bool> singularity_profile(
    const std::vector<ConnectingLine>& lines, const std::vector<ProjPoint>& x);

// Rank-2 Moebius sum of the dual line arrangement; matches iff it equals the
// multiset size of the connecting-line forms.
std::pair<std::size_t, bool> poincare_crosscheck(const std::vector<ProjPoint>& x);

struct PlanarInterpolation {
    std::vector<ProjPoint> points;  // deduplicated input
    std::vector<ConnectingLine> lines;
    FormList lambda_x;  // each line repeated multiplicity times
    std::size_t a = 0;
    std::vector<SingularPoint> singular_table;
    bool profile_ok = false;
    MinimalPrimeSet primes;
    bool verified = false;  // primes match the point ideals exactly
    std::size_t sum_mu = 0;
    bool poincare_matches = false;
};

PlanarInterpolation planar_interpolate(const std::vector<ProjPoint>& x,
                                       std::uint64_t subset_budget);

}  // namespace gstar
