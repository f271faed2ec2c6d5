#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace gstar;
using testutil::lf;

namespace {

const std::uint64_t kBudget = 2000000;

std::vector<LinearForm> sorted_forms(const FormList& l) {
    std::vector<LinearForm> v(l.forms());
    std::sort(v.begin(), v.end(),
              [](const LinearForm& a, const LinearForm& b) { return a.compare(b) < 0; });
    return v;
}

}  // namespace

TEST_CASE("projective points normalize to primitive triples") {
    CHECK(ProjPoint::from_ints(2, 4, 6) == ProjPoint::from_ints(1, 2, 3));
    CHECK(ProjPoint::from_ints(-1, 0, 2) == ProjPoint::from_ints(1, 0, -2));
    CHECK(ProjPoint::from_rationals({mpq_class(1, 2), mpq_class(1, 3), mpq_class(0)}) ==
          ProjPoint::from_ints(3, 2, 0));
    CHECK(ProjPoint::from_ints(0, 0, 5).str() == "[0,0,1]");
    CHECK_THROWS_AS(ProjPoint::from_ints(0, 0, 0), ValidationError);
}

TEST_CASE("point ideals") {
    CHECK(point_ideal(ProjPoint::from_ints(0, 0, 1)) ==
          span_of({lf({1, 0, 0}), lf({0, 1, 0})}));
    CHECK(point_ideal(ProjPoint::from_ints(1, 1, 1)) ==
          span_of({lf({1, 0, -1}), lf({0, 1, -1})}));
}

TEST_CASE("triangle connecting lines") {
    std::vector<ProjPoint> x{ProjPoint::from_ints(1, 0, 0), ProjPoint::from_ints(0, 1, 0),
                             ProjPoint::from_ints(0, 0, 1)};
    std::vector<ConnectingLine> lines = connecting_lines(x);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].form == lf({0, 0, 1}));  // z through the first pair
    CHECK(lines[1].form == lf({0, 1, 0}));
    CHECK(lines[2].form == lf({1, 0, 0}));
    for (const ConnectingLine& l : lines) {
        CHECK(l.points_on.size() == 2);
        CHECK(l.multiplicity == 1);
    }
}

TEST_CASE("triangle interpolation") {
    PlanarInterpolation r = planar_interpolate(
        {ProjPoint::from_ints(1, 0, 0), ProjPoint::from_ints(0, 1, 0),
         ProjPoint::from_ints(0, 0, 1)},
        kBudget);
    CHECK(r.lambda_x.size() == 3);
    CHECK(r.a == 2);
    CHECK(r.verified);
    CHECK(r.profile_ok);
    REQUIRE(r.primes.primes.size() == 3);
    CHECK(r.singular_table.size() == 3);  // only the vertices
    for (const SingularPoint& s : r.singular_table) {
        CHECK(s.in_x);
        CHECK(s.nu == 2);
    }
    CHECK(r.sum_mu == 3);
    CHECK(r.poincare_matches);
}

TEST_CASE("five points with a triple line") {
    std::vector<ProjPoint> x = testutil::example24_points();
    std::vector<ConnectingLine> lines = connecting_lines(x);
    REQUIRE(lines.size() == 8);
    std::size_t triples = 0;
    for (const ConnectingLine& l : lines) {
        if (l.points_on.size() == 3) {
            ++triples;
            CHECK(l.form == lf({1, 0, 0}));  // x carries the three collinear points
            CHECK(l.multiplicity == 2);
        } else {
            CHECK(l.points_on.size() == 2);
        }
    }
    CHECK(triples == 1);

    PlanarInterpolation r = planar_interpolate(x, kBudget);
    CHECK(r.lambda_x.size() == 9);
    CHECK(r.a == 6);
    CHECK(sorted_forms(r.lambda_x) == sorted_forms(testutil::example24_lambda()));

    // minimal primes are exactly the five point ideals
    CHECK(r.verified);
    REQUIRE(r.primes.primes.size() == 5);
    for (const ProjPoint& p : r.points) {
        LinearSpan ideal = point_ideal(p);
        CHECK(std::any_of(r.primes.primes.begin(), r.primes.primes.end(),
                          [&](const WitnessedSpan& w) { return w.span == ideal; }));
    }

    // nu = 4 on X, at most 3 elsewhere
    CHECK(r.profile_ok);
    std::size_t on_x = 0;
    for (const SingularPoint& s : r.singular_table) {
        if (s.in_x) {
            ++on_x;
            CHECK(s.nu == 4);
        } else {
            CHECK(s.nu <= 3);
        }
    }
    CHECK(on_x == 5);

    CHECK(r.sum_mu == 9);
    CHECK(r.poincare_matches);
}

TEST_CASE("four general points") {
    std::vector<ProjPoint> x{ProjPoint::from_ints(1, 0, 0), ProjPoint::from_ints(0, 1, 0),
                             ProjPoint::from_ints(0, 0, 1), ProjPoint::from_ints(1, 1, 1)};
    PlanarInterpolation r = planar_interpolate(x, kBudget);
    CHECK(r.lines.size() == 6);
    CHECK(r.lambda_x.size() == 6);
    CHECK(r.a == 4);
    CHECK(r.verified);
    CHECK(r.profile_ok);

    std::size_t diagonal = 0;
    for (const SingularPoint& s : r.singular_table) {
        if (s.in_x) {
            CHECK(s.nu == 3);
        } else {
            ++diagonal;
            CHECK(s.nu == 2);  // the m-2 bound is tight here
        }
    }
    CHECK(diagonal == 3);
    CHECK(r.sum_mu == 6);
    CHECK(r.poincare_matches);
}

TEST_CASE("planar input validation") {
    CHECK_THROWS_AS(connecting_lines({ProjPoint::from_ints(1, 0, 0)}), ValidationError);
    CHECK_THROWS_AS(
        connecting_lines({ProjPoint::from_ints(1, 0, 0), ProjPoint::from_ints(0, 1, 0)}),
        ValidationError);
    // collinear triple
    CHECK_THROWS_AS(
        connecting_lines({ProjPoint::from_ints(0, 0, 1), ProjPoint::from_ints(0, 1, 1),
                          ProjPoint::from_ints(0, 2, 1)}),
        ValidationError);
    // duplicates collapse before the count check
    CHECK_THROWS_AS(planar_interpolate({ProjPoint::from_ints(1, 0, 0),
                                        ProjPoint::from_ints(2, 0, 0),
                                        ProjPoint::from_ints(0, 1, 0)},
                                       kBudget),
                    ValidationError);
}

TEST_CASE("line counts stay within the pair bound") {
    testutil::Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ProjPoint> pts;
        for (int i = 0, m = int(rng.pick(3, 6)); i < m; ++i) {
            long a = rng.pick(-2, 2), b = rng.pick(-2, 2), c = rng.pick(0, 2);
            if (a == 0 && b == 0 && c == 0) c = 1;
            pts.push_back(ProjPoint::from_ints(a, b, c));
        }
        std::vector<ProjPoint> x = dedup_points(pts);
        if (x.size() < 3) continue;
        std::vector<ConnectingLine> lines;
        try {
            lines = connecting_lines(x);
        } catch (const ValidationError&) {
            continue;  // collinear sample
        }
        std::size_t total = 0;
        for (const ConnectingLine& l : lines) total += l.multiplicity;
        CHECK(total <= x.size() * (x.size() - 1) / 2);

        auto [sum_mu, matches] = poincare_crosscheck(x);
        CHECK(matches);
        CHECK(sum_mu == total);

        // off the point set, nu stays below m - u for u concurrent lines
        auto [table, profile_ok] = singularity_profile(lines, x);
        CHECK(profile_ok);
        for (const SingularPoint& s : table)
            if (!s.in_x) CHECK(s.nu + s.line_indices.size() <= x.size());
    }
}
