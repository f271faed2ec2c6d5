#include <doctest.h>

#include <algorithm>

#include "gstar/ara.hpp"
#include "gstar/interpolate.hpp"
#include "helpers.hpp"

using namespace gstar;
using testutil::fl;
using testutil::lf;
using testutil::mat;

namespace {
const std::uint64_t kBudget = 2000000;
}

TEST_CASE("partition family sizes") {
    SVPartition part = sv_partition(6, 4);
    REQUIRE(part.families.size() == 3);
    CHECK(part.families[0].size() == 1);
    CHECK(part.families[1].size() == 4);   // C(4,3)
    CHECK(part.families[2].size() == 10);  // C(5,3)
    CHECK(part.total() == 15);             // C(6,2)
    CHECK(part.families[0][0] == std::vector<std::size_t>{3, 4, 5, 6});
    CHECK(part.families[1][0] == std::vector<std::size_t>{2, 3, 4, 5});

    SVPartition whole = sv_partition(5, 5);
    REQUIRE(whole.families.size() == 1);
    CHECK(whole.families[0][0] == std::vector<std::size_t>{1, 2, 3, 4, 5});

    SVPartition small = sv_partition(3, 2);
    REQUIRE(small.families.size() == 2);
    CHECK(small.families[0][0] == std::vector<std::size_t>{2, 3});
    CHECK(small.families[1] ==
          std::vector<std::vector<std::size_t>>{{1, 2}, {1, 3}});
}

TEST_CASE("partition totals cover every subset") {
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::size_t a = 1; a <= n; ++a)
            CHECK(sv_partition(n, a).total() == binomial(n, n - a));
}

TEST_CASE("generated partitions satisfy the three conditions") {
    for (std::size_t n = 1; n <= 9; ++n)
        for (std::size_t a = 1; a <= n; ++a) {
            SvConditionReport r = verify_sv_conditions(sv_partition(n, a));
            CHECK(r.ok);
        }
}

TEST_CASE("broken partitions are pinpointed") {
    SVPartition two_in_first = sv_partition(4, 2);
    two_in_first.families[0].push_back(two_in_first.families[1].back());
    two_in_first.families[1].pop_back();
    SvConditionReport r2 = verify_sv_conditions(two_in_first);
    CHECK_FALSE(r2.ok);
    CHECK(r2.violated == "ii");

    SVPartition missing = sv_partition(4, 2);
    missing.families[2].pop_back();
    SvConditionReport r1 = verify_sv_conditions(missing);
    CHECK_FALSE(r1.ok);
    CHECK(r1.violated == "i");

    // a pair whose union admits no divisor below: {1},{2} with only {3} lower
    SVPartition orphan;
    orphan.n = 3;
    orphan.a = 1;
    orphan.j = 2;
    orphan.families = {{{3}}, {{1}, {2}}};
    SvConditionReport r3 = verify_sv_conditions(orphan);
    CHECK_FALSE(r3.ok);
    CHECK(r3.violated == "iii");
}

TEST_CASE("generators of the two-line configuration") {
    FormList h = testutil::hartshorne_lambda();
    SVSystem sys = sv_generators(h, 4);
    REQUIRE(sys.generators.size() == 3);  // n - a + 1

    CHECK(sys.generators[0] == product_of_forms(h, {3, 4, 5, 6}));
    for (const Polynomial& q : sys.generators) {
        CHECK(q.is_homogeneous());
        CHECK(q.degree() == 4);
    }

    // each generator vanishes on each minimal prime
    MinimalPrimeSet mp = minimal_primes(StarConfig(h, 4), kBudget);
    for (const Polynomial& q : sys.generators)
        for (const WitnessedSpan& w : mp.primes) CHECK(vanishes_on_span(q, w.span));
}

TEST_CASE("a=n yields the single product generator") {
    FormList lambda = fl({{1, 0}, {0, 1}});
    SVSystem sys = sv_generators(lambda, 2);
    REQUIRE(sys.generators.size() == 1);
    CHECK(sys.generators[0] == product_of_forms(lambda, {1, 2}));

    LocusMatchReport r = verify_zero_locus_match(sys, StarConfig(lambda, 2), {3}, kBudget, kBudget);
    CHECK(r.all_match);
    CHECK(r.symbolic_containment);
    CHECK(r.per_prime[0].formula_size == 2);  // V(xy) in P^1
}

TEST_CASE("zero locus match for the two-line system") {
    FormList h = testutil::hartshorne_lambda();
    SVSystem sys = sv_generators(h, 4);
    StarConfig g(h, 4);
    LocusMatchReport r = verify_zero_locus_match(sys, g, {5, 7}, kBudget, kBudget);
    CHECK(r.symbolic_containment);
    CHECK(r.all_match);
    REQUIRE(r.per_prime.size() == 2);
    CHECK(r.per_prime[0].formula_size == 12);
    CHECK(r.per_prime[1].formula_size == 16);

    // dropping one summand of q_1 must be caught
    SVSystem mutated = sys;
    mutated.generators[1] =
        mutated.generators[1] - product_of_forms(h, sys.partition.families[1][0]);
    LocusMatchReport bad = verify_zero_locus_match(mutated, g, {5, 7}, kBudget, kBudget);
    CHECK_FALSE(bad.all_match);
}

TEST_CASE("four general forms cut their six points with two generators") {
    FormList lambda = fl({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    SVSystem sys = sv_generators(lambda, 3);
    REQUIRE(sys.generators.size() == 2);
    LocusMatchReport r =
        verify_zero_locus_match(sys, StarConfig(lambda, 3), {5, 7}, kBudget, kBudget);
    CHECK(r.all_match);
    CHECK(r.per_prime[0].formula_size == 6);  // C(4,2) intersection points
}

TEST_CASE("exponent overrides keep the locus") {
    FormList h = testutil::hartshorne_lambda();
    SVSystem sys = sv_generators(h, 4, 2);
    for (const Polynomial& q : sys.generators) {
        CHECK(q.is_homogeneous());
        CHECK(q.degree() == 8);
    }
    LocusMatchReport r = verify_zero_locus_match(sys, StarConfig(h, 4), {5}, kBudget, kBudget);
    CHECK(r.all_match);
    CHECK_THROWS_AS(sv_generators(h, 4, 0), ValidationError);
}

TEST_CASE("bound reports") {
    BoundReport ex22 = bounds(testutil::example22_arrangement());
    CHECK(ex22.sv_bound == 4);  // 1 + (3-1) + (2-1)
    CHECK(ex22.ee_bound == 3);
    CHECK(ex22.height == 2);
    CHECK_FALSE(ex22.stci_certified);

    BoundReport hart = bounds(testutil::hartshorne_arrangement());
    CHECK(hart.sv_bound == 3);
    CHECK(hart.height == 2);
    CHECK_FALSE(hart.stci_certified);

    // three codim-2 blocks in P^5: r(t-1)+1 with r=3, t=2
    Arrangement blocks = make_arrangement({
        mat({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}, 6),
        mat({{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}}, 6),
        mat({{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}, 6),
    });
    CHECK(bounds(blocks).sv_bound == 4);

    // two hyperplanes: a principal radical, certified
    Arrangement planes = make_arrangement({mat({{1, 0}}, 2), mat({{0, 1}}, 2)});
    BoundReport pr = bounds(planes);
    CHECK(pr.sv_bound == 1);
    CHECK(pr.height == 1);
    CHECK(pr.stci_certified);
}

TEST_CASE("certification via general position") {
    FormList h = testutil::hartshorne_lambda();
    BoundReport hart = stci_certificate(StarConfig(h, 4), kBudget);
    CHECK(hart.height == 2);
    CHECK(hart.sv_bound == 3);
    CHECK_FALSE(hart.stci_certified);

    // Vandermonde forms: every 2-subset independent, a = n-1
    FormList vdm = fl({{1, 0, 0}, {1, 1, 1}, {1, 2, 4}, {1, 3, 9}});
    BoundReport cert = stci_certificate(StarConfig(vdm, 3), kBudget);
    CHECK(cert.height == 2);
    CHECK(cert.sv_bound == 2);
    CHECK(cert.stci_certified);

    // a = n: one generator cuts the hyperplane union
    BoundReport prod = stci_certificate(StarConfig(fl({{1, 0}, {0, 1}}), 2), kBudget);
    CHECK(prod.sv_bound == 1);
    CHECK(prod.stci_certified);

    // empty variety: the irrelevant ideal needs k elements
    BoundReport empty = stci_certificate(StarConfig(fl({{1, 0}, {0, 1}}), 1), kBudget);
    CHECK(empty.height == 2);
    CHECK_FALSE(empty.ee_applicable);
    CHECK(empty.stci_certified);  // n - a + 1 = 2 = k here
}

TEST_CASE("interpolated arrangements agree with the arrangement bound") {
    testutil::Rng rng(61);
    for (int trial = 0; trial < 6; ++trial) {
        Arrangement arr = testutil::random_arrangement(rng, 4, 3, 20000);
        InterpolationResult r = interpolate(arr, kBudget);
        CHECK(bounds(arr).sv_bound == r.lambda.size() - r.a + 1);  // aleph both ways
    }
}
