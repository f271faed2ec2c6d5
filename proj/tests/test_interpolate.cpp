#include <doctest.h>

#include "gstar/interpolate.hpp"
#include "helpers.hpp"

using namespace gstar;
using testutil::lf;
using testutil::mat;
using testutil::qs;

namespace {
const std::uint64_t kBudget = 2000000;
}

TEST_CASE("component frames are Vandermonde combinations of the basis") {
    LinearSpan s = span_of({lf({1, 0, 0, 0}), lf({0, 1, 0, 0})});  // <x,y> in k=4
    std::vector<Scalar> params{qs(0), qs(1), qs(2), qs(3)};
    FormList frame = component_frame(s, 4, params);
    REQUIRE(frame.size() == 4);
    CHECK(frame[0] == lf({1, 0, 0, 0}));
    CHECK(frame[1] == lf({1, 1, 0, 0}));
    CHECK(frame[2] == lf({1, 2, 0, 0}));
    CHECK(frame[3] == lf({1, 3, 0, 0}));
    CHECK(is_c_general_position(frame, 2));  // all 6 pairs independent
}

TEST_CASE("codim-1 frames repeat the single generator") {
    LinearSpan s = span_of({lf({1, 1, 0})});
    FormList frame = component_frame(s, 3, {qs(0), qs(1), qs(2)});
    REQUIRE(frame.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(frame[i] == lf({1, 1, 0}));
}

TEST_CASE("codim-3 frames keep every 3-subset independent") {
    LinearSpan s = span_of({lf({1, 0, 0, 0}), lf({0, 0, 1, 0}), lf({0, 0, 0, 1})});
    FormList frame = component_frame(s, 4, {qs(0), qs(1), qs(2), qs(3)});
    REQUIRE(frame.size() == 4);
    CHECK(is_c_general_position(frame, 3));
}

TEST_CASE("frame parameters must be distinct") {
    LinearSpan s = span_of({lf({1, 0}), lf({0, 1})});
    CHECK_THROWS_AS(component_frame(s, 2, {qs(1), qs(1)}), ValidationError);
    CHECK_THROWS_AS(component_frame(s, 3, {qs(0), qs(1)}), ValidationError);
}

TEST_CASE("interpolating the mixed-codimension arrangement") {
    Arrangement arr = testutil::example22_arrangement();
    InterpolationResult r = interpolate(arr, kBudget);
    CHECK(r.aleph == 4);  // 1 + (3-1) + (2-1)
    CHECK(r.lambda.size() == 7);  // x shared between the frames
    CHECK(r.a == 4);
    REQUIRE(r.dedup_log.size() == 1);
    CHECK(r.dedup_log[0].form == lf({1, 0, 0, 0}));
    CHECK(r.dedup_log[0].kept_component == 1);
    CHECK(r.dedup_log[0].merged_component == 2);
    CHECK(radical_equals_arrangement(StarConfig(r.lambda, r.a), arr, kBudget).equal);
    CHECK(verify_pigeonhole(r, kBudget));
}

TEST_CASE("interpolating the two disjoint lines") {
    Arrangement arr = testutil::hartshorne_arrangement();
    InterpolationResult r = interpolate(arr, kBudget);
    CHECK(r.aleph == 3);
    CHECK(r.a == r.lambda.size() - 3 + 1);
    CHECK(radical_equals_arrangement(StarConfig(r.lambda, r.a), arr, kBudget).equal);
    CHECK(verify_pigeonhole(r, kBudget));
}

TEST_CASE("hyperplane arrangements reduce to the product case") {
    Arrangement arr = make_arrangement(
        {mat({{1, 0, 0}}, 3), mat({{0, 1, 0}}, 3), mat({{0, 0, 1}}, 3), mat({{1, 1, 1}}, 3)});
    InterpolationResult r = interpolate(arr, kBudget);
    CHECK(r.aleph == 1);
    CHECK(r.lambda.size() == 4);
    CHECK(r.a == 4);  // a = n
    CHECK(verify_pigeonhole(r, kBudget));
}

TEST_CASE("mixed arrangements with a hyperplane keep its copies") {
    // <x> and <y,z> in k=3: the hyperplane form must appear aleph times
    Arrangement arr = make_arrangement(
        {mat({{1, 0, 0}}, 3), mat({{0, 1, 0}, {0, 0, 1}}, 3)});
    InterpolationResult r = interpolate(arr, kBudget);
    CHECK(r.aleph == 2);
    CHECK(r.lambda.size() == 4);  // (x, x, y, y+z)
    std::size_t copies = 0;
    for (const LinearForm& f : r.lambda.forms())
        if (f == lf({1, 0, 0})) ++copies;
    CHECK(copies == 2);
    CHECK(radical_equals_arrangement(StarConfig(r.lambda, r.a), arr, kBudget).equal);
    CHECK(verify_pigeonhole(r, kBudget));
}

TEST_CASE("the paper instances pass the pigeonhole check") {
    // every 3-subset of the six forms has two inside one of the spans
    InterpolationResult remark{testutil::hartshorne_arrangement(),
                               testutil::hartshorne_lambda(),
                               4,
                               3,
                               {},
                               {}};
    CHECK(verify_pigeonhole(remark, kBudget));

    InterpolationResult ex22{testutil::example22_arrangement(),
                             testutil::example22_lambda(),
                             4,
                             4,
                             {},
                             {}};
    CHECK(verify_pigeonhole(ex22, kBudget));
}

TEST_CASE("prime fields need enough parameters") {
    FieldSpec f3 = FieldSpec::prime(3);
    // two codim-3 components in k=4 give aleph = 5 > 3
    std::vector<std::vector<Scalar>> rows1, rows2;
    auto row = [&](std::initializer_list<long> v) {
        std::vector<Scalar> r;
        for (long x : v) r.push_back(Scalar::of_int(x, f3));
        return r;
    };
    Matrix m1 = Matrix::from_rows({row({1, 0, 0, 0}), row({0, 1, 0, 0}), row({0, 0, 1, 0})}, 4, f3);
    Matrix m2 = Matrix::from_rows({row({0, 1, 0, 0}), row({0, 0, 1, 0}), row({0, 0, 0, 1})}, 4, f3);
    Arrangement arr = make_arrangement({m1, m2});
    CHECK_THROWS_AS(interpolate(arr, kBudget), ValidationError);
}

TEST_CASE("random arrangements interpolate and verify") {
    testutil::Rng rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        Arrangement arr = testutil::random_arrangement(rng, 4, 3, 20000);
        InterpolationResult r = interpolate(arr, kBudget);
        CHECK(r.a == r.lambda.size() - r.aleph + 1);
        CHECK(r.lambda.size() <= arr.components.size() * r.aleph);
        if (binomial(r.lambda.size(), r.aleph) <= 20000) CHECK(verify_pigeonhole(r, kBudget));
        // identical inputs give identical output
        InterpolationResult again = interpolate(arr, kBudget);
        CHECK(again.lambda.size() == r.lambda.size());
        for (std::size_t i = 0; i < r.lambda.size(); ++i)
            CHECK(again.lambda[i] == r.lambda[i]);
    }
}
