#include <doctest.h>

#include "helpers.hpp"

using namespace gstar;
using testutil::mat;

TEST_CASE("rref of the identity") {
    for (std::size_t k : {1, 2, 5}) {
        RrefResult rr = rref_rank(Matrix::identity(k, FieldSpec::rationals()));
        CHECK(rr.rank == k);
        CHECK(rr.rref == Matrix::identity(k, FieldSpec::rationals()));
    }
}

TEST_CASE("proportional rows collapse to rank 1") {
    RrefResult rr = rref_rank(mat({{1, 1}, {2, 2}}, 2));
    CHECK(rr.rank == 1);
    REQUIRE(rr.pivots.size() == 1);
    CHECK(rr.pivots[0] == 0);
}

// rows of (x, z, w, x+z+w) in four variables; hand reduction leaves e1, e3, e4
TEST_CASE("dependent form rows reduce to rank 3") {
    Matrix m = mat({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 1, 1}}, 4);
    RrefResult rr = rref_rank(m);
    CHECK(rr.rank == 3);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 2, 3});
    CHECK(rr.rref.row(0) == mat({{1, 0, 0, 0}}, 4).row(0));
    CHECK(rr.rref.row(1) == mat({{0, 0, 1, 0}}, 4).row(0));
    CHECK(rr.rref.row(2) == mat({{0, 0, 0, 1}}, 4).row(0));
}

TEST_CASE("kernel of a 1x3 row") {
    Matrix kb = kernel_basis(mat({{1, 1, 1}}, 3));
    REQUIRE(kb.rows() == 2);
    CHECK(kb == mat({{1, 0, -1}, {0, 1, -1}}, 3));
}

TEST_CASE("kernel of a full-rank square matrix is empty") {
    Matrix kb = kernel_basis(mat({{1, 2}, {3, 4}}, 2));
    CHECK(kb.rows() == 0);
    CHECK(kb.cols() == 2);
}

TEST_CASE("kernel of coordinate rows") {
    // rows x1, x2 in K^4 -> kernel spanned by e3, e4
    Matrix kb = kernel_basis(mat({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4));
    CHECK(kb == mat({{0, 0, 1, 0}, {0, 0, 0, 1}}, 4));
}

TEST_CASE("span containment basics") {
    Matrix x = mat({{1, 0}}, 2);
    Matrix xy = mat({{1, 0}, {0, 1}}, 2);
    Matrix x_plus_y = mat({{1, 1}}, 2);
    CHECK(span_contains(x, x));
    CHECK(span_contains(x, xy));
    CHECK_FALSE(span_contains(x_plus_y, x));
    CHECK_THROWS_AS(span_contains(mat({{1}}, 1), xy), ValidationError);
}

TEST_CASE("mixed-field matrices are rejected") {
    std::vector<std::vector<Scalar>> rows{
        {Scalar::of_int(1, FieldSpec::prime(5)), Scalar::of_int(0, FieldSpec::prime(5))}};
    CHECK_THROWS_AS(Matrix::from_rows(rows, 2, FieldSpec::rationals()), ValidationError);
}

TEST_CASE("rref properties on random matrices") {
    testutil::Rng rng(77);
    FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime(13)};
    for (const FieldSpec& f : fields) {
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t r = std::size_t(rng.pick(1, 5));
            std::size_t c = std::size_t(rng.pick(1, 5));
            std::vector<std::vector<long>> rows(r, std::vector<long>(c));
            for (auto& row : rows)
                for (long& v : row) v = rng.pick(-4, 4);
            Matrix m = mat(rows, c, f);

            RrefResult rr = rref_rank(m);
            CHECK(rref_rank(rr.rref).rref == rr.rref);      // idempotent
            CHECK(rr.rank == rank_of(m.transposed()));      // row rank = column rank
            CHECK(kernel_basis(m).rows() + rr.rank == c);   // rank-nullity

            // every kernel row is annihilated
            Matrix kb = kernel_basis(m);
            for (std::size_t i = 0; i < kb.rows(); ++i) {
                std::vector<Scalar> prod = mat_vec(m, kb.row(i));
                for (const Scalar& s : prod) CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("integer kernels are saturated lattices") {
    using Z = mpz_class;
    auto kernel = [](std::vector<std::vector<Z>> rows, std::size_t cols) {
        return integer_kernel(rows, cols);
    };

    auto k1 = kernel({{Z(2), Z(4)}}, 2);
    REQUIRE(k1.size() == 1);
    CHECK(k1[0][0] * 2 + k1[0][1] * 4 == 0);
    Z g;
    mpz_gcd(g.get_mpz_t(), k1[0][0].get_mpz_t(), k1[0][1].get_mpz_t());
    CHECK(g == 1);  // saturated, not just a sublattice

    CHECK(kernel({{Z(1), Z(0)}, {Z(0), Z(1)}}, 2).empty());

    // the row space {x+y, 5y+z} has a kernel whose rational rref carries 1/5;
    // the lattice basis must still be unimodular mod 5
    auto k2 = kernel({{Z(1), Z(1), Z(0)}, {Z(0), Z(5), Z(1)}}, 3);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0][0] + k2[0][1] == 0);
    CHECK(5 * k2[0][1] + k2[0][2] == 0);
    bool nonzero_mod_5 = false;
    for (const Z& z : k2[0])
        if (z % 5 != 0) nonzero_mod_5 = true;
    CHECK(nonzero_mod_5);

    testutil::Rng rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = std::size_t(rng.pick(1, 3)), c = std::size_t(rng.pick(1, 5));
        std::vector<std::vector<Z>> rows(r, std::vector<Z>(c));
        for (auto& row : rows)
            for (Z& v : row) v = rng.pick(-6, 6);
        auto ker = kernel(rows, c);
        for (const auto& v : ker)
            for (const auto& row : rows) {
                Z dot(0);
                for (std::size_t j = 0; j < c; ++j) dot += row[j] * v[j];
                CHECK(dot == 0);
            }
        // dimension agrees with the rational kernel
        std::vector<std::vector<Scalar>> srows;
        for (const auto& row : rows) {
            std::vector<Scalar> sr;
            for (const Z& z : row) sr.push_back(Scalar::of_rational(mpq_class(z)));
            srows.push_back(std::move(sr));
        }
        CHECK(ker.size() == kernel_basis(Matrix::from_rows(srows, c, FieldSpec::rationals())).rows());
    }
}

TEST_CASE("span containment is reflexive and transitive on random triples") {
    testutil::Rng rng(78);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t c = std::size_t(rng.pick(2, 4));
        auto random_matrix = [&](std::size_t r) {
            std::vector<std::vector<long>> rows(r, std::vector<long>(c));
            for (auto& row : rows)
                for (long& v : row) v = rng.pick(-3, 3);
            return mat(rows, c);
        };
        Matrix a = random_matrix(std::size_t(rng.pick(1, 3)));
        Matrix b = random_matrix(std::size_t(rng.pick(1, 3)));
        Matrix d = random_matrix(std::size_t(rng.pick(1, 3)));
        CHECK(span_contains(a, a));
        if (span_contains(a, b) && span_contains(b, d)) CHECK(span_contains(a, d));
    }
}
