#pragma once

#include <random>
#include <vector>

#include "gstar/combinatorics.hpp"
#include "gstar/forms.hpp"
#include "gstar/planar.hpp"

namespace testutil {

using namespace gstar;

inline FieldSpec Q() { return FieldSpec::rationals(); }

inline Scalar qs(long num, long den = 1) { return Scalar::of_rational(mpq_class(num, den)); }

inline LinearForm lf(const std::vector<long>& coeffs, const FieldSpec& f = Q()) {
    return LinearForm::from_ints(coeffs, f);
}

inline FormList fl(const std::vector<std::vector<long>>& rows, const FieldSpec& f = Q()) {
    std::vector<LinearForm> forms;
    forms.reserve(rows.size());
    for (const auto& r : rows) forms.push_back(LinearForm::from_ints(r, f));
    return FormList(std::move(forms));
}

inline Matrix mat(const std::vector<std::vector<long>>& rows, std::size_t cols,
                  const FieldSpec& f = Q()) {
    std::vector<std::vector<Scalar>> srows;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (long v : r) row.push_back(Scalar::of_int(v, f));
        srows.push_back(std::move(row));
    }
    return Matrix::from_rows(srows, cols, f);
}

// variables x1,x2,x3,x4
inline FormList hartshorne_lambda() {
    return fl({{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
}

// variables x,y,z,w: (x, z, w, x+z+w, y, x+y, x-y)
inline FormList example22_lambda() {
    return fl({{1, 0, 0, 0},
               {0, 0, 1, 0},
               {0, 0, 0, 1},
               {1, 0, 1, 1},
               {0, 1, 0, 0},
               {1, 1, 0, 0},
               {1, -1, 0, 0}});
}

inline Arrangement example22_arrangement() {
    // <x,z,w> and <x,y> in K[x,y,z,w]
    return make_arrangement({mat({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 4),
                             mat({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4)});
}

inline Arrangement hartshorne_arrangement() {
    return make_arrangement({mat({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4),
                             mat({{0, 0, 1, 0}, {0, 0, 0, 1}}, 4)});
}

inline std::vector<ProjPoint> example24_points() {
    return {ProjPoint::from_ints(0, 0, 1), ProjPoint::from_ints(0, 1, 1),
            ProjPoint::from_ints(0, 2, 1), ProjPoint::from_ints(1, 0, 1),
            ProjPoint::from_ints(1, 1, 1)};
}

// variables x,y,z: (x, x, x-z, x-y, y, x+y-z, y-z, 2x+y-2z, x+y-2z)
inline FormList example24_lambda() {
    return fl({{1, 0, 0},
               {1, 0, 0},
               {1, 0, -1},
               {1, -1, 0},
               {0, 1, 0},
               {1, 1, -1},
               {0, 1, -1},
               {2, 1, -2},
               {1, 1, -2}});
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }
};

inline LinearForm random_form(Rng& rng, std::size_t k, const FieldSpec& f = Q()) {
    while (true) {
        std::vector<long> c(k);
        bool nonzero = false;
        for (long& v : c) {
            v = rng.pick(-3, 3);
            nonzero = nonzero || v != 0;
        }
        if (nonzero) return LinearForm::from_ints(c, f);
    }
}

inline FormList random_essential_formlist(Rng& rng, std::size_t n, std::size_t k,
                                          const FieldSpec& f = Q()) {
    while (true) {
        std::vector<LinearForm> forms;
        for (std::size_t i = 0; i < n; ++i) forms.push_back(random_form(rng, k, f));
        FormList lambda(std::move(forms));
        if (is_essential(lambda)) return lambda;
    }
}

// valid arrangement with ambient <= max_k, components <= max_m, and an
// interpolation enumeration C(n, aleph) within max_choose
inline Arrangement random_arrangement(Rng& rng, std::size_t max_k, std::size_t max_m,
                                      std::uint64_t max_choose) {
    while (true) {
        std::size_t k = std::size_t(rng.pick(2, long(max_k)));
        std::size_t m = std::size_t(rng.pick(2, long(max_m)));
        std::vector<Matrix> raw;
        std::size_t aleph = 1;
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t c = std::size_t(rng.pick(1, long(k - 1)));
            aleph += c - 1;
            while (true) {
                std::vector<std::vector<long>> rows(c, std::vector<long>(k));
                for (auto& r : rows)
                    for (long& v : r) v = rng.pick(-2, 2);
                Matrix cand = mat(rows, k);
                if (rank_of(cand) == c) {
                    raw.push_back(std::move(cand));
                    break;
                }
            }
        }
        if (binomial(std::uint64_t(m) * aleph, aleph) > max_choose) continue;
        ValidationReport rep = validate_arrangement(raw);
        if (rep.valid) return rep.normalized;
    }
}

}  // namespace testutil
