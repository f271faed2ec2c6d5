#include <benchmark/benchmark.h>

#include <random>

#include "gstar/ara.hpp"
#include "gstar/coding.hpp"
#include "gstar/gsc.hpp"
#include "gstar/interpolate.hpp"

using namespace gstar;

namespace {

FormList lambda_from(const std::vector<std::vector<long>>& rows) {
    std::vector<LinearForm> forms;
    forms.reserve(rows.size());
    for (const auto& r : rows) forms.push_back(LinearForm::from_ints(r, FieldSpec::rationals()));
    return FormList(std::move(forms));
}

FormList two_lines() {
    return lambda_from(
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
}

// n Vandermonde forms x + t y + t^2 z
FormList vandermonde(std::size_t n) {
    std::vector<std::vector<long>> rows;
    for (std::size_t t = 0; t < n; ++t) rows.push_back({1, long(t), long(t) * long(t)});
    return lambda_from(rows);
}

Matrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::uniform_int_distribution<long> dist(-9, 9);
    std::vector<std::vector<Scalar>> rows(r);
    for (auto& row : rows)
        for (std::size_t j = 0; j < c; ++j)
            row.push_back(Scalar::of_rational(mpq_class(dist(eng), 1 + (dist(eng) & 3))));
    return Matrix::from_rows(rows, c, FieldSpec::rationals());
}

void BM_RrefRational(benchmark::State& state) {
    Matrix m = random_matrix(std::size_t(state.range(0)), std::size_t(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(rref_rank(m).rank);
}
BENCHMARK(BM_RrefRational)->Arg(4)->Arg(8)->Arg(16);

void BM_MinimalPrimes(benchmark::State& state) {
    FormList lambda = vandermonde(std::size_t(state.range(0)));
    StarConfig g(lambda, lambda.size() - 2);  // subsets of size 3
    for (auto _ : state) benchmark::DoNotOptimize(minimal_primes(g, 1u << 30).primes.size());
}
BENCHMARK(BM_MinimalPrimes)->Arg(8)->Arg(12)->Arg(16);

void BM_ZeroLocusScan(benchmark::State& state) {
    StarConfig g(two_lines(), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(zero_locus_mod_p(g, std::uint32_t(state.range(0)), 1u << 30));
}
BENCHMARK(BM_ZeroLocusScan)->Arg(31)->Arg(101);

void BM_SvGenerators(benchmark::State& state) {
    FormList lambda = vandermonde(std::size_t(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(sv_generators(lambda, lambda.size() - 2).generators.size());
}
BENCHMARK(BM_SvGenerators)->Arg(8)->Arg(10);

void BM_MinDistanceScan(benchmark::State& state) {
    GeneratorMatrix g = GeneratorMatrix::from_forms(vandermonde(7));
    for (auto _ : state)
        benchmark::DoNotOptimize(min_distance(g, std::uint32_t(state.range(0)), 1u << 30));
}
BENCHMARK(BM_MinDistanceScan)->Arg(101)->Arg(151);

Matrix int_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    std::vector<std::vector<Scalar>> srows;
    for (const auto& r : rows) {
        std::vector<Scalar> row;
        for (long v : r) row.push_back(Scalar::of_int(v, FieldSpec::rationals()));
        srows.push_back(std::move(row));
    }
    return Matrix::from_rows(srows, cols, FieldSpec::rationals());
}

void BM_Interpolate(benchmark::State& state) {
    Arrangement arr = make_arrangement(
        {int_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 4),
         int_rows({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4)});
    for (auto _ : state) benchmark::DoNotOptimize(interpolate(arr, 1u << 30).lambda.size());
}
BENCHMARK(BM_Interpolate);

}  // namespace

BENCHMARK_MAIN();
