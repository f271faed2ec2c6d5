#include "gstar/combinatorics.hpp"

namespace gstar {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;  // exact: product of i consecutive integers is divisible by i!
        if (acc > kMax) return kMax;
    }
    return std::uint64_t(acc);
}

void check_subset_budget(std::uint64_t n, std::uint64_t k, std::uint64_t budget,
                         const char* what) {
    std::uint64_t c = binomial(n, k);
    if (c > budget) throw BudgetError(what, c, budget);
}

std::vector<std::vector<std::size_t>> afold_index_sets(std::size_t n, std::size_t a) {
    if (a < 1 || a > n)
        throw ValidationError("index_out_of_range",
                              "subset size must lie in [1, n], got " + std::to_string(a));
    std::vector<std::vector<std::size_t>> out;
    out.reserve(binomial(n, a));
    for_each_combination(n, a, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> tuple(idx);
        for (std::size_t& v : tuple) ++v;  // 1-based
        out.push_back(std::move(tuple));
    });
    return out;
}

}  // namespace gstar
