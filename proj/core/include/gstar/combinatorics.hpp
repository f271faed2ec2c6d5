#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "gstar/errors.hpp"

namespace gstar {

// C(n, k), saturating at uint64 max.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Throws BudgetError when C(n, k) exceeds the budget.
void check_subset_budget(std::uint64_t n, std::uint64_t k, std::uint64_t budget,
                         const char* what);

// Visits all k-subsets of {0,...,n-1} in lexicographic order.
template <typename Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return;
    if (k == 0) {
        const std::vector<std::size_t> empty;
        visit(empty);
        return;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(const_cast<const std::vector<std::size_t>&>(idx));
        // advance: rightmost index that can still move right
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        if (idx[i] == i + n - k) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// All a-subsets of {1,...,n} as strictly increasing tuples, lexicographic.
std::vector<std::vector<std::size_t>> afold_index_sets(std::size_t n, std::size_t a);

}  // namespace gstar
