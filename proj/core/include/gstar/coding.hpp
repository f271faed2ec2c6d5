#pragma once

#include "gstar/gsc.hpp"

namespace gstar {

// [n, k] code generated by the k x n matrix whose columns carry the
// coefficients of the forms.
struct GeneratorMatrix {
    FormList lambda;
    Matrix mat;  // k x n, rank k

    static GeneratorMatrix from_forms(const FormList& lambda);
    std::size_t n() const { return mat.cols(); }
    std::size_t k() const { return mat.rows(); }
};

// (l_1(x), ..., l_n(x))
std::vector<Scalar> encode(const GeneratorMatrix& g, const std::vector<Scalar>& x);

std::size_t weight(const std::vector<Scalar>& word);

struct Subcode {
    Matrix preimage;  // canonical rref basis of the message subspace in K^k
    Matrix image;     // encoded basis rows, dim x n
    std::vector<std::size_t> support;  // 1-based, ascending

    std::size_t dimension() const { return preimage.rows(); }
    std::size_t support_size() const { return support.size(); }
};

// Messages whose codewords vanish on every coordinate outside s (1-based).
// The reported support can be smaller than s.
Subcode coordinate_subcode(const GeneratorMatrix& g, const std::vector<std::size_t>& s);

// Nonzero coordinate subcodes of all s-subsets, deduplicated, maximal under
// subspace inclusion.
std::vector<Subcode> maximal_subcodes_of_support_at_most(const GeneratorMatrix& g,
                                                         std::size_t s,
                                                         std::uint64_t subset_budget);

// The image of each component's subspace.
std::vector<Subcode> component_subcodes(const GeneratorMatrix& g,
                                        const std::vector<LinearSpan>& components);

// Rank of every subset of forms of size <= k is unchanged mod p.
bool reduction_is_good(const FormList& lambda, std::uint32_t p);

// First `count` candidates that are prime and reduce well.
std::vector<std::uint32_t> good_primes(const FormList& lambda, std::size_t count,
                                       const std::vector<std::uint32_t>& candidates);

// Fallback prime list for scans: 101, 103, 107, ...
extern const std::vector<std::uint32_t> kScanPrimes;

// Minimum nonzero weight by full projective enumeration over F_p.
std::size_t min_distance(const GeneratorMatrix& g, std::uint32_t p,
                         std::uint64_t scan_budget);

struct CodewordClass {
    PointFp message;  // normalized projective representative in F_p^k
    std::vector<std::uint32_t> word;
    std::size_t weight = 0;
    std::vector<std::size_t> support;  // 1-based
};

// Projective classes whose support properly contains no other nonzero
// codeword's support, filtered to weight <= w.
std::vector<CodewordClass> minimal_codewords_upto(const GeneratorMatrix& g, std::size_t w,
                                                  std::uint32_t p, std::uint64_t scan_budget);

}  // namespace gstar
