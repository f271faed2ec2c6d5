#include "gstar/coding.hpp"

#include <algorithm>
#include <map>

namespace gstar {

const std::vector<std::uint32_t> kScanPrimes = {101, 103, 107, 109, 113, 127, 131,
                                                137, 139, 149, 151, 157, 163, 167};

GeneratorMatrix GeneratorMatrix::from_forms(const FormList& lambda) {
    if (!is_essential(lambda))
        throw ValidationError("not_essential", "generator matrix needs rank k forms");
    Matrix m(lambda.ambient(), lambda.size(), lambda.field());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (std::size_t j = 0; j < lambda.ambient(); ++j)
            m.at(j, i) = lambda[i].coeffs()[j];
    return GeneratorMatrix{lambda, std::move(m)};
}

std::vector<Scalar> encode(const GeneratorMatrix& g, const std::vector<Scalar>& x) {
    std::vector<Scalar> word;
    word.reserve(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) word.push_back(g.lambda[i].evaluate(x));
    return word;
}

std::size_t weight(const std::vector<Scalar>& word) {
    std::size_t w = 0;
    for (const Scalar& c : word) w += c.is_zero() ? 0 : 1;
    return w;
}

namespace {

Subcode subcode_from_preimage(const GeneratorMatrix& g, Matrix preimage) {
    Subcode out;
    std::vector<std::vector<Scalar>> image_rows;
    std::vector<bool> in_support(g.n(), false);
    for (std::size_t r = 0; r < preimage.rows(); ++r) {
        std::vector<Scalar> word = encode(g, preimage.row(r));
        for (std::size_t i = 0; i < g.n(); ++i)
            if (!word[i].is_zero()) in_support[i] = true;
        image_rows.push_back(std::move(word));
    }
    out.image = Matrix::from_rows(image_rows, g.n(), g.mat.field());
    out.preimage = std::move(preimage);
    for (std::size_t i = 0; i < g.n(); ++i)
        if (in_support[i]) out.support.push_back(i + 1);
    return out;
}

}  // namespace

Subcode coordinate_subcode(const GeneratorMatrix& g, const std::vector<std::size_t>& s) {
    std::vector<bool> inside(g.n(), false);
    for (std::size_t i : s) {
        if (i < 1 || i > g.n())
            throw ValidationError("index_out_of_range",
                                  "coordinate " + std::to_string(i) + " outside [1, " +
                                      std::to_string(g.n()) + "]");
        inside[i - 1] = true;
    }
    std::vector<std::vector<Scalar>> outside_rows;
    for (std::size_t i = 0; i < g.n(); ++i)
        if (!inside[i]) outside_rows.push_back(g.lambda[i].coeffs());
    Matrix outside = Matrix::from_rows(outside_rows, g.k(), g.mat.field());
    return subcode_from_preimage(g, kernel_basis(outside));
}

std::vector<Subcode> maximal_subcodes_of_support_at_most(const GeneratorMatrix& g,
                                                         std::size_t s,
                                                         std::uint64_t subset_budget) {
    if (s == 0) return {};
    const std::size_t size = std::min(s, g.n());
    check_subset_budget(g.n(), size, subset_budget, "subcode enumeration");

    struct MatrixLess {
        bool operator()(const Matrix& a, const Matrix& b) const { return a.compare(b) < 0; }
    };
    std::map<Matrix, Subcode, MatrixLess> distinct;
    for_each_combination(g.n(), size, [&](const std::vector<std::size_t>& idx0) {
        std::vector<std::size_t> s1(idx0);
        for (std::size_t& v : s1) ++v;
        Subcode d = coordinate_subcode(g, s1);
        if (d.dimension() == 0) return;
        distinct.emplace(d.preimage, std::move(d));
    });

    std::vector<Subcode> out;
    for (const auto& [basis, cand] : distinct) {
        bool maximal = true;
        for (const auto& [basis2, other] : distinct) {
            if (basis2 == basis) continue;
            if (other.dimension() >= cand.dimension() && span_contains(basis, basis2)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(cand);
    }
    return out;  // map order is already deterministic
}

std::vector<Subcode> component_subcodes(const GeneratorMatrix& g,
                                        const std::vector<LinearSpan>& components) {
    std::vector<Subcode> out;
    out.reserve(components.size());
    for (const LinearSpan& s : components)
        out.push_back(subcode_from_preimage(g, kernel_basis(s.basis())));
    return out;
}

bool reduction_is_good(const FormList& lambda, std::uint32_t p) {
    if (!lambda.field().is_rational()) return lambda.field().p == p;
    FieldSpec fp_spec = FieldSpec::prime(p);

    std::vector<std::vector<Scalar>> rat_rows, mod_rows;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        rat_rows.push_back(lambda[i].coeffs());
        std::vector<Scalar> row;
        for (std::uint32_t r : form_mod_p(lambda[i], p))
            row.push_back(Scalar::of_residue(r, fp_spec));
        mod_rows.push_back(std::move(row));
    }

    const std::size_t k = lambda.ambient();
    bool good = true;
    for (std::size_t size = 1; size <= std::min(lambda.size(), k) && good; ++size) {
        for_each_combination(lambda.size(), size, [&](const std::vector<std::size_t>& idx0) {
            if (!good) return;
            std::vector<std::vector<Scalar>> a, b;
            for (std::size_t i : idx0) {
                a.push_back(rat_rows[i]);
                b.push_back(mod_rows[i]);
            }
            std::size_t ra = rank_of(Matrix::from_rows(a, k, lambda.field()));
            std::size_t rb = rank_of(Matrix::from_rows(b, k, fp_spec));
            if (ra != rb) good = false;
        });
    }
    return good;
}

std::vector<std::uint32_t> good_primes(const FormList& lambda, std::size_t count,
                                       const std::vector<std::uint32_t>& candidates) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p : candidates) {
        if (out.size() == count) break;
        if (is_prime_u32(p) && reduction_is_good(lambda, p)) out.push_back(p);
    }
    if (out.size() < count)
        throw ValidationError("bad_reduction", "no good reduction prime among the candidates");
    return out;
}

namespace {

// message scan shared by min_distance and minimal_codewords_upto
template <typename Visit>
void scan_codewords(const GeneratorMatrix& g, std::uint32_t p, std::uint64_t scan_budget,
                    Visit&& visit) {
    if (!reduction_is_good(g.lambda, p)) throw BadReductionError(p);
    const std::size_t k = g.k(), n = g.n();
    std::uint64_t count = projective_point_count(p, k);
    if (count > scan_budget) throw BudgetError("codeword scan", count, scan_budget);

    std::vector<std::vector<std::uint32_t>> rows;  // n x k residues
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(form_mod_p(g.lambda[i], p));

    // same normalized projective enumeration as the zero-locus scan
    std::vector<std::uint32_t> pt(k, 0);
    std::vector<std::uint32_t> word(n, 0);
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(pt.begin(), pt.end(), 0u);
        pt[lead] = 1;
        const std::size_t tail = k - lead - 1;
        while (true) {
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t acc = 0;
                for (std::size_t j = 0; j < k; ++j) acc += std::uint64_t(rows[i][j]) * pt[j];
                word[i] = std::uint32_t(acc % p);
            }
            visit(const_cast<const std::vector<std::uint32_t>&>(pt),
                  const_cast<const std::vector<std::uint32_t>&>(word));
            std::size_t i = 0;
            for (; i < tail; ++i) {
                std::size_t pos = k - 1 - i;
                if (++pt[pos] < p) break;
                pt[pos] = 0;
            }
            if (i == tail) break;
        }
    }
}

}  // namespace

std::size_t min_distance(const GeneratorMatrix& g, std::uint32_t p, std::uint64_t scan_budget) {
    std::size_t best = g.n() + 1;
    scan_codewords(g, p, scan_budget,
                   [&](const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>& w) {
                       std::size_t wt = 0;
                       for (std::uint32_t c : w) wt += c != 0 ? 1 : 0;
                       if (wt > 0) best = std::min(best, wt);
                   });
    return best;
}

std::vector<CodewordClass> minimal_codewords_upto(const GeneratorMatrix& g, std::size_t w,
                                                  std::uint32_t p, std::uint64_t scan_budget) {
    if (g.n() > 64)
        throw ValidationError("too_many_forms", "support masks limited to 64 coordinates");

    std::vector<CodewordClass> all;
    std::vector<std::uint64_t> masks;
    scan_codewords(g, p, scan_budget,
                   [&](const std::vector<std::uint32_t>& pt, const std::vector<std::uint32_t>& wd) {
                       std::uint64_t mask = 0;
                       CodewordClass c;
                       for (std::size_t i = 0; i < wd.size(); ++i)
                           if (wd[i] != 0) {
                               mask |= std::uint64_t(1) << i;
                               c.support.push_back(i + 1);
                           }
                       if (mask == 0) return;
                       c.message = pt;
                       c.word = wd;
                       c.weight = c.support.size();
                       masks.push_back(mask);
                       all.push_back(std::move(c));
                   });

    std::vector<std::uint64_t> distinct(masks);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<CodewordClass> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i].weight > w) continue;
        bool minimal = true;
        for (std::uint64_t m : distinct) {
            if (m != masks[i] && (m & ~masks[i]) == 0) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(all[i]);
    }
    std::sort(out.begin(), out.end(), [](const CodewordClass& a, const CodewordClass& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.message < b.message;
    });
    return out;
}

}  // namespace gstar
