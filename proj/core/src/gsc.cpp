#include "gstar/gsc.hpp"

#include <algorithm>
#include <map>

namespace gstar {

StarConfig::StarConfig(FormList l, std::size_t a_) : lambda(std::move(l)), a(a_) {
    if (a < 1 || a > lambda.size())
        throw ValidationError("a_out_of_range", "a must lie in [1, " +
                                                    std::to_string(lambda.size()) + "], got " +
                                                    std::to_string(a));
    if (!is_essential(lambda))
        throw ValidationError("not_essential",
                              "the forms do not generate the irrelevant ideal");
}

namespace {

Matrix subset_rows(const FormList& lambda, const std::vector<std::size_t>& idx0) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(idx0.size());
    for (std::size_t i : idx0) rows.push_back(lambda[i].coeffs());
    return Matrix::from_rows(rows, lambda.ambient(), lambda.field());
}

std::vector<std::size_t> to_1based(const std::vector<std::size_t>& idx0) {
    std::vector<std::size_t> out(idx0);
    for (std::size_t& v : out) ++v;
    return out;
}

struct MatrixLess {
    bool operator()(const Matrix& a, const Matrix& b) const { return a.compare(b) < 0; }
};

}  // namespace

MinimalPrimeSet minimal_primes(const StarConfig& g, std::uint64_t subset_budget) {
    const std::size_t n = g.n();
    const std::size_t size = n - g.a + 1;
    check_subset_budget(n, size, subset_budget, "minimal prime enumeration");

    std::map<Matrix, std::vector<std::size_t>, MatrixLess> seen;  // canonical basis -> witness
    std::size_t min_codim = g.ambient();
    for_each_combination(n, size, [&](const std::vector<std::size_t>& idx0) {
        LinearSpan s = LinearSpan::from_rows(subset_rows(g.lambda, idx0));
        min_codim = std::min(min_codim, s.codim());
        seen.emplace(s.basis(), to_1based(idx0));  // keeps the first witness
    });

    // inclusion-minimal: drop spans whose row space strictly contains another's
    std::vector<WitnessedSpan> distinct;
    distinct.reserve(seen.size());
    for (const auto& [basis, witness] : seen)
        distinct.push_back({LinearSpan::from_rows(basis), witness});

    MinimalPrimeSet out;
    out.height = min_codim;
    for (const WitnessedSpan& cand : distinct) {
        bool minimal = true;
        for (const WitnessedSpan& other : distinct) {
            if (other.span == cand.span) continue;
            if (cand.span.contains(other.span)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.primes.push_back(cand);
    }
    std::sort(out.primes.begin(), out.primes.end(),
              [](const WitnessedSpan& a, const WitnessedSpan& b) {
                  return a.span.compare(b.span) < 0;
              });
    out.empty_variety = out.primes.size() == 1 && out.primes.front().span.codim() == g.ambient();
    return out;
}

std::size_t height(const StarConfig& g, std::uint64_t subset_budget) {
    const std::size_t n = g.n();
    const std::size_t size = n - g.a + 1;
    check_subset_budget(n, size, subset_budget, "height enumeration");
    std::size_t min_codim = g.ambient();
    for_each_combination(n, size, [&](const std::vector<std::size_t>& idx0) {
        min_codim = std::min(min_codim, rank_of(subset_rows(g.lambda, idx0)));
    });
    return min_codim;
}

EqualityReport radical_equals_arrangement(const StarConfig& g, const Arrangement& arr,
                                          std::uint64_t subset_budget) {
    if (arr.ambient != g.ambient())
        throw ValidationError("shape_mismatch", "arrangement ambient differs from forms");
    const std::size_t n = g.n();
    const std::size_t size = n - g.a + 1;
    check_subset_budget(n, size, subset_budget, "radical equality enumeration");

    // Equality holds iff every subset span contains some component and every
    // component shows up as a subset span (components being incomparable).
    std::vector<bool> component_hit(arr.components.size(), false);
    bool all_covered = true;
    for_each_combination(n, size, [&](const std::vector<std::size_t>& idx0) {
        if (!all_covered) return;
        Matrix rows = subset_rows(g.lambda, idx0);
        RrefResult rr = rref_rank(rows);
        Matrix reduced(rr.rank, rows.cols(), rows.field());
        for (std::size_t i = 0; i < rr.rank; ++i)
            for (std::size_t j = 0; j < rows.cols(); ++j) reduced.at(i, j) = rr.rref.at(i, j);
        bool covered = false;
        for (std::size_t c = 0; c < arr.components.size(); ++c) {
            const LinearSpan& comp = arr.components[c];
            if (comp.codim() > rr.rank) continue;
            if (span_contains(comp.basis(), reduced)) {
                covered = true;
                if (comp.codim() == rr.rank) component_hit[c] = true;
            }
        }
        if (!covered) all_covered = false;
    });

    EqualityReport report;
    if (all_covered &&
        std::all_of(component_hit.begin(), component_hit.end(), [](bool b) { return b; })) {
        report.equal = true;
        return report;
    }

    // precise diff for the report
    MinimalPrimeSet primes = minimal_primes(g, subset_budget);
    for (const LinearSpan& comp : arr.components) {
        bool found = std::any_of(primes.primes.begin(), primes.primes.end(),
                                 [&](const WitnessedSpan& w) { return w.span == comp; });
        if (!found) report.missing.push_back(comp);
    }
    for (const WitnessedSpan& w : primes.primes) {
        bool found = std::any_of(arr.components.begin(), arr.components.end(),
                                 [&](const LinearSpan& comp) { return w.span == comp; });
        if (!found) report.extra.push_back(w.span);
    }
    report.equal = report.missing.empty() && report.extra.empty();
    return report;
}

std::uint64_t projective_point_count(std::uint32_t p, std::size_t k) {
    unsigned __int128 acc = 0, power = 1;
    for (std::size_t i = 0; i < k; ++i) {
        acc += power;
        power *= p;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return std::uint64_t(acc);
}

namespace {

// visits every normalized projective point of F_p^k
template <typename Visit>
void for_each_projective_point(std::uint32_t p, std::size_t k, Visit&& visit) {
    std::vector<std::uint32_t> point(k, 0);
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(point.begin(), point.end(), 0u);
        point[lead] = 1;
        const std::size_t tail = k - lead - 1;
        while (true) {
            visit(const_cast<const std::vector<std::uint32_t>&>(point));
            std::size_t i = 0;
            for (; i < tail; ++i) {
                std::size_t pos = k - 1 - i;
                if (++point[pos] < p) break;
                point[pos] = 0;
            }
            if (i == tail) break;
        }
    }
}

std::vector<std::vector<std::uint32_t>> forms_mod_p(const FormList& lambda, std::uint32_t p) {
    if (!lambda.field().is_rational() && lambda.field().p != p)
        throw ValidationError("field_mismatch",
                              "forms over " + lambda.field().str() + ", scan requested mod " +
                                  std::to_string(p));
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) rows.push_back(form_mod_p(lambda[i], p));
    return rows;
}

}  // namespace

std::vector<PointFp> zero_locus_mod_p(const StarConfig& g, std::uint32_t p,
                                      std::uint64_t scan_budget) {
    const std::size_t k = g.ambient();
    std::uint64_t count = projective_point_count(p, k);
    if (count > scan_budget)
        throw BudgetError("projective scan", count, scan_budget);

    std::vector<std::vector<std::uint32_t>> rows = forms_mod_p(g.lambda, p);
    const std::size_t needed = g.n() - g.a + 1;  // vanishing forms that kill all a-fold products

    std::vector<PointFp> locus;
    for_each_projective_point(p, k, [&](const std::vector<std::uint32_t>& pt) {
        std::size_t vanishing = 0;
        for (const auto& row : rows) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < k; ++j) acc += std::uint64_t(row[j]) * pt[j];
            if (acc % p == 0) ++vanishing;
        }
        if (vanishing >= needed) locus.push_back(pt);
    });
    std::sort(locus.begin(), locus.end());
    return locus;
}

std::vector<PointFp> span_points_mod_p(const LinearSpan& s, std::uint32_t p,
                                       std::uint64_t scan_budget) {
    const std::size_t k = s.ambient();

    // the subspace as a saturated integer lattice; saturation keeps the
    // reduction mod p full-dimensional for every p
    std::vector<std::vector<mpz_class>> int_rows;
    if (s.field().is_rational()) {
        for (std::size_t i = 0; i < s.basis().rows(); ++i)
            int_rows.push_back(
                primitive_integer_coeffs(LinearForm::from_coeffs(s.basis().row(i))));
    } else {
        if (s.field().p != p)
            throw ValidationError("field_mismatch", "span already lives over a different prime");
        for (std::size_t i = 0; i < s.basis().rows(); ++i) {
            std::vector<mpz_class> row;
            for (const Scalar& c : s.basis().row(i)) row.emplace_back(long(c.residue()));
            int_rows.push_back(std::move(row));
        }
    }
    std::vector<std::vector<mpz_class>> lattice = integer_kernel(int_rows, k);
    const std::size_t d = lattice.size();
    if (d == 0) return {};

    std::vector<std::vector<std::uint32_t>> kb;
    for (const auto& row : lattice) {
        std::vector<std::uint32_t> r;
        for (const mpz_class& z : row) {
            mpz_class m = z % p;
            if (m < 0) m += p;
            r.push_back(std::uint32_t(m.get_ui()));
        }
        kb.push_back(std::move(r));
    }

    std::uint64_t count = projective_point_count(p, d);
    if (count > scan_budget) throw BudgetError("span point scan", count, scan_budget);

    std::vector<PointFp> points;
    for_each_projective_point(p, d, [&](const std::vector<std::uint32_t>& coeff) {
        PointFp pt(k, 0);
        for (std::size_t u = 0; u < d; ++u) {
            if (coeff[u] == 0) continue;
            for (std::size_t j = 0; j < k; ++j)
                pt[j] = fp::add(pt[j], fp::mul(coeff[u], kb[u][j], p), p);
        }
        // normalize: first nonzero coordinate becomes 1
        std::size_t lead = 0;
        while (lead < k && pt[lead] == 0) ++lead;
        std::uint32_t inv = fp::inv(pt[lead], p);
        for (std::size_t j = 0; j < k; ++j) pt[j] = fp::mul(pt[j], inv, p);
        points.push_back(std::move(pt));
    });
    std::sort(points.begin(), points.end());
    return points;
}

bool is_c_general_position(const FormList& lambda, std::size_t c) {
    if (c < 1 || c > std::min(lambda.size(), lambda.ambient()))
        throw ValidationError("c_out_of_range",
                              "c must lie in [1, min(n, k)], got " + std::to_string(c));
    bool all_independent = true;
    for_each_combination(lambda.size(), c, [&](const std::vector<std::size_t>& idx0) {
        if (!all_independent) return;
        if (rank_of(subset_rows(lambda, idx0)) != c) all_independent = false;
    });
    return all_independent;
}

Classification classify(const StarConfig& g, std::uint64_t subset_budget) {
    Classification out;
    const std::size_t k = g.ambient();
    out.usual_star =
        g.n() >= k && g.a + k >= g.n() + 2 && is_c_general_position(g.lambda, k);
    out.codim = height(g, subset_budget);
    return out;
}

}  // namespace gstar
