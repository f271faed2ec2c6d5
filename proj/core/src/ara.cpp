#include "gstar/ara.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gstar/combinatorics.hpp"

namespace gstar {

std::size_t SVPartition::total() const {
    std::size_t t = 0;
    for (const auto& fam : families) t += fam.size();
    return t;
}

SVPartition sv_partition(std::size_t n, std::size_t a) {
    if (a < 1 || a > n)
        throw ValidationError("a_out_of_range",
                              "a must lie in [1, " + std::to_string(n) + "]");
    if (n > 64)
        throw ValidationError("too_many_forms", "partition indices limited to n <= 64");

    SVPartition part;
    part.n = n;
    part.a = a;
    part.j = n - a;

    std::vector<std::size_t> p0;
    for (std::size_t i = part.j + 1; i <= n; ++i) p0.push_back(i);
    part.families.push_back({p0});

    for (std::size_t u = 1; u <= part.j; ++u) {
        const std::size_t lead = part.j - u + 1;
        // tails: (a-1)-subsets of {lead+1, ..., n}
        const std::size_t pool = n - lead;
        std::vector<std::vector<std::size_t>> family;
        for_each_combination(pool, a - 1, [&](const std::vector<std::size_t>& idx0) {
            std::vector<std::size_t> elem;
            elem.reserve(a);
            elem.push_back(lead);
            for (std::size_t v : idx0) elem.push_back(lead + 1 + v);
            family.push_back(std::move(elem));
        });
        part.families.push_back(std::move(family));
    }
    return part;
}

namespace {

std::uint64_t mask_of(const std::vector<std::size_t>& subset) {
    std::uint64_t m = 0;
    for (std::size_t i : subset) m |= std::uint64_t(1) << (i - 1);
    return m;
}

std::string describe(const std::vector<std::size_t>& subset) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
    os << "}";
    return os.str();
}

}  // namespace

SvConditionReport verify_sv_conditions(const SVPartition& part) {
    SvConditionReport report;
    const std::size_t size = part.n - part.j;

    if (part.families.empty() || part.families[0].size() != 1) {
        report.violated = "ii";
        report.witness = "P_0 holds " +
                         std::to_string(part.families.empty() ? 0 : part.families[0].size()) +
                         " elements";
        return report;
    }

    // (i): the families partition all subsets of size n-j
    std::set<std::uint64_t> seen;
    for (const auto& family : part.families) {
        for (const auto& elem : family) {
            bool shaped = elem.size() == size && std::is_sorted(elem.begin(), elem.end());
            for (std::size_t i : elem)
                if (i < 1 || i > part.n) shaped = false;
            if (shaped)
                for (std::size_t u = 0; u + 1 < elem.size(); ++u)
                    if (elem[u] == elem[u + 1]) shaped = false;
            if (!shaped || !seen.insert(mask_of(elem)).second) {
                report.violated = "i";
                report.witness = describe(elem) + (shaped ? " repeats" : " is malformed");
                return report;
            }
        }
    }
    if (seen.size() != binomial(part.n, size)) {
        report.violated = "i";
        report.witness = "families cover " + std::to_string(seen.size()) + " of " +
                         std::to_string(binomial(part.n, size)) + " subsets";
        return report;
    }

    // (iii): each pair in P_u has a divisor in a lower family
    std::vector<std::set<std::uint64_t>> family_masks;
    for (const auto& family : part.families) {
        std::set<std::uint64_t> masks;
        for (const auto& elem : family) masks.insert(mask_of(elem));
        family_masks.push_back(std::move(masks));
    }
    for (std::size_t u = 1; u < part.families.size(); ++u) {
        const auto& family = part.families[u];
        for (std::size_t x = 0; x < family.size(); ++x) {
            for (std::size_t y = x + 1; y < family.size(); ++y) {
                std::uint64_t uni = mask_of(family[x]) | mask_of(family[y]);
                bool found = false;
                // the construction's witness: lead gamma = smallest second entry
                if (family[x].size() >= 2 && family[y].size() >= 2) {
                    std::size_t gamma = std::min(family[x][1], family[y][1]);
                    if (gamma <= part.j + 1) {
                        std::size_t lower = part.j - gamma + 1;
                        if (lower < u)
                            for (std::uint64_t m : family_masks[lower])
                                if ((m & ~uni) == 0) {
                                    found = true;
                                    break;
                                }
                    }
                }
                for (std::size_t lower = 0; lower < u && !found; ++lower)
                    for (std::uint64_t m : family_masks[lower])
                        if ((m & ~uni) == 0) {
                            found = true;
                            break;
                        }
                if (!found) {
                    report.violated = "iii";
                    report.witness = "P_" + std::to_string(u) + " pair " + describe(family[x]) +
                                     "," + describe(family[y]) + " has no lower divisor";
                    return report;
                }
            }
        }
    }

    report.ok = true;
    return report;
}

SVSystem sv_generators(const FormList& lambda, std::size_t a,
                       std::uint32_t uniform_exponent) {
    SVPartition part = sv_partition(lambda.size(), a);
    std::vector<std::vector<std::uint32_t>> exps;
    for (const auto& family : part.families)
        exps.emplace_back(family.size(), uniform_exponent);
    return sv_generators(lambda, a, exps);
}

SVSystem sv_generators(const FormList& lambda, std::size_t a,
                       const std::vector<std::vector<std::uint32_t>>& exponents) {
    if (!is_essential(lambda))
        throw ValidationError("not_essential",
                              "the forms do not generate the irrelevant ideal");
    SVSystem sys{lambda, sv_partition(lambda.size(), a), exponents, {}};

    if (exponents.size() != sys.partition.families.size())
        throw ValidationError("bad_exponents", "one exponent list per family required");
    for (std::size_t u = 0; u < exponents.size(); ++u) {
        if (exponents[u].size() != sys.partition.families[u].size())
            throw ValidationError("bad_exponents", "exponent count differs from family size");
        for (std::uint32_t e : exponents[u])
            if (e < 1) throw ValidationError("bad_exponents", "exponents must be >= 1");
    }

    SvConditionReport check = verify_sv_conditions(sys.partition);
    if (!check.ok)
        throw VerificationError("partition violates condition (" + check.violated +
                                "): " + check.witness);

    for (std::size_t u = 0; u < sys.partition.families.size(); ++u) {
        Polynomial q(lambda.field(), lambda.ambient());
        for (std::size_t e = 0; e < sys.partition.families[u].size(); ++e) {
            Polynomial prod = product_of_forms(lambda, sys.partition.families[u][e]);
            q = q + prod.pow(exponents[u][e]);
        }
        sys.generators.push_back(std::move(q));
    }
    return sys;
}

namespace {

struct FlatPoly {
    std::vector<std::uint32_t> coeffs;
    std::vector<std::vector<std::uint32_t>> exps;

    static FlatPoly from(const Polynomial& f) {
        FlatPoly out;
        for (const auto& [m, c] : f.terms()) {
            out.coeffs.push_back(c.residue());
            out.exps.push_back(m.exps());
        }
        return out;
    }

    std::uint32_t eval(const std::vector<std::uint32_t>& pt, std::uint32_t p) const {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < coeffs.size(); ++t) {
            std::uint64_t term = coeffs[t];
            for (std::size_t j = 0; j < pt.size(); ++j)
                for (std::uint32_t e = 0; e < exps[t][j]; ++e) term = term * pt[j] % p;
            acc = (acc + term) % p;
        }
        return std::uint32_t(acc);
    }
};

}  // namespace

LocusMatchReport verify_zero_locus_match(const SVSystem& sys, const StarConfig& g,
                                         const std::vector<std::uint32_t>& primes,
                                         std::uint64_t subset_budget,
                                         std::uint64_t scan_budget) {
    if (sys.lambda.size() != g.n() || sys.partition.a != g.a)
        throw ValidationError("mismatched_inputs", "system and configuration disagree");
    for (std::size_t i = 0; i < g.n(); ++i)
        if (sys.lambda[i] != g.lambda[i])
            throw ValidationError("mismatched_inputs", "system and configuration disagree");

    LocusMatchReport report;

    // the easy containment, exact: every generator lies in every minimal prime
    MinimalPrimeSet mp = minimal_primes(g, subset_budget);
    report.symbolic_containment = true;
    for (const Polynomial& q : sys.generators)
        for (const WitnessedSpan& w : mp.primes)
            if (!vanishes_on_span(q, w.span)) report.symbolic_containment = false;

    const std::size_t k = g.ambient();
    for (std::uint32_t p : primes) {
        PrimeLocusMatch entry;
        entry.p = p;

        std::vector<PointFp> formula = zero_locus_mod_p(g, p, scan_budget);

        std::vector<FlatPoly> flat;
        flat.reserve(sys.generators.size());
        for (const Polynomial& q : sys.generators)
            flat.push_back(FlatPoly::from(reduce_mod_p(q, p)));

        std::vector<PointFp> system;
        std::vector<std::uint32_t> pt(k, 0);
        for (std::size_t lead = 0; lead < k; ++lead) {
            std::fill(pt.begin(), pt.end(), 0u);
            pt[lead] = 1;
            const std::size_t tail = k - lead - 1;
            while (true) {
                bool all_zero = true;
                for (const FlatPoly& q : flat)
                    if (q.eval(pt, p) != 0) {
                        all_zero = false;
                        break;
                    }
                if (all_zero) system.push_back(pt);
                std::size_t i = 0;
                for (; i < tail; ++i) {
                    std::size_t pos = k - 1 - i;
                    if (++pt[pos] < p) break;
                    pt[pos] = 0;
                }
                if (i == tail) break;
            }
        }
        std::sort(system.begin(), system.end());

        entry.system_size = system.size();
        entry.formula_size = formula.size();
        std::set_difference(system.begin(), system.end(), formula.begin(), formula.end(),
                            std::back_inserter(entry.only_system));
        std::set_difference(formula.begin(), formula.end(), system.begin(), system.end(),
                            std::back_inserter(entry.only_formula));
        if (entry.only_system.size() > 5) entry.only_system.resize(5);
        if (entry.only_formula.size() > 5) entry.only_formula.resize(5);
        entry.match = entry.only_system.empty() && entry.only_formula.empty() &&
                      entry.system_size == entry.formula_size;
        report.per_prime.push_back(std::move(entry));
    }
    report.all_match =
        !report.per_prime.empty() &&
        std::all_of(report.per_prime.begin(), report.per_prime.end(),
                    [](const PrimeLocusMatch& e) { return e.match; });
    return report;
}

BoundReport bounds(const Arrangement& arr) {
    BoundReport report;
    report.sv_bound = 1;
    report.height = arr.ambient;
    for (const LinearSpan& s : arr.components) {
        report.sv_bound += s.codim() - 1;
        report.height = std::min(report.height, s.codim());
    }
    report.ee_bound = arr.ambient - 1;
    report.ee_applicable = true;
    report.stci_certified = report.sv_bound == report.height;
    return report;
}

BoundReport bounds(const StarConfig& g, std::uint64_t subset_budget) {
    BoundReport report;
    MinimalPrimeSet mp = minimal_primes(g, subset_budget);
    report.sv_bound = g.n() - g.a + 1;
    report.ee_bound = g.ambient() - 1;
    report.ee_applicable = !mp.empty_variety;
    report.height = mp.height;
    report.stci_certified = report.height == report.sv_bound;
    return report;
}

BoundReport stci_certificate(const StarConfig& g, std::uint64_t subset_budget) {
    return bounds(g, subset_budget);
}

}  // namespace gstar
