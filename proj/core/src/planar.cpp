#include "gstar/planar.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gstar {

namespace {

std::array<mpz_class, 3> normalize_triple(std::array<mpz_class, 3> v) {
    mpz_class g(0);
    for (const mpz_class& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g == 0)
        throw ValidationError("zero_point", "the zero triple is not a projective point");
    for (mpz_class& z : v) z /= g;
    for (const mpz_class& z : v) {
        if (z == 0) continue;
        if (z < 0)
            for (mpz_class& w : v) w = -w;
        break;
    }
    return v;
}

std::array<mpz_class, 3> cross(const std::array<mpz_class, 3>& a,
                               const std::array<mpz_class, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

mpz_class dot(const std::array<mpz_class, 3>& a, const std::array<mpz_class, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

LinearForm form_from_triple(const std::array<mpz_class, 3>& t) {
    std::vector<Scalar> coeffs;
    for (const mpz_class& z : t) coeffs.push_back(Scalar::of_rational(mpq_class(z)));
    return LinearForm::from_coeffs(std::move(coeffs));
}

struct PointLess {
    bool operator()(const ProjPoint& a, const ProjPoint& b) const { return a.compare(b) < 0; }
};

}  // namespace

ProjPoint ProjPoint::from_rationals(const std::array<mpq_class, 3>& q) {
    mpz_class lcm_den(1);
    for (const mpq_class& c : q)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    std::array<mpz_class, 3> v;
    for (std::size_t i = 0; i < 3; ++i) {
        mpq_class scaled = q[i] * lcm_den;
        v[i] = scaled.get_num();
    }
    return ProjPoint{normalize_triple(std::move(v))};
}

ProjPoint ProjPoint::from_ints(long a, long b, long c) {
    return ProjPoint{normalize_triple({mpz_class(a), mpz_class(b), mpz_class(c)})};
}

int ProjPoint::compare(const ProjPoint& o) const {
    for (std::size_t i = 0; i < 3; ++i)
        if (int c = cmp(coords[i], o.coords[i]); c != 0) return c < 0 ? -1 : 1;
    return 0;
}

std::string ProjPoint::str() const {
    return "[" + coords[0].get_str() + "," + coords[1].get_str() + "," + coords[2].get_str() +
           "]";
}

std::vector<ProjPoint> dedup_points(const std::vector<ProjPoint>& pts) {
    std::vector<ProjPoint> out;
    std::set<ProjPoint, PointLess> seen;
    for (const ProjPoint& p : pts)
        if (seen.insert(p).second) out.push_back(p);
    return out;
}

LinearSpan point_ideal(const ProjPoint& p) {
    std::vector<Scalar> row;
    for (const mpz_class& z : p.coords) row.push_back(Scalar::of_rational(mpq_class(z)));
    Matrix m = Matrix::from_rows({row}, 3, FieldSpec::rationals());
    return LinearSpan::from_rows(kernel_basis(m));
}

std::vector<ConnectingLine> connecting_lines(const std::vector<ProjPoint>& x) {
    const std::size_t m = x.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (x[i] == x[j])
                throw ValidationError("duplicate_points", "points " + std::to_string(i + 1) +
                                                              " and " + std::to_string(j + 1) +
                                                              " coincide");
    if (m < 3)
        throw ValidationError("too_few_points",
                              "need at least 3 distinct points, got " + std::to_string(m));

    std::vector<ConnectingLine> lines;
    std::vector<std::vector<bool>> paired(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (paired[i][j]) continue;
            std::array<mpz_class, 3> t = normalize_triple(cross(x[i].coords, x[j].coords));
            ConnectingLine line{form_from_triple(t), {}, 0};
            for (std::size_t q = 0; q < m; ++q)
                if (dot(t, x[q].coords) == 0) line.points_on.push_back(q + 1);
            for (std::size_t u = 0; u < line.points_on.size(); ++u)
                for (std::size_t v = u + 1; v < line.points_on.size(); ++v)
                    paired[line.points_on[u] - 1][line.points_on[v] - 1] = true;
            line.multiplicity = line.points_on.size() - 1;
            if (line.points_on.size() == m)
                throw ValidationError("collinear_points", "all points lie on one line");
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

std::pair<std::vector<SingularPoint>, bool> singularity_profile(
    const std::vector<ConnectingLine>& lines, const std::vector<ProjPoint>& x) {
    std::map<ProjPoint, std::set<std::size_t>, PointLess> through;  // point -> line indices
    for (std::size_t u = 0; u < lines.size(); ++u) {
        std::array<mpz_class, 3> cu;
        {
            std::vector<mpz_class> v = primitive_integer_coeffs(lines[u].form);
            cu = {v[0], v[1], v[2]};
        }
        for (std::size_t v = u + 1; v < lines.size(); ++v) {
            std::vector<mpz_class> w = primitive_integer_coeffs(lines[v].form);
            ProjPoint q{normalize_triple(cross(cu, {w[0], w[1], w[2]}))};
            auto& s = through[q];
            s.insert(u + 1);
            s.insert(v + 1);
        }
    }

    const std::size_t m = x.size();
    std::vector<SingularPoint> table;
    bool ok = true;
    std::set<ProjPoint, PointLess> in_x(x.begin(), x.end());
    std::set<ProjPoint, PointLess> seen;
    for (const auto& [point, idx] : through) {
        SingularPoint sp;
        sp.point = point;
        sp.in_x = in_x.count(point) > 0;
        sp.line_indices.assign(idx.begin(), idx.end());
        for (std::size_t li : idx) sp.nu += lines[li - 1].multiplicity;
        if (sp.in_x ? sp.nu != m - 1 : sp.nu > m - 2) ok = false;
        seen.insert(point);
        table.push_back(std::move(sp));
    }
    // every point of X must show up among the singular points
    for (const ProjPoint& p : x)
        if (!seen.count(p)) ok = false;
    return {std::move(table), ok};
}

std::pair<std::size_t, bool> poincare_crosscheck(const std::vector<ProjPoint>& x) {
    std::vector<ProjPoint> pts = dedup_points(x);
    // dual line arrangement: the line a*x0 + b*x1 + c*x2 per point [a,b,c]
    std::map<ProjPoint, std::set<std::size_t>, PointLess> flats;  // intersection -> dual lines
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            ProjPoint q{normalize_triple(cross(pts[i].coords, pts[j].coords))};
            auto& s = flats[q];
            s.insert(i);
            s.insert(j);
        }
    std::size_t sum_mu = 0;
    for (const auto& [q, dual] : flats) sum_mu += dual.size() - 1;

    std::size_t lambda_size = 0;
    for (const ConnectingLine& line : connecting_lines(pts)) lambda_size += line.multiplicity;
    return {sum_mu, sum_mu == lambda_size};
}

PlanarInterpolation planar_interpolate(const std::vector<ProjPoint>& x,
                                       std::uint64_t subset_budget) {
    std::vector<ProjPoint> points = dedup_points(x);
    std::vector<ConnectingLine> lines = connecting_lines(points);

    std::vector<LinearForm> forms;
    for (const ConnectingLine& line : lines)
        for (std::size_t r = 0; r < line.multiplicity; ++r) forms.push_back(line.form);
    FormList lambda_x(std::move(forms));

    const std::size_t m = points.size();
    const std::size_t a = lambda_x.size() - (m - 1) + 1;

    auto [table, profile_ok] = singularity_profile(lines, points);

    StarConfig g(lambda_x, a);
    MinimalPrimeSet primes = minimal_primes(g, subset_budget);

    bool verified = primes.primes.size() == m;
    if (verified) {
        for (const ProjPoint& p : points) {
            LinearSpan ideal = point_ideal(p);
            bool found = std::any_of(primes.primes.begin(), primes.primes.end(),
                                     [&](const WitnessedSpan& w) { return w.span == ideal; });
            if (!found) {
                verified = false;
                break;
            }
        }
    }

    auto [sum_mu, matches] = poincare_crosscheck(points);
    return PlanarInterpolation{std::move(points), std::move(lines),   std::move(lambda_x),
                               a,                 std::move(table),   profile_ok,
                               std::move(primes), verified,           sum_mu,
                               matches};
}

}  // namespace gstar
