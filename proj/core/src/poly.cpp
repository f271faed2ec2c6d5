#include "gstar/poly.hpp"

#include <sstream>

namespace gstar {

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (std::uint32_t e : exps_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exps() > b.exps();
}

Polynomial Polynomial::constant(const Scalar& c, std::size_t ambient) {
    Polynomial p(c.field(), ambient);
    p.add_term(Monomial::unit(ambient), c);
    return p;
}

Polynomial Polynomial::from_linear(const LinearForm& f) {
    Polynomial p(f.field(), f.ambient());
    for (std::size_t j = 0; j < f.ambient(); ++j) {
        if (f.coeffs()[j].is_zero()) continue;
        std::vector<std::uint32_t> e(f.ambient(), 0);
        e[j] = 1;
        p.add_term(Monomial(std::move(e)), f.coeffs()[j]);
    }
    return p;
}

std::uint32_t Polynomial::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint32_t d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (m.ambient() != ambient_)
        throw ValidationError("shape_mismatch", "monomial ambient differs from polynomial");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out(field_, ambient_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial acc = Polynomial::constant(Scalar::one(field_), ambient_);
    for (std::uint32_t i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != ambient_)
        throw ValidationError("shape_mismatch", "point length differs from ambient dimension");
    Scalar acc = Scalar::zero(field_);
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < ambient_; ++i)
            for (std::uint32_t e = 0; e < m.exp(i); ++e) t = t * point[i];
        acc = acc + t;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ambient_ != o.ambient_ || !(field_ == o.field_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || !(it->second == jt->second)) return false;
    return true;
}

Polynomial product_of_forms(const FormList& lambda, const std::vector<std::size_t>& indices) {
    Polynomial acc =
        Polynomial::constant(Scalar::one(lambda.field()), lambda.ambient());
    for (std::size_t i : indices) {
        if (i < 1 || i > lambda.size())
            throw ValidationError("index_out_of_range",
                                  "form index " + std::to_string(i) + " outside [1, " +
                                      std::to_string(lambda.size()) + "]");
        acc = acc * Polynomial::from_linear(lambda.at_1based(i));
    }
    return acc;
}

Scalar evaluate(const Polynomial& f, const std::vector<Scalar>& point) {
    return f.evaluate(point);
}

bool vanishes_on_span(const Polynomial& f, const LinearSpan& s) {
    if (f.ambient() != s.ambient())
        throw ValidationError("shape_mismatch", "polynomial and span ambient differ");
    const FieldSpec& field = f.field();
    Matrix kb = kernel_basis(s.basis());  // d x k, d = dim of the subspace
    const std::size_t d = kb.rows();

    // substitute x_i -> sum_u kb[u][i] t_u and expand in the t variables
    std::vector<Polynomial> subst;
    subst.reserve(f.ambient());
    for (std::size_t i = 0; i < f.ambient(); ++i) {
        Polynomial li(field, d);
        for (std::size_t u = 0; u < d; ++u) {
            if (kb.at(u, i).is_zero()) continue;
            std::vector<std::uint32_t> e(d, 0);
            e[u] = 1;
            li.add_term(Monomial(std::move(e)), kb.at(u, i));
        }
        subst.push_back(std::move(li));
    }

    // powers of each substituted variable, filled on demand
    std::vector<std::vector<Polynomial>> powers(f.ambient());
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(Scalar::one(field), d));
        while (cache.size() <= e) cache.push_back(cache.back() * subst[i]);
        return cache[e];
    };

    Polynomial image(field, d);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(c, d);
        for (std::size_t i = 0; i < f.ambient(); ++i)
            if (m.exp(i) > 0) t = t * power(i, m.exp(i));
        image = image + t;
    }
    return image.is_zero();
}

Polynomial reduce_mod_p(const Polynomial& f, std::uint32_t p) {
    if (!f.field().is_rational()) {
        if (f.field().p != p)
            throw ValidationError("field_mismatch", "polynomial already over a different prime");
        return f;
    }
    FieldSpec fp_spec = FieldSpec::prime(p);
    Polynomial out(fp_spec, f.ambient());
    for (const auto& [m, c] : f.terms()) {
        const mpq_class& q = c.rational();
        mpz_class num = q.get_num() % p, den = q.get_den() % p;
        if (num < 0) num += p;
        std::uint32_t d = std::uint32_t(den.get_ui());
        if (d == 0) throw BadReductionError(p);
        std::uint32_t r = fp::mul(std::uint32_t(num.get_ui()), fp::inv(d, p), p);
        out.add_term(m, Scalar::of_residue(r, fp_spec));
    }
    return out;
}

std::string render_monomial(const Monomial& m, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.ambient(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!first) os << "*";
        os << names[i];
        if (m.exp(i) > 1) os << "^" << m.exp(i);
        first = false;
    }
    return first ? "1" : os.str();
}

std::string render_poly(const Polynomial& f, const std::vector<std::string>& names) {
    if (names.size() != f.ambient())
        throw ValidationError("shape_mismatch", "variable name count differs from ambient");
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Scalar coeff = c;
        if (f.field().is_rational() && c.rational() < 0) {
            os << (first ? "-" : " - ");
            coeff = -c;
        } else if (!first) {
            os << " + ";
        }
        std::string mono = render_monomial(m, names);
        if (mono == "1")
            os << coeff.str();
        else if (coeff.is_one())
            os << mono;
        else
            os << coeff.str() << "*" << mono;
        first = false;
    }
    return os.str();
}

}  // namespace gstar
