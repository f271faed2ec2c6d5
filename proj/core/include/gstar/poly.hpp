#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gstar/forms.hpp"

namespace gstar {

// Exponent vector of fixed ambient length.
class Monomial {
public:
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
    static Monomial unit(std::size_t k) { return Monomial(std::vector<std::uint32_t>(k, 0)); }

    std::size_t ambient() const { return exps_.size(); }
    std::uint32_t exp(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exps() const { return exps_; }
    std::uint32_t degree() const;
    Monomial times(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

private:
    std::vector<std::uint32_t> exps_;
};

// Graded lexicographic, larger first: higher total degree wins, ties broken
// by lexicographically larger exponent vector.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse exact multivariate polynomial.  Stored coefficients are nonzero;
// term iteration order is descending graded-lex.
class Polynomial {
public:
    Polynomial(const FieldSpec& f, std::size_t ambient) : field_(f), ambient_(ambient) {}
    static Polynomial constant(const Scalar& c, std::size_t ambient);
    static Polynomial from_linear(const LinearForm& f);

    const FieldSpec& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t degree() const;  // 0 for the zero polynomial
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const Scalar& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(std::uint32_t e) const;

    Scalar evaluate(const std::vector<Scalar>& point) const;

    bool operator==(const Polynomial& o) const;
    const std::map<Monomial, Scalar, GrlexGreater>& terms() const { return terms_; }

private:
    FieldSpec field_;
    std::size_t ambient_;
    std::map<Monomial, Scalar, GrlexGreater> terms_;
};

// Product of the forms at the given 1-based indices (repeats allowed).
Polynomial product_of_forms(const FormList& lambda, const std::vector<std::size_t>& indices);

Scalar evaluate(const Polynomial& f, const std::vector<Scalar>& point);

// True iff f restricts to the zero function on the subspace cut out by s,
// tested by substituting the generic point of the kernel parametrization.
// For homogeneous f over an infinite field this is membership in the ideal.
bool vanishes_on_span(const Polynomial& f, const LinearSpan& s);

// Rational coefficients reduced mod p; throws BadReductionError when a
// denominator vanishes mod p.
Polynomial reduce_mod_p(const Polynomial& f, std::uint32_t p);

std::string render_poly(const Polynomial& f, const std::vector<std::string>& names);
std::string render_monomial(const Monomial& m, const std::vector<std::string>& names);

}  // namespace gstar
