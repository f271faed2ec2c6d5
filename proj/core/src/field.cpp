#include "gstar/field.hpp"

namespace gstar {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw ValidationError("invalid_field",
                              "modulus must be a prime below 2^31, got " + std::to_string(p));
    return FieldSpec{FieldKind::prime, p};
}

std::string FieldSpec::str() const {
    return is_rational() ? "rational" : "fp:" + std::to_string(p);
}

namespace fp {

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw ValidationError("division_by_zero", "inverse of zero residue");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return std::uint32_t(t);
}

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t base = a % p, acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return std::uint32_t(acc);
}

std::uint32_t reduce_int(long v, std::uint32_t p) {
    long m = v % long(p);
    if (m < 0) m += p;
    return std::uint32_t(m);
}

}  // namespace fp

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(const FieldSpec& f) {
    return f.is_rational() ? Scalar(f, mpq_class(1), 0) : Scalar(f, mpq_class(0), 1 % f.p);
}

Scalar Scalar::of_int(long v, const FieldSpec& f) {
    return f.is_rational() ? Scalar(f, mpq_class(v), 0)
                           : Scalar(f, mpq_class(0), fp::reduce_int(v, f.p));
}

Scalar Scalar::of_rational(mpq_class q) {
    q.canonicalize();
    return Scalar(FieldSpec::rationals(), std::move(q), 0);
}

Scalar Scalar::of_residue(std::uint32_t r, const FieldSpec& f) {
    if (f.is_rational())
        throw ValidationError("field_mismatch", "residue constructor on rational field");
    return Scalar(f, mpq_class(0), r % f.p);
}

bool Scalar::is_zero() const { return field_.is_rational() ? rat_ == 0 : res_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? rat_ == 1 : res_ == 1 % field_.p; }

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw ValidationError("field_mismatch", "operands over different fields: " +
                                                    field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return Scalar(field_, rat_ + o.rat_, 0);
    return Scalar(field_, mpq_class(0), fp::add(res_, o.res_, field_.p));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return Scalar(field_, rat_ - o.rat_, 0);
    return Scalar(field_, mpq_class(0), fp::sub(res_, o.res_, field_.p));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) return Scalar(field_, rat_ * o.rat_, 0);
    return Scalar(field_, mpq_class(0), fp::mul(res_, o.res_, field_.p));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, -rat_, 0);
    return Scalar(field_, mpq_class(0), fp::neg(res_, field_.p));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ValidationError("division_by_zero", "inverse of zero");
    if (field_.is_rational()) return Scalar(field_, 1 / rat_, 0);
    return Scalar(field_, mpq_class(0), fp::inv(res_, field_.p));
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

int Scalar::compare(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rational()) {
        int c = cmp(rat_, o.rat_);
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    return res_ < o.res_ ? -1 : res_ > o.res_ ? 1 : 0;
}

std::string Scalar::str() const {
    return field_.is_rational() ? rat_.get_str() : std::to_string(res_);
}

}  // namespace gstar
