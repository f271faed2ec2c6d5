#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gstar/errors.hpp"

namespace gstar {

enum class FieldKind : std::uint8_t { rational, prime };

bool is_prime_u32(std::uint32_t n);

// The exact field a computation runs over.  Every Scalar carries its spec;
// operations on mismatched fields throw.
struct FieldSpec {
    FieldKind kind = FieldKind::rational;
    std::uint32_t p = 0;  // modulus, prime kind only

    static FieldSpec rationals() { return FieldSpec{FieldKind::rational, 0}; }
    static FieldSpec prime(std::uint32_t p);  // requires p prime, 2 <= p < 2^31

    bool is_rational() const { return kind == FieldKind::rational; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

// Residue arithmetic helpers; all inputs already reduced mod p.
namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : std::uint32_t(std::uint64_t(a) + p - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return std::uint32_t(std::uint64_t(a) * b % p);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
std::uint32_t inv(std::uint32_t a, std::uint32_t p);  // a != 0
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t reduce_int(long v, std::uint32_t p);

}  // namespace fp

// Exact field element in canonical form: reduced fraction with positive
// denominator, or residue in [0, p).  Immutable value type.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()) {}  // rational zero

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(long v, const FieldSpec& f);
    static Scalar of_rational(mpq_class q);
    static Scalar of_residue(std::uint32_t r, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;  // throws on zero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order used only for deterministic report output.
    int compare(const Scalar& o) const;

    const mpq_class& rational() const { return rat_; }
    std::uint32_t residue() const { return res_; }

    std::string str() const;  // "-3/2" or residue digits

private:
    Scalar(FieldSpec f, mpq_class q, std::uint32_t r)
        : field_(f), rat_(std::move(q)), res_(r) {}
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    mpq_class rat_;
    std::uint32_t res_ = 0;
};

}  // namespace gstar
