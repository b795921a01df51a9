#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "mspace/error.hpp"

namespace mspace {

enum class FieldKind { prime, rational };

bool is_prime(std::int64_t p);

// Which exact field scalars live in: F_p for a prime 2 <= p < 2^31, or Q.
class FieldDesc {
public:
    static FieldDesc prime(std::int64_t p);
    static FieldDesc rational();

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::prime; }
    bool is_rational() const { return kind_ == FieldKind::rational; }
    bool is_finite() const { return is_prime_field(); }

    // Field order; prime fields only.
    std::int64_t p() const;

    std::string str() const;

    friend bool operator==(const FieldDesc& a, const FieldDesc& b) = default;

private:
    FieldDesc(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::int64_t p_;
};

// a^e mod p for 0 <= a < p.
std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t p);

// Inverse of a mod p via extended Euclid; a must not be divisible by p.
std::int64_t inv_mod(std::int64_t a, std::int64_t p);

// A field element in canonical form: representative in [0,p) for F_p,
// reduced fraction with positive denominator for Q. Arithmetic between
// scalars of different fields is rejected, never coerced.
class Scalar {
public:
    Scalar(FieldDesc field, std::int64_t value);
    Scalar(FieldDesc field, const mpq_class& value);

    static Scalar zero(FieldDesc field) { return Scalar(field, 0); }
    static Scalar one(FieldDesc field) { return Scalar(field, 1); }
    // num/den in the given field; for F_p the denominator must be a unit.
    static Scalar fraction(FieldDesc field, const mpz_class& num, const mpz_class& den);

    const FieldDesc& field() const { return field_; }

    // Canonical representative in [0,p); prime fields only.
    std::int64_t rep() const;
    // Canonical reduced value; rational field only.
    const mpq_class& rat() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_same_field(const Scalar& o) const;

    FieldDesc field_;
    std::int64_t rep_ = 0;
    std::optional<mpq_class> rat_;
};

} // namespace mspace
