#include "mspace/field.hpp"

namespace mspace {

const char* errc_name(errc c) {
    switch (c) {
        case errc::mixed_fields: return "MixedFields";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::zero_vector: return "ZeroVector";
        case errc::infinite_field: return "InfiniteField";
        case errc::guardrail_exceeded: return "GuardrailExceeded";
        case errc::size_limit_exceeded: return "SizeLimitExceeded";
        case errc::degenerate_form: return "DegenerateForm";
        case errc::even_characteristic: return "EvenCharacteristic";
        case errc::not_alternate: return "NotAlternate";
        case errc::singular_witness: return "SingularWitness";
        case errc::isotropic_form: return "IsotropicForm";
        case errc::not_a_flag: return "NotAFlag";
        case errc::not_p_alt_form: return "NotPAltForm";
        case errc::classification_failed: return "ClassificationFailed";
        case errc::char_two_unsupported: return "CharTwoUnsupported";
        case errc::no_invertible_element: return "NoInvertibleElement";
        case errc::parse_error: return "ParseError";
        case errc::value_out_of_field: return "ValueOutOfField";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::bad_argument: return "BadArgument";
    }
    return "UnknownError";
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

FieldDesc FieldDesc::prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31))
        fail(errc::bad_argument, "prime field order must satisfy 2 <= p < 2^31, got " + std::to_string(p));
    if (!is_prime(p))
        fail(errc::bad_argument, std::to_string(p) + " is not prime");
    return FieldDesc(FieldKind::prime, p);
}

FieldDesc FieldDesc::rational() { return FieldDesc(FieldKind::rational, 0); }

std::int64_t FieldDesc::p() const {
    if (!is_prime_field())
        fail(errc::infinite_field, "field order requested for the rational field");
    return p_;
}

std::string FieldDesc::str() const {
    return is_prime_field() ? "F_" + std::to_string(p_) : std::string("Q");
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) fail(errc::division_by_zero, "inverse of 0 mod " + std::to_string(p));
    // extended Euclid, tracking only the coefficient of a
    std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t quot = r0 / r1;
        std::int64_t r2 = r0 - quot * r1;
        std::int64_t t2 = t0 - quot * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t0 < 0) t0 += p;
    return t0;
}

Scalar::Scalar(FieldDesc field, std::int64_t value) : field_(field) {
    if (field_.is_prime_field()) {
        std::int64_t p = field_.p();
        rep_ = value % p;
        if (rep_ < 0) rep_ += p;
    } else {
        rat_.emplace(value);
    }
}

Scalar::Scalar(FieldDesc field, const mpq_class& value) : field_(field) {
    if (field_.is_prime_field()) {
        mpz_class p(static_cast<long>(field_.p()));
        mpz_class den = value.get_den() % p;
        if (den == 0)
            fail(errc::value_out_of_field,
                 "denominator " + value.get_den().get_str() + " is zero in " + field_.str());
        mpz_class num = value.get_num() % p;
        std::int64_t n = num.get_si();
        if (n < 0) n += field_.p();
        std::int64_t d = den.get_si();
        if (d < 0) d += field_.p();
        rep_ = n * inv_mod(d, field_.p()) % field_.p();
    } else {
        rat_.emplace(value);
        rat_->canonicalize();
    }
}

Scalar Scalar::fraction(FieldDesc field, const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(errc::division_by_zero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(field, q);
}

std::int64_t Scalar::rep() const {
    if (!field_.is_prime_field())
        fail(errc::bad_argument, "rep() on a rational scalar");
    return rep_;
}

const mpq_class& Scalar::rat() const {
    if (!rat_) fail(errc::bad_argument, "rat() on a prime-field scalar");
    return *rat_;
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? rep_ == 0 : *rat_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_prime_field() ? rep_ == 1 % field_.p() : *rat_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        fail(errc::mixed_fields, field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_prime_field()) return Scalar(field_, rep_ + o.rep_);
    return Scalar(field_, mpq_class(*rat_ + *o.rat_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_prime_field()) return Scalar(field_, rep_ - o.rep_);
    return Scalar(field_, mpq_class(*rat_ - *o.rat_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_prime_field()) return Scalar(field_, rep_ * o.rep_ % field_.p());
    return Scalar(field_, mpq_class(*rat_ * *o.rat_));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
    if (field_.is_prime_field()) return Scalar(field_, -rep_);
    return Scalar(field_, mpq_class(-*rat_));
}

Scalar Scalar::inv() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero in " + field_.str());
    if (field_.is_prime_field()) return Scalar(field_, inv_mod(rep_, field_.p()));
    return Scalar(field_, mpq_class(1 / *rat_));
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_prime_field() ? rep_ == o.rep_ : *rat_ == *o.rat_;
}

std::string Scalar::str() const {
    return field_.is_prime_field() ? std::to_string(rep_) : rat_->get_str();
}

} // namespace mspace
