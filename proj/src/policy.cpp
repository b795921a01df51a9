#include "mspace/policy.hpp"

namespace mspace {

std::uint64_t pow_clamped(std::uint64_t q, int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > (std::uint64_t{1} << 62) / q) return std::uint64_t{1} << 62;
        r *= q;
    }
    return r;
}

void require_finite(const FieldDesc& field, const char* op) {
    if (!field.is_finite())
        fail(errc::infinite_field, std::string(op) + " requires a finite field");
}

void check_guardrail(const FieldDesc& field, int n, const ExecPolicy& policy, const char* op) {
    require_finite(field, op);
    if (policy.force) return;
    if (pow_clamped(static_cast<std::uint64_t>(field.p()), n) > (std::uint64_t{1} << 24))
        fail(errc::guardrail_exceeded,
             std::string(op) + ": q^n exceeds 2^24; pass force to run anyway");
}

} // namespace mspace
