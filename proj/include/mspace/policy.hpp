#pragma once

#include <cstdint>

#include "mspace/field.hpp"

namespace mspace {

// Knobs for enumeration-heavy operations: `force` overrides the q^n cost
// guardrail, `jobs` partitions index ranges across that many workers. All
// results are deterministic regardless of `jobs`.
struct ExecPolicy {
    bool force = false;
    int jobs = 1;
};

// q^n clamped at 2^62 to avoid overflow.
std::uint64_t pow_clamped(std::uint64_t q, int n);

void require_finite(const FieldDesc& field, const char* op);

// Enumerations refuse q^n > 2^24 unless policy.force is set.
void check_guardrail(const FieldDesc& field, int n, const ExecPolicy& policy, const char* op);

} // namespace mspace
