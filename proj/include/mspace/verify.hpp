#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mspace/policy.hpp"

namespace mspace {

struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string actual;

    friend bool operator==(const SuiteFailure&, const SuiteFailure&) = default;
};

// Replayable record of one suite run. Failures are ordered by enumeration
// index, so reruns with the same parameters and seed produce identical
// reports regardless of the worker count. `elapsed_seconds` is the only
// non-reproducible field and stays out of serialized reports.
struct SuiteReport {
    std::string suite;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::int64_t checks_run = 0;
    std::vector<SuiteFailure> failures;
    std::uint64_t seed = 0;
    double elapsed_seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

// Alt_n(K) x = {x}^perp for every nonzero x; exhaustive over F_q^n.
SuiteReport suite_action1(int n, std::int64_t q, const ExecPolicy& policy = {});

// has_trivial_spectrum(P Alt_n) == !is_isotropic(P). Exhaustive over all of
// GL_2(F_3) when (n, q) = (2, 3), otherwise over `samples` seeded random
// invertible P.
SuiteReport suite_anisotropy(int n, std::int64_t q, int samples, std::uint64_t seed,
                             const ExecPolicy& policy = {});

// Census of M_2(F_3): all 40 lines (classifying each trivial-spectrum one
// and cross-checking irreducibility against the determinant), an independent
// nilpotent/irreducible-characteristic-polynomial oracle count, and all 130
// two-dimensional subspaces (none may have a trivial spectrum).
SuiteReport suite_exhaustive_n2_q3(const ExecPolicy& policy = {});

// The three-dimensional trivial-spectrum space over F_2 that escapes the
// q >= 3 classification: determinant identity, dimension, irreducibility,
// and failure of gram recovery.
SuiteReport suite_f2_counterexample(const ExecPolicy& policy = {});

// Conjugates of NT_n classify to all-size-1 blocks, and every basis matrix
// of the conjugate is nilpotent.
SuiteReport suite_gerstenhaber(int n, std::int64_t q, int samples, std::uint64_t seed,
                               const ExecPolicy& policy = {});

// A hyperplane of Alt_3 extended by a non-alternate matrix is never totally
// intransitive.
SuiteReport suite_hyperplane_rigidity(std::int64_t q, int samples, std::uint64_t seed,
                                      const ExecPolicy& policy = {});

// classify round-trips every composition of n <= max_n into parts {1, 2}
// through random conjugation, recovering sizes exactly and grams up to
// congruence and scalar; distinct compositions stay non-similar.
SuiteReport suite_classification_roundtrip(std::int64_t q, int max_n, int samples,
                                           std::uint64_t seed, const ExecPolicy& policy = {});

} // namespace mspace
