#pragma once

#include <optional>

#include "mspace/policy.hpp"
#include "mspace/subspace.hpp"

namespace mspace {

// A concrete violation of the trivial-spectrum property: m is in the space,
// x is nonzero, and m x = x exactly.
struct SpectrumWitness {
    Vec x;
    Matrix m;
};

struct SpectrumReport {
    bool trivial_spectrum = false;
    std::optional<SpectrumWitness> witness; // present iff trivial_spectrum is false
    bool totally_intransitive = false;
    bool maximal = false;
    std::optional<bool> irreducible;
};

// True iff no matrix of V fixes a nonzero vector. Since V is a subspace,
// M x = c x with c != 0 implies (c^{-1} M) x = x, so the single eigenvalue 1
// covers all nonzero eigenvalues. When false, returns the witness with the
// smallest enumeration index.
std::pair<bool, std::optional<SpectrumWitness>> has_trivial_spectrum(const MatrixSubspace& v,
                                                                     const ExecPolicy& policy = {});

// True iff dim(V x) < n for every x.
bool is_totally_intransitive(const MatrixSubspace& v, const ExecPolicy& policy = {});

// Trivial spectrum and dim V = n(n-1)/2.
bool is_maximal_trivial(const MatrixSubspace& v, const ExecPolicy& policy = {});

// True iff V stabilizes no subspace other than {0} and K^n; decided by
// checking invariant_closure(V, x) = K^n over projective representatives.
bool is_irreducible(const MatrixSubspace& v, const ExecPolicy& policy = {});

SpectrumReport spectrum_report(const MatrixSubspace& v, const ExecPolicy& policy = {});

} // namespace mspace
