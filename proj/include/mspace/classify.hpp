#pragma once

#include <map>

#include "mspace/construct.hpp"
#include "mspace/policy.hpp"
#include "mspace/spectrum.hpp"

namespace mspace {

// Invariant flag recovered from the level sets of x -> dim(V x): a strictly
// increasing chain F_1 < ... < F_p = K^n with dim(V x) = dim F_k - 1 exactly
// for x in F_k \ F_{k-1}.
struct Flag {
    std::vector<VectorSubspace> subspaces;
    std::vector<int> sizes; // n_k = dim F_k - dim F_{k-1}
};

// Result of classifying a maximal trivial-spectrum space: block sizes with
// recovered grams (normalized so the first nonzero row-major entry is 1),
// and S with S^{-1} V S = model_space(blocks).
struct Decomposition {
    std::vector<VeeBlock> blocks;
    Matrix basis_change;
    bool verified = false;

    std::vector<int> sizes() const;
};

// For each value v attained by dim(V x) over nonzero x, the echelonized
// span of {x : dim(V x) <= v}; keys ascending.
std::map<int, VectorSubspace> vx_profile(const MatrixSubspace& v, const ExecPolicy& policy = {});

// Builds the flag from the vx_profile level sets and validates that each
// level set is a subspace, is V-invariant, and satisfies the dimension
// identity; NotAFlag otherwise.
Flag find_flag(const MatrixSubspace& v, const ExecPolicy& policy = {});

// Solves {Y : Y M is alternate for every basis M of W}; requires the
// solution space to be exactly the line spanned by an invertible Y and
// returns P = Y^{-1} normalized, with W = P Alt_m verified exactly.
Matrix recover_gram(const MatrixSubspace& w);

// Decomposes a maximal trivial-spectrum space V over F_q (q >= 3) as
// S (P_1 Alt_{n_1} v ... v P_p Alt_{n_p}) S^{-1}, verified exactly.
Decomposition classify(const MatrixSubspace& v, const ExecPolicy& policy = {});

// Similarity decision: equal block size sequences and blockwise
// congruence-up-to-scalar of the recovered grams.
bool similar_spaces(const MatrixSubspace& v, const MatrixSubspace& w, const ExecPolicy& policy = {});

// Finds an invertible element P of A (offset first, then coset enumeration,
// falling back to seeded sampling past the guardrail) and returns the
// translation space of P^{-1} A, which has a trivial spectrum iff A consists
// of invertible matrices.
MatrixSubspace affine_normalize(const AffineSpace& a, const ExecPolicy& policy = {});

// Equivalence decision for affine spaces of invertible matrices: equal block
// size sequences and blockwise similarity of the gram quadratic forms.
bool affine_equivalent(const AffineSpace& a, const AffineSpace& b, const ExecPolicy& policy = {});

} // namespace mspace
