#pragma once

#include <optional>

#include "mspace/policy.hpp"
#include "mspace/subspace.hpp"

namespace mspace {

enum class DiscClass { square, nonsquare, not_applicable };

// Similarity invariants of a non-degenerate quadratic form over an odd
// prime field: dimension, and the discriminant class modulo squares when
// the dimension is even (an odd-dimensional form is similar to all scalar
// multiples, so the class is not an invariant there).
struct QuadSimClass {
    int dim;
    DiscClass disc;

    friend bool operator==(const QuadSimClass&, const QuadSimClass&) = default;
};

// Does some nonzero x satisfy x^T P x = 0? Brute force over projective
// representatives; the witness is the first hit in enumeration order.
std::pair<bool, std::optional<Vec>> is_isotropic(const Matrix& p, const ExecPolicy& policy = {});

// Invertible S with S^T P S lower triangular, built by the greedy
// right-orthogonal basis construction: pick x, restrict to
// {y : x^T P y = 0}, recurse. Raises IsotropicForm when a constructed
// diagonal value b(x,x) vanishes; non-isotropy of P guarantees it never
// does.
Matrix right_orthogonal_congruence(const Matrix& p);

struct CongruenceWitness {
    Scalar lambda;
    Matrix r; // P = R (lambda Q) R^T
};

// Decides P = R (lambda Q) R^T for some lambda != 0 and invertible R by
// exhausting GL_m(F_q) x F_q^*. Envelope: m = 1 over any field, else
// finite with m <= 2 and q <= 11.
std::pair<bool, std::optional<CongruenceWitness>> congruent_up_to_scalar(const Matrix& p,
                                                                         const Matrix& q);

QuadSimClass quad_sim_class(const Matrix& p);

// Similarity of the quadratic forms x -> x^T P x and x -> x^T Q x over an
// odd prime field, decided via QuadSimClass invariants.
bool quad_similar(const Matrix& p, const Matrix& q);

// Sufficient non-isotropy certificate over Q: true iff the symmetrized form
// is positive- or negative-definite by exact leading-principal-minor signs.
// False is inconclusive.
bool definite_certificate(const Matrix& p);

// Constructive affine-equivalence witness: given lambda Q - R P R^T = A'
// alternate, returns S = R(I + P A) with A = -(RP)^{-1} A' ((RP)^T)^{-1},
// and verifies R (I + P Alt_n) = (I + Q Alt_n) S as affine sets.
Matrix equivalence_witness(const Matrix& p, const Matrix& q, const Scalar& lambda, const Matrix& r);

} // namespace mspace
