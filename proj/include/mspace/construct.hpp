#pragma once

#include "mspace/subspace.hpp"

namespace mspace {

// One diagonal block of a model space: block size and the invertible gram
// factor in front of the alternate block. Size-1 blocks always store the
// gram [1] (Alt_1 = {0} carries no gram information).
struct VeeBlock {
    int size;
    Matrix gram;
};

struct VeeSpec {
    std::vector<VeeBlock> blocks;

    int total_size() const;
    // Validates block sizes, gram shapes, invertibility and the size-1
    // normalization against the given field.
    void validate(const FieldDesc& field) const;
};

// Alternate matrices of M_n: X^T A X = 0 for all X. Basis {E_ij - E_ji, i<j}
// in lexicographic (i,j) order before canonicalization; dim n(n-1)/2.
MatrixSubspace alt_space(int n, FieldDesc field);

// Strictly upper triangular matrices of M_n; dim n(n-1)/2.
MatrixSubspace nt_space(int n, FieldDesc field);

// P * Alt_n for an invertible P. Non-isotropy of P is deliberately not
// required: the isotropic case must stay constructible for testing.
MatrixSubspace p_alt(const Matrix& p);

// Block upper-triangular composition {[[A,B],[0,C]] : A in V, C in W, B free};
// dim = dim V + dim W + n*p. Associative.
MatrixSubspace vee(const MatrixSubspace& v, const MatrixSubspace& w);

// P_1 Alt_{n_1} v ... v P_k Alt_{n_k}; dim = C(n,2).
MatrixSubspace model_space(const VeeSpec& spec, FieldDesc field);

// Line spanned by the companion matrix [[0,b],[1,a]] of t^2 - a t - b.
MatrixSubspace companion_line(const Scalar& a, const Scalar& b);

// I_n + model_space(spec).
AffineSpace affine_model(const VeeSpec& spec, FieldDesc field);

} // namespace mspace
