#pragma once

#include <vector>

#include "mspace/matrix.hpp"

namespace mspace {

// Subspace of K^n held in canonical form: the basis is the reduced row
// echelon basis of the span with pivot columns strictly increasing, so two
// equal subspaces have identical representations.
class VectorSubspace {
public:
    VectorSubspace(FieldDesc field, int ambient); // zero subspace

    static VectorSubspace span(FieldDesc field, int ambient, const std::vector<Vec>& generators);
    static VectorSubspace full(FieldDesc field, int ambient);

    const FieldDesc& field() const { return field_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    bool is_full() const { return dim() == ambient_; }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const VectorSubspace& other) const;
    VectorSubspace sum(const VectorSubspace& other) const;
    // Residue of v modulo the span: zero in every pivot coordinate. The
    // canonical coset representative of v + this.
    Vec reduce(Vec v) const;

    bool operator==(const VectorSubspace& o) const {
        return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const VectorSubspace& o) const { return !(*this == o); }

private:
    FieldDesc field_;
    int ambient_;
    std::vector<Vec> basis_;
    std::vector<int> pivots_;
};

// Canonical echelon basis of the span of the given vectors; idempotent.
VectorSubspace echelonize(FieldDesc field, int ambient, const std::vector<Vec>& vectors);

// Subspace of M_n(K), canonical under row-major vectorization into K^{n^2}.
class MatrixSubspace {
public:
    MatrixSubspace(FieldDesc field, int n); // zero subspace

    static MatrixSubspace span(FieldDesc field, int n, const std::vector<Matrix>& generators);

    const FieldDesc& field() const { return field_; }
    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Matrix>& basis() const { return basis_; }
    // The canonical vectorized form (subspace of K^{n^2}).
    const VectorSubspace& vectorized() const { return vectorized_; }

    bool contains(const Matrix& m) const;
    bool contains(const MatrixSubspace& other) const;
    MatrixSubspace sum(const MatrixSubspace& other) const;

    bool operator==(const MatrixSubspace& o) const {
        return field_ == o.field_ && n_ == o.n_ && vectorized_ == o.vectorized_;
    }
    bool operator!=(const MatrixSubspace& o) const { return !(*this == o); }

private:
    FieldDesc field_;
    int n_;
    std::vector<Matrix> basis_;
    VectorSubspace vectorized_;
};

// Affine subspace offset + translation. The stored offset is the canonical
// coset representative: its vectorization is zero in every pivot coordinate
// of the translation basis.
class AffineSpace {
public:
    AffineSpace(Matrix offset, MatrixSubspace translation);

    const FieldDesc& field() const { return translation_.field(); }
    int ambient() const { return translation_.ambient(); }
    int dim() const { return translation_.dim(); }
    const Matrix& offset() const { return offset_; }
    const MatrixSubspace& translation() const { return translation_; }

    bool contains(const Matrix& m) const;

    bool operator==(const AffineSpace& o) const {
        return offset_ == o.offset_ && translation_ == o.translation_;
    }
    bool operator!=(const AffineSpace& o) const { return !(*this == o); }

private:
    Matrix offset_;
    MatrixSubspace translation_;
};

// span{M X : M in V}, canonically echelonized.
VectorSubspace space_apply(const MatrixSubspace& v, const Vec& x);

// S V S^{-1}; S must be invertible.
MatrixSubspace conjugate(const MatrixSubspace& v, const Matrix& s);

// span of transposes; involutive.
MatrixSubspace transpose_space(const MatrixSubspace& v);

// Smallest subspace U with x in U and V u in U for all u in U, obtained by
// iterating U <- U + V U until stable (at most n rounds).
VectorSubspace invariant_closure(const MatrixSubspace& v, const Vec& x);

// {S M : M in V} and {M S : M in V}; S need not be invertible.
MatrixSubspace lmul(const Matrix& s, const MatrixSubspace& v);
MatrixSubspace rmul(const MatrixSubspace& v, const Matrix& s);
AffineSpace lmul(const Matrix& s, const AffineSpace& a);
AffineSpace rmul(const AffineSpace& a, const Matrix& s);

} // namespace mspace
