#include "mspace/subspace.hpp"

namespace mspace {

VectorSubspace::VectorSubspace(FieldDesc field, int ambient) : field_(field), ambient_(ambient) {
    if (ambient < 0) fail(errc::bad_argument, "negative ambient dimension");
}

VectorSubspace VectorSubspace::span(FieldDesc field, int ambient, const std::vector<Vec>& generators) {
    VectorSubspace s(field, ambient);
    std::vector<Vec> rows;
    rows.reserve(generators.size());
    for (const Vec& v : generators) {
        if (static_cast<int>(v.size()) != ambient)
            fail(errc::mixed_fields, "generator dimension differs from ambient");
        for (const Scalar& x : v)
            if (x.field() != field) fail(errc::mixed_fields, "generator field differs");
        rows.push_back(v);
    }
    s.pivots_ = rref_in_place(rows);
    s.basis_ = std::move(rows);
    return s;
}

VectorSubspace VectorSubspace::full(FieldDesc field, int ambient) {
    VectorSubspace s(field, ambient);
    for (int i = 0; i < ambient; ++i) {
        s.basis_.push_back(unit_vec(field, ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Vec VectorSubspace::reduce(Vec v) const {
    if (static_cast<int>(v.size()) != ambient_) fail(errc::dimension_mismatch, "vector length != ambient");
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Scalar& c = v[static_cast<std::size_t>(pivots_[r])];
        if (c.is_zero()) continue;
        Scalar f = c; // entries at pivot columns are 1 in other rows, so plain elimination
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis_[r][j];
    }
    return v;
}

bool VectorSubspace::contains(const Vec& v) const {
    return is_zero_vec(reduce(v));
}

bool VectorSubspace::contains(const VectorSubspace& other) const {
    for (const Vec& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

VectorSubspace VectorSubspace::sum(const VectorSubspace& other) const {
    if (field_ != other.field_) fail(errc::mixed_fields, "subspace fields differ");
    if (ambient_ != other.ambient_) fail(errc::dimension_mismatch, "ambient dimensions differ");
    std::vector<Vec> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return span(field_, ambient_, gens);
}

VectorSubspace echelonize(FieldDesc field, int ambient, const std::vector<Vec>& vectors) {
    return VectorSubspace::span(field, ambient, vectors);
}

MatrixSubspace::MatrixSubspace(FieldDesc field, int n)
    : field_(field), n_(n), vectorized_(field, n * n) {
    if (n < 1) fail(errc::bad_argument, "matrix ambient size must be >= 1");
}

MatrixSubspace MatrixSubspace::span(FieldDesc field, int n, const std::vector<Matrix>& generators) {
    MatrixSubspace s(field, n);
    std::vector<Vec> rows;
    rows.reserve(generators.size());
    for (const Matrix& m : generators) {
        if (m.field() != field) fail(errc::mixed_fields, "generator field differs");
        if (m.rows() != n || m.cols() != n) fail(errc::dimension_mismatch, "generator is not n x n");
        rows.push_back(m.entries());
    }
    s.vectorized_ = VectorSubspace::span(field, n * n, rows);
    s.basis_.reserve(s.vectorized_.basis().size());
    for (const Vec& v : s.vectorized_.basis())
        s.basis_.push_back(Matrix::from_vec(field, n, n, v));
    return s;
}

bool MatrixSubspace::contains(const Matrix& m) const {
    if (m.field() != field_ || m.rows() != n_ || m.cols() != n_) return false;
    return vectorized_.contains(m.entries());
}

bool MatrixSubspace::contains(const MatrixSubspace& other) const {
    return field_ == other.field_ && n_ == other.n_ && vectorized_.contains(other.vectorized_);
}

MatrixSubspace MatrixSubspace::sum(const MatrixSubspace& other) const {
    if (field_ != other.field_) fail(errc::mixed_fields, "subspace fields differ");
    if (n_ != other.n_) fail(errc::dimension_mismatch, "ambient sizes differ");
    std::vector<Matrix> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return span(field_, n_, gens);
}

AffineSpace::AffineSpace(Matrix offset, MatrixSubspace translation)
    : offset_(std::move(offset)), translation_(std::move(translation)) {
    if (offset_.field() != translation_.field()) fail(errc::mixed_fields, "offset field differs");
    if (offset_.rows() != translation_.ambient() || offset_.cols() != translation_.ambient())
        fail(errc::dimension_mismatch, "offset shape differs from translation ambient");
    offset_ = Matrix::from_vec(offset_.field(), offset_.rows(), offset_.cols(),
                               translation_.vectorized().reduce(offset_.entries()));
}

bool AffineSpace::contains(const Matrix& m) const {
    if (m.field() != field() || m.rows() != ambient() || m.cols() != ambient()) return false;
    return translation_.contains(m - offset_);
}

VectorSubspace space_apply(const MatrixSubspace& v, const Vec& x) {
    if (static_cast<int>(x.size()) != v.ambient())
        fail(errc::dimension_mismatch, "vector length != ambient size");
    std::vector<Vec> images;
    images.reserve(v.basis().size());
    for (const Matrix& m : v.basis()) images.push_back(m.apply(x));
    return VectorSubspace::span(v.field(), v.ambient(), images);
}

MatrixSubspace conjugate(const MatrixSubspace& v, const Matrix& s) {
    if (s.field() != v.field()) fail(errc::mixed_fields, "conjugator field differs");
    if (s.rows() != v.ambient() || s.cols() != v.ambient())
        fail(errc::dimension_mismatch, "conjugator shape differs");
    Matrix sinv = s.inverse(); // throws SingularMatrix
    std::vector<Matrix> gens;
    gens.reserve(v.basis().size());
    for (const Matrix& m : v.basis()) gens.push_back(s * m * sinv);
    return MatrixSubspace::span(v.field(), v.ambient(), gens);
}

MatrixSubspace transpose_space(const MatrixSubspace& v) {
    std::vector<Matrix> gens;
    gens.reserve(v.basis().size());
    for (const Matrix& m : v.basis()) gens.push_back(m.transpose());
    return MatrixSubspace::span(v.field(), v.ambient(), gens);
}

VectorSubspace invariant_closure(const MatrixSubspace& v, const Vec& x) {
    if (static_cast<int>(x.size()) != v.ambient())
        fail(errc::dimension_mismatch, "vector length != ambient size");
    if (is_zero_vec(x)) fail(errc::zero_vector, "invariant closure of the zero vector");
    VectorSubspace u = VectorSubspace::span(v.field(), v.ambient(), {x});
    for (;;) {
        std::vector<Vec> gens = u.basis();
        for (const Vec& b : u.basis())
            for (const Matrix& m : v.basis())
                gens.push_back(m.apply(b));
        VectorSubspace next = VectorSubspace::span(v.field(), v.ambient(), gens);
        if (next.dim() == u.dim()) return u;
        u = std::move(next);
    }
}

MatrixSubspace lmul(const Matrix& s, const MatrixSubspace& v) {
    std::vector<Matrix> gens;
    gens.reserve(v.basis().size());
    for (const Matrix& m : v.basis()) gens.push_back(s * m);
    return MatrixSubspace::span(v.field(), v.ambient(), gens);
}

MatrixSubspace rmul(const MatrixSubspace& v, const Matrix& s) {
    std::vector<Matrix> gens;
    gens.reserve(v.basis().size());
    for (const Matrix& m : v.basis()) gens.push_back(m * s);
    return MatrixSubspace::span(v.field(), v.ambient(), gens);
}

AffineSpace lmul(const Matrix& s, const AffineSpace& a) {
    return AffineSpace(s * a.offset(), lmul(s, a.translation()));
}

AffineSpace rmul(const AffineSpace& a, const Matrix& s) {
    return AffineSpace(a.offset() * s, rmul(a.translation(), s));
}

} // namespace mspace
