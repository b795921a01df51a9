#include "mspace/construct.hpp"

namespace mspace {

int VeeSpec::total_size() const {
    int n = 0;
    for (const VeeBlock& b : blocks) n += b.size;
    return n;
}

void VeeSpec::validate(const FieldDesc& field) const {
    if (blocks.empty()) fail(errc::bad_argument, "empty block list");
    for (const VeeBlock& b : blocks) {
        if (b.size < 1) fail(errc::bad_argument, "block size must be >= 1");
        if (b.gram.field() != field) fail(errc::mixed_fields, "gram field differs");
        if (b.gram.rows() != b.size || b.gram.cols() != b.size)
            fail(errc::dimension_mismatch, "gram shape differs from block size");
        if (!b.gram.is_invertible()) fail(errc::singular_matrix, "gram is singular");
        if (b.size == 1 && !b.gram.at(0, 0).is_one())
            fail(errc::bad_argument, "size-1 blocks store the gram [1]");
    }
}

MatrixSubspace alt_space(int n, FieldDesc field) {
    if (n < 1) fail(errc::bad_argument, "n must be >= 1");
    std::vector<Matrix> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix m(field, n, n);
            m.at(i, j) = Scalar::one(field);
            m.at(j, i) = -Scalar::one(field);
            gens.push_back(std::move(m));
        }
    return MatrixSubspace::span(field, n, gens);
}

MatrixSubspace nt_space(int n, FieldDesc field) {
    if (n < 1) fail(errc::bad_argument, "n must be >= 1");
    std::vector<Matrix> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix m(field, n, n);
            m.at(i, j) = Scalar::one(field);
            gens.push_back(std::move(m));
        }
    return MatrixSubspace::span(field, n, gens);
}

MatrixSubspace p_alt(const Matrix& p) {
    if (!p.is_square()) fail(errc::dimension_mismatch, "gram must be square");
    if (!p.is_invertible()) fail(errc::singular_matrix, "gram is singular");
    return lmul(p, alt_space(p.rows(), p.field()));
}

MatrixSubspace vee(const MatrixSubspace& v, const MatrixSubspace& w) {
    if (v.field() != w.field()) fail(errc::mixed_fields, "operand fields differ");
    FieldDesc field = v.field();
    int n = v.ambient(), p = w.ambient();
    std::vector<Matrix> gens;
    for (const Matrix& a : v.basis()) {
        Matrix m(field, n + p, n + p);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
        gens.push_back(std::move(m));
    }
    for (const Matrix& c : w.basis()) {
        Matrix m(field, n + p, n + p);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) m.at(n + i, n + j) = c.at(i, j);
        gens.push_back(std::move(m));
    }
    for (int i = 0; i < n; ++i)
        for (int j = n; j < n + p; ++j) {
            Matrix m(field, n + p, n + p);
            m.at(i, j) = Scalar::one(field);
            gens.push_back(std::move(m));
        }
    return MatrixSubspace::span(field, n + p, gens);
}

MatrixSubspace model_space(const VeeSpec& spec, FieldDesc field) {
    spec.validate(field);
    MatrixSubspace acc = p_alt(spec.blocks[0].gram);
    for (std::size_t k = 1; k < spec.blocks.size(); ++k)
        acc = vee(acc, p_alt(spec.blocks[k].gram));
    return acc;
}

MatrixSubspace companion_line(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field()) fail(errc::mixed_fields, "coefficient fields differ");
    FieldDesc field = a.field();
    Matrix m(field, 2, 2);
    m.at(0, 1) = b;
    m.at(1, 0) = Scalar::one(field);
    m.at(1, 1) = a;
    return MatrixSubspace::span(field, 2, {m});
}

AffineSpace affine_model(const VeeSpec& spec, FieldDesc field) {
    MatrixSubspace translation = model_space(spec, field);
    return AffineSpace(Matrix::identity(field, spec.total_size()), std::move(translation));
}

} // namespace mspace
