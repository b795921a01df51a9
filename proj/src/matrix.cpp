#include "mspace/matrix.hpp"

#include <sstream>

namespace mspace {

Vec zero_vec(FieldDesc field, int n) {
    return Vec(static_cast<std::size_t>(n), Scalar::zero(field));
}

Vec unit_vec(FieldDesc field, int n, int i) {
    Vec v = zero_vec(field, n);
    v[static_cast<std::size_t>(i)] = Scalar::one(field);
    return v;
}

Vec vec_from_ints(FieldDesc field, const std::vector<std::int64_t>& entries) {
    Vec v;
    v.reserve(entries.size());
    for (std::int64_t e : entries) v.emplace_back(field, e);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const Scalar& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(errc::dimension_mismatch, "vector sizes differ");
    Vec r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r;
    r.reserve(v.size());
    for (const Scalar& x : v) r.push_back(c * x);
    return r;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(errc::dimension_mismatch, "vector sizes differ");
    if (a.empty()) fail(errc::bad_argument, "dot of empty vectors");
    Scalar s = Scalar::zero(a[0].field());
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Matrix::Matrix(FieldDesc field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, Scalar::zero(field)) {
    if (rows < 0 || cols < 0) fail(errc::bad_argument, "negative matrix size");
}

Matrix Matrix::identity(FieldDesc field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_ints(FieldDesc field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Matrix m(field, nr, nc);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != nc) fail(errc::bad_argument, "ragged rows");
        int j = 0;
        for (std::int64_t e : row) m.at(i, j++) = Scalar(field, e);
        ++i;
    }
    return m;
}

Matrix Matrix::from_rows(FieldDesc field, const std::vector<Vec>& rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(field, nr, nc);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(rows[i].size()) != nc) fail(errc::bad_argument, "ragged rows");
        for (int j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_cols(FieldDesc field, const std::vector<Vec>& cols) {
    return from_rows(field, cols).transpose();
}

Matrix Matrix::from_vec(FieldDesc field, int rows, int cols, const Vec& entries) {
    if (static_cast<std::size_t>(rows) * cols != entries.size())
        fail(errc::dimension_mismatch, "vectorization length mismatch");
    Matrix m(field, rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].field() != field) fail(errc::mixed_fields, "entry field mismatch");
        m.entries_[k] = entries[k];
    }
    return m;
}

void Matrix::check_compatible(const Matrix& o) const {
    if (field_ != o.field_) fail(errc::mixed_fields, field_.str() + " vs " + o.field_.str());
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::dimension_mismatch, "matrix shapes differ");
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_compatible(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_compatible(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (Scalar& x : r.entries_) x = -x;
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (Scalar& x : r.entries_) x = c * x;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) fail(errc::mixed_fields, field_.str() + " vs " + o.field_.str());
    if (cols_ != o.rows_) fail(errc::dimension_mismatch, "inner dimensions differ");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Vec Matrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) fail(errc::dimension_mismatch, "vector length != cols");
    Vec r = zero_vec(field_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r[i] += at(i, j) * x[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

Scalar Matrix::det() const {
    if (!is_square()) fail(errc::dimension_mismatch, "determinant of a non-square matrix");
    Matrix m = *this;
    Scalar d = Scalar::one(field_);
    for (int col = 0; col < cols_; ++col) {
        int piv = -1;
        for (int i = col; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return Scalar::zero(field_);
        if (piv != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Scalar inv = m.at(col, col).inv();
        for (int i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (!is_square()) fail(errc::dimension_mismatch, "inverse of a non-square matrix");
    int n = rows_;
    Matrix m = *this;
    Matrix inv = identity(field_, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) fail(errc::singular_matrix, "matrix is singular");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Scalar f = m.at(col, col).inv();
        for (int j = 0; j < n; ++j) {
            m.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            Scalar g = m.at(i, col);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= g * m.at(col, j);
                inv.at(i, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool Matrix::is_invertible() const {
    return is_square() && !det().is_zero();
}

int Matrix::rank() const {
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) rows.push_back(row(i));
    return static_cast<int>(rref_in_place(rows).size());
}

bool Matrix::is_zero() const {
    for (const Scalar& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_alternate() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i) {
        if (!at(i, i).is_zero()) return false;
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    }
    return true;
}

Vec Matrix::row(int i) const {
    Vec v;
    v.reserve(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

Vec Matrix::col(int j) const {
    Vec v;
    v.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

Matrix Matrix::submatrix(int i0, int j0, int nrows, int ncols) const {
    if (i0 < 0 || j0 < 0 || i0 + nrows > rows_ || j0 + ncols > cols_)
        fail(errc::bad_argument, "submatrix out of range");
    Matrix r(field_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j)
            r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != o.entries_[k]) return false;
    return true;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << '[';
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).str();
        }
        os << ']';
        if (i + 1 < rows_) os << '\n';
    }
    return os.str();
}

std::vector<int> rref_in_place(std::vector<Vec>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    std::size_t ncols = rows[0].size();
    for (const Vec& r : rows)
        if (r.size() != ncols) fail(errc::dimension_mismatch, "ragged rows in rref");

    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        Scalar f = rows[rank][col].inv();
        for (std::size_t j = col; j < ncols; ++j) rows[rank][j] *= f;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            Scalar g = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= g * rows[rank][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

std::vector<Vec> nullspace(const Matrix& a) {
    std::vector<Vec> rows;
    rows.reserve(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
    std::vector<int> pivots = rref_in_place(rows);

    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<Vec> basis;
    for (int freecol = 0; freecol < a.cols(); ++freecol) {
        if (is_pivot[static_cast<std::size_t>(freecol)]) continue;
        Vec v = zero_vec(a.field(), a.cols());
        v[static_cast<std::size_t>(freecol)] = Scalar::one(a.field());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -rows[r][static_cast<std::size_t>(freecol)];
        basis.push_back(std::move(v));
    }
    rref_in_place(basis); // canonical representation
    return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows()) fail(errc::dimension_mismatch, "rhs length != rows");
    std::vector<Vec> aug;
    aug.reserve(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        Vec r = a.row(i);
        r.push_back(b[static_cast<std::size_t>(i)]);
        aug.push_back(std::move(r));
    }
    std::vector<int> pivots = rref_in_place(aug);
    Vec x = zero_vec(a.field(), a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == a.cols()) return std::nullopt; // pivot in the rhs column
        x[static_cast<std::size_t>(pivots[r])] = aug[r][static_cast<std::size_t>(a.cols())];
    }
    return x;
}

} // namespace mspace
