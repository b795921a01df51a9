#pragma once

// Word-sized kernels for enumeration loops over prime fields. These back the
// finite-field decision procedures; canonical results are converted to
// Scalar-based types at module boundaries.

#include <cstdint>
#include <vector>

#include "mspace/field.hpp"
#include "mspace/subspace.hpp"

namespace mspace::detail {

using fp_t = std::int64_t;

// Decodes an enumeration index into a vector over F_q in odometer order:
// coordinate 0 is the most significant digit.
inline void index_to_vec(std::uint64_t idx, fp_t q, int n, fp_t* out) {
    for (int i = n - 1; i >= 0; --i) {
        out[i] = static_cast<fp_t>(idx % static_cast<std::uint64_t>(q));
        idx /= static_cast<std::uint64_t>(q);
    }
}

// Projective representatives are the vectors whose first nonzero
// coordinate is 1; every nonzero vector is a unique scalar multiple of one.
inline bool is_projective_rep(const fp_t* v, int n) {
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        return v[i] == 1;
    }
    return false;
}

// Row echelon accumulator over F_p (forward-reduced only; canonicalization
// happens in the Scalar layer). Rows have fixed width m.
class FpEchelon {
public:
    FpEchelon(fp_t p, int m) : p_(p), m_(m) {}

    int dim() const { return static_cast<int>(rows_.size()); }

    // Reduces v against the rows in place; returns the index of its leading
    // nonzero coordinate, or -1 if v reduces to zero.
    int reduce(std::vector<fp_t>& v) const {
        int lead = -1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            fp_t c = v[static_cast<std::size_t>(pivots_[r])];
            if (c == 0) continue;
            const std::vector<fp_t>& row = rows_[r];
            for (int j = pivots_[r]; j < m_; ++j)
                v[static_cast<std::size_t>(j)] = (v[static_cast<std::size_t>(j)] + (p_ - c) * row[static_cast<std::size_t>(j)]) % p_;
        }
        for (int j = 0; j < m_; ++j)
            if (v[static_cast<std::size_t>(j)] != 0) { lead = j; break; }
        return lead;
    }

    bool contains(std::vector<fp_t> v) const { return reduce(v) < 0; }

    // Inserts v into the span; true if the dimension grew.
    bool insert(std::vector<fp_t> v) {
        int lead = reduce(v);
        if (lead < 0) return false;
        fp_t f = inv_mod(v[static_cast<std::size_t>(lead)], p_);
        for (int j = lead; j < m_; ++j) v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] * f % p_;
        // keep pivot order ascending so reduce stays a single sweep
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        return true;
    }

    const std::vector<std::vector<fp_t>>& rows() const { return rows_; }

private:
    fp_t p_;
    int m_;
    std::vector<std::vector<fp_t>> rows_;
    std::vector<int> pivots_;
};

// Basis of a matrix subspace flattened into word-sized entries.
struct FpSpace {
    fp_t p = 0;
    int n = 0;
    int dim = 0;
    std::vector<fp_t> mats; // dim blocks of n*n, row-major

    static FpSpace from(const MatrixSubspace& v) {
        FpSpace s;
        s.p = v.field().p();
        s.n = v.ambient();
        s.dim = v.dim();
        s.mats.reserve(static_cast<std::size_t>(s.dim) * s.n * s.n);
        for (const Matrix& m : v.basis())
            for (const Scalar& x : m.entries()) s.mats.push_back(x.rep());
        return s;
    }

    const fp_t* mat(int k) const { return mats.data() + static_cast<std::size_t>(k) * n * n; }

    // out = basis[k] * x
    void apply(int k, const fp_t* x, fp_t* out) const {
        const fp_t* m = mat(k);
        for (int i = 0; i < n; ++i) {
            fp_t acc = 0;
            const fp_t* row = m + static_cast<std::size_t>(i) * n;
            for (int j = 0; j < n; ++j) acc += row[j] * x[j] % p; // keeps acc < n*p
            out[i] = acc % p;
        }
    }

    // dim span{basis[k] * x : k}
    int rank_of_image(const fp_t* x) const {
        FpEchelon ech(p, n);
        std::vector<fp_t> img(static_cast<std::size_t>(n));
        for (int k = 0; k < dim; ++k) {
            apply(k, x, img.data());
            ech.insert(img);
            if (ech.dim() == n) break;
        }
        return ech.dim();
    }

    // Is x itself in span{basis[k] * x}?
    bool image_contains_self(const fp_t* x) const {
        FpEchelon ech(p, n);
        std::vector<fp_t> img(static_cast<std::size_t>(n));
        for (int k = 0; k < dim; ++k) {
            apply(k, x, img.data());
            ech.insert(img);
        }
        return ech.contains(std::vector<fp_t>(x, x + n));
    }
};

inline Vec fp_to_vec(FieldDesc field, const fp_t* v, int n) {
    Vec out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.emplace_back(field, v[i]);
    return out;
}

} // namespace mspace::detail
