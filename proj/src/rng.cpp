#include "mspace/rng.hpp"

#include "mspace/quadform.hpp"

namespace mspace {

Matrix random_matrix(FieldDesc field, int rows, int cols, SplitMix64& rng) {
    require_finite(field, "random_matrix");
    Matrix m(field, rows, cols);
    std::uint64_t q = static_cast<std::uint64_t>(field.p());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = Scalar(field, static_cast<std::int64_t>(rng.below(q)));
    return m;
}

Matrix random_invertible(FieldDesc field, int n, SplitMix64& rng) {
    for (;;) {
        Matrix m = random_matrix(field, n, n, rng);
        if (m.is_invertible()) return m;
    }
}

Matrix random_nonisotropic_gram(FieldDesc field, int m, SplitMix64& rng) {
    require_finite(field, "random_nonisotropic_gram");
    if (m == 1) {
        std::uint64_t q = static_cast<std::uint64_t>(field.p());
        Matrix p(field, 1, 1);
        p.at(0, 0) = Scalar(field, 1 + static_cast<std::int64_t>(rng.below(q - 1)));
        return p;
    }
    if (m != 2) fail(errc::bad_argument, "non-isotropic grams exist only for m <= 2 over finite fields");
    for (;;) {
        Matrix p = random_matrix(field, 2, 2, rng);
        if (!p.is_invertible()) continue;
        if (!is_isotropic(p).first) return p;
    }
}

} // namespace mspace
