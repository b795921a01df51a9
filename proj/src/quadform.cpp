#include "mspace/quadform.hpp"

#include "mspace/construct.hpp"
#include "mspace/detail/fp.hpp"
#include "mspace/detail/parallel.hpp"

namespace mspace {

namespace {

using detail::fp_t;

// x^T P x over F_p for word-sized entries.
fp_t fp_quad(const std::vector<fp_t>& pm, const fp_t* x, int n, fp_t p) {
    fp_t acc = 0;
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        fp_t row = 0;
        for (int j = 0; j < n; ++j) row += pm[static_cast<std::size_t>(i) * n + j] * x[j] % p;
        acc += x[i] * (row % p) % p;
    }
    return acc % p;
}

} // namespace

std::pair<bool, std::optional<Vec>> is_isotropic(const Matrix& p, const ExecPolicy& policy) {
    if (!p.is_square()) fail(errc::dimension_mismatch, "form matrix must be square");
    check_guardrail(p.field(), p.rows(), policy, "is_isotropic");
    int n = p.rows();
    fp_t q = p.field().p();
    std::vector<fp_t> pm;
    pm.reserve(static_cast<std::size_t>(n) * n);
    for (const Scalar& x : p.entries()) pm.push_back(x.rep());

    std::uint64_t count = pow_clamped(static_cast<std::uint64_t>(q), n);
    using Hit = std::optional<std::uint64_t>;
    Hit hit = detail::partitioned_reduce<Hit>(
        count, policy.jobs, std::nullopt,
        [&](std::uint64_t lo, std::uint64_t hi) -> Hit {
            std::vector<fp_t> x(static_cast<std::size_t>(n));
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                detail::index_to_vec(idx, q, n, x.data());
                if (!detail::is_projective_rep(x.data(), n)) continue;
                if (fp_quad(pm, x.data(), n, q) == 0) return idx;
            }
            return std::nullopt;
        },
        [](Hit acc, Hit r) { return acc ? acc : r; });

    if (!hit) return {false, std::nullopt};
    std::vector<fp_t> x(static_cast<std::size_t>(n));
    detail::index_to_vec(*hit, q, n, x.data());
    return {true, detail::fp_to_vec(p.field(), x.data(), n)};
}

Matrix right_orthogonal_congruence(const Matrix& p) {
    if (!p.is_square()) fail(errc::dimension_mismatch, "form matrix must be square");
    FieldDesc field = p.field();
    int n = p.rows();

    // current subspace basis, shrinking by one dimension per step
    std::vector<Vec> basis;
    basis.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) basis.push_back(unit_vec(field, n, i));

    std::vector<Vec> chosen;
    while (!basis.empty()) {
        const Vec x = basis[0];
        // row_j = b(x, basis[j]) = x^T P basis[j]
        int k = static_cast<int>(basis.size());
        Matrix row(field, 1, k);
        Vec xtp = p.transpose().apply(x); // (x^T P)^T
        for (int j = 0; j < k; ++j) row.at(0, j) = dot(xtp, basis[static_cast<std::size_t>(j)]);
        if (row.at(0, 0).is_zero())
            fail(errc::isotropic_form, "b(x, x) = 0 for a constructed basis vector");
        chosen.push_back(x);
        std::vector<Vec> coeffs = nullspace(row); // k-1 canonical coefficient vectors
        std::vector<Vec> next;
        next.reserve(coeffs.size());
        for (const Vec& c : coeffs) {
            Vec y = zero_vec(field, n);
            for (int j = 0; j < k; ++j)
                if (!c[static_cast<std::size_t>(j)].is_zero())
                    y = vec_add(y, vec_scale(c[static_cast<std::size_t>(j)], basis[static_cast<std::size_t>(j)]));
            next.push_back(std::move(y));
        }
        basis = std::move(next);
    }
    Matrix s = Matrix::from_cols(field, chosen);
    if (!s.is_invertible())
        fail(errc::isotropic_form, "right-orthogonal basis is degenerate");
    return s;
}

std::pair<bool, std::optional<CongruenceWitness>> congruent_up_to_scalar(const Matrix& p,
                                                                         const Matrix& q) {
    if (p.field() != q.field()) fail(errc::mixed_fields, "operand fields differ");
    if (!p.is_square() || !q.is_square() || p.rows() != q.rows())
        fail(errc::dimension_mismatch, "operands must be square of equal size");
    FieldDesc field = p.field();
    int m = p.rows();
    if (!p.is_invertible() || !q.is_invertible())
        fail(errc::singular_matrix, "operands must be invertible");

    if (m == 1) {
        Scalar lambda = p.at(0, 0) / q.at(0, 0);
        return {true, CongruenceWitness{lambda, Matrix::identity(field, 1)}};
    }
    if (!field.is_finite() || m > 2 || field.p() > 11)
        fail(errc::size_limit_exceeded,
             "brute-force congruence search is limited to m <= 2 over F_q with q <= 11");

    fp_t qq = field.p();
    int mm = m * m;
    std::vector<fp_t> pe, qe;
    for (const Scalar& x : p.entries()) pe.push_back(x.rep());
    for (const Scalar& x : q.entries()) qe.push_back(x.rep());

    std::uint64_t count = pow_clamped(static_cast<std::uint64_t>(qq), mm);
    std::vector<fp_t> r(static_cast<std::size_t>(mm)), t(static_cast<std::size_t>(mm));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        detail::index_to_vec(idx, qq, mm, r.data());
        // det R != 0 (m = 2 here)
        fp_t det = (r[0] * r[3] - r[1] * r[2]) % qq;
        if (det < 0) det += qq;
        if (det == 0) continue;
        // t = R Q R^T
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                fp_t acc = 0;
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b)
                        acc += r[static_cast<std::size_t>(i * m + a)] *
                                   (qe[static_cast<std::size_t>(a * m + b)] *
                                    r[static_cast<std::size_t>(j * m + b)] % qq) % qq;
                t[static_cast<std::size_t>(i * m + j)] = acc % qq;
            }
        for (fp_t lam = 1; lam < qq; ++lam) {
            bool ok = true;
            for (int k = 0; k < mm && ok; ++k)
                ok = (lam * t[static_cast<std::size_t>(k)] % qq) == pe[static_cast<std::size_t>(k)];
            if (ok) {
                Matrix rm(field, m, m);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        rm.at(i, j) = Scalar(field, r[static_cast<std::size_t>(i * m + j)]);
                return {true, CongruenceWitness{Scalar(field, lam), rm}};
            }
        }
    }
    return {false, std::nullopt};
}

QuadSimClass quad_sim_class(const Matrix& p) {
    if (!p.is_square()) fail(errc::dimension_mismatch, "form matrix must be square");
    require_finite(p.field(), "quad_sim_class");
    if (p.field().p() == 2)
        fail(errc::even_characteristic, "symmetrization is lossy in characteristic 2");
    FieldDesc field = p.field();
    Scalar half = Scalar(field, 2).inv();
    Matrix sym = (p + p.transpose()).scaled(half);
    Scalar disc = sym.det();
    if (disc.is_zero()) fail(errc::degenerate_form, "symmetrized form is degenerate");
    int m = p.rows();
    if (m % 2 != 0) return {m, DiscClass::not_applicable};
    // Euler's criterion
    std::int64_t legendre = pow_mod(disc.rep(), (field.p() - 1) / 2, field.p());
    return {m, legendre == 1 ? DiscClass::square : DiscClass::nonsquare};
}

bool quad_similar(const Matrix& p, const Matrix& q) {
    if (p.field() != q.field()) fail(errc::mixed_fields, "operand fields differ");
    if (!p.is_square() || !q.is_square() || p.rows() != q.rows())
        fail(errc::dimension_mismatch, "operands must be square of equal size");
    return quad_sim_class(p) == quad_sim_class(q);
}

bool definite_certificate(const Matrix& p) {
    if (!p.is_square()) fail(errc::dimension_mismatch, "form matrix must be square");
    if (!p.field().is_rational())
        fail(errc::bad_argument, "definite_certificate applies to the rational field");
    FieldDesc field = p.field();
    Scalar half = Scalar::fraction(field, 1, 2);
    Matrix sym = (p + p.transpose()).scaled(half);
    int n = p.rows();
    bool pos = true, neg = true;
    for (int k = 1; k <= n; ++k) {
        mpq_class minor = sym.submatrix(0, 0, k, k).det().rat();
        if (minor <= 0) pos = false;
        if ((k % 2 == 1 && minor >= 0) || (k % 2 == 0 && minor <= 0)) neg = false;
        if (!pos && !neg) return false;
    }
    return pos || neg;
}

Matrix equivalence_witness(const Matrix& p, const Matrix& q, const Scalar& lambda, const Matrix& r) {
    if (p.field() != q.field() || p.field() != lambda.field() || p.field() != r.field())
        fail(errc::mixed_fields, "operand fields differ");
    int n = p.rows();
    if (!p.is_square() || !q.is_square() || q.rows() != n || r.rows() != n || r.cols() != n)
        fail(errc::dimension_mismatch, "operands must be square of equal size");
    if (lambda.is_zero()) fail(errc::bad_argument, "lambda must be nonzero");
    FieldDesc field = p.field();

    Matrix rp = r * p;
    Matrix aprime = q.scaled(lambda) - rp * r.transpose();
    if (!aprime.is_alternate())
        fail(errc::not_alternate, "lambda Q - R P R^T is not alternate");
    Matrix rp_inv = rp.inverse(); // throws SingularMatrix if R or P is singular
    Matrix a = -(rp_inv * aprime * rp_inv.transpose());
    Matrix s = r * (Matrix::identity(field, n) + p * a);
    if (!s.is_invertible())
        fail(errc::singular_witness, "witness S = R(I + P A) is singular");

    AffineSpace lhs = lmul(r, AffineSpace(Matrix::identity(field, n), p_alt(p)));
    AffineSpace rhs = rmul(AffineSpace(Matrix::identity(field, n), p_alt(q)), s);
    if (lhs != rhs)
        fail(errc::singular_witness, "affine set equality R(I + P Alt) = (I + Q Alt) S failed");
    return s;
}

} // namespace mspace
