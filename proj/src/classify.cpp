#include "mspace/classify.hpp"

#include "mspace/detail/fp.hpp"
#include "mspace/detail/parallel.hpp"
#include "mspace/quadform.hpp"
#include "mspace/rng.hpp"

namespace mspace {

namespace {

using detail::fp_t;

void require_classifiable_field(const FieldDesc& field, const char* op) {
    require_finite(field, op);
    if (field.p() == 2)
        fail(errc::char_two_unsupported, std::string(op) + " is undefined over F_2");
}

struct ProfileLevel {
    detail::FpEchelon span;
    std::uint64_t reps = 0; // projective representatives with dim(Vx) == value
};

struct Profile {
    // exact-value buckets keyed by dim(Vx)
    std::map<int, ProfileLevel> levels;
};

Profile merge_profiles(Profile a, Profile b) {
    for (auto& [value, level] : b.levels) {
        auto it = a.levels.find(value);
        if (it == a.levels.end()) {
            a.levels.emplace(value, std::move(level));
        } else {
            it->second.reps += level.reps;
            for (const std::vector<fp_t>& row : level.span.rows()) it->second.span.insert(row);
        }
    }
    return a;
}

Profile raw_profile(const MatrixSubspace& v, const ExecPolicy& policy) {
    detail::FpSpace space = detail::FpSpace::from(v);
    fp_t q = space.p;
    int n = space.n;
    std::uint64_t count = pow_clamped(static_cast<std::uint64_t>(q), n);

    return detail::partitioned_reduce<Profile>(
        count, policy.jobs, Profile{},
        [&](std::uint64_t lo, std::uint64_t hi) -> Profile {
            Profile prof;
            std::vector<fp_t> x(static_cast<std::size_t>(n));
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                detail::index_to_vec(idx, q, n, x.data());
                if (!detail::is_projective_rep(x.data(), n)) continue;
                int value = space.rank_of_image(x.data());
                auto it = prof.levels.find(value);
                if (it == prof.levels.end())
                    it = prof.levels.emplace(value, ProfileLevel{detail::FpEchelon(q, n), 0}).first;
                it->second.reps += 1;
                it->second.span.insert(x);
            }
            return prof;
        },
        [](Profile a, Profile b) { return merge_profiles(std::move(a), std::move(b)); });
}

// prefix-unions the exact-value buckets into level-set data
struct LevelSets {
    std::vector<int> values;                 // ascending
    std::vector<VectorSubspace> spans;       // span of {x : dim(Vx) <= value}
    std::vector<std::uint64_t> rep_prefix;   // #reps with dim(Vx) <= value
};

LevelSets level_sets(const MatrixSubspace& v, const ExecPolicy& policy) {
    Profile prof = raw_profile(v, policy);
    FieldDesc field = v.field();
    int n = v.ambient();
    LevelSets out;
    std::vector<Vec> acc;
    std::uint64_t reps = 0;
    for (auto& [value, level] : prof.levels) {
        for (const std::vector<fp_t>& row : level.span.rows())
            acc.push_back(detail::fp_to_vec(field, row.data(), n));
        reps += level.reps;
        out.values.push_back(value);
        out.spans.push_back(VectorSubspace::span(field, n, acc));
        out.rep_prefix.push_back(reps);
    }
    return out;
}

} // namespace

std::vector<int> Decomposition::sizes() const {
    std::vector<int> s;
    s.reserve(blocks.size());
    for (const VeeBlock& b : blocks) s.push_back(b.size);
    return s;
}

std::map<int, VectorSubspace> vx_profile(const MatrixSubspace& v, const ExecPolicy& policy) {
    require_classifiable_field(v.field(), "vx_profile");
    check_guardrail(v.field(), v.ambient(), policy, "vx_profile");
    LevelSets ls = level_sets(v, policy);
    std::map<int, VectorSubspace> out;
    for (std::size_t k = 0; k < ls.values.size(); ++k)
        out.emplace(ls.values[k], ls.spans[k]);
    return out;
}

Flag find_flag(const MatrixSubspace& v, const ExecPolicy& policy) {
    require_classifiable_field(v.field(), "find_flag");
    check_guardrail(v.field(), v.ambient(), policy, "find_flag");
    std::uint64_t q = static_cast<std::uint64_t>(v.field().p());

    LevelSets ls = level_sets(v, policy);
    Flag flag;
    int prev_dim = 0;
    for (std::size_t k = 0; k < ls.values.size(); ++k) {
        const VectorSubspace& span = ls.spans[k];
        int d = span.dim();
        // the level set is a subspace iff it fills its span
        std::uint64_t span_reps = (pow_clamped(q, d) - 1) / (q - 1);
        if (ls.rep_prefix[k] != span_reps)
            fail(errc::not_a_flag, "level set " + std::to_string(ls.values[k]) + " is not a subspace");
        if (d != ls.values[k] + 1)
            fail(errc::not_a_flag, "dimension identity violated at level " + std::to_string(ls.values[k]));
        if (d <= prev_dim) fail(errc::not_a_flag, "chain is not strictly increasing");
        // V-invariance of the level set
        for (const Vec& b : span.basis()) {
            VectorSubspace image = space_apply(v, b);
            if (!span.contains(image))
                fail(errc::not_a_flag, "level set is not invariant");
        }
        flag.sizes.push_back(d - prev_dim);
        flag.subspaces.push_back(span);
        prev_dim = d;
    }
    if (flag.subspaces.empty() || !flag.subspaces.back().is_full())
        fail(errc::not_a_flag, "chain does not end at the full space");
    return flag;
}

Matrix recover_gram(const MatrixSubspace& w) {
    FieldDesc field = w.field();
    int m = w.ambient();
    if (m < 2) fail(errc::bad_argument, "gram recovery needs ambient size >= 2");
    if (w.dim() == 0) fail(errc::not_p_alt_form, "zero space has no gram for m >= 2");

    // Linear system over the m^2 unknowns of Y: for every basis M of W,
    // (Y M) + (Y M)^T = 0 and diag(Y M) = 0. Unknown order: row-major Y_{ik}.
    std::vector<Vec> rows;
    for (const Matrix& mat : w.basis()) {
        for (int i = 0; i < m; ++i) {
            // diagonal condition (Y M)_{ii} = 0
            Vec row = zero_vec(field, m * m);
            for (int k = 0; k < m; ++k) row[static_cast<std::size_t>(i * m + k)] += mat.at(k, i);
            rows.push_back(std::move(row));
            // skew conditions (Y M)_{ij} + (Y M)_{ji} = 0, j > i
            for (int j = i + 1; j < m; ++j) {
                Vec r2 = zero_vec(field, m * m);
                for (int k = 0; k < m; ++k) {
                    r2[static_cast<std::size_t>(i * m + k)] += mat.at(k, j);
                    r2[static_cast<std::size_t>(j * m + k)] += mat.at(k, i);
                }
                rows.push_back(std::move(r2));
            }
        }
    }
    std::vector<Vec> sol = nullspace(Matrix::from_rows(field, rows));
    if (sol.size() != 1)
        fail(errc::not_p_alt_form,
             "solution space has dimension " + std::to_string(sol.size()) + ", expected 1");
    Matrix y = Matrix::from_vec(field, m, m, sol[0]);
    if (!y.is_invertible()) fail(errc::not_p_alt_form, "solution generator is singular");
    Matrix p = y.inverse();
    // normalize: first nonzero row-major entry becomes 1
    for (const Scalar& e : p.entries())
        if (!e.is_zero()) {
            p = p.scaled(e.inv());
            break;
        }
    if (p_alt(p) != w) fail(errc::not_p_alt_form, "verification W = P Alt_m failed");
    return p;
}

namespace {

// Columns of the basis-change matrix: the echelon basis of F_1, then greedy
// completion to F_2 from its echelon basis in order, and so on.
Matrix adapted_basis(const Flag& flag, FieldDesc field, int n) {
    std::vector<Vec> cols;
    std::vector<Vec> staged; // running echelon copy used for independence tests
    for (const VectorSubspace& f : flag.subspaces) {
        for (const Vec& cand : f.basis()) {
            std::vector<Vec> trial = staged;
            trial.push_back(cand);
            if (static_cast<int>(rref_in_place(trial).size()) > static_cast<int>(staged.size())) {
                cols.push_back(cand);
                staged = std::move(trial);
            }
        }
    }
    if (static_cast<int>(cols.size()) != n)
        fail(errc::not_a_flag, "flag does not span the full space");
    return Matrix::from_cols(field, cols);
}

} // namespace

Decomposition classify(const MatrixSubspace& v, const ExecPolicy& policy) {
    require_classifiable_field(v.field(), "classify");
    FieldDesc field = v.field();
    int n = v.ambient();
    if (!is_maximal_trivial(v, policy))
        fail(errc::bad_argument, "classify requires a maximal trivial-spectrum space");

    Flag flag = find_flag(v, policy);
    Matrix s = adapted_basis(flag, field, n);
    MatrixSubspace w = conjugate(v, s.inverse()); // S^{-1} V S

    // block boundaries
    std::vector<int> starts{0};
    for (int size : flag.sizes) starts.push_back(starts.back() + size);

    // the conjugated space must be block upper triangular
    for (const Matrix& m : w.basis())
        for (std::size_t k = 0; k + 1 < starts.size(); ++k)
            for (int i = starts[k + 1]; i < n; ++i)
                for (int j = starts[k]; j < starts[k + 1]; ++j)
                    if (!m.at(i, j).is_zero())
                        fail(errc::classification_failed, "adapted basis is not block-triangular");

    Decomposition dec{ {}, s, false };
    for (std::size_t k = 0; k + 1 < starts.size(); ++k) {
        int lo = starts[k], size = flag.sizes[k];
        std::vector<Matrix> block_gens;
        for (const Matrix& m : w.basis()) block_gens.push_back(m.submatrix(lo, lo, size, size));
        MatrixSubspace wk = MatrixSubspace::span(field, size, block_gens);
        if (size == 1) {
            if (wk.dim() != 0)
                fail(errc::classification_failed, "size-1 block space is nonzero");
            dec.blocks.push_back({1, Matrix::identity(field, 1)});
        } else {
            Matrix p = recover_gram(wk);
            if (is_isotropic(p, policy).first)
                fail(errc::classification_failed, "recovered gram is isotropic");
            dec.blocks.push_back({size, std::move(p)});
        }
    }

    if (w != model_space(VeeSpec{dec.blocks}, field))
        fail(errc::classification_failed, "S^{-1} V S differs from the model space");
    dec.verified = true;
    return dec;
}

bool similar_spaces(const MatrixSubspace& v, const MatrixSubspace& w, const ExecPolicy& policy) {
    if (v.field() != w.field()) fail(errc::mixed_fields, "operand fields differ");
    if (v.ambient() != w.ambient()) fail(errc::dimension_mismatch, "ambient sizes differ");
    require_classifiable_field(v.field(), "similar_spaces");
    // similarity preserves the maximal-trivial-spectrum property, so one-sided
    // failures decide immediately; double failures are out of scope
    bool mv = is_maximal_trivial(v, policy);
    bool mw = is_maximal_trivial(w, policy);
    if (!mv && !mw) fail(errc::bad_argument, "similar_spaces requires maximal trivial-spectrum spaces");
    if (mv != mw) return false;
    Decomposition dv = classify(v, policy);
    Decomposition dw = classify(w, policy);
    if (dv.sizes() != dw.sizes()) return false;
    for (std::size_t k = 0; k < dv.blocks.size(); ++k)
        if (!congruent_up_to_scalar(dv.blocks[k].gram, dw.blocks[k].gram).first) return false;
    return true;
}

MatrixSubspace affine_normalize(const AffineSpace& a, const ExecPolicy& policy) {
    require_finite(a.field(), "affine_normalize");
    FieldDesc field = a.field();
    int d = a.dim();
    fp_t q = field.p();

    auto candidate = [&](const std::vector<fp_t>& coeffs) {
        Matrix m = a.offset();
        for (int k = 0; k < d; ++k)
            if (coeffs[static_cast<std::size_t>(k)] != 0)
                m = m + a.translation().basis()[static_cast<std::size_t>(k)].scaled(
                            Scalar(field, coeffs[static_cast<std::size_t>(k)]));
        return m;
    };

    std::optional<Matrix> pivot;
    std::uint64_t count = pow_clamped(static_cast<std::uint64_t>(q), d);
    std::vector<fp_t> coeffs(static_cast<std::size_t>(d), 0);
    if (count <= (std::uint64_t{1} << 24) || policy.force) {
        for (std::uint64_t idx = 0; idx < count && !pivot; ++idx) {
            detail::index_to_vec(idx, q, d, coeffs.data());
            Matrix m = candidate(coeffs);
            if (m.is_invertible()) pivot = std::move(m);
        }
    } else {
        // seeded sampling beyond the guardrail; offset first, then random cosets
        Matrix m0 = a.offset();
        if (m0.is_invertible()) pivot = std::move(m0);
        SplitMix64 rng(0);
        for (int attempt = 0; attempt < 65536 && !pivot; ++attempt) {
            for (int k = 0; k < d; ++k)
                coeffs[static_cast<std::size_t>(k)] =
                    static_cast<fp_t>(rng.below(static_cast<std::uint64_t>(q)));
            Matrix m = candidate(coeffs);
            if (m.is_invertible()) pivot = std::move(m);
        }
    }
    if (!pivot) fail(errc::no_invertible_element, "no invertible element found in the affine space");
    return lmul(pivot->inverse(), a.translation());
}

namespace {

// Classifies the normalized translation space, or nullopt when the affine
// space is not made of invertible matrices (no basepoint, or the normalized
// space fails the maximal-trivial-spectrum test).
std::optional<Decomposition> try_affine_classify(const AffineSpace& a, const ExecPolicy& policy) {
    std::optional<MatrixSubspace> normalized;
    try {
        normalized = affine_normalize(a, policy);
    } catch (const Error& e) {
        if (e.code() == errc::no_invertible_element) return std::nullopt;
        throw;
    }
    if (!is_maximal_trivial(*normalized, policy)) return std::nullopt;
    return classify(*normalized, policy);
}

} // namespace

bool affine_equivalent(const AffineSpace& a, const AffineSpace& b, const ExecPolicy& policy) {
    if (a.field() != b.field()) fail(errc::mixed_fields, "operand fields differ");
    if (a.ambient() != b.ambient()) fail(errc::dimension_mismatch, "ambient sizes differ");
    require_classifiable_field(a.field(), "affine_equivalent");
    // equivalence preserves being a maximal affine space of invertible
    // matrices, so one-sided failures decide immediately
    std::optional<Decomposition> da = try_affine_classify(a, policy);
    std::optional<Decomposition> db = try_affine_classify(b, policy);
    if (!da && !db)
        fail(errc::bad_argument,
             "affine_equivalent requires affine spaces of invertible matrices");
    if (da.has_value() != db.has_value()) return false;
    if (da->sizes() != db->sizes()) return false;
    for (std::size_t k = 0; k < da->blocks.size(); ++k)
        if (!quad_similar(da->blocks[k].gram, db->blocks[k].gram)) return false;
    return true;
}

} // namespace mspace
