#include "mspace/spectrum.hpp"

#include "mspace/detail/fp.hpp"
#include "mspace/detail/parallel.hpp"

namespace mspace {

namespace {

using detail::fp_t;

// Solves sum_k c_k (B_k x) = x and assembles M = sum_k c_k B_k; the free
// coefficients are zero, so the witness matrix is reproducible.
Matrix witness_matrix(const MatrixSubspace& v, const Vec& x) {
    FieldDesc field = v.field();
    int n = v.ambient(), d = v.dim();
    Matrix a(field, n, d);
    for (int k = 0; k < d; ++k) {
        Vec img = v.basis()[static_cast<std::size_t>(k)].apply(x);
        for (int i = 0; i < n; ++i) a.at(i, k) = img[static_cast<std::size_t>(i)];
    }
    std::optional<Vec> c = solve(a, x);
    if (!c) fail(errc::bad_argument, "witness system unexpectedly inconsistent");
    Matrix m(field, n, n);
    for (int k = 0; k < d; ++k)
        if (!(*c)[static_cast<std::size_t>(k)].is_zero())
            m = m + v.basis()[static_cast<std::size_t>(k)].scaled((*c)[static_cast<std::size_t>(k)]);
    return m;
}

} // namespace

std::pair<bool, std::optional<SpectrumWitness>> has_trivial_spectrum(const MatrixSubspace& v,
                                                                     const ExecPolicy& policy) {
    check_guardrail(v.field(), v.ambient(), policy, "has_trivial_spectrum");
    if (v.dim() == 0) return {true, std::nullopt};

    detail::FpSpace space = detail::FpSpace::from(v);
    fp_t q = space.p;
    int n = space.n;
    std::uint64_t count = pow_clamped(static_cast<std::uint64_t>(q), n);

    // smallest enumeration index whose vector lies in its own image span
    using Hit = std::optional<std::uint64_t>;
    Hit hit = detail::partitioned_reduce<Hit>(
        count, policy.jobs, std::nullopt,
        [&](std::uint64_t lo, std::uint64_t hi) -> Hit {
            std::vector<fp_t> x(static_cast<std::size_t>(n));
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                detail::index_to_vec(idx, q, n, x.data());
                if (!detail::is_projective_rep(x.data(), n)) continue;
                if (space.image_contains_self(x.data())) return idx;
            }
            return std::nullopt;
        },
        [](Hit acc, Hit r) { return acc ? acc : r; });

    if (!hit) return {true, std::nullopt};
    std::vector<fp_t> x(static_cast<std::size_t>(n));
    detail::index_to_vec(*hit, q, n, x.data());
    Vec xv = detail::fp_to_vec(v.field(), x.data(), n);
    return {false, SpectrumWitness{xv, witness_matrix(v, xv)}};
}

bool is_totally_intransitive(const MatrixSubspace& v, const ExecPolicy& policy) {
    check_guardrail(v.field(), v.ambient(), policy, "is_totally_intransitive");
    int n = v.ambient();
    if (v.dim() == 0) return n > 0;

    detail::FpSpace space = detail::FpSpace::from(v);
    fp_t q = space.p;
    std::uint64_t count = pow_clamped(static_cast<std::uint64_t>(q), n);

    return detail::partitioned_reduce<bool>(
        count, policy.jobs, true,
        [&](std::uint64_t lo, std::uint64_t hi) -> bool {
            std::vector<fp_t> x(static_cast<std::size_t>(n));
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                detail::index_to_vec(idx, q, n, x.data());
                if (!detail::is_projective_rep(x.data(), n)) continue;
                if (space.rank_of_image(x.data()) == n) return false;
            }
            return true;
        },
        [](bool acc, bool r) { return acc && r; });
}

bool is_maximal_trivial(const MatrixSubspace& v, const ExecPolicy& policy) {
    int n = v.ambient();
    if (v.dim() != n * (n - 1) / 2) {
        require_finite(v.field(), "is_maximal_trivial");
        return false;
    }
    return has_trivial_spectrum(v, policy).first;
}

bool is_irreducible(const MatrixSubspace& v, const ExecPolicy& policy) {
    check_guardrail(v.field(), v.ambient(), policy, "is_irreducible");
    int n = v.ambient();
    if (n == 1) return true;
    if (v.dim() == 0) return false;

    detail::FpSpace space = detail::FpSpace::from(v);
    fp_t q = space.p;
    std::uint64_t count = pow_clamped(static_cast<std::uint64_t>(q), n);

    // closure(x) = K^n for every projective representative x
    return detail::partitioned_reduce<bool>(
        count, policy.jobs, true,
        [&](std::uint64_t lo, std::uint64_t hi) -> bool {
            std::vector<fp_t> x(static_cast<std::size_t>(n));
            std::vector<fp_t> img(static_cast<std::size_t>(n));
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                detail::index_to_vec(idx, q, n, x.data());
                if (!detail::is_projective_rep(x.data(), n)) continue;
                detail::FpEchelon closure(q, n);
                closure.insert(x);
                std::vector<std::vector<fp_t>> frontier{x};
                while (!frontier.empty() && closure.dim() < n) {
                    std::vector<std::vector<fp_t>> next;
                    for (const std::vector<fp_t>& u : frontier)
                        for (int k = 0; k < space.dim; ++k) {
                            space.apply(k, u.data(), img.data());
                            if (closure.insert(img)) next.push_back(img);
                        }
                    frontier = std::move(next);
                }
                if (closure.dim() < n) return false;
            }
            return true;
        },
        [](bool acc, bool r) { return acc && r; });
}

SpectrumReport spectrum_report(const MatrixSubspace& v, const ExecPolicy& policy) {
    SpectrumReport r;
    auto [trivial, witness] = has_trivial_spectrum(v, policy);
    r.trivial_spectrum = trivial;
    r.witness = std::move(witness);
    r.totally_intransitive = is_totally_intransitive(v, policy);
    r.maximal = trivial && v.dim() == v.ambient() * (v.ambient() - 1) / 2;
    r.irreducible = is_irreducible(v, policy);
    return r;
}

} // namespace mspace
