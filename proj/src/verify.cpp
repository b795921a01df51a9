#include "mspace/verify.hpp"

#include <chrono>
#include <sstream>

#include "mspace/classify.hpp"
#include "mspace/construct.hpp"
#include "mspace/detail/fp.hpp"
#include "mspace/detail/parallel.hpp"
#include "mspace/quadform.hpp"
#include "mspace/rng.hpp"
#include "mspace/spectrum.hpp"

namespace mspace {

namespace {

using detail::fp_t;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Checks {
    std::int64_t run = 0;
    std::vector<SuiteFailure> failures;

    void record(bool ok, const std::string& input, const std::string& expected,
                const std::string& actual) {
        ++run;
        if (!ok) failures.push_back({input, expected, actual});
    }

    Checks& merge(Checks other) {
        run += other.run;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        return *this;
    }
};

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i].str();
    }
    os << ')';
    return os.str();
}

std::string sizes_str(const std::vector<int>& sizes) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) os << ',';
        os << sizes[i];
    }
    os << ')';
    return os.str();
}

// Gaussian binomial [n choose k]_q, the number of k-dimensional subspaces
// of F_q^n; computed in closed form, independent of any enumeration.
std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q) {
    auto qint = [&](int m) { // 1 + q + ... + q^{m-1}
        std::uint64_t s = 0, pw = 1;
        for (int e = 0; e < m; ++e) {
            s += pw;
            pw *= q;
        }
        return s;
    };
    std::uint64_t top = 1, bot = 1;
    for (int i = 1; i <= k; ++i) {
        top *= qint(n - k + i);
        bot *= qint(i);
    }
    return top / bot;
}

} // namespace

SuiteReport suite_action1(int n, std::int64_t q, const ExecPolicy& policy) {
    Clock::time_point start = Clock::now();
    SuiteReport report;
    report.suite = "action1";
    report.params = {{"n", n}, {"q", q}};
    FieldDesc field = FieldDesc::prime(q);
    check_guardrail(field, n, policy, "suite_action1");

    MatrixSubspace alt = alt_space(n, field);
    std::uint64_t count = pow_clamped(static_cast<std::uint64_t>(q), n);

    Checks checks = detail::partitioned_reduce<Checks>(
        count, policy.jobs, Checks{},
        [&](std::uint64_t lo, std::uint64_t hi) {
            Checks c;
            std::vector<fp_t> x(static_cast<std::size_t>(n));
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                detail::index_to_vec(idx, q, n, x.data());
                if (!detail::is_projective_rep(x.data(), n)) continue;
                Vec xv = detail::fp_to_vec(field, x.data(), n);
                VectorSubspace image = space_apply(alt, xv);
                // {x}^perp = nullspace of the row x^T
                Matrix row(field, 1, n);
                for (int j = 0; j < n; ++j) row.at(0, j) = xv[static_cast<std::size_t>(j)];
                VectorSubspace perp = VectorSubspace::span(field, n, nullspace(row));
                bool ok = image == perp && image.dim() == n - 1;
                c.record(ok, "x=" + vec_str(xv), "Alt_n x = {x}^perp of dim n-1",
                         ok ? "ok" : "dim " + std::to_string(image.dim()));
            }
            return c;
        },
        [](Checks a, Checks b) { return a.merge(std::move(b)); });

    report.checks_run = checks.run;
    report.failures = std::move(checks.failures);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

SuiteReport suite_anisotropy(int n, std::int64_t q, int samples, std::uint64_t seed,
                             const ExecPolicy& policy) {
    Clock::time_point start = Clock::now();
    SuiteReport report;
    report.suite = "anisotropy";
    report.params = {{"n", n}, {"q", q}, {"samples", samples}};
    report.seed = seed;
    FieldDesc field = FieldDesc::prime(q);
    if (q % 2 == 0) fail(errc::even_characteristic, "suite_anisotropy requires odd q");
    check_guardrail(field, n, policy, "suite_anisotropy");

    Checks checks;
    auto check_one = [&](const Matrix& p, const std::string& label) {
        bool trivial = has_trivial_spectrum(p_alt(p), policy).first;
        bool isotropic = is_isotropic(p, policy).first;
        checks.record(trivial == !isotropic, label,
                      "trivial spectrum iff non-isotropic",
                      "trivial=" + std::to_string(trivial) + " isotropic=" + std::to_string(isotropic));
    };

    if (n == 2 && q == 3) {
        // exhaustive over GL_2(F_3)
        std::uint64_t count = pow_clamped(3, 4);
        std::vector<fp_t> e(4);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            detail::index_to_vec(idx, 3, 4, e.data());
            Matrix p(field, 2, 2);
            p.at(0, 0) = Scalar(field, e[0]);
            p.at(0, 1) = Scalar(field, e[1]);
            p.at(1, 0) = Scalar(field, e[2]);
            p.at(1, 1) = Scalar(field, e[3]);
            if (!p.is_invertible()) continue;
            check_one(p, "P#" + std::to_string(idx));
        }
    } else {
        for (int s = 0; s < samples; ++s) {
            SplitMix64 rng(SplitMix64::substream(seed, static_cast<std::uint64_t>(s)));
            Matrix p = random_invertible(field, n, rng);
            check_one(p, "sample#" + std::to_string(s));
        }
    }

    report.checks_run = checks.run;
    report.failures = std::move(checks.failures);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

SuiteReport suite_exhaustive_n2_q3(const ExecPolicy& policy) {
    Clock::time_point start = Clock::now();
    SuiteReport report;
    report.suite = "exhaustive-n2-q3";
    report.params = {{"n", 2}, {"q", 3}};
    FieldDesc field = FieldDesc::prime(3);
    Checks checks;

    // (a) all lines of M_2(F_3)
    std::uint64_t line_count = 0;
    std::uint64_t trivial_lines = 0;
    std::uint64_t oracle_nilpotent = 0, oracle_irreducible_poly = 0;
    std::vector<fp_t> e(4);
    for (std::uint64_t idx = 0; idx < 81; ++idx) {
        detail::index_to_vec(idx, 3, 4, e.data());
        if (!detail::is_projective_rep(e.data(), 4)) continue;
        ++line_count;
        Matrix m = Matrix::from_vec(field, 2, 2, detail::fp_to_vec(field, e.data(), 4));
        MatrixSubspace line = MatrixSubspace::span(field, 2, {m});
        bool trivial = has_trivial_spectrum(line, policy).first;

        // independent oracle: nilpotent line or irreducible characteristic
        // polynomial line, decided from trace and determinant only
        Scalar tr = m.at(0, 0) + m.at(1, 1);
        Scalar dt = m.det();
        bool nilpotent = (m * m).is_zero();
        bool irred_poly = true; // t^2 - tr t + dt with no root in F_3
        for (std::int64_t t = 0; t < 3; ++t) {
            Scalar ts(field, t);
            if ((ts * ts - tr * ts + dt).is_zero()) irred_poly = false;
        }
        if (nilpotent) ++oracle_nilpotent;
        if (irred_poly) ++oracle_irreducible_poly;
        checks.record(trivial == (nilpotent || irred_poly), "line#" + std::to_string(idx),
                      "trivial spectrum iff nilpotent or irreducible char poly",
                      "trivial=" + std::to_string(trivial));
        if (trivial) {
            ++trivial_lines;
            Decomposition dec = classify(line, policy);
            std::vector<int> sizes = dec.sizes();
            bool shape_ok = sizes == std::vector<int>{1, 1} || sizes == std::vector<int>{2};
            checks.record(shape_ok && dec.verified, "line#" + std::to_string(idx),
                          "classifies to sizes (1,1) or (2)", sizes_str(sizes));
            // 0 eigenvalue => triangularizable => reducible; and conversely
            bool expect_irreducible = !dt.is_zero();
            bool irred = is_irreducible(line, policy);
            checks.record(irred == expect_irreducible && (sizes == std::vector<int>{2}) == irred,
                          "line#" + std::to_string(idx),
                          "irreducible iff non-singular iff single size-2 block",
                          "irreducible=" + std::to_string(irred));
        }
    }
    checks.record(line_count == gaussian_binomial(4, 1, 3) && line_count == 40, "line census",
                  "gaussian binomial [4 1]_3 = 40", std::to_string(line_count));
    std::uint64_t oracle_total = oracle_nilpotent + oracle_irreducible_poly;
    checks.record(trivial_lines == oracle_total, "trivial-spectrum line census",
                  "count matches nilpotent+irreducible oracle (" + std::to_string(oracle_nilpotent) +
                      "+" + std::to_string(oracle_irreducible_poly) + ")",
                  std::to_string(trivial_lines));
    checks.record(oracle_total == 13, "oracle census", "4 + 9 = 13", std::to_string(oracle_total));

    // (b) all 2-dimensional subspaces, enumerated directly as canonical
    // echelon bases: choose pivot columns p1 < p2 and free entries
    std::uint64_t plane_count = 0, trivial_planes = 0;
    for (int p1 = 0; p1 < 4; ++p1)
        for (int p2 = p1 + 1; p2 < 4; ++p2) {
            // free positions: row 1 at columns > p1, except p2; row 2 at columns > p2
            std::vector<int> free1, free2;
            for (int c = p1 + 1; c < 4; ++c)
                if (c != p2) free1.push_back(c);
            for (int c = p2 + 1; c < 4; ++c) free2.push_back(c);
            int nfree = static_cast<int>(free1.size() + free2.size());
            std::uint64_t combos = pow_clamped(3, nfree);
            for (std::uint64_t idx = 0; idx < combos; ++idx) {
                std::vector<fp_t> digits(static_cast<std::size_t>(nfree));
                detail::index_to_vec(idx, 3, nfree, digits.data());
                Vec r1 = zero_vec(field, 4), r2 = zero_vec(field, 4);
                r1[static_cast<std::size_t>(p1)] = Scalar::one(field);
                r2[static_cast<std::size_t>(p2)] = Scalar::one(field);
                std::size_t di = 0;
                for (int c : free1) r1[static_cast<std::size_t>(c)] = Scalar(field, digits[di++]);
                for (int c : free2) r2[static_cast<std::size_t>(c)] = Scalar(field, digits[di++]);
                ++plane_count;
                MatrixSubspace plane = MatrixSubspace::span(
                    field, 2,
                    {Matrix::from_vec(field, 2, 2, r1), Matrix::from_vec(field, 2, 2, r2)});
                if (has_trivial_spectrum(plane, policy).first) ++trivial_planes;
            }
        }
    std::uint64_t expected_planes = gaussian_binomial(4, 2, 3);
    checks.record(plane_count == expected_planes && expected_planes == 130, "plane census",
                  "gaussian binomial [4 2]_3 = 130", std::to_string(plane_count));
    checks.record(trivial_planes == 0, "dimension bound",
                  "no 2-dimensional subspace has a trivial spectrum", std::to_string(trivial_planes));

    report.checks_run = checks.run;
    report.failures = std::move(checks.failures);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

SuiteReport suite_f2_counterexample(const ExecPolicy& policy) {
    Clock::time_point start = Clock::now();
    SuiteReport report;
    report.suite = "f2-counterexample";
    FieldDesc f2 = FieldDesc::prime(2);
    Checks checks;

    Matrix a = Matrix::from_ints(f2, {{0, 1, 0}, {0, 0, 0}, {0, 1, 0}});
    Matrix b = Matrix::from_ints(f2, {{1, 0, 1}, {1, 0, 0}, {1, 0, 0}});
    Matrix c = Matrix::from_ints(f2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}});

    Matrix id = Matrix::identity(f2, 3);
    for (std::int64_t x = 0; x <= 1; ++x)
        for (std::int64_t y = 0; y <= 1; ++y)
            for (std::int64_t z = 0; z <= 1; ++z) {
                Matrix m = id + a.scaled(Scalar(f2, x)) + b.scaled(Scalar(f2, y)) +
                           c.scaled(Scalar(f2, z));
                Scalar d = m.det();
                checks.record(d.is_one(),
                              "(x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," +
                                  std::to_string(z) + ")",
                              "det(I + xA + yB + zC) = 1", d.str());
            }

    MatrixSubspace v = MatrixSubspace::span(f2, 3, {a, b, c});
    checks.record(v.dim() == 3, "span(A,B,C)", "dim 3", std::to_string(v.dim()));
    checks.record(has_trivial_spectrum(v, policy).first, "span(A,B,C)", "trivial spectrum", "checked");
    checks.record(is_irreducible(v, policy), "span(A,B,C)", "irreducible", "checked");
    checks.record((a + b).is_invertible(), "A+B", "invertible", "checked");

    bool gram_failed = false;
    std::string gram_actual = "no error";
    try {
        recover_gram(v);
    } catch (const Error& err) {
        gram_failed = err.code() == errc::not_p_alt_form;
        gram_actual = errc_name(err.code());
    }
    checks.record(gram_failed, "recover_gram(span(A,B,C))", "NotPAltForm", gram_actual);

    report.checks_run = checks.run;
    report.failures = std::move(checks.failures);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

SuiteReport suite_gerstenhaber(int n, std::int64_t q, int samples, std::uint64_t seed,
                               const ExecPolicy& policy) {
    Clock::time_point start = Clock::now();
    SuiteReport report;
    report.suite = "gerstenhaber";
    report.params = {{"n", n}, {"q", q}, {"samples", samples}};
    report.seed = seed;
    FieldDesc field = FieldDesc::prime(q);
    if (q < 3 || q % 2 == 0) fail(errc::bad_argument, "suite_gerstenhaber requires odd q >= 3");
    check_guardrail(field, n, policy, "suite_gerstenhaber");

    MatrixSubspace nt = nt_space(n, field);
    std::vector<int> all_ones(static_cast<std::size_t>(n), 1);
    Checks checks;
    for (int s = 0; s < samples; ++s) {
        SplitMix64 rng(SplitMix64::substream(seed, static_cast<std::uint64_t>(s)));
        Matrix conj = random_invertible(field, n, rng);
        MatrixSubspace v = conjugate(nt, conj);

        bool all_nilpotent = true;
        for (const Matrix& m : v.basis()) {
            Matrix power = m;
            for (int i = 1; i < n; ++i) power = power * m;
            if (!power.is_zero()) all_nilpotent = false;
        }
        checks.record(all_nilpotent, "sample#" + std::to_string(s), "basis matrices nilpotent",
                      all_nilpotent ? "ok" : "non-nilpotent basis matrix");

        Decomposition dec = classify(v, policy);
        bool ok = dec.verified && dec.sizes() == all_ones;
        checks.record(ok, "sample#" + std::to_string(s), "all block sizes 1",
                      sizes_str(dec.sizes()));
    }

    report.checks_run = checks.run;
    report.failures = std::move(checks.failures);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

SuiteReport suite_hyperplane_rigidity(std::int64_t q, int samples, std::uint64_t seed,
                                      const ExecPolicy& policy) {
    Clock::time_point start = Clock::now();
    SuiteReport report;
    report.suite = "hyperplane-rigidity";
    report.params = {{"n", 3}, {"q", q}, {"samples", samples}};
    report.seed = seed;
    FieldDesc field = FieldDesc::prime(q);
    if (q < 3 || q % 2 == 0) fail(errc::bad_argument, "suite_hyperplane_rigidity requires odd q >= 3");
    check_guardrail(field, 3, policy, "suite_hyperplane_rigidity");

    MatrixSubspace alt = alt_space(3, field);
    Checks checks;
    for (int s = 0; s < samples; ++s) {
        SplitMix64 rng(SplitMix64::substream(seed, static_cast<std::uint64_t>(s)));
        // random hyperplane of Alt_3: span of two independent random
        // combinations of the three alternate basis matrices
        MatrixSubspace h(field, 3);
        do {
            std::vector<Matrix> gens;
            for (int r = 0; r < 2; ++r) {
                Matrix g(field, 3, 3);
                for (const Matrix& basis_mat : alt.basis())
                    g = g + basis_mat.scaled(
                                Scalar(field, static_cast<std::int64_t>(rng.below(
                                                  static_cast<std::uint64_t>(q)))));
                gens.push_back(std::move(g));
            }
            h = MatrixSubspace::span(field, 3, gens);
        } while (h.dim() != 2);

        Matrix m = random_matrix(field, 3, 3, rng);
        while (m.is_alternate()) m = random_matrix(field, 3, 3, rng);

        MatrixSubspace v = h.sum(MatrixSubspace::span(field, 3, {m}));
        bool intransitive = is_totally_intransitive(v, policy);
        checks.record(!intransitive, "sample#" + std::to_string(s),
                      "hyperplane + non-alternate extension is not totally intransitive",
                      intransitive ? "totally intransitive" : "ok");
    }

    report.checks_run = checks.run;
    report.failures = std::move(checks.failures);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

namespace {

// compositions of n into parts {1, 2}, lexicographic
void compositions_12(int n, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int part = 1; part <= 2 && part <= n; ++part) {
        current.push_back(part);
        compositions_12(n - part, current, out);
        current.pop_back();
    }
}

VeeSpec spec_for(const std::vector<int>& comp, FieldDesc field, SplitMix64& rng) {
    VeeSpec spec;
    for (int size : comp) {
        if (size == 1)
            spec.blocks.push_back({1, Matrix::identity(field, 1)});
        else
            spec.blocks.push_back({2, random_nonisotropic_gram(field, 2, rng)});
    }
    return spec;
}

} // namespace

SuiteReport suite_classification_roundtrip(std::int64_t q, int max_n, int samples,
                                           std::uint64_t seed, const ExecPolicy& policy) {
    Clock::time_point start = Clock::now();
    SuiteReport report;
    report.suite = "classification-roundtrip";
    report.params = {{"q", q}, {"max_n", max_n}, {"samples", samples}};
    report.seed = seed;
    FieldDesc field = FieldDesc::prime(q);
    if (q < 3 || q % 2 == 0) fail(errc::bad_argument, "roundtrip requires odd q >= 3");
    if (max_n > 5) fail(errc::size_limit_exceeded, "roundtrip envelope is n <= 5");

    Checks checks;
    std::uint64_t stream = 0;
    for (int n = 1; n <= max_n; ++n) {
        check_guardrail(field, n, policy, "suite_classification_roundtrip");
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions_12(n, cur, comps);

        std::vector<MatrixSubspace> models;
        std::vector<VeeSpec> specs;
        for (const std::vector<int>& comp : comps) {
            SplitMix64 rng(SplitMix64::substream(seed, stream++));
            VeeSpec spec = spec_for(comp, field, rng);
            MatrixSubspace model = model_space(spec, field);
            checks.record(model.dim() == n * (n - 1) / 2,
                          "model " + sizes_str(comp) + " q=" + std::to_string(q),
                          "dim C(n,2)", std::to_string(model.dim()));

            for (int s = 0; s < samples; ++s) {
                SplitMix64 rng2(SplitMix64::substream(seed ^ 0x5bd1e995, stream * 1000 + static_cast<std::uint64_t>(s)));
                Matrix conj = random_invertible(field, n, rng2);
                Decomposition dec = classify(conjugate(model, conj), policy);
                std::string label = "comp " + sizes_str(comp) + " sample#" + std::to_string(s);
                checks.record(dec.verified, label, "verified", dec.verified ? "true" : "false");
                checks.record(dec.sizes() == comp, label, "sizes " + sizes_str(comp),
                              sizes_str(dec.sizes()));
                if (dec.sizes() == comp) {
                    bool grams_ok = true;
                    for (std::size_t k = 0; k < dec.blocks.size(); ++k)
                        if (!congruent_up_to_scalar(dec.blocks[k].gram, spec.blocks[k].gram).first)
                            grams_ok = false;
                    checks.record(grams_ok, label, "grams congruent up to scalar",
                                  grams_ok ? "ok" : "mismatch");
                }
            }
            models.push_back(std::move(model));
            specs.push_back(std::move(spec));
        }

        // distinct compositions of the same n are never similar
        for (std::size_t i = 0; i < models.size(); ++i)
            for (std::size_t j = i + 1; j < models.size(); ++j) {
                bool sim = similar_spaces(models[i], models[j], policy);
                checks.record(!sim,
                              "models " + sizes_str(comps[i]) + " vs " + sizes_str(comps[j]),
                              "not similar", sim ? "similar" : "ok");
            }
    }

    report.checks_run = checks.run;
    report.failures = std::move(checks.failures);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

} // namespace mspace
