#include <doctest.h>

#include <functional>

#include "mspace/classify.hpp"
#include "mspace/quadform.hpp"
#include "mspace/rng.hpp"

using namespace mspace;

namespace {
const FieldDesc f2 = FieldDesc::prime(2);
const FieldDesc f3 = FieldDesc::prime(3);
const FieldDesc f5 = FieldDesc::prime(5);

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return errc::bad_argument;
}

Matrix d12(FieldDesc f) { return Matrix::from_ints(f, {{1, 0}, {0, 2}}); }
} // namespace

TEST_CASE("vx_profile level sets") {
    std::map<int, VectorSubspace> prof = vx_profile(nt_space(3, f3));
    REQUIRE(prof.size() == 3);
    CHECK(prof.at(0) == echelonize(f3, 3, {unit_vec(f3, 3, 0)}));
    CHECK(prof.at(1) == echelonize(f3, 3, {unit_vec(f3, 3, 0), unit_vec(f3, 3, 1)}));
    CHECK(prof.at(2).is_full());

    std::map<int, VectorSubspace> palt_prof = vx_profile(p_alt(Matrix::identity(f3, 2)));
    REQUIRE(palt_prof.size() == 1);
    CHECK(palt_prof.at(1).is_full());

    std::map<int, VectorSubspace> zero_prof = vx_profile(MatrixSubspace(f3, 1));
    REQUIRE(zero_prof.size() == 1);
    CHECK(zero_prof.at(0).is_full());
}

TEST_CASE("find_flag recovers the standard flag of NT_n") {
    for (int n = 2; n <= 4; ++n) {
        Flag flag = find_flag(nt_space(n, f3));
        CHECK(flag.sizes == std::vector<int>(static_cast<std::size_t>(n), 1));
        for (int k = 0; k < n; ++k) CHECK(flag.subspaces[static_cast<std::size_t>(k)].dim() == k + 1);
    }

    Flag mixed = find_flag(model_space(VeeSpec{{{1, Matrix::identity(f3, 1)}, {2, d12(f3)}}}, f3));
    CHECK(mixed.sizes == std::vector<int>{1, 2});
    CHECK(mixed.subspaces[0].dim() == 1);
    CHECK(mixed.subspaces[1].dim() == 3);
}

TEST_CASE("flags transform equivariantly under conjugation") {
    SplitMix64 rng(53);
    MatrixSubspace v = model_space(VeeSpec{{{1, Matrix::identity(f3, 1)}, {2, d12(f3)}}}, f3);
    Flag base = find_flag(v);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix s = random_invertible(f3, 3, rng);
        Flag moved = find_flag(conjugate(v, s));
        REQUIRE(moved.sizes == base.sizes);
        for (std::size_t k = 0; k < base.subspaces.size(); ++k) {
            std::vector<Vec> mapped;
            for (const Vec& b : base.subspaces[k].basis()) mapped.push_back(s.apply(b));
            CHECK(moved.subspaces[k] == echelonize(f3, 3, mapped));
        }
    }
}

TEST_CASE("find_flag rejects non-flag level sets") {
    // span(E11, E22): the level-1 set {e1, e2 directions} is not a subspace
    MatrixSubspace diag = MatrixSubspace::span(
        f3, 2,
        {Matrix::from_ints(f3, {{1, 0}, {0, 0}}), Matrix::from_ints(f3, {{0, 0}, {0, 1}})});
    CHECK(code_of([&] { find_flag(diag); }) == errc::not_a_flag);

    // the full matrix space violates the dimension identity
    std::vector<Matrix> full;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Matrix m(f3, 2, 2);
            m.at(i, j) = Scalar::one(f3);
            full.push_back(std::move(m));
        }
    CHECK(code_of([&] { find_flag(MatrixSubspace::span(f3, 2, full)); }) == errc::not_a_flag);
}

TEST_CASE("recover_gram round-trips the gram factor") {
    for (int m = 2; m <= 3; ++m)
        CHECK(recover_gram(alt_space(m, f3)) == Matrix::identity(f3, m));

    Matrix p = d12(f3);
    Matrix rec = recover_gram(p_alt(p));
    CHECK(rec == p); // already normalized: first nonzero entry is 1
    CHECK(p_alt(rec) == p_alt(p));

    // scaled gram recovers the same normalized representative
    CHECK(recover_gram(p_alt(p.scaled(Scalar(f3, 2)))) == p);

    CHECK(code_of([&] { recover_gram(nt_space(2, f3)); }) == errc::not_p_alt_form);
    CHECK(code_of([&] { recover_gram(nt_space(3, f3)); }) == errc::not_p_alt_form);
    CHECK(code_of([&] { recover_gram(MatrixSubspace(f3, 2)); }) == errc::not_p_alt_form);
}

TEST_CASE("recover_gram solution space is exactly one-dimensional on P Alt_m") {
    SplitMix64 rng(59);
    for (std::int64_t q : {3, 5}) {
        FieldDesc field = FieldDesc::prime(q);
        for (int m : {2, 3, 4}) {
            for (int trial = 0; trial < 4; ++trial) {
                Matrix p = random_invertible(field, m, rng);
                Matrix rec = recover_gram(p_alt(p));
                CHECK(p_alt(rec) == p_alt(p));
                // rec is p up to the normalizing scalar
                Scalar lead = Scalar::zero(field);
                for (const Scalar& e : p.entries())
                    if (!e.is_zero()) {
                        lead = e;
                        break;
                    }
                CHECK(rec == p.scaled(lead.inv()));
            }
        }
    }
}

TEST_CASE("classify on the named cases") {
    Decomposition nt3 = classify(nt_space(3, f3));
    CHECK(nt3.verified);
    CHECK(nt3.sizes() == std::vector<int>{1, 1, 1});
    CHECK(conjugate(nt_space(3, f3), nt3.basis_change.inverse()) ==
          model_space(VeeSpec{nt3.blocks}, f3));

    SplitMix64 rng(61);
    Matrix p = random_nonisotropic_gram(f3, 2, rng);
    MatrixSubspace v = conjugate(model_space(VeeSpec{{{2, p}}}, f3), random_invertible(f3, 2, rng));
    Decomposition single = classify(v);
    CHECK(single.verified);
    CHECK(single.sizes() == std::vector<int>{2});
    CHECK(congruent_up_to_scalar(single.blocks[0].gram, p).first);

    // the F_2 space lands on CharTwoUnsupported before any enumeration
    MatrixSubspace f2_space = MatrixSubspace::span(
        f2, 3,
        {Matrix::from_ints(f2, {{0, 1, 0}, {0, 0, 0}, {0, 1, 0}}),
         Matrix::from_ints(f2, {{1, 0, 1}, {1, 0, 0}, {1, 0, 0}}),
         Matrix::from_ints(f2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}})});
    CHECK(code_of([&] { classify(f2_space); }) == errc::char_two_unsupported);

    // non-maximal input is a caller error
    CHECK(code_of([&] { classify(alt_space(3, f3)); }) == errc::bad_argument);
    CHECK(code_of([&] { classify(MatrixSubspace(FieldDesc::rational(), 2)); }) ==
          errc::infinite_field);
}

TEST_CASE("similar_spaces distinguishes compositions and grams") {
    SplitMix64 rng(67);
    MatrixSubspace nt2 = nt_space(2, f3);
    CHECK(similar_spaces(nt2, conjugate(nt2, random_invertible(f3, 2, rng))));
    CHECK(!similar_spaces(nt2, companion_line(Scalar(f3, 1), Scalar(f3, 1))));
    // diag(1,2) is isotropic over F_3, so its space is not even trivial-spectrum;
    // similarity preserves that property, which decides the pair
    CHECK(!similar_spaces(p_alt(Matrix::identity(f3, 2)), p_alt(d12(f3))));
    // both-sided precondition failures stay errors
    CHECK(code_of([&] { similar_spaces(p_alt(d12(f3)), p_alt(d12(f3))); }) == errc::bad_argument);

    // equivalence relation on a small corpus
    std::vector<MatrixSubspace> corpus{
        nt2,
        conjugate(nt2, random_invertible(f3, 2, rng)),
        companion_line(Scalar(f3, 1), Scalar(f3, 1)),
        conjugate(companion_line(Scalar(f3, 1), Scalar(f3, 1)), random_invertible(f3, 2, rng)),
    };
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(similar_spaces(corpus[i], corpus[i]));
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            bool ij = similar_spaces(corpus[i], corpus[j]);
            CHECK(ij == similar_spaces(corpus[j], corpus[i]));
            for (std::size_t k = 0; k < corpus.size(); ++k)
                if (ij && similar_spaces(corpus[j], corpus[k]))
                    CHECK(similar_spaces(corpus[i], corpus[k]));
        }
    }
}

TEST_CASE("affine_normalize finds an invertible basepoint") {
    VeeSpec ones{{{1, Matrix::identity(f3, 1)}, {1, Matrix::identity(f3, 1)}}};
    CHECK(affine_normalize(affine_model(ones, f3)) == nt_space(2, f3));

    // offset 2I: (2I)^{-1} (2I + NT_2) has translation NT_2 again
    AffineSpace doubled(Matrix::identity(f3, 2).scaled(Scalar(f3, 2)), nt_space(2, f3));
    CHECK(affine_normalize(doubled) == nt_space(2, f3));

    AffineSpace stuck(Matrix::from_ints(f3, {{1, 0}, {0, 0}}), MatrixSubspace(f3, 2));
    CHECK(code_of([&] { affine_normalize(stuck); }) == errc::no_invertible_element);

    // offset singular but a coset element is invertible
    AffineSpace recoverable(Matrix::from_ints(f3, {{0, 0}, {0, 1}}),
                            MatrixSubspace::span(f3, 2, {Matrix::from_ints(f3, {{1, 0}, {0, 0}})}));
    MatrixSubspace normalized = affine_normalize(recoverable);
    CHECK(normalized.dim() == 1);
}

TEST_CASE("affine_normalize uses seeded sampling past the guardrail") {
    // dim 10 over F_7: 7^10 coset elements is beyond 2^24, offset is invertible
    FieldDesc f7 = FieldDesc::prime(7);
    SplitMix64 rng(71);
    VeeSpec spec{{{1, Matrix::identity(f7, 1)},
                  {2, random_nonisotropic_gram(f7, 2, rng)},
                  {2, random_nonisotropic_gram(f7, 2, rng)}}};
    AffineSpace big = affine_model(spec, f7);
    REQUIRE(big.dim() == 10);
    MatrixSubspace normalized = affine_normalize(big);
    CHECK(has_trivial_spectrum(normalized).first);
}

TEST_CASE("affine equivalence matches the form similarity classes") {
    AffineSpace alt_i(Matrix::identity(f3, 2), p_alt(Matrix::identity(f3, 2)));
    AffineSpace alt_2i(Matrix::identity(f3, 2),
                       p_alt(Matrix::identity(f3, 2).scaled(Scalar(f3, 2))));
    CHECK(affine_equivalent(alt_i, alt_2i)); // scaled gram, similar forms

    // diag(1,2) is isotropic over F_3: I + p_alt(diag(1,2)) contains singular
    // matrices, so it cannot be equivalent to a space inside GL_2
    AffineSpace alt_d12(Matrix::identity(f3, 2), p_alt(d12(f3)));
    CHECK(!affine_equivalent(alt_i, alt_d12));
    CHECK(code_of([&] { affine_equivalent(alt_d12, alt_d12); }) == errc::bad_argument);

    VeeSpec ones{{{1, Matrix::identity(f3, 1)}, {1, Matrix::identity(f3, 1)}}};
    CHECK(!affine_equivalent(alt_i, affine_model(ones, f3))); // compositions (2) vs (1,1)

    // over F_5 both diag(1,2) and diag(1,3) have nonsquare disc: similar
    FieldDesc field5 = f5;
    AffineSpace a5(Matrix::identity(field5, 2), p_alt(Matrix::from_ints(field5, {{1, 0}, {0, 2}})));
    AffineSpace b5(Matrix::identity(field5, 2), p_alt(Matrix::from_ints(field5, {{1, 0}, {0, 3}})));
    CHECK(affine_equivalent(a5, b5));
}

TEST_CASE("similar_spaces agrees with brute-force conjugation over GL_2(F_3)") {
    // every invertible 2x2 over F_3
    std::vector<Matrix> gl2;
    for (std::int64_t a = 0; a < 3; ++a)
        for (std::int64_t b = 0; b < 3; ++b)
            for (std::int64_t c = 0; c < 3; ++c)
                for (std::int64_t d = 0; d < 3; ++d) {
                    Matrix m = Matrix::from_ints(f3, {{a, b}, {c, d}});
                    if (m.is_invertible()) gl2.push_back(std::move(m));
                }
    REQUIRE(gl2.size() == 48);

    // every trivial-spectrum line of M_2(F_3)
    std::vector<MatrixSubspace> lines;
    for (std::int64_t e0 = 0; e0 < 3; ++e0)
        for (std::int64_t e1 = 0; e1 < 3; ++e1)
            for (std::int64_t e2 = 0; e2 < 3; ++e2)
                for (std::int64_t e3 = 0; e3 < 3; ++e3) {
                    Matrix m = Matrix::from_ints(f3, {{e0, e1}, {e2, e3}});
                    if (m.is_zero()) continue;
                    MatrixSubspace line = MatrixSubspace::span(f3, 2, {m});
                    bool fresh = true;
                    for (const MatrixSubspace& seen : lines)
                        if (seen == line) fresh = false;
                    if (fresh && has_trivial_spectrum(line).first) lines.push_back(std::move(line));
                }
    REQUIRE(lines.size() == 13);

    int similar_pairs = 0;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = 0; j < lines.size(); ++j) {
            bool oracle = false;
            for (const Matrix& s : gl2)
                if (conjugate(lines[i], s) == lines[j]) oracle = true;
            CHECK(similar_spaces(lines[i], lines[j]) == oracle);
            if (oracle) ++similar_pairs;
        }
    // the 4 nilpotent lines form one class; the 9 irreducible lines split
    // into classes whose squared sizes sum with 16 to this total
    CHECK(similar_pairs > 16);
}

TEST_CASE("affine_equivalent agrees with brute-force two-sided search at n=2, q=3") {
    std::vector<Matrix> gl2;
    for (std::int64_t a = 0; a < 3; ++a)
        for (std::int64_t b = 0; b < 3; ++b)
            for (std::int64_t c = 0; c < 3; ++c)
                for (std::int64_t d = 0; d < 3; ++d) {
                    Matrix m = Matrix::from_ints(f3, {{a, b}, {c, d}});
                    if (m.is_invertible()) gl2.push_back(std::move(m));
                }

    VeeSpec ones{{{1, Matrix::identity(f3, 1)}, {1, Matrix::identity(f3, 1)}}};
    SplitMix64 rng(79);
    std::vector<AffineSpace> corpus{
        affine_model(ones, f3),
        lmul(random_invertible(f3, 2, rng), affine_model(ones, f3)),
        AffineSpace(Matrix::identity(f3, 2), p_alt(Matrix::identity(f3, 2))),
        rmul(AffineSpace(Matrix::identity(f3, 2), p_alt(Matrix::identity(f3, 2))),
             random_invertible(f3, 2, rng)),
    };
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i; j < corpus.size(); ++j) {
            bool oracle = false;
            for (const Matrix& r : gl2) {
                for (const Matrix& s : gl2)
                    if (lmul(r, rmul(corpus[i], s)) == corpus[j]) {
                        oracle = true;
                        break;
                    }
                if (oracle) break;
            }
            CHECK(affine_equivalent(corpus[i], corpus[j]) == oracle);
        }
}

TEST_CASE("affine equivalence is invariant under two-sided multiplication") {
    SplitMix64 rng(73);
    VeeSpec spec{{{1, Matrix::identity(f3, 1)}, {2, random_nonisotropic_gram(f3, 2, rng)}}};
    AffineSpace a = affine_model(spec, f3);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix r = random_invertible(f3, 3, rng);
        Matrix s = random_invertible(f3, 3, rng);
        CHECK(affine_equivalent(a, lmul(r, rmul(a, s))));
    }
}
