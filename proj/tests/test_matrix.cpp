#include <doctest.h>

#include "mspace/matrix.hpp"
#include "mspace/rng.hpp"

using namespace mspace;

namespace {
const FieldDesc f3 = FieldDesc::prime(3);
const FieldDesc f5 = FieldDesc::prime(5);
const FieldDesc fq = FieldDesc::rational();
} // namespace

TEST_CASE("matrix product and transpose") {
    Matrix a = Matrix::from_ints(f3, {{1, 2}, {0, 1}});
    Matrix b = Matrix::from_ints(f3, {{2, 0}, {1, 1}});
    CHECK(a * b == Matrix::from_ints(f3, {{4, 2}, {1, 1}}));
    CHECK(a.transpose() == Matrix::from_ints(f3, {{1, 0}, {2, 1}}));
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK_THROWS_AS(a * Matrix::from_ints(f5, {{1, 0}, {0, 1}}), Error);
}

TEST_CASE("determinant over prime fields and exactly over Q") {
    CHECK(Matrix::from_ints(f3, {{1, 2}, {2, 2}}).det().rep() == 1); // 2 - 4 = -2 = 1
    CHECK(Matrix::from_ints(f3, {{1, 2}, {2, 1}}).det().is_zero()); // 1 - 4 = 0 mod 3
    CHECK(Matrix::identity(f5, 4).det().is_one());

    // 3x3 Hilbert determinant: 1/2160
    Matrix h(fq, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h.at(i, j) = Scalar::fraction(fq, 1, i + j + 1);
    CHECK(h.det() == Scalar::fraction(fq, 1, 2160));
}

TEST_CASE("determinant agrees with the cofactor rule at n=3") {
    // independent oracle for the elimination path
    auto sarrus = [](const Matrix& m) {
        auto e = [&](int i, int j) { return m.at(i, j); };
        return e(0, 0) * e(1, 1) * e(2, 2) + e(0, 1) * e(1, 2) * e(2, 0) +
               e(0, 2) * e(1, 0) * e(2, 1) - e(0, 2) * e(1, 1) * e(2, 0) -
               e(0, 0) * e(1, 2) * e(2, 1) - e(0, 1) * e(1, 0) * e(2, 2);
    };
    SplitMix64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(f5, 3, 3, rng);
        CHECK(m.det() == sarrus(m));
    }
    Matrix r(fq, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r.at(i, j) = Scalar::fraction(fq, static_cast<std::int64_t>(rng.below(19)) - 9,
                                          1 + static_cast<std::int64_t>(rng.below(7)));
    CHECK(r.det() == sarrus(r));
}

TEST_CASE("inverse round-trips and rejects singular input") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_invertible(f5, 3, rng);
        CHECK(m * m.inverse() == Matrix::identity(f5, 3));
        CHECK(m.inverse() * m == Matrix::identity(f5, 3));
    }
    Matrix h(fq, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h.at(i, j) = Scalar::fraction(fq, 1, i + j + 1);
    CHECK(h * h.inverse() == Matrix::identity(fq, 3));

    CHECK_THROWS_AS(Matrix::from_ints(f3, {{1, 2}, {2, 1}}).inverse(), Error);
    CHECK(!Matrix::from_ints(f3, {{1, 2}, {2, 1}}).is_invertible());
}

TEST_CASE("rank and rref canonicality") {
    Matrix m = Matrix::from_ints(f3, {{1, 1, 0}, {0, 1, 1}, {1, 2, 1}});
    CHECK(m.rank() == 2); // row3 = row1 + row2

    std::vector<Vec> rows{vec_from_ints(f3, {1, 1, 0}), vec_from_ints(f3, {0, 1, 1})};
    std::vector<int> piv = rref_in_place(rows);
    CHECK(piv == std::vector<int>{0, 1});
    CHECK(rows[0] == vec_from_ints(f3, {1, 0, 2})); // -1 = 2 mod 3
    CHECK(rows[1] == vec_from_ints(f3, {0, 1, 1}));
    std::vector<Vec> again = rows;
    rref_in_place(again);
    CHECK(again == rows); // idempotent
}

TEST_CASE("nullspace vectors actually solve A x = 0") {
    Matrix a = Matrix::from_ints(f5, {{1, 2, 3}, {2, 4, 6}});
    std::vector<Vec> ns = nullspace(a);
    CHECK(ns.size() == 2);
    for (const Vec& v : ns) CHECK(is_zero_vec(a.apply(v)));

    Matrix inv = Matrix::from_ints(f5, {{1, 1}, {0, 1}});
    CHECK(nullspace(inv).empty());
}

TEST_CASE("solve picks the first solution in pivot order") {
    Matrix a = Matrix::from_ints(f3, {{1, 1}, {0, 0}});
    Vec b = vec_from_ints(f3, {2, 0});
    std::optional<Vec> x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(*x == vec_from_ints(f3, {2, 0})); // free variable pinned to zero
    CHECK(a.apply(*x) == b);

    CHECK(!solve(a, vec_from_ints(f3, {0, 1})).has_value()); // inconsistent
}

TEST_CASE("alternate test keeps the diagonal condition independent in char 2") {
    FieldDesc f2 = FieldDesc::prime(2);
    CHECK(Matrix::from_ints(f3, {{0, 1}, {-1, 0}}).is_alternate());
    CHECK(!Matrix::from_ints(f3, {{1, 0}, {0, 0}}).is_alternate());
    CHECK(!Matrix::from_ints(f3, {{0, 1}, {1, 0}}).is_alternate());
    // over F_2, skew-symmetric == symmetric; the zero diagonal is the real test
    CHECK(Matrix::from_ints(f2, {{0, 1}, {1, 0}}).is_alternate());
    CHECK(!Matrix::from_ints(f2, {{1, 1}, {1, 0}}).is_alternate());
}

TEST_CASE("vector helpers") {
    Vec e1 = unit_vec(f3, 3, 0);
    CHECK(!is_zero_vec(e1));
    CHECK(is_zero_vec(zero_vec(f3, 3)));
    CHECK(dot(e1, vec_from_ints(f3, {2, 1, 1})).rep() == 2);
    CHECK(vec_add(e1, e1) == vec_from_ints(f3, {2, 0, 0}));
    CHECK(vec_scale(Scalar(f3, 2), vec_from_ints(f3, {1, 2, 0})) == vec_from_ints(f3, {2, 1, 0}));
}
