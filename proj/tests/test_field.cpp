#include <doctest.h>

#include "mspace/field.hpp"

using namespace mspace;

TEST_CASE("primality check is deterministic and exact") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(2147483647)); // 2^31 - 1
    CHECK(!is_prime(1));
    CHECK(!is_prime(4));
    CHECK(!is_prime(2147483646));
    CHECK(!is_prime(46349 * 2)); // even composite near the trial-division edge
}

TEST_CASE("field descriptors validate their order") {
    CHECK(FieldDesc::prime(3).p() == 3);
    CHECK(FieldDesc::prime(2).is_finite());
    CHECK(!FieldDesc::rational().is_finite());
    CHECK_THROWS_AS(FieldDesc::prime(4), Error);
    CHECK_THROWS_AS(FieldDesc::prime(1), Error);
    CHECK_THROWS_AS(FieldDesc::prime(std::int64_t{1} << 31), Error); // 2^31 is out of range
    CHECK(FieldDesc::prime(5) == FieldDesc::prime(5));
    CHECK(FieldDesc::prime(5) != FieldDesc::prime(7));
    CHECK(FieldDesc::rational() == FieldDesc::rational());
    CHECK(FieldDesc::prime(5) != FieldDesc::rational());
}

TEST_CASE("prime-field scalars stay canonical") {
    FieldDesc f5 = FieldDesc::prime(5);
    CHECK(Scalar(f5, 7).rep() == 2);
    CHECK(Scalar(f5, -1).rep() == 4);
    CHECK(Scalar(f5, -10).rep() == 0);
    CHECK((Scalar(f5, 3) + Scalar(f5, 4)).rep() == 2);
    CHECK((Scalar(f5, 3) * Scalar(f5, 4)).rep() == 2);
    CHECK((Scalar(f5, 3) - Scalar(f5, 4)).rep() == 4);
    CHECK((-Scalar(f5, 2)).rep() == 3);
    CHECK(Scalar(f5, 3).inv().rep() == 2); // 3 * 2 = 6 = 1
    CHECK((Scalar(f5, 4) / Scalar(f5, 3)).rep() == 3);
    CHECK_THROWS_AS(Scalar(f5, 0).inv(), Error);
}

TEST_CASE("modular helpers") {
    CHECK(pow_mod(2, 10, 1009) == 1024 % 1009);
    CHECK(pow_mod(5, 0, 7) == 1);
    // Fermat on a large prime
    std::int64_t p = 2147483647;
    CHECK(pow_mod(1234567, p - 1, p) == 1);
    CHECK(inv_mod(1234567, p) * 1234567 % p == 1);
    for (std::int64_t a = 1; a < 11; ++a) CHECK(inv_mod(a, 11) * a % 11 == 1);
}

TEST_CASE("rational scalars reduce to lowest terms with positive denominator") {
    FieldDesc q = FieldDesc::rational();
    Scalar half = Scalar::fraction(q, 2, 4);
    CHECK(half.str() == "1/2");
    CHECK(Scalar::fraction(q, 1, -2).str() == "-1/2");
    CHECK((Scalar::fraction(q, 1, 3) + Scalar::fraction(q, 1, 6)).str() == "1/2");
    CHECK((Scalar::fraction(q, 1, 3) * Scalar(q, 3)).is_one());
    CHECK((Scalar(q, 2) / Scalar(q, -4)).str() == "-1/2");
    CHECK_THROWS_AS(Scalar::fraction(q, 1, 0), Error);

    // coefficient growth stays exact
    Scalar big = Scalar(q, 1);
    for (int i = 1; i <= 30; ++i) big *= Scalar(q, 10);
    Scalar third = big / Scalar(q, 3);
    CHECK((third * Scalar(q, 3)) == big);
    CHECK(big.str() == "1" + std::string(30, '0'));
}

TEST_CASE("fractions over a prime field divide by the denominator") {
    FieldDesc f3 = FieldDesc::prime(3);
    CHECK(Scalar::fraction(f3, 1, 2).rep() == 2); // 2^-1 = 2 mod 3
    CHECK(Scalar::fraction(f3, 4, 5).rep() == 2); // 1 * 2^-1
    Error caught(errc::bad_argument, "");
    try {
        Scalar::fraction(f3, 1, 3);
    } catch (const Error& e) {
        caught = e;
    }
    CHECK(caught.code() == errc::value_out_of_field);
}

TEST_CASE("cross-field arithmetic is rejected, never coerced") {
    Scalar a(FieldDesc::prime(3), 1);
    Scalar b(FieldDesc::prime(5), 1);
    Scalar c(FieldDesc::rational(), 1);
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * c, Error);
    CHECK(a != b); // comparison is false, not an error
    CHECK(a != c);
}
