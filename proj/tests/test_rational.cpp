#include "ramanujan/rational.hpp"

#include <doctest.h>

#include <random>

using namespace ramanujan;

TEST_SUITE("rational") {

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    CHECK(Rat(6, -4) == Rat(-3, 2));
    CHECK(Rat(6, -4).numerator() == -3);
    CHECK(Rat(6, -4).denominator() == 2);
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0, -7).denominator() == 1);
    CHECK(Rat(-10, -15) == Rat(2, 3));
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("field operations") {
    Rat a(1, 3), b(2, 5);
    CHECK(a + b == Rat(11, 15));
    CHECK(a - b == Rat(-1, 15));
    CHECK(a * b == Rat(2, 15));
    CHECK(a / b == Rat(5, 6));
    CHECK(-a == Rat(-1, 3));
    CHECK(a.inverse() == Rat(3));
    CHECK_THROWS_AS(a / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
}

TEST_CASE("ordering and predicates") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-5) < Rat(-4, 7));
    CHECK(Rat(7).is_integer());
    CHECK_FALSE(Rat(7, 2).is_integer());
    CHECK(Rat(-1, 2).is_negative());
    CHECK(Rat(0).is_zero());
    CHECK(Rat(5, 5).is_one());
}

TEST_CASE("pow handles negative exponents") {
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(5).pow(0) == Rat(1));
    CHECK_THROWS_AS(Rat(0).pow(-1), std::domain_error);
}

TEST_CASE("string round trip") {
    CHECK(Rat::from_string("-3/2") == Rat(-3, 2));
    CHECK(Rat::from_string("17") == Rat(17));
    CHECK(Rat(-3, 2).str() == "-3/2");
    CHECK(Rat(4).str() == "4");
    CHECK_THROWS_AS(Rat::from_string("x"), std::invalid_argument);
    for (long n = -20; n <= 20; ++n)
        for (long d = 1; d <= 7; ++d)
            CHECK(Rat::from_string(Rat(n, d).str()) == Rat(n, d));
}

TEST_CASE("denominator prime support") {
    CHECK(Rat(5, 48).denominator_supported_by({2, 3}));   // 48 = 2^4*3
    CHECK_FALSE(Rat(1, 10).denominator_supported_by({2, 3}));
    CHECK(Rat(7).denominator_supported_by({}));
    CHECK(Rat(1, 8).denominator_supported_by({2}));
    CHECK_FALSE(Rat(1, 12).denominator_supported_by({2}));
}

TEST_CASE("content gcd of rationals") {
    CHECK(rat_content_gcd(Rat(4, 3), Rat(2, 9)) == Rat(2, 9));
    // gcd(4/3, 2/9) = gcd(4,2)/lcm(3,9) = 2/9
    CHECK(rat_content_gcd(Rat(0), Rat(-5, 7)) == Rat(5, 7));
    CHECK(rat_content_gcd(Rat(6), Rat(10)) == Rat(2));
}

TEST_CASE("random field axioms") {
    std::mt19937_64 rng(20260818);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    for (int i = 0; i < 1000; ++i) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}

} // TEST_SUITE
