#include "doctest.h"

#include "iscover/rational.hpp"

using iscover::Rational;

TEST_SUITE("rational") {

TEST_CASE("normalization and identity") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).num() == 2);
    CHECK(Rational(6, 3).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 3) / Rational(2, 9) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

    Rational acc;
    for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
    CHECK(acc == Rational(1));
}

TEST_CASE("comparison cross-multiplies") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(10, 3) > Rational(3));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    // Large terms where double arithmetic would tie.
    CHECK(Rational(1000000000000000001LL, 1000000000000000000LL) > Rational(1));
}

TEST_CASE("formatting") {
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(-7, 2).str() == "-7/2");
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
}

}  // TEST_SUITE
