#include <dnamat/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using dnamat::Int;
using dnamat::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(0, -7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic examples") {
    const Rational a(5, 4), b(3, 4);
    CHECK(a * a - b * b == Rational(1));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(7, 2) / Rational(-7, 2) == Rational(-1));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("comparisons use exact cross-multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    CHECK(Rational(7) > Rational(20, 3));
}

TEST_CASE("string form omits unit denominators") {
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(3).to_string() == "3");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(6, -4).to_string() == "-3/2");
}

TEST_CASE("parse inverts to_string") {
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("7/-2") == Rational(-7, 2));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1 /2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("round trip and field axioms on random values") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational x(num(rng), den(rng));
        const Rational y(num(rng), den(rng));
        const Rational z(num(rng), den(rng));
        CHECK(Rational::parse(x.to_string()) == x);
        CHECK(gcd(abs(x.num()), x.den()) == 1);
        CHECK(x.den() >= 1);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x + y == y + x);
        CHECK(x - x == Rational(0));
        if (!y.is_zero()) CHECK(x / y * y == x);
    }
}

TEST_CASE("large values stay exact") {
    // 2^200 as a denominator survives arithmetic untouched
    const Rational tiny(Int(1), dnamat::pow(Int(2), 200));
    const Rational one = tiny / tiny;
    CHECK(one == Rational(1));
    CHECK((tiny + tiny).num() == 1);
    CHECK((tiny + tiny).den() == dnamat::pow(Int(2), 199));
}
