#include "doctest.h"
#include "recolor/rational.hpp"
#include "recolor/rng.hpp"

using recolor::Rational;

TEST_CASE("rational arithmetic normalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
}

TEST_CASE("rational comparisons are exact at boundaries") {
    CHECK(Rational(4, 8) <= Rational(1, 2));
    CHECK_FALSE(Rational(5, 8) <= Rational(1, 2));
    CHECK(Rational(5, 4) * Rational(4) == Rational(5));
}

TEST_CASE("rational parse forms") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK(Rational::parse("16") == Rational(16));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("floor ceil and printing") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational(7, 2).to_string() == "7/2");
}

TEST_CASE("ceil_log2") {
    CHECK(recolor::ceil_log2(Rational(1)) == 0);
    CHECK(recolor::ceil_log2(Rational(2)) == 1);
    CHECK(recolor::ceil_log2(Rational(3)) == 2);
    CHECK(recolor::ceil_log2(Rational(16)) == 4);
    CHECK(recolor::ceil_log2(Rational(17)) == 5);
    CHECK(recolor::ceil_log2(Rational(1, 2)) == 0);
}

TEST_CASE("rng is deterministic and in range") {
    recolor::Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        uint64_t x = a.below(97);
        CHECK(x == b.below(97));
        CHECK(x < 97);
    }
    recolor::Rng c(7);
    std::vector<int> v{1, 2, 3, 4, 5};
    c.shuffle(v);
    std::vector<int> w{1, 2, 3, 4, 5};
    recolor::Rng d(7);
    d.shuffle(w);
    CHECK(v == w);
}
