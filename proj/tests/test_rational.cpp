#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rootpoly/rational.hpp"

using namespace rootpoly;

TEST_CASE("rationals are kept in canonical reduced form") {
    Rational a = make_rat(Int(4), Int(6));
    CHECK(num(a) == 2);
    CHECK(den(a) == 3);
    Rational b = make_rat(Int(-4), Int(-6));
    CHECK(num(b) == 2);
    CHECK(den(b) == 3);
    Rational c = make_rat(Int(4), Int(-6));
    CHECK(num(c) == -2);
    CHECK(den(c) == 3);
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), division_error);
    CHECK(rat_to_string(Rational(7)) == "7");
    CHECK(rat_to_string(a) == "2/3");
    CHECK(rat_to_string(c) == "-2/3");
}

TEST_CASE("string parsing round-trips and rejects junk") {
    for (const char* s : {"0", "1", "-7", "2/3", "-2/3", "355/113"}) {
        CHECK(rat_to_string(rat_from_string(s)) == s);
    }
    CHECK(rat_from_string("4/6") == Rational(2, 3));
    CHECK(rat_from_string("+5") == Rational(5));
    CHECK_THROWS_AS(rat_from_string(""), domain_error);
    CHECK_THROWS_AS(rat_from_string("1/0"), division_error);
    CHECK_THROWS_AS(rat_from_string("1.5"), domain_error);
    CHECK_THROWS_AS(rat_from_string("2/3x"), domain_error);
    CHECK_THROWS_AS(rat_from_string("/3"), domain_error);
}

TEST_CASE("field axioms hold on pseudorandom triples") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> d(-40, 40);
    auto rnd = [&] {
        int q = 0;
        while (q == 0) q = d(rng);
        return make_rat(Int(d(rng)), Int(q));
    };
    for (int it = 0; it < 200; ++it) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == 0);
        if (b != 0) CHECK(rat_div(a, b) * b == a);
    }
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(rat_div(Rational(1), Rational(0)), division_error);
    CHECK_THROWS_AS(rat_pow(Rational(0), -1), division_error);
}

TEST_CASE("floor and powers are exact") {
    CHECK(rat_floor(Rational(7, 2)) == 3);
    CHECK(rat_floor(Rational(-7, 2)) == -4);
    CHECK(rat_floor(Rational(6)) == 6);
    CHECK(rat_floor(Rational(-6)) == -6);
    CHECK(rat_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rat_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rat_pow(Rational(5), 0) == 1);
}

TEST_CASE("complex rational arithmetic is exact") {
    ComplexRational i = ComplexRational::i();
    CHECK(i * i == ComplexRational(Rational(-1)));
    ComplexRational z(Rational(1, 2), Rational(-3));
    CHECK(z * z.conj() == ComplexRational(Rational(1, 4) + Rational(9)));
    ComplexRational w(Rational(2), Rational(5));
    CHECK(z * w / w == z);
    CHECK_THROWS_AS(z / ComplexRational(), division_error);
    CHECK(to_string(z) == "1/2-3i");
}
