#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rootpoly/vpoly.hpp"

using namespace rootpoly;

namespace {

VPoly from_ints(std::initializer_list<int> cs) {
    std::vector<Rational> v;
    for (int c : cs) v.emplace_back(c);
    return VPoly(std::move(v));
}

}  // namespace

TEST_CASE("vpoly normal form and basic arithmetic") {
    CHECK(VPoly().degree() == -1);
    CHECK(from_ints({0, 0}).is_zero());
    VPoly p = from_ints({1, 2});       // 1 + 2v
    VPoly q = from_ints({-1, 2, 3});   // -1 + 2v + 3v^2
    CHECK((p + q) == from_ints({0, 4, 3}));
    CHECK((p * q) == from_ints({-1, 0, 7, 6}));
    CHECK((p - p).is_zero());
    CHECK(p.eval(Rational(1, 2)) == Rational(2));
    CHECK(from_ints({0, 0, 1}).to_string() == "v^2");
    CHECK(from_ints({-2, 0, 5}).to_string() == "5*v^2 - 2");
}

TEST_CASE("division with remainder and exact division") {
    VPoly a = from_ints({-1, 0, 0, 0, 1});  // v^4 - 1
    VPoly b = from_ints({-1, 1});           // v - 1
    auto [quot, rem] = divmod(a, b);
    CHECK(rem.is_zero());
    CHECK(quot == from_ints({1, 1, 1, 1}));
    CHECK(exact_div(a, b) == quot);
    CHECK_THROWS_AS(exact_div(from_ints({1, 1}), from_ints({0, 1})), remainder_error);
    CHECK_THROWS_AS(divmod(a, VPoly()), division_error);
}

TEST_CASE("gcd is monic and divides both inputs") {
    VPoly a = from_ints({-1, 0, 1});   // (v-1)(v+1)
    VPoly b = from_ints({1, 2, 1});    // (v+1)^2
    VPoly g = gcd(a, b);
    CHECK(g == from_ints({1, 1}));
    CHECK(exact_div(a, g) * g == a);
    CHECK(exact_div(b, g) * g == b);
    CHECK(gcd(VPoly(), b) == b.monic());

    std::mt19937 rng(7011986);
    std::uniform_int_distribution<int> d(-6, 6);
    auto rnd = [&](int deg) {
        std::vector<Rational> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
        return VPoly(std::move(c));
    };
    for (int it = 0; it < 60; ++it) {
        VPoly f = rnd(4), h = rnd(3), common = rnd(2);
        if (common.is_zero()) continue;
        VPoly gg = gcd(f * common, h * common);
        if ((f * common).is_zero() || (h * common).is_zero()) continue;
        CHECK(divmod(gg, common.monic()).second.is_zero());
        CHECK(divmod(f * common, gg).second.is_zero());
        CHECK(divmod(h * common, gg).second.is_zero());
    }
}

TEST_CASE("qrat canonical form") {
    QRat a(from_ints({-1, 0, 1}), from_ints({-1, 1}));  // (v^2-1)/(v-1) = v+1
    CHECK(a.num() == from_ints({1, 1}));
    CHECK(a.den() == VPoly(Rational(1)));
    QRat b(from_ints({0, 2}), from_ints({0, 0, 4}));  // 2v / 4v^2 = (1/2)/v... times
    CHECK(b.num() == VPoly(Rational(1, 2)));
    CHECK(b.den() == VPoly::v());
    CHECK(QRat(VPoly(), from_ints({3, 1})) == QRat());
    CHECK_THROWS_AS(QRat(VPoly::v(), VPoly()), division_error);
}

TEST_CASE("qrat field axioms on pseudorandom triples") {
    std::mt19937 rng(550211);
    std::uniform_int_distribution<int> d(-4, 4);
    auto rnd = [&] {
        std::vector<Rational> n, dd;
        for (int i = 0; i <= 2; ++i) n.emplace_back(d(rng));
        VPoly den;
        while (den.is_zero()) {
            dd.clear();
            for (int i = 0; i <= 2; ++i) dd.emplace_back(d(rng));
            den = VPoly(dd);
        }
        return QRat(VPoly(n), den);
    };
    for (int it = 0; it < 80; ++it) {
        QRat a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("qrat evaluation cancels removable singularities") {
    // (v^2 - 1)/(v - 1) -> 2 at v = 1, via the raw pair (no pre-reduction).
    CHECK(qrat_eval(from_ints({-1, 0, 1}), from_ints({-1, 1}), Rational(1)) == 2);
    // ((v-1)^2 (v+2)) / ((v-1)^2 v) at v = 1 -> 3.
    VPoly sq = from_ints({-1, 1}) * from_ints({-1, 1});
    CHECK(qrat_eval(sq * from_ints({2, 1}), sq * VPoly::v(), Rational(1)) == 3);
    CHECK(qrat_eval(VPoly(), from_ints({-1, 1}), Rational(1)) == 0);
    CHECK(qrat_eval(QRat(from_ints({1, 1}), from_ints({0, 0, 1})), Rational(2)) == Rational(3, 4));
}

TEST_CASE("true poles are reported with their order") {
    try {
        qrat_eval(from_ints({1, 1}), from_ints({-1, 1}) * from_ints({-1, 1}), Rational(1));
        FAIL("expected pole_error");
    } catch (const pole_error& e) {
        CHECK(e.order == 2);
    }
    // One factor cancels, one remains.
    VPoly num = from_ints({-1, 1}) * from_ints({5, 1});
    VPoly den = from_ints({-1, 1}) * from_ints({-1, 1});
    try {
        qrat_eval(num, den, Rational(1));
        FAIL("expected pole_error");
    } catch (const pole_error& e) {
        CHECK(e.order == 1);
    }
}

TEST_CASE("qrat eval agrees with direct evaluation away from den roots") {
    std::mt19937 rng(90125);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int it = 0; it < 60; ++it) {
        std::vector<Rational> n, dd;
        for (int i = 0; i <= 3; ++i) n.emplace_back(d(rng));
        for (int i = 0; i <= 2; ++i) dd.emplace_back(d(rng));
        VPoly num(n), den(dd);
        if (den.is_zero()) continue;
        Rational v0(d(rng), 7);
        if (den.eval(v0) == 0) continue;
        CHECK(qrat_eval(num, den, v0) == num.eval(v0) / den.eval(v0));
        CHECK(qrat_eval(QRat(num, den), v0) == num.eval(v0) / den.eval(v0));
    }
}

TEST_CASE("v_power handles negative exponents") {
    CHECK(QRat::v_power(3).num() == VPoly::monomial(Rational(1), 3));
    CHECK(QRat::v_power(-2).den() == VPoly::monomial(Rational(1), 2));
    CHECK(QRat::v_power(-2) * QRat::v_power(2) == QRat(Rational(1)));
    CHECK(qrat_eval(QRat::v_power(-3) + QRat::v_power(5), Rational(1)) == 2);
}
