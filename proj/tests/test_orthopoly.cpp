#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "rootpoly/orthopoly.hpp"

using namespace rootpoly;

namespace {

Weight dominant_rep(const RootSystem& rs, Weight w) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rs.rank; ++i)
            if (w[static_cast<std::size_t>(i)] < 0) {
                w = rs.simple_reflect(i, w);
                moved = true;
            }
    }
    return w;
}

// Weight multiplicities of the irreducible highest-weight module by the
// Freudenthal recursion, keyed on dominant representatives.  Serves as an
// oracle: at multiplicity one the monic orthogonal family coincides with the
// Weyl character basis, so its coefficients must equal these multiplicities.
std::map<Weight, Int> freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda) {
    Weight rho = Weight::zero(rs.rank);
    for (int i = 0; i < rs.rank; ++i) rho[static_cast<std::size_t>(i)] = 1;
    Rational top = rs.inner(lambda + rho, lambda + rho);

    std::vector<Weight> ideal = rs.lower_ideal(lambda);  // lambda last
    std::map<Weight, Int> mult;
    for (auto it = ideal.rbegin(); it != ideal.rend(); ++it) {
        const Weight& mu = *it;
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        Rational acc(0);
        for (const Root& alpha : rs.positive) {
            for (int j = 1; j <= 64; ++j) {
                Weight nu = mu + j * alpha.fund;
                auto found = mult.find(dominant_rep(rs, nu));
                if (found == mult.end()) break;  // root strings have no gaps
                acc += Rational(found->second) * rs.inner(nu, alpha.fund);
                REQUIRE(j < 64);
            }
        }
        Rational denom = top - rs.inner(mu + rho, mu + rho);
        REQUIRE(denom != 0);
        Rational m = 2 * acc / denom;
        REQUIRE(is_integer(m));
        REQUIRE(m > 0);
        mult[mu] = num(m);
    }

    // Cross-check: orbit-weighted multiplicities reproduce the Weyl dimension.
    Rational dim(0);
    for (const auto& [mu, m] : mult) dim += Rational(m) * Rational(rs.weyl_orbit(mu).size());
    Rational prod(1);
    for (const Root& alpha : rs.positive)
        prod *= rs.inner(lambda + rho, alpha.fund) / rs.inner(rho, alpha.fund);
    REQUIRE(dim == prod);
    return mult;
}

LPRat specialize_delta_v1(const LPVPoly& d) {
    LPRat r(&d.root_system());
    for (const auto& [w, c] : d.terms()) r.add_term(w, c.eval(Rational(1)));
    return r;
}

}  // namespace

TEST_CASE("dominant box enumeration") {
    RootSystem a2 = RootSystem::build("A2");
    std::vector<Weight> box = dominant_box(a2, 2);
    std::vector<Weight> expect{Weight{0, 0}, Weight{0, 1}, Weight{1, 0},
                               Weight{0, 2}, Weight{1, 1}, Weight{2, 0}};
    CHECK(box == expect);
    CHECK(dominant_box(a2, 6).size() == 28);
    RootSystem b3 = RootSystem::build("B3");
    CHECK(dominant_box(b3, 3).size() == 20);  // C(3+3,3)
}

TEST_CASE("weight function basics") {
    RootSystem a1 = RootSystem::build("A1");
    MultiplicityFn k1 = MultiplicityFn::constant(1, 1);
    LPRat d1 = weight_function(a1, k1);
    // 2 - X^{2} - X^{-2} in fundamental coordinates.
    CHECK(d1.constant_term() == Rational(2));
    CHECK(d1.coeff(Weight{2}) == Rational(-1));
    CHECK(d1.coeff(Weight{-2}) == Rational(-1));
    CHECK(d1.size() == 3);

    MultiplicityFn k2 = MultiplicityFn::constant(2, 1);
    LPRat d2 = weight_function(a1, k2);
    CHECK(d2.constant_term() == Rational(6));
    CHECK(d2.coeff(Weight{2}) == Rational(-4));
    CHECK(d2.coeff(Weight{4}) == Rational(1));

    // Weyl invariance, bar symmetry, and |W| as the constant term at k = 1.
    for (const char* label : {"A2", "C2", "B2"}) {
        RootSystem rs = RootSystem::build(label);
        MultiplicityFn k = MultiplicityFn::constant(1, rs.num_classes());
        LPRat d = weight_function(rs, k);
        CHECK(d.is_invariant());
        CHECK(d.bar() == d);
        Weight regular = Weight::zero(rs.rank);
        for (int i = 0; i < rs.rank; ++i) regular[static_cast<std::size_t>(i)] = 1;
        CHECK(d.constant_term() == Rational(rs.weyl_orbit(regular).size()));
    }
}

TEST_CASE("q-deformed weight function") {
    RootSystem a1 = RootSystem::build("A1");
    MultiplicityFn k2 = MultiplicityFn::constant(2, 1);
    LPVPoly dq = weight_function_q(a1, k2);
    // Constant term 2 + 2q + 2q^2 and X^{2}-coefficient -(1+q)^2, q = v^2.
    CHECK(dq.constant_term() == VPoly(std::vector<Rational>{
                                    Rational(2), Rational(0), Rational(2), Rational(0), Rational(2)}));
    CHECK(dq.coeff(Weight{2}) == VPoly(std::vector<Rational>{
                                     Rational(-1), Rational(0), Rational(-2), Rational(0), Rational(-1)}));
    CHECK(dq.coeff(Weight{4}) == VPoly::monomial(Rational(1), 2));

    // v = 1 specialization matches the undeformed weight across systems.
    for (const char* label : {"A1", "A2", "C2"}) {
        RootSystem rs = RootSystem::build(label);
        for (int k = 0; k <= 2; ++k) {
            MultiplicityFn mk = MultiplicityFn::constant(k, rs.num_classes());
            CHECK(specialize_delta_v1(weight_function_q(rs, mk)) == weight_function(rs, mk));
        }
    }

    // k = 1 never sees q: degree-one factors are q-free.
    RootSystem c2 = RootSystem::build("C2");
    for (const auto& [w, c] : weight_function_q(c2, MultiplicityFn::constant(1, c2.num_classes())).terms())
        CHECK(c.degree() <= 0);
}

TEST_CASE("pairing with shifted supports matches the defining constant term") {
    RootSystem c2 = RootSystem::build("C2");
    MultiplicityFn k = MultiplicityFn::constant(2, c2.num_classes());
    LPRat delta = weight_function(c2, k);
    std::vector<Weight> ws{Weight{0, 0}, Weight{1, 0}, Weight{0, 1}, Weight{1, 1}, Weight{2, 0}};
    for (const Weight& a : ws)
        for (const Weight& b : ws) {
            LPRat f = monomial_sym(c2, a);
            LPRat g = monomial_sym(c2, b);
            CHECK(ct_pairing(f, g, delta) == (f * g.bar() * delta).constant_term());
        }
}

TEST_CASE("rank-one orthogonal polynomials, frozen values") {
    RootSystem a1 = RootSystem::build("A1");

    SECTION("k = 1") {
        OrthoPoly<Rational> p = jacobi_poly(a1, MultiplicityFn::constant(1, 1), Weight{2});
        REQUIRE(p.support == std::vector<Weight>{Weight{0}, Weight{2}});
        CHECK(p.coeffs == std::vector<Rational>{Rational(1), Rational(1)});
        CHECK(p.norm2 == Rational(2));
    }
    SECTION("k = 2") {
        OrthoPoly<Rational> p = jacobi_poly(a1, MultiplicityFn::constant(2, 1), Weight{2});
        CHECK(p.coeffs == std::vector<Rational>{make_rat(4, 3), Rational(1)});
        CHECK(p.norm2 == make_rat(10, 3));
    }
    SECTION("k = 0 gives bare orbit sums") {
        OrthoPoly<Rational> p = jacobi_poly(a1, MultiplicityFn::constant(0, 1), Weight{4});
        CHECK(p.coeffs == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
        CHECK(p.norm2 == Rational(2));  // CT(m_4 bar(m_4)) over the trivial weight
    }
}

TEST_CASE("multiplicity-one family equals Weyl characters") {
    struct Case {
        const char* label;
        std::vector<Weight> lambdas;
    };
    std::vector<Case> cases{
        {"A2", {Weight{1, 1}, Weight{2, 0}, Weight{0, 3}, Weight{2, 2}, Weight{3, 1}}},
        {"C2", {Weight{1, 0}, Weight{0, 1}, Weight{1, 1}, Weight{2, 0}, Weight{0, 2}, Weight{2, 1}}},
        {"B2", {Weight{1, 1}, Weight{2, 0}, Weight{0, 2}}},
        {"A3", {Weight{1, 0, 1}, Weight{0, 2, 0}, Weight{1, 1, 1}}},
    };
    for (const Case& c : cases) {
        RootSystem rs = RootSystem::build(c.label);
        MultiplicityFn k1 = MultiplicityFn::constant(1, rs.num_classes());
        for (const Weight& lambda : c.lambdas) {
            std::map<Weight, Int> oracle = freudenthal_multiplicities(rs, lambda);
            OrthoPoly<Rational> p = jacobi_poly(rs, k1, lambda);
            REQUIRE(p.support.size() == oracle.size());
            for (std::size_t i = 0; i < p.support.size(); ++i) {
                INFO(c.label << " lambda=" << lambda.to_string()
                             << " mu=" << p.support[i].to_string());
                CHECK(p.coeffs[i] == Rational(oracle.at(p.support[i])));
            }
        }
    }
}

TEST_CASE("rank-one deformed family, frozen values") {
    RootSystem a1 = RootSystem::build("A1");

    SECTION("k = 1 coefficients are constant in v") {
        OrthoPoly<QRat> p = macdonald_poly(a1, MultiplicityFn::constant(1, 1), Weight{2});
        CHECK(p.coeffs[0] == QRat(Rational(1)));
        CHECK(p.coeffs[1] == QRat(Rational(1)));
    }
    SECTION("k = 2 coefficient (1+q)^2/(1+q+q^2), q = v^2") {
        OrthoPoly<QRat> p = macdonald_poly(a1, MultiplicityFn::constant(2, 1), Weight{2});
        VPoly num(std::vector<Rational>{Rational(1), Rational(0), Rational(2), Rational(0), Rational(1)});
        VPoly den(std::vector<Rational>{Rational(1), Rational(0), Rational(1), Rational(0), Rational(1)});
        CHECK(p.coeffs[0] == QRat(num, den));
        // Norm 2(1+q+q^2+q^3+q^4)/(1+q+q^2).
        std::vector<Rational> nc(9, Rational(0));
        for (int i = 0; i <= 8; i += 2) nc[static_cast<std::size_t>(i)] = Rational(2);
        CHECK(p.norm2 == QRat(VPoly(nc), den));
        // Specialization at v = 1 recovers the undeformed coefficients.
        OrthoPoly<Rational> j = specialize_v1(p);
        CHECK(j.coeffs == std::vector<Rational>{make_rat(4, 3), Rational(1)});
        CHECK(j.norm2 == make_rat(10, 3));
    }
}

TEST_CASE("deformed family at k = 1 degenerates to characters") {
    RootSystem c2 = RootSystem::build("C2");
    MultiplicityFn k1 = MultiplicityFn::constant(1, c2.num_classes());
    for (const Weight& lambda : {Weight{1, 1}, Weight{0, 2}}) {
        OrthoPoly<QRat> mp = macdonald_poly(c2, k1, lambda);
        OrthoPoly<Rational> jp = jacobi_poly(c2, k1, lambda);
        REQUIRE(mp.support == jp.support);
        for (std::size_t i = 0; i < mp.coeffs.size(); ++i)
            CHECK(mp.coeffs[i] == QRat(jp.coeffs[i]));
    }
}

TEST_CASE("family-wide orthogonality over a height box") {
    SECTION("rational coefficients") {
        RootSystem a2 = RootSystem::build("A2");
        MultiplicityFn k = MultiplicityFn::constant(2, 1);
        std::vector<Weight> box = dominant_box(a2, 4);
        GramTable<Rational> t = gram_table(a2, box, weight_function(a2, k));
        OrthoFamily<Rational> fam = ortho_family(a2, t);
        OrthogonalityReport rep = orthogonality_report(a2, t, fam);
        INFO((rep.failures.empty() ? std::string("ok") : rep.failures.front()));
        CHECK(rep.ok());
        CHECK(rep.box_size == 15);
        CHECK(rep.pairs_checked == 15 * 16 / 2);
    }
    SECTION("deformed coefficients") {
        RootSystem c2 = RootSystem::build("C2");
        MultiplicityFn k{{1, 2}};
        std::vector<Weight> box = dominant_box(c2, 3);
        GramTable<VPoly> t = gram_table(c2, box, weight_function_q(c2, k));
        OrthoFamily<VPoly> fam = ortho_family(c2, t);
        OrthogonalityReport rep = orthogonality_report(c2, t, fam);
        INFO((rep.failures.empty() ? std::string("ok") : rep.failures.front()));
        CHECK(rep.ok());
    }
}

TEST_CASE("norms and constant terms are positive") {
    for (const char* label : {"A1", "A2", "B2", "C2"}) {
        RootSystem rs = RootSystem::build(label);
        for (int k = 1; k <= 2; ++k) {
            MultiplicityFn mk = MultiplicityFn::constant(k, rs.num_classes());
            LPRat delta = weight_function(rs, mk);
            CHECK(delta.constant_term() > 0);
            for (const Weight& lambda : dominant_box(rs, 3)) {
                OrthoPoly<Rational> p = jacobi_poly(rs, mk, lambda);
                INFO(label << " k=" << k << " lambda=" << lambda.to_string());
                CHECK(p.norm2 > 0);
            }
        }
    }
}
