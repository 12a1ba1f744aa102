#pragma once

#include <string>
#include <vector>

#include "rootpoly/ambient.hpp"
#include "rootpoly/laurent.hpp"
#include "rootpoly/rootsystem.hpp"

namespace rootpoly {

// ---------------------------------------------------------------------------
// Rational side: difference-differential operators on AmbientPoly.
// ---------------------------------------------------------------------------

// Directional derivative d/dxi with xi in rational fundamental coordinates:
// d/dxi = sum_j <alpha_j, xi> d/du_j.
inline AmbientPoly ambient_deriv(const std::vector<Rational>& xi, const AmbientPoly& p) {
    const RootSystem& rs = p.root_system();
    AmbientPoly r(&rs);
    for (int j = 0; j < rs.rank; ++j) {
        Rational s = xi[static_cast<std::size_t>(j)] *
                     rs.simple_gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] /
                     Rational(2);
        if (s == 0) continue;
        r += s * p.deriv_u(j);
    }
    return r;
}

// D_xi p = d/dxi p + sum_{alpha>0} k_alpha <alpha, xi> (p - s_alpha p)/<alpha, x>.
inline AmbientPoly dunkl_apply(const RootSystem& rs, const MultiplicityFn& k,
                               const std::vector<Rational>& xi, const AmbientPoly& p) {
    k.validate(rs.num_classes());
    AmbientPoly r = ambient_deriv(xi, p);
    for (const Root& alpha : rs.positive) {
        int ka = k.of_class(alpha.cls);
        if (ka == 0) continue;
        Rational s = Rational(ka) * rs.inner_root_vec(alpha, xi);
        if (s == 0) continue;
        AmbientPoly diff = p - ambient_reflect(rs, alpha, p);
        if (diff.is_zero()) continue;
        r += s * divide_by_linear(diff, alpha.simple);
    }
    return r;
}

struct CommutatorReport {
    std::size_t checked = 0;
    bool commute = true;
    std::vector<std::string> failures;
};

// [D_xi, D_eta] on every monomial of total degree <= max_deg, for all pairs of
// fundamental-direction vectors.
inline CommutatorReport dunkl_commutator_report(const RootSystem& rs, const MultiplicityFn& k,
                                                int max_deg) {
    CommutatorReport rep;
    std::vector<std::vector<Rational>> dirs;
    for (int i = 0; i < rs.rank; ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(rs.rank), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        dirs.push_back(e);
    }
    // Same odometer as the dominant box: exponent vectors with sum <= max_deg.
    Weight e = Weight::zero(rs.rank);
    std::vector<Weight> expos;
    while (true) {
        expos.push_back(e);
        int i = 0;
        while (i < rs.rank) {
            ++e[static_cast<std::size_t>(i)];
            if (e.height() <= max_deg) break;
            e[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == rs.rank) break;
    }
    for (std::size_t a = 0; a < dirs.size(); ++a)
        for (std::size_t b = a + 1; b < dirs.size(); ++b)
            for (const Weight& expo : expos) {
                AmbientPoly p = AmbientPoly::monomial(rs, expo, Rational(1));
                AmbientPoly lhs = dunkl_apply(rs, k, dirs[a], dunkl_apply(rs, k, dirs[b], p));
                AmbientPoly rhs = dunkl_apply(rs, k, dirs[b], dunkl_apply(rs, k, dirs[a], p));
                ++rep.checked;
                if (!(lhs == rhs)) {
                    rep.commute = false;
                    rep.failures.push_back(rs.type_string() + " directions " + std::to_string(a) +
                                           "," + std::to_string(b) + " at u^" + expo.to_string());
                }
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Trigonometric side: operators on Laurent polynomials.
// ---------------------------------------------------------------------------

// Reflection-difference operator of Heckman type:
// D_xi f = d/dxi f + (1/2) sum_{alpha>0} k_alpha <alpha, xi>
//          (1 + X^{-alpha}) (f - s_alpha f) / (1 - X^{-alpha}).
inline LPRat heckman_apply(const RootSystem& rs, const MultiplicityFn& k,
                           const std::vector<Rational>& xi, const LPRat& f) {
    k.validate(rs.num_classes());
    LPRat r = deriv(xi, f);
    for (const Root& alpha : rs.positive) {
        int ka = k.of_class(alpha.cls);
        if (ka == 0) continue;
        Rational s = Rational(ka) * rs.inner_root_vec(alpha, xi) / Rational(2);
        if (s == 0) continue;
        LPRat diff = f - f.reflect(alpha);
        if (diff.is_zero()) continue;
        LPRat onePlus = LPRat::one(rs);
        onePlus.add_term(-alpha.fund, Rational(1));
        r += div_exact(onePlus * diff, alpha).scale(s);
    }
    return r;
}

// Commuting normal form: d/dxi + sum k_alpha <alpha,xi> (1-X^{-alpha})^{-1}(1-s_alpha)
// minus the constant <rho(k), xi>, rho(k) = (1/2) sum k_alpha alpha.
inline LPRat cherednik_apply(const RootSystem& rs, const MultiplicityFn& k,
                             const std::vector<Rational>& xi, const LPRat& f) {
    k.validate(rs.num_classes());
    LPRat r = deriv(xi, f);
    for (const Root& alpha : rs.positive) {
        int ka = k.of_class(alpha.cls);
        if (ka == 0) continue;
        Rational s = Rational(ka) * rs.inner_root_vec(alpha, xi);
        if (s == 0) continue;
        LPRat diff = f - f.reflect(alpha);
        if (!diff.is_zero()) r += div_exact(diff, alpha).scale(s);
    }
    Rational shift = rs.inner_vec(rs.rho_k(k), xi) / Rational(2);
    r -= f.scale(shift);
    return r;
}

inline CommutatorReport cherednik_commutator_report(const RootSystem& rs, const MultiplicityFn& k,
                                                    int box_radius) {
    CommutatorReport rep;
    std::vector<std::vector<Rational>> dirs;
    for (int i = 0; i < rs.rank; ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(rs.rank), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        dirs.push_back(e);
    }
    // All lattice exponents with |coordinate| <= box_radius.
    std::vector<Weight> expos;
    Weight w = Weight::zero(rs.rank);
    for (int i = 0; i < rs.rank; ++i) w[static_cast<std::size_t>(i)] = -box_radius;
    while (true) {
        expos.push_back(w);
        int i = 0;
        while (i < rs.rank) {
            if (w[static_cast<std::size_t>(i)] < box_radius) {
                ++w[static_cast<std::size_t>(i)];
                break;
            }
            w[static_cast<std::size_t>(i)] = -box_radius;
            ++i;
        }
        if (i == rs.rank) break;
    }
    for (std::size_t a = 0; a < dirs.size(); ++a)
        for (std::size_t b = a + 1; b < dirs.size(); ++b)
            for (const Weight& expo : expos) {
                LPRat f = LPRat::monomial(rs, expo, Rational(1));
                LPRat lhs = cherednik_apply(rs, k, dirs[a], cherednik_apply(rs, k, dirs[b], f));
                LPRat rhs = cherednik_apply(rs, k, dirs[b], cherednik_apply(rs, k, dirs[a], f));
                ++rep.checked;
                if (!(lhs == rhs)) {
                    rep.commute = false;
                    rep.failures.push_back(rs.type_string() + " directions " + std::to_string(a) +
                                           "," + std::to_string(b) + " at X^" + expo.to_string());
                }
            }
    return rep;
}

// Invariant second-order operator with eigenvalue <lambda, lambda + sum k_alpha alpha>
// on the monic orthogonal family:
// L f = sum_lambda <lambda,lambda> c_lambda X^lambda
//       + sum_{alpha>0} k_alpha (1 + X^{-alpha}) (d/dalpha f) / (1 - X^{-alpha}).
inline LPRat laplace_apply(const RootSystem& rs, const MultiplicityFn& k, const LPRat& f) {
    k.validate(rs.num_classes());
    if (!f.is_invariant()) throw domain_error("operator requires a Weyl-invariant input");
    LPRat r(&rs);
    for (const auto& [w, c] : f.terms()) r.add_term(w, rs.inner(w, w) * c);
    for (const Root& alpha : rs.positive) {
        int ka = k.of_class(alpha.cls);
        if (ka == 0) continue;
        LPRat da(&rs);  // X^lambda -> <lambda, alpha> X^lambda
        for (const auto& [w, c] : f.terms()) da.add_term(w, rs.inner(w, alpha.fund) * c);
        if (da.is_zero()) continue;
        LPRat onePlus = LPRat::one(rs);
        onePlus.add_term(-alpha.fund, Rational(1));
        r += div_exact(onePlus * da, alpha).scale(Rational(ka));
    }
    return r;
}

// Orbit-symmetrized power of the Heckman operator: sum over eta in the Weyl
// orbit of xi of D_eta^j, restricted to invariant inputs.
inline LPRat symmetrized_power_apply(const RootSystem& rs, const MultiplicityFn& k,
                                     const std::vector<Rational>& xi, int j, const LPRat& f) {
    if (j < 1 || j > 3) throw domain_error("power out of range");
    if (!f.is_invariant()) throw domain_error("operator requires a Weyl-invariant input");
    LPRat r(&rs);
    for (const std::vector<Rational>& eta : rs.weyl_orbit_vec(xi)) {
        LPRat g = f;
        for (int t = 0; t < j; ++t) g = heckman_apply(rs, k, eta, g);
        r += g;
    }
    return r;
}

}  // namespace rootpoly
