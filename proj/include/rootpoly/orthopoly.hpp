#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rootpoly/errors.hpp"
#include "rootpoly/laurent.hpp"
#include "rootpoly/linalg.hpp"
#include "rootpoly/rational.hpp"
#include "rootpoly/rootsystem.hpp"
#include "rootpoly/vpoly.hpp"

namespace rootpoly {

// All dominant weights of coordinate-sum height <= max_height, sorted.
inline std::vector<Weight> dominant_box(const RootSystem& rs, int max_height) {
    if (max_height < 0) throw domain_error("height bound must be nonnegative");
    std::vector<Weight> box;
    Weight w = Weight::zero(rs.rank);
    while (true) {
        if (w.height() <= max_height) box.push_back(w);
        int i = 0;
        while (i < rs.rank) {
            ++w[static_cast<std::size_t>(i)];
            if (w.height() <= max_height) break;
            w[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == rs.rank) break;
    }
    std::sort(box.begin(), box.end());
    return box;
}

// Orbit sum m_lambda = sum of X^mu over the Weyl orbit of lambda.
inline LPRat monomial_sym(const RootSystem& rs, const Weight& lambda) {
    LPRat m(&rs);
    for (const Weight& w : rs.weyl_orbit(lambda)) m.add_term(w, Rational(1));
    return m;
}

// Trigonometric weight: product over all roots (positive and negative) of
// (1 - X^alpha)^{k_alpha}.  Integer coefficients; Weyl invariant.
inline LPRat weight_function(const RootSystem& rs, const MultiplicityFn& k) {
    k.validate(rs.num_classes());
    LPRat d = LPRat::one(rs);
    for (const Root& alpha : rs.positive) {
        int m = k.of_class(alpha.cls);
        LPRat up = LPRat::one(rs);
        up.add_term(alpha.fund, Rational(-1));
        LPRat dn = LPRat::one(rs);
        dn.add_term(-alpha.fund, Rational(-1));
        for (int i = 0; i < m; ++i) d = d * up * dn;
    }
    return d;
}

// q-deformed weight: product over all roots of (X^alpha; q)_{k_alpha} with
// q = v^2.  Coefficients are integer polynomials in q; at v = 1 this
// specializes to weight_function.
inline LPVPoly weight_function_q(const RootSystem& rs, const MultiplicityFn& k) {
    k.validate(rs.num_classes());
    LPVPoly d = LPVPoly::one(rs);
    for (const Root& alpha : rs.positive) {
        int m = k.of_class(alpha.cls);
        for (int i = 0; i < m; ++i) {
            VPoly qi = VPoly::monomial(Rational(-1), 2 * i);  // -q^i
            LPVPoly up = LPVPoly::one(rs);
            up.add_term(alpha.fund, qi);
            LPVPoly dn = LPVPoly::one(rs);
            dn.add_term(-alpha.fund, qi);
            d = d * up * dn;
        }
    }
    return d;
}

// Constant term of f * bar(g) * delta, computed as a double sum over the
// supports of f and g without forming the product.
template <class F>
F ct_pairing(const LPRat& f, const LPRat& g, const LaurentPoly<F>& delta) {
    F acc{};
    for (const auto& [mu, cf] : f.terms()) {
        for (const auto& [nu, cg] : g.terms()) {
            F d = delta.coeff(nu - mu);
            if (coeff_traits<F>::is_zero(d)) continue;
            acc = acc + d * coeff_traits<F>::from_rational(cf * cg);
        }
    }
    return acc;
}

// Gram matrix of the orbit sums {m_mu : mu in box} for the pairing above.
template <class F>
struct GramTable {
    std::vector<Weight> box;               // sorted dominant weights
    std::map<Weight, std::size_t> index;   // weight -> row
    Mat<F> g;                              // symmetric
};

template <class F>
GramTable<F> gram_table(const RootSystem& rs, const std::vector<Weight>& box,
                        const LaurentPoly<F>& delta) {
    GramTable<F> t;
    t.box = box;
    std::vector<LPRat> msym;
    msym.reserve(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) {
        t.index.emplace(box[i], i);
        msym.push_back(monomial_sym(rs, box[i]));
    }
    t.g.assign(box.size(), std::vector<F>(box.size()));
    for (std::size_t i = 0; i < box.size(); ++i)
        for (std::size_t j = i; j < box.size(); ++j) {
            F v = ct_pairing(msym[i], msym[j], delta);
            t.g[i][j] = v;
            t.g[j][i] = v;
        }
    return t;
}

// Monic orthogonal polynomial attached to a dominant weight: the unique
// P = m_lambda + sum over strictly dominated mu of c_mu m_mu that is
// orthogonal to every such m_mu.  support lists the dominance lower ideal in
// its canonical order (lambda last); coeffs is parallel with leading 1.
template <class C>
struct OrthoPoly {
    Weight lambda;
    std::vector<Weight> support;
    std::vector<C> coeffs;
    C norm2;  // <P, P> = <P, m_lambda>
};

template <class C>
LaurentPoly<C> to_laurent(const RootSystem& rs, const OrthoPoly<C>& p) {
    LaurentPoly<C> f(&rs);
    for (std::size_t i = 0; i < p.support.size(); ++i)
        for (const Weight& w : rs.weyl_orbit(p.support[i])) f.add_term(w, p.coeffs[i]);
    return f;
}

inline OrthoPoly<Rational> jacobi_poly(const RootSystem& rs, const MultiplicityFn& k,
                                       const Weight& lambda) {
    std::vector<Weight> ideal = rs.lower_ideal(lambda);
    LPRat delta = weight_function(rs, k);
    GramTable<Rational> t = gram_table(rs, ideal, delta);
    std::size_t m = ideal.size();
    OrthoPoly<Rational> p;
    p.lambda = lambda;
    p.support = ideal;
    p.coeffs.assign(m, Rational(0));
    p.coeffs[m - 1] = Rational(1);
    if (m > 1) {
        Mat<Rational> a(m - 1, std::vector<Rational>(m - 1));
        std::vector<Rational> b(m - 1);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            for (std::size_t j = 0; j + 1 < m; ++j) a[i][j] = t.g[i][j];
            b[i] = -t.g[i][m - 1];
        }
        std::vector<Rational> c = rat_solve(a, b);
        for (std::size_t j = 0; j + 1 < m; ++j) p.coeffs[j] = c[j];
    }
    p.norm2 = Rational(0);
    for (std::size_t j = 0; j < m; ++j) p.norm2 += p.coeffs[j] * t.g[m - 1][j];
    return p;
}

inline OrthoPoly<QRat> macdonald_poly(const RootSystem& rs, const MultiplicityFn& k,
                                      const Weight& lambda) {
    std::vector<Weight> ideal = rs.lower_ideal(lambda);
    LPVPoly delta = weight_function_q(rs, k);
    GramTable<VPoly> t = gram_table(rs, ideal, delta);
    std::size_t m = ideal.size();
    OrthoPoly<QRat> p;
    p.lambda = lambda;
    p.support = ideal;
    p.coeffs.assign(m, QRat());
    p.coeffs[m - 1] = QRat(Rational(1));
    VPoly den(Rational(1));
    std::vector<VPoly> nums(m, VPoly());
    nums[m - 1] = VPoly(Rational(1));
    if (m > 1) {
        Mat<VPoly> a(m - 1, std::vector<VPoly>(m - 1));
        std::vector<VPoly> b(m - 1);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            for (std::size_t j = 0; j + 1 < m; ++j) a[i][j] = t.g[i][j];
            b[i] = -t.g[i][m - 1];
        }
        BareissSolution s = bareiss_solve(a, b);
        den = s.den;
        nums[m - 1] = s.den;
        for (std::size_t j = 0; j + 1 < m; ++j) {
            nums[j] = s.nums[j];
            p.coeffs[j] = QRat(s.nums[j], s.den);
        }
    }
    VPoly nn;
    for (std::size_t j = 0; j < m; ++j) nn = nn + nums[j] * t.g[m - 1][j];
    p.norm2 = QRat(nn, den);
    return p;
}

// Specialization v -> 1 coefficientwise; exact, with removable factors
// cancelled.  Throws pole_error if any coefficient has a genuine pole.
inline OrthoPoly<Rational> specialize_v1(const OrthoPoly<QRat>& p) {
    OrthoPoly<Rational> r;
    r.lambda = p.lambda;
    r.support = p.support;
    r.coeffs.reserve(p.coeffs.size());
    for (const QRat& c : p.coeffs) r.coeffs.push_back(qrat_eval(c, Rational(1)));
    r.norm2 = qrat_eval(p.norm2, Rational(1));
    return r;
}

// One family over a common box, kept in cleared-denominator form so that all
// orthogonality checks are divisionless: row i of nums holds the numerator
// coefficients of P_{box[i]} against {m_{box[j]}}, with denominator dens[i].
template <class F>
struct OrthoFamily {
    std::vector<Weight> box;
    Mat<F> nums;
    std::vector<F> dens;
};

namespace detail {

inline void solve_ideal_row(const GramTable<Rational>& t, const std::vector<std::size_t>& idx,
                            std::vector<Rational>& row, Rational& den) {
    std::size_t m = idx.size();
    den = Rational(1);
    row[idx[m - 1]] = Rational(1);
    if (m == 1) return;
    Mat<Rational> a(m - 1, std::vector<Rational>(m - 1));
    std::vector<Rational> b(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = 0; j + 1 < m; ++j) a[i][j] = t.g[idx[i]][idx[j]];
        b[i] = -t.g[idx[i]][idx[m - 1]];
    }
    std::vector<Rational> c = rat_solve(a, b);
    for (std::size_t j = 0; j + 1 < m; ++j) row[idx[j]] = c[j];
}

inline void solve_ideal_row(const GramTable<VPoly>& t, const std::vector<std::size_t>& idx,
                            std::vector<VPoly>& row, VPoly& den) {
    std::size_t m = idx.size();
    if (m == 1) {
        den = VPoly(Rational(1));
        row[idx[0]] = den;
        return;
    }
    Mat<VPoly> a(m - 1, std::vector<VPoly>(m - 1));
    std::vector<VPoly> b(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        for (std::size_t j = 0; j + 1 < m; ++j) a[i][j] = t.g[idx[i]][idx[j]];
        b[i] = -t.g[idx[i]][idx[m - 1]];
    }
    BareissSolution s = bareiss_solve(a, b);
    den = s.den;
    row[idx[m - 1]] = s.den;
    for (std::size_t j = 0; j + 1 < m; ++j) row[idx[j]] = s.nums[j];
}

}  // namespace detail

template <class F>
OrthoFamily<F> ortho_family(const RootSystem& rs, const GramTable<F>& t) {
    OrthoFamily<F> fam;
    fam.box = t.box;
    std::size_t n = t.box.size();
    fam.nums.assign(n, std::vector<F>(n, F{}));
    fam.dens.assign(n, F{});
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> idx;
        for (const Weight& mu : rs.lower_ideal(t.box[i])) {
            auto it = t.index.find(mu);
            if (it == t.index.end())
                throw domain_error("lower ideal of " + t.box[i].to_string() +
                                   " leaves the box at " + mu.to_string());
            idx.push_back(it->second);
        }
        detail::solve_ideal_row(t, idx, fam.nums[i], fam.dens[i]);
    }
    return fam;
}

// Pairwise orthogonality and triangular vanishing over a family.
struct OrthogonalityReport {
    std::size_t box_size = 0;
    std::size_t pairs_checked = 0;
    bool orthogonal = true;           // <P_lambda, P_mu> = 0 for lambda != mu
    bool nondegenerate = true;        // <P_lambda, P_lambda> != 0
    bool support_triangular = true;   // <P_lambda, m_nu> = 0 unless lambda <= nu
    std::vector<std::string> failures;

    bool ok() const { return orthogonal && nondegenerate && support_triangular; }
};

template <class F>
OrthogonalityReport orthogonality_report(const RootSystem& rs, const GramTable<F>& t,
                                         const OrthoFamily<F>& fam) {
    OrthogonalityReport rep;
    std::size_t n = fam.box.size();
    rep.box_size = n;
    // against[i][nu] = den_i * <P_{box[i]}, m_{box[nu]}>.
    Mat<F> against(n, std::vector<F>(n, F{}));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t nu = 0; nu < n; ++nu) {
            F acc{};
            for (std::size_t rho = 0; rho < n; ++rho) {
                if (coeff_traits<F>::is_zero(fam.nums[i][rho])) continue;
                acc = acc + fam.nums[i][rho] * t.g[rho][nu];
            }
            against[i][nu] = acc;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t nu = 0; nu < n; ++nu) {
            bool dominated = rs.dominance_leq(fam.box[i], fam.box[nu]);
            if (!dominated && !coeff_traits<F>::is_zero(against[i][nu])) {
                rep.support_triangular = false;
                rep.failures.push_back("<P_" + fam.box[i].to_string() + ", m_" +
                                       fam.box[nu].to_string() + "> != 0");
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            F acc{};
            for (std::size_t nu = 0; nu < n; ++nu) {
                if (coeff_traits<F>::is_zero(fam.nums[j][nu])) continue;
                acc = acc + fam.nums[j][nu] * against[i][nu];
            }
            ++rep.pairs_checked;
            if (i == j) {
                if (coeff_traits<F>::is_zero(acc)) {
                    rep.nondegenerate = false;
                    rep.failures.push_back("<P_" + fam.box[i].to_string() + "> degenerate");
                }
            } else if (!coeff_traits<F>::is_zero(acc)) {
                rep.orthogonal = false;
                rep.failures.push_back("<P_" + fam.box[i].to_string() + ", P_" +
                                       fam.box[j].to_string() + "> != 0");
            }
        }
    }
    return rep;
}

}  // namespace rootpoly
