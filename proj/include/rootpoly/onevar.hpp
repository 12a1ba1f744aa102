#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rootpoly/errors.hpp"
#include "rootpoly/laurent.hpp"
#include "rootpoly/orthopoly.hpp"
#include "rootpoly/rational.hpp"
#include "rootpoly/rootsystem.hpp"
#include "rootpoly/vpoly.hpp"

namespace rootpoly {

// ---------------------------------------------------------------------------
// Formal power series with exact complex-rational coefficients, truncated to a
// fixed order: coefficients of u^0 .. u^{order-1}.
// ---------------------------------------------------------------------------
struct TruncatedSeries {
    std::vector<ComplexRational> c;

    TruncatedSeries() = default;
    explicit TruncatedSeries(int order) : c(static_cast<std::size_t>(order)) {
        if (order < 1) throw domain_error("series order must be positive");
    }
    int order() const { return static_cast<int>(c.size()); }
    const ComplexRational& operator[](std::size_t j) const { return c[j]; }
    ComplexRational& operator[](std::size_t j) { return c[j]; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t j = 0; j < r.c.size(); ++j) r.c[j] = a.c[j] + b.c[j];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t j = 0; j < r.c.size(); ++j) r.c[j] = a.c[j] - b.c[j];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.c.size(); ++i)
            for (std::size_t j = 0; i + j < r.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        return r;
    }
    TruncatedSeries scale(const ComplexRational& s) const {
        TruncatedSeries r = *this;
        for (auto& x : r.c) x = x * s;
        return r;
    }
    // Truncate (or zero-extend is forbidden) to a smaller order.
    TruncatedSeries truncate(int order) const {
        if (order > this->order()) throw domain_error("cannot extend a truncated series");
        TruncatedSeries r(order);
        for (std::size_t j = 0; j < r.c.size(); ++j) r.c[j] = c[j];
        return r;
    }
    bool equal_to_order(const TruncatedSeries& o, int order) const {
        if (order > this->order() || order > o.order()) throw domain_error("order exceeds data");
        for (std::size_t j = 0; j < static_cast<std::size_t>(order); ++j)
            if (!(c[j] == o.c[j])) return false;
        return true;
    }
};

inline Rational pochhammer(const Rational& a, int j) {
    Rational r(1);
    for (int i = 0; i < j; ++i) r *= a + Rational(i);
    return r;
}

// Normalized one-variable Bessel-type series: even series with
// coefficient (-1/4)^j / ((k + 1/2)_j j!) at u^{2j}; value 1 at u = 0.
// k = 0 gives cos u; k = 1 gives (sin u)/u.
inline TruncatedSeries bessel_series(const Rational& k, int order) {
    TruncatedSeries f(order);
    Rational quarter = make_rat(-1, 4);
    Rational pw(1), fact(1);
    for (int j = 0; 2 * j < order; ++j) {
        if (j > 0) {
            pw *= quarter;
            fact *= Rational(j);
        }
        Rational poch = pochhammer(k + make_rat(1, 2), j);
        f[static_cast<std::size_t>(2 * j)] = ComplexRational(pw / (poch * fact));
    }
    return f;
}

// Exponential kernel of the one-variable theory: even part the Bessel-type
// series for k, odd part i * u/(2k+1) times the series for k+1.
inline TruncatedSeries genexp_series(const Rational& k, int order) {
    TruncatedSeries f = bessel_series(k, order);
    TruncatedSeries up = bessel_series(k + 1, order);
    Rational denom = 2 * k + 1;
    for (int m = 0; 2 * m + 1 < order; ++m)
        f[static_cast<std::size_t>(2 * m + 1)] =
            ComplexRational::i() * ComplexRational(up[static_cast<std::size_t>(2 * m)].re / denom);
    return f;
}

// One-variable reflection-differential operator:
// (T f)(u) = f'(u) + k (f(u) - f(-u))/u; on coefficients
// (T f)_m = (m + 1 + 2k [m even]) f_{m+1}.  Output order drops by one.
inline TruncatedSeries dunkl1d_apply(const Rational& k, const TruncatedSeries& f) {
    if (f.order() < 2) throw domain_error("series too short to differentiate");
    TruncatedSeries r(f.order() - 1);
    for (std::size_t m = 0; m + 1 < f.c.size(); ++m) {
        int j = static_cast<int>(m) + 1;
        Rational d = Rational(j) + (j % 2 == 1 ? 2 * k : Rational(0));
        r[m] = f[m + 1] * ComplexRational(d);
    }
    return r;
}

// ---------------------------------------------------------------------------
// x-side polynomials (dense, rational coefficients); VPoly doubles as the
// container with the indeterminate read as x.
// ---------------------------------------------------------------------------
using XPoly = VPoly;

inline XPoly xpoly_deriv(const XPoly& p) {
    std::vector<Rational> d;
    for (int j = 1; j <= p.degree(); ++j)
        d.push_back(Rational(j) * p.coeff(j));
    return XPoly(d);
}

inline XPoly cheb_t(int n) {
    XPoly t0(Rational(1));
    if (n == 0) return t0;
    XPoly x = XPoly::monomial(Rational(1), 1);
    XPoly t1 = x;
    for (int j = 2; j <= n; ++j) {
        XPoly t2 = Rational(2) * (x * t1) - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

// Ultraspherical polynomial in x, normalized by its trigonometric origin:
// the rank-one orthogonal polynomial with m_j replaced by 2 T_j (and m_0 by 1).
// Leading coefficient is 2^n for n >= 1.
inline XPoly ultraspherical_x(int n, int k) {
    RootSystem a1 = RootSystem::build("A1");
    OrthoPoly<Rational> p = jacobi_poly(a1, MultiplicityFn::constant(k, 1), Weight{n});
    XPoly f;
    for (std::size_t i = 0; i < p.support.size(); ++i) {
        int j = p.support[i][0];
        XPoly basis = j == 0 ? XPoly(Rational(1)) : Rational(2) * cheb_t(j);
        f = f + p.coeffs[i] * basis;
    }
    return f;
}

// Substitution x -> (X + X^{-1})/2 into the rank-one torus algebra.
inline LPRat trig_from_x(const RootSystem& a1, const XPoly& p) {
    LPRat x(&a1);
    x.add_term(Weight{1}, make_rat(1, 2));
    x.add_term(Weight{-1}, make_rat(1, 2));
    LPRat r(&a1);
    LPRat pw = LPRat::one(a1);
    for (int j = 0; j <= p.degree(); ++j) {
        Rational c = p.coeff(j);
        if (c != 0) r += pw.scale(c);
        if (j < p.degree()) pw = pw * x;
    }
    return r;
}

// x-side inner product: CT(f(x(X)) bar(g(x(X))) delta_k) / 4^k.  The 4^{-k}
// factor makes the raising/lowering pair below exactly skew-adjoint.
inline Rational inner_x(const XPoly& f, const XPoly& g, int k) {
    RootSystem a1 = RootSystem::build("A1");
    LPRat delta = weight_function(a1, MultiplicityFn::constant(k, 1));
    Rational ct = ct_pairing(trig_from_x(a1, f), trig_from_x(a1, g), delta);
    return ct / rat_pow(Rational(4), k);
}

// Raising operator (k -> k+1): plain d/dx.
inline XPoly shift_raise(const XPoly& f) { return xpoly_deriv(f); }

// Lowering operator (k+1 -> k): (1 - x^2) d/dx - (2k+1) x.
inline XPoly shift_lower(const XPoly& f, int k) {
    XPoly x = XPoly::monomial(Rational(1), 1);
    XPoly one(Rational(1));
    return (one - x * x) * xpoly_deriv(f) - Rational(2 * k + 1) * (x * f);
}

// f = c * g exactly, when such a scalar exists.
inline std::optional<Rational> scalar_multiple_of(const XPoly& f, const XPoly& g) {
    if (g.is_zero()) return f.is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
    if (f.is_zero()) return Rational(0);
    if (f.degree() != g.degree()) return std::nullopt;
    Rational c = f.coeff(f.degree()) / g.coeff(g.degree());
    return f == c * g ? std::optional<Rational>(c) : std::nullopt;
}

// Norm ratio <C_n at k> / <C_{n-1} at k+1> read off from the shift pair alone:
// raising sends C_n^{(k)} to a * C_{n-1}^{(k+1)}, lowering sends back with
// factor b, and skew-adjointness forces the ratio -a/b.
struct ShiftPair {
    Rational a;
    Rational b;
    Rational norm_ratio;  // -a/b
};

inline ShiftPair shift_pair(int n, int k) {
    if (n < 1) throw domain_error("raising needs positive degree");
    XPoly cn = ultraspherical_x(n, k);
    XPoly cm = ultraspherical_x(n - 1, k + 1);
    std::optional<Rational> a = scalar_multiple_of(shift_raise(cn), cm);
    if (!a) throw math_error("raising did not land on the expected polynomial");
    std::optional<Rational> b = scalar_multiple_of(shift_lower(cm, k), cn);
    if (!b) throw math_error("lowering did not land on the expected polynomial");
    if (*b == 0) throw math_error("degenerate lowering factor");
    return {*a, *b, -*a / *b};
}

// Second-order ordinary differential operator annihilating the family:
// (1 - x^2) y'' - (2k+1) x y' + n(n+2k) y.
inline XPoly ultraspherical_ode_residual(const XPoly& y, int n, int k) {
    XPoly x = XPoly::monomial(Rational(1), 1);
    XPoly one(Rational(1));
    XPoly d1 = xpoly_deriv(y);
    XPoly d2 = xpoly_deriv(d1);
    return (one - x * x) * d2 - Rational(2 * k + 1) * (x * d1) + Rational(n * (n + 2 * k)) * y;
}

// ---------------------------------------------------------------------------
// Rank-one q-side: the deformed family and its difference operator.
// ---------------------------------------------------------------------------

// X^{(j)} -> v^{sj} X^{(j)} for s = +/-1: the square root of the q-shift.
inline LPQRat vshift(const LPQRat& f, int s) {
    LPQRat r(&f.root_system());
    for (const auto& [w, c] : f.terms()) r.add_term(w, c * QRat::v_power(s * w[0]));
    return r;
}

// Rank-one difference operator acting on symmetric Laurent polynomials,
// conjugated to divided-difference form:
// T f = -X^{-alpha} [(1 - q^k z^2)(1 - z^{-2}) f(v.) + (1 - q^k z^{-2})(1 - z^2) f(v^{-1}.)]
//        / (1 - X^{-alpha})^2,   z^2 = X^{alpha}.
// Eigenvalue on the degree-n family member: v^{-n} + v^{n+2k}.
inline LPQRat qdiff_apply(const RootSystem& a1, int k, const LPQRat& f) {
    const Root& alpha = a1.positive[0];
    auto bracket = [&](int sign) {
        // (1 - q^k z^{2 sign})(1 - z^{-2 sign})
        LPQRat first = LPQRat::one(a1);
        first.add_term(sign * alpha.fund, QRat(Rational(-1)) * QRat::v_power(2 * k));
        LPQRat second = LPQRat::one(a1);
        second.add_term(-sign * alpha.fund, QRat(Rational(-1)));
        return first * second;
    };
    LPQRat g = bracket(1) * vshift(f, 1) + bracket(-1) * vshift(f, -1);
    LPQRat h = div_exact(div_exact(g, alpha), alpha);
    LPQRat shift(&a1);
    shift.add_term(-alpha.fund, QRat(Rational(-1)));
    return shift * h;
}

inline QRat qdiff_eigenvalue(int n, int k) { return QRat::v_power(-n) + QRat::v_power(n + 2 * k); }

// ---------------------------------------------------------------------------
// Numeric limit: scaled ultraspherical values against the Bessel-type series.
// ---------------------------------------------------------------------------

// Classical normalization by three-term recurrence; k = 0 degenerates to the
// first-kind Chebyshev value (cosine of n arccos x).
inline double ultraspherical_value_numeric(int n, int k, double x) {
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = k == 0 ? x : 2.0 * k * x;
    for (int j = 2; j <= n; ++j) {
        double next = k == 0 ? 2.0 * x * cur - prev
                             : (2.0 * x * (j + k - 1) * cur - (j + 2 * k - 2) * prev) / j;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Partial sums of the exact series; alternating with decreasing terms for
// moderate u, so truncation error is below the first omitted term.
inline double bessel_value_numeric(const Rational& k, double u) {
    double sum = 0.0;
    double pw = 1.0;  // u^{2j}
    Rational quarter = make_rat(-1, 4);
    Rational coeff(1);
    for (int j = 0; j < 80; ++j) {
        if (j > 0) {
            coeff *= quarter / (Rational(j) * (k + make_rat(1, 2) + Rational(j - 1)));
            pw *= u * u;
        }
        double term = rat_to_double(coeff) * pw;
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum)) && j > 2) break;
    }
    return sum;
}

// | C_N(cos(lambda x / N)) / C_N(1) - bessel_k(lambda x) |.
inline double scaling_limit_gap(int bigN, int k, double lambda, double x) {
    double angle = lambda * x / static_cast<double>(bigN);
    double num = ultraspherical_value_numeric(bigN, k, std::cos(angle));
    double den = ultraspherical_value_numeric(bigN, k, 1.0);
    return std::abs(num / den - bessel_value_numeric(Rational(k), lambda * x));
}

}  // namespace rootpoly
