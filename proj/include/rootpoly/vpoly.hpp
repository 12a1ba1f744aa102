#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rootpoly/errors.hpp"
#include "rootpoly/rational.hpp"

namespace rootpoly {

// Univariate polynomial in the indeterminate v over Rational, dense storage.
// Invariant: coeffs is empty (the zero polynomial) or coeffs.back() != 0.
class VPoly {
  public:
    VPoly() = default;
    explicit VPoly(Rational c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    explicit VPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static VPoly monomial(const Rational& c, int e) {
        if (e < 0) throw domain_error("VPoly exponent must be nonnegative");
        VPoly p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<std::size_t>(e) + 1, Rational(0));
            p.coeffs_.back() = c;
        }
        return p;
    }
    static VPoly v() { return monomial(Rational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int e) const {
        if (e < 0 || e > degree()) return Rational(0);
        return coeffs_[static_cast<std::size_t>(e)];
    }
    const Rational& leading() const {
        if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
    bool is_constant() const { return degree() <= 0; }

    friend VPoly operator+(const VPoly& a, const VPoly& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
        return VPoly(std::move(r));
    }
    friend VPoly operator-(const VPoly& a, const VPoly& b) { return a + (-b); }
    friend VPoly operator-(const VPoly& a) {
        std::vector<Rational> r = a.coeffs_;
        for (auto& c : r) c = -c;
        VPoly p;
        p.coeffs_ = std::move(r);
        return p;
    }
    friend VPoly operator*(const VPoly& a, const VPoly& b) {
        if (a.is_zero() || b.is_zero()) return VPoly();
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        VPoly p;
        p.coeffs_ = std::move(r);
        p.trim();
        return p;
    }
    friend VPoly operator*(const VPoly& a, const Rational& s) {
        if (s == 0) return VPoly();
        std::vector<Rational> r = a.coeffs_;
        for (auto& c : r) c *= s;
        VPoly p;
        p.coeffs_ = std::move(r);
        return p;
    }
    friend VPoly operator*(const Rational& s, const VPoly& a) { return a * s; }
    friend bool operator==(const VPoly& a, const VPoly& b) { return a.coeffs_ == b.coeffs_; }

    VPoly& operator+=(const VPoly& o) { return *this = *this + o; }
    VPoly& operator-=(const VPoly& o) { return *this = *this - o; }
    VPoly& operator*=(const VPoly& o) { return *this = *this * o; }

    Rational eval(const Rational& v0) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v0 + *it;
        return acc;
    }

    VPoly pow(unsigned e) const {
        VPoly acc(Rational(1)), b = *this;
        while (e > 0) {
            if (e & 1) acc *= b;
            if (e >>= 1) b *= b;
        }
        return acc;
    }

    // Quotient and remainder with deg(rem) < deg(divisor).
    friend std::pair<VPoly, VPoly> divmod(const VPoly& a, const VPoly& b) {
        if (b.is_zero()) throw division_error("VPoly division by zero");
        VPoly rem = a;
        std::vector<Rational> q;
        if (rem.degree() >= b.degree())
            q.assign(static_cast<std::size_t>(rem.degree() - b.degree()) + 1, Rational(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int e = rem.degree() - b.degree();
            Rational c = rem.leading() / b.leading();
            q[static_cast<std::size_t>(e)] = c;
            rem -= monomial(c, e) * b;
        }
        return {VPoly(std::move(q)), rem};
    }

    friend VPoly exact_div(const VPoly& a, const VPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw remainder_error("inexact VPoly division");
        return q;
    }

    // Multiplicity of v0 as a root; 0 if not a root or if *this is zero.
    int root_multiplicity(const Rational& v0) const {
        VPoly p = *this;
        int m = 0;
        while (!p.is_zero() && p.eval(v0) == 0) {
            p = p.deflate(v0);
            ++m;
        }
        return m;
    }

    // Exact synthetic division by (v - v0); requires v0 to be a root.
    VPoly deflate(const Rational& v0) const {
        if (is_zero() || eval(v0) != 0) throw remainder_error("deflation at a non-root");
        std::vector<Rational> q(coeffs_.size() - 1, Rational(0));
        Rational carry(0);
        for (std::size_t i = coeffs_.size(); i-- > 1;) {
            carry = coeffs_[i] + carry * v0;
            q[i - 1] = carry;
        }
        return VPoly(std::move(q));
    }

    // Monic gcd via the primitive pseudo-remainder sequence.
    friend VPoly gcd(const VPoly& a, const VPoly& b) {
        VPoly f = a.primitive(), g = b.primitive();
        if (f.is_zero()) return g.monic();
        if (g.is_zero()) return f.monic();
        if (f.degree() < g.degree()) std::swap(f, g);
        while (!g.is_zero()) {
            VPoly r = pseudo_rem(f, g).primitive();
            f = std::move(g);
            g = std::move(r);
        }
        return f.monic();
    }

    VPoly monic() const {
        if (is_zero()) return *this;
        return *this * rat_div(Rational(1), leading());
    }

    // Integer-primitive associate: integer coefficients with content 1,
    // positive leading coefficient.
    VPoly primitive() const {
        if (is_zero()) return *this;
        Int g(0), l(1);
        for (const auto& c : coeffs_) {
            if (c == 0) continue;
            g = boost::multiprecision::gcd(g, numerator(c) >= 0 ? Int(numerator(c)) : Int(-numerator(c)));
            l = boost::multiprecision::lcm(l, denominator(c));
        }
        Rational scale(l, g);
        if (leading() < 0) scale = -scale;
        return *this * scale;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int e = degree(); e >= 0; --e) {
            const Rational& c = coeff(e);
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            Rational ac = c < 0 ? Rational(-c) : c;
            bool unit = ac == 1 && e != 0;
            if (!unit) s += rat_to_string(ac);
            if (e > 0) {
                if (!unit) s += "*";
                s += "v";
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    // Remainder of lc(g)^(deg f - deg g + 1) * f modulo g; exact over Z.
    friend VPoly pseudo_rem(const VPoly& f, const VPoly& g) {
        int d = f.degree() - g.degree() + 1;
        if (d < 0) d = 0;
        VPoly r = f * rat_pow(Rational(g.leading()), d);
        return divmod(r, g).second;
    }

    std::vector<Rational> coeffs_;
};

// Element of the rational function field Q(v).  Canonical form: den is monic,
// gcd(num, den) = 1, and the zero element is 0/1.
class QRat {
  public:
    QRat() : den_(Rational(1)) {}
    explicit QRat(const Rational& c) : num_(c), den_(Rational(1)) {}
    QRat(VPoly num, VPoly den) { assign(std::move(num), std::move(den)); }

    static QRat v_power(int e) {
        if (e >= 0) return QRat(VPoly::monomial(Rational(1), e), VPoly(Rational(1)));
        return QRat(VPoly(Rational(1)), VPoly::monomial(Rational(1), -e));
    }
    static QRat from_vpoly(VPoly p) { return QRat(std::move(p), VPoly(Rational(1))); }

    const VPoly& num() const { return num_; }
    const VPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    friend QRat operator+(const QRat& a, const QRat& b) {
        if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
        return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator-(const QRat& a, const QRat& b) {
        if (a.den_ == b.den_) return QRat(a.num_ - b.num_, a.den_);
        return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator-(const QRat& a) {
        QRat r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend QRat operator*(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRat operator/(const QRat& a, const QRat& b) {
        if (b.is_zero()) throw division_error("QRat division by zero");
        return QRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }

    std::string to_string() const {
        if (den_ == VPoly(Rational(1))) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

  private:
    void assign(VPoly num, VPoly den) {
        if (den.is_zero()) throw division_error("QRat with zero denominator");
        if (num.is_zero()) {
            num_ = VPoly();
            den_ = VPoly(Rational(1));
            return;
        }
        VPoly g = gcd(num, den);
        if (g.degree() > 0) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
        Rational lead = den.leading();
        num_ = num * rat_div(Rational(1), lead);
        den_ = den * rat_div(Rational(1), lead);
    }

    VPoly num_;
    VPoly den_;
};

// Evaluates num/den at v0, cancelling any shared (v - v0) factors first.  A
// surviving zero denominator is a true pole and is reported with its order.
inline Rational qrat_eval(VPoly num, VPoly den, const Rational& v0) {
    if (den.is_zero()) throw division_error("evaluation of fraction with zero denominator");
    if (num.is_zero()) return Rational(0);
    while (!num.is_zero() && num.eval(v0) == 0 && den.eval(v0) == 0) {
        num = num.deflate(v0);
        den = den.deflate(v0);
    }
    if (den.eval(v0) == 0) {
        int order = den.root_multiplicity(v0);
        throw pole_error("pole of order " + std::to_string(order) + " at v = " + rat_to_string(v0),
                         order);
    }
    return num.eval(v0) / den.eval(v0);
}

inline Rational qrat_eval(const QRat& q, const Rational& v0) {
    return qrat_eval(q.num(), q.den(), v0);
}

}  // namespace rootpoly
