#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rootpoly/errors.hpp"
#include "rootpoly/rational.hpp"
#include "rootpoly/rootsystem.hpp"
#include "rootpoly/vpoly.hpp"

namespace rootpoly {

// Coefficient-ring adapters used by the generic Laurent algebra.
template <class F>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct coeff_traits<VPoly> {
    static VPoly from_rational(const Rational& r) { return VPoly(r); }
    static bool is_zero(const VPoly& x) { return x.is_zero(); }
};

template <>
struct coeff_traits<QRat> {
    static QRat from_rational(const Rational& r) { return QRat(r); }
    static bool is_zero(const QRat& x) { return x.is_zero(); }
};

// Element of the group algebra of the weight lattice: a finite F-linear
// combination of formal exponentials X^lambda, lambda a Weight.  Terms are
// kept in graded-lex order with no explicitly stored zeros.
template <class F>
class LaurentPoly {
  public:
    using Term = std::pair<const Weight, F>;

    LaurentPoly() = default;
    explicit LaurentPoly(const RootSystem* rs) : rs_(rs) {}

    static LaurentPoly zero(const RootSystem& rs) { return LaurentPoly(&rs); }
    static LaurentPoly monomial(const RootSystem& rs, const Weight& w, F c) {
        rs.check_weight(w);
        LaurentPoly p(&rs);
        if (!coeff_traits<F>::is_zero(c)) p.terms_.emplace(w, std::move(c));
        return p;
    }
    static LaurentPoly one(const RootSystem& rs) {
        return monomial(rs, Weight::zero(rs.rank), coeff_traits<F>::from_rational(Rational(1)));
    }

    const RootSystem& root_system() const {
        if (!rs_) throw domain_error("Laurent polynomial without a root system");
        return *rs_;
    }
    const std::map<Weight, F>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    F coeff(const Weight& w) const {
        auto it = terms_.find(w);
        if (it == terms_.end()) return F{};
        return it->second;
    }
    F constant_term() const { return coeff(Weight::zero(root_system().rank)); }

    void add_term(const Weight& w, const F& c) {
        if (coeff_traits<F>::is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second = it->second + c;
            if (coeff_traits<F>::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_compatible(b);
        LaurentPoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_compatible(b);
        LaurentPoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, negate(c));
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r(a.rs_);
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, negate(c));
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check_compatible(b);
        LaurentPoly r(a.rs_ ? a.rs_ : b.rs_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const F& s) {
        LaurentPoly r(a.rs_);
        if (coeff_traits<F>::is_zero(s)) return r;
        for (const auto& [w, c] : a.terms_) r.add_term(w, c * s);
        return r;
    }
    friend LaurentPoly operator*(const F& s, const LaurentPoly& a) { return a * s; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }

    LaurentPoly scale(const Rational& s) const {
        return *this * coeff_traits<F>::from_rational(s);
    }

    // X^mu -> X^{-mu}; realizes complex conjugation on the torus for real
    // coefficient rings.
    LaurentPoly bar() const {
        LaurentPoly r(rs_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(-w, c);
        return r;
    }

    LaurentPoly map_exponents(const auto& fn) const {
        LaurentPoly r(rs_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(fn(w), c);
        return r;
    }

    LaurentPoly weyl_act(const WeylElement& g) const {
        const RootSystem& rs = root_system();
        return map_exponents([&](const Weight& w) { return rs.apply(g, w); });
    }
    LaurentPoly reflect(const Root& alpha) const {
        const RootSystem& rs = root_system();
        return map_exponents([&](const Weight& w) { return rs.reflect(alpha, w); });
    }
    LaurentPoly simple_reflect(int i) const {
        const RootSystem& rs = root_system();
        return map_exponents([&](const Weight& w) { return rs.simple_reflect(i, w); });
    }

    bool is_invariant() const {
        for (int i = 0; i < root_system().rank; ++i)
            if (!(simple_reflect(i) == *this)) return false;
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + coeff_to_string(c) + ")X^" + w.to_string();
        }
        return s;
    }

  private:
    static F negate(const F& c) { return coeff_traits<F>::from_rational(Rational(-1)) * c; }
    static std::string coeff_to_string(const Rational& c) { return rat_to_string(c); }
    static std::string coeff_to_string(const VPoly& c) { return c.to_string(); }
    static std::string coeff_to_string(const QRat& c) { return c.to_string(); }

    void check_compatible(const LaurentPoly& o) const {
        if (rs_ && o.rs_ && rs_ != o.rs_)
            throw domain_error("Laurent polynomials over different root systems");
    }

    const RootSystem* rs_ = nullptr;
    std::map<Weight, F> terms_;
};

// Directional derivative: X^lambda -> <lambda, xi> X^lambda, xi given by
// rational fundamental coordinates.
template <class F>
LaurentPoly<F> deriv(const std::vector<Rational>& xi, const LaurentPoly<F>& f) {
    const RootSystem& rs = f.root_system();
    LaurentPoly<F> r(&rs);
    for (const auto& [w, c] : f.terms()) {
        Rational s = rs.inner_weight_vec(w, xi);
        if (s == 0) continue;
        r.add_term(w, c * coeff_traits<F>::from_rational(s));
    }
    return r;
}

// Exact division by (1 - X^{-alpha}).  Terms are grouped into lines
// mu + Z*alpha; on each line the quotient coefficients are the suffix sums of
// the input coefficients, and divisibility means every line sums to zero.
template <class F>
LaurentPoly<F> div_exact(const LaurentPoly<F>& f, const Root& alpha) {
    const RootSystem& rs = f.root_system();
    // Line key: mu - t*alpha with t = floor(<mu, alpha^vee>/2); constant on
    // each line because <alpha, alpha^vee> = 2.
    std::map<Weight, std::map<long, F>> lines;
    for (const auto& [w, c] : f.terms()) {
        long p = rs.pairing(alpha, w);
        long t = p >= 0 ? p / 2 : -((-p + 1) / 2);
        Weight key = w - static_cast<int>(t) * alpha.fund;
        lines[key][t] = c;
    }
    LaurentPoly<F> out(&rs);
    for (const auto& [key, line] : lines) {
        F total{};
        for (const auto& [t, c] : line) total = total + c;
        if (!coeff_traits<F>::is_zero(total)) {
            Weight witness = key + static_cast<int>(line.begin()->first) * alpha.fund;
            throw remainder_error("not divisible by 1 - X^{-alpha}: line through X^" +
                                  witness.to_string() + " has nonzero sum");
        }
        // Quotient coefficient at t is sum_{t' >= t} c_{t'}; it is constant
        // between consecutive input positions and vanishes below the lowest
        // one (the line sum is zero), so emit each suffix value on the gap it
        // covers, iterating t descending.
        F suffix{};
        for (auto it = line.rbegin(); it != line.rend(); ++it) {
            suffix = suffix + it->second;
            if (coeff_traits<F>::is_zero(suffix)) continue;
            auto below = std::next(it);
            long lo = below == line.rend() ? it->first : below->first + 1;
            for (long s = it->first; s >= lo; --s)
                out.add_term(key + static_cast<int>(s) * alpha.fund, suffix);
        }
    }
    return out;
}

template <class F>
LaurentPoly<F> div_exact(const LaurentPoly<F>& f, const Weight& alpha_fund) {
    const Root* r = find_root(f.root_system(), alpha_fund);
    if (!r) throw domain_error("not a positive root: " + alpha_fund.to_string());
    return div_exact(f, *r);
}

using LPRat = LaurentPoly<Rational>;
using LPVPoly = LaurentPoly<VPoly>;
using LPQRat = LaurentPoly<QRat>;

}  // namespace rootpoly
