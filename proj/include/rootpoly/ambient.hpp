#pragma once

#include <map>
#include <string>
#include <vector>

#include "rootpoly/errors.hpp"
#include "rootpoly/linalg.hpp"
#include "rootpoly/rational.hpp"
#include "rootpoly/rootsystem.hpp"

namespace rootpoly {

// Polynomial on the ambient Euclidean space in the coordinates
// u_j = <alpha_j, x> attached to the simple roots.  Exponent vectors reuse
// Weight as a plain integer tuple with graded-lex order; all exponents are
// nonnegative.
class AmbientPoly {
  public:
    AmbientPoly() = default;
    explicit AmbientPoly(const RootSystem* rs) : rs_(rs) {}

    static AmbientPoly zero(const RootSystem& rs) { return AmbientPoly(&rs); }
    static AmbientPoly monomial(const RootSystem& rs, const Weight& e, Rational c) {
        rs.check_weight(e);
        for (int i = 0; i < e.rank(); ++i)
            if (e[static_cast<std::size_t>(i)] < 0) throw domain_error("negative exponent");
        AmbientPoly p(&rs);
        if (c != 0) p.terms_.emplace(e, std::move(c));
        return p;
    }
    static AmbientPoly one(const RootSystem& rs) {
        return monomial(rs, Weight::zero(rs.rank), Rational(1));
    }
    static AmbientPoly variable(const RootSystem& rs, int j) {
        Weight e = Weight::zero(rs.rank);
        e[static_cast<std::size_t>(j)] = 1;
        return monomial(rs, e, Rational(1));
    }

    const RootSystem& root_system() const {
        if (!rs_) throw domain_error("polynomial without a root system");
        return *rs_;
    }
    const std::map<Weight, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const {  // -1 for the zero polynomial
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.height());
        return d;
    }
    Rational coeff(const Weight& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Weight& e, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend AmbientPoly operator+(const AmbientPoly& a, const AmbientPoly& b) {
        AmbientPoly r = a;
        if (!r.rs_) r.rs_ = b.rs_;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend AmbientPoly operator-(const AmbientPoly& a, const AmbientPoly& b) {
        AmbientPoly r = a;
        if (!r.rs_) r.rs_ = b.rs_;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend AmbientPoly operator*(const AmbientPoly& a, const AmbientPoly& b) {
        AmbientPoly r(a.rs_ ? a.rs_ : b.rs_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend AmbientPoly operator*(const Rational& s, const AmbientPoly& a) {
        AmbientPoly r(a.rs_);
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
        return r;
    }
    friend bool operator==(const AmbientPoly& a, const AmbientPoly& b) {
        return a.terms_ == b.terms_;
    }
    AmbientPoly& operator+=(const AmbientPoly& o) { return *this = *this + o; }
    AmbientPoly& operator-=(const AmbientPoly& o) { return *this = *this - o; }

    // d/du_j.
    AmbientPoly deriv_u(int j) const {
        AmbientPoly r(rs_);
        for (const auto& [e, c] : terms_) {
            int p = e[static_cast<std::size_t>(j)];
            if (p == 0) continue;
            Weight f = e;
            f[static_cast<std::size_t>(j)] = p - 1;
            r.add_term(f, Rational(p) * c);
        }
        return r;
    }

    // u_j -> sum_m L[j][m] u_m, L integral.
    AmbientPoly substitute(const Mat<int>& L) const {
        const RootSystem& rs = root_system();
        std::vector<AmbientPoly> forms;
        for (int j = 0; j < rs.rank; ++j) {
            AmbientPoly f(&rs);
            for (int m = 0; m < rs.rank; ++m)
                f.add_term(unit_expo(rs.rank, m),
                           Rational(L[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)]));
            forms.push_back(f);
        }
        // Power cache per variable, grown on demand.
        std::vector<std::vector<AmbientPoly>> pows(static_cast<std::size_t>(rs.rank));
        for (int j = 0; j < rs.rank; ++j) pows[static_cast<std::size_t>(j)].push_back(one(rs));
        auto power = [&](int j, int p) -> const AmbientPoly& {
            auto& tbl = pows[static_cast<std::size_t>(j)];
            while (static_cast<int>(tbl.size()) <= p)
                tbl.push_back(tbl.back() * forms[static_cast<std::size_t>(j)]);
            return tbl[static_cast<std::size_t>(p)];
        };
        AmbientPoly r(&rs);
        for (const auto& [e, c] : terms_) {
            AmbientPoly m = c * one(rs);
            for (int j = 0; j < rs.rank; ++j)
                if (e[static_cast<std::size_t>(j)] > 0) m = m * power(j, e[static_cast<std::size_t>(j)]);
            r += m;
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + rat_to_string(c) + ")u^" + e.to_string();
        }
        return s;
    }

  private:
    static Weight unit_expo(int rank, int m) {
        Weight e = Weight::zero(rank);
        e[static_cast<std::size_t>(m)] = 1;
        return e;
    }

    const RootSystem* rs_ = nullptr;
    std::map<Weight, Rational> terms_;
};

// Geometric reflection in a root, realized on u-coordinates:
// u_j -> u_j - <alpha_j, alpha^vee> <alpha, x> with <alpha, x> = sum b_m u_m.
inline Mat<int> reflection_matrix(const RootSystem& rs, const Root& alpha) {
    Mat<int> L(static_cast<std::size_t>(rs.rank), std::vector<int>(static_cast<std::size_t>(rs.rank)));
    for (int j = 0; j < rs.rank; ++j) {
        // Row j of the Cartan matrix is the fundamental-coordinate vector of
        // the j-th simple root.
        Weight aj = Weight::from_vector(rs.cartan[static_cast<std::size_t>(j)]);
        int cj = static_cast<int>(rs.pairing(alpha, aj));
        for (int m = 0; m < rs.rank; ++m)
            L[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] =
                (j == m ? 1 : 0) - cj * alpha.simple[static_cast<std::size_t>(m)];
    }
    return L;
}

inline AmbientPoly ambient_reflect(const RootSystem& rs, const Root& alpha, const AmbientPoly& p) {
    return p.substitute(reflection_matrix(rs, alpha));
}

// Exact division by the linear form sum_m b_m u_m; remainder_error otherwise.
inline AmbientPoly divide_by_linear(const AmbientPoly& p0, const std::array<int, kMaxRank>& b) {
    const RootSystem& rs = p0.root_system();
    int m0 = -1;
    for (int m = 0; m < rs.rank; ++m)
        if (b[static_cast<std::size_t>(m)] != 0) {
            m0 = m;
            break;
        }
    if (m0 < 0) throw division_error("division by zero linear form");
    AmbientPoly ell(&rs);
    for (int m = 0; m < rs.rank; ++m) {
        Weight e = Weight::zero(rs.rank);
        e[static_cast<std::size_t>(m)] = 1;
        ell.add_term(e, Rational(b[static_cast<std::size_t>(m)]));
    }
    AmbientPoly p = p0;
    AmbientPoly q(&rs);
    Rational bm0(b[static_cast<std::size_t>(m0)]);
    while (!p.is_zero()) {
        // Reduce a term with maximal exponent in the pivot variable; the terms
        // introduced by the reduction sit strictly lower there, so the loop
        // terminates.
        int top = -1;
        Weight e_best;
        Rational c_best;
        for (const auto& [e, c] : p.terms())
            if (e[static_cast<std::size_t>(m0)] > top) {
                top = e[static_cast<std::size_t>(m0)];
                e_best = e;
                c_best = c;
            }
        if (top == 0)
            throw remainder_error("polynomial is not divisible by the linear form");
        Weight e = e_best;
        e[static_cast<std::size_t>(m0)] = top - 1;
        AmbientPoly t = AmbientPoly::monomial(rs, e, c_best / bm0);
        q += t;
        p -= t * ell;
    }
    return q;
}

}  // namespace rootpoly
