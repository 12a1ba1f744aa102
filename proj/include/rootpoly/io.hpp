#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootpoly/errors.hpp"
#include "rootpoly/laurent.hpp"
#include "rootpoly/orthopoly.hpp"
#include "rootpoly/rational.hpp"
#include "rootpoly/rootsystem.hpp"
#include "rootpoly/vpoly.hpp"

namespace rootpoly {

// Key order in emitted objects is fixed, so output is byte-stable.
using Json = nlohmann::ordered_json;

struct parse_error : math_error {
    explicit parse_error(const std::string& what) : math_error(what) {}
};

// ---------------------------------------------------------------------------
// JSON emitters.  Exact scalars travel as strings ("3" or "3/4"); the only
// floating-point values in any output are produced by format_double below.
// ---------------------------------------------------------------------------

inline Json rational_to_json(const Rational& r) { return Json(rat_to_string(r)); }

inline Json weight_to_json(const Weight& w, int rank) {
    Json a = Json::array();
    for (int j = 0; j < rank; ++j) a.push_back(w[j]);
    return a;
}

// Ascending exponents, zero coefficients skipped: [[e, "c"], ...].
inline Json vpoly_to_json(const VPoly& p) {
    Json a = Json::array();
    for (int j = 0; j <= p.degree(); ++j) {
        Rational c = p.coeff(j);
        if (c != 0) a.push_back(Json::array({j, rat_to_string(c)}));
    }
    return a;
}

inline Json qrat_to_json(const QRat& q) {
    Json o = Json::object();
    o["num"] = vpoly_to_json(q.num());
    o["den"] = vpoly_to_json(q.den());
    return o;
}

inline Json coeff_to_json(const Rational& c) { return rational_to_json(c); }
inline Json coeff_to_json(const VPoly& c) { return vpoly_to_json(c); }
inline Json coeff_to_json(const QRat& c) { return qrat_to_json(c); }

template <class F>
Json laurent_to_json(const LaurentPoly<F>& f) {
    const RootSystem& rs = f.root_system();
    Json o = Json::object();
    o["type"] = rs.type_string();
    Json terms = Json::array();
    for (const auto& [w, c] : f.terms()) {
        Json t = Json::object();
        t["exp"] = weight_to_json(w, rs.rank);
        t["coeff"] = coeff_to_json(c);
        terms.push_back(std::move(t));
    }
    o["terms"] = std::move(terms);
    return o;
}

// Expansion in the orbit-sum basis; support is listed in solver order with the
// top weight last, and the schema is shared by both coefficient rings.
template <class C>
Json orthopoly_to_json(const RootSystem& rs, const OrthoPoly<C>& p) {
    Json o = Json::object();
    o["type"] = rs.type_string();
    o["lambda"] = weight_to_json(p.lambda, rs.rank);
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < p.support.size(); ++i) {
        Json t = Json::object();
        t["mu"] = weight_to_json(p.support[i], rs.rank);
        t["c"] = coeff_to_json(p.coeffs[i]);
        coeffs.push_back(std::move(t));
    }
    o["coeffs"] = std::move(coeffs);
    o["norm"] = coeff_to_json(p.norm2);
    return o;
}

// Variant carrying the second-order eigenvalue, defined for the undeformed
// family where the invariant operator acts.
inline Json orthopoly_to_json(const RootSystem& rs, const MultiplicityFn& k,
                              const OrthoPoly<Rational>& p) {
    Json o = orthopoly_to_json<Rational>(rs, p);
    o["eigenvalue"] = rational_to_json(rs.eigenvalue(k, p.lambda));
    return o;
}

// ---------------------------------------------------------------------------
// JSON parsers.  Each validates shape and re-canonicalizes; malformed input
// raises parse_error rather than producing a partial object.
// ---------------------------------------------------------------------------

inline Rational parse_rational(const Json& j) {
    if (!j.is_string()) throw parse_error("rational must be a string like \"3\" or \"3/4\"");
    return rat_from_string(j.get<std::string>());
}

inline Weight parse_weight(const Json& j, const RootSystem& rs) {
    if (!j.is_array() || static_cast<int>(j.size()) != rs.rank)
        throw parse_error("weight must be an array of length equal to the rank");
    Weight w = Weight::zero(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        if (!j[static_cast<std::size_t>(i)].is_number_integer())
            throw parse_error("weight entries must be integers");
        w[i] = j[static_cast<std::size_t>(i)].get<int>();
    }
    return w;
}

inline VPoly parse_vpoly(const Json& j) {
    if (!j.is_array()) throw parse_error("polynomial must be an array of [exponent, coeff] pairs");
    VPoly p;
    for (const Json& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw parse_error("polynomial term must be [exponent, coeff]");
        int e = t[0].get<int>();
        if (e < 0) throw parse_error("polynomial exponent must be nonnegative");
        p += VPoly::monomial(parse_rational(t[1]), e);
    }
    return p;
}

inline QRat parse_qrat(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw parse_error("coefficient must be {\"num\": ..., \"den\": ...}");
    return QRat(parse_vpoly(j["num"]), parse_vpoly(j["den"]));
}

inline void parse_coeff(const Json& j, Rational& out) { out = parse_rational(j); }
inline void parse_coeff(const Json& j, VPoly& out) { out = parse_vpoly(j); }
inline void parse_coeff(const Json& j, QRat& out) { out = parse_qrat(j); }

template <class F>
LaurentPoly<F> parse_laurent(const Json& j, const RootSystem& rs) {
    if (!j.is_object() || !j.contains("terms"))
        throw parse_error("laurent object must contain \"terms\"");
    if (j.contains("type") && j["type"].get<std::string>() != rs.type_string())
        throw parse_error("laurent object was written for root system " +
                          j["type"].get<std::string>());
    LaurentPoly<F> f(&rs);
    for (const Json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
            throw parse_error("laurent term must contain \"exp\" and \"coeff\"");
        F c{};
        parse_coeff(t["coeff"], c);
        f.add_term(parse_weight(t["exp"], rs), c);
    }
    return f;
}

template <class C>
OrthoPoly<C> parse_orthopoly(const Json& j, const RootSystem& rs) {
    if (!j.is_object() || !j.contains("lambda") || !j.contains("coeffs") || !j.contains("norm"))
        throw parse_error("family member must contain \"lambda\", \"coeffs\", \"norm\"");
    if (j.contains("type") && j["type"].get<std::string>() != rs.type_string())
        throw parse_error("family member was written for root system " +
                          j["type"].get<std::string>());
    OrthoPoly<C> p;
    p.lambda = parse_weight(j["lambda"], rs);
    for (const Json& t : j["coeffs"]) {
        if (!t.is_object() || !t.contains("mu") || !t.contains("c"))
            throw parse_error("expansion term must contain \"mu\" and \"c\"");
        p.support.push_back(parse_weight(t["mu"], rs));
        C c{};
        parse_coeff(t["c"], c);
        p.coeffs.push_back(std::move(c));
    }
    if (p.support.empty() || !(p.support.back() == p.lambda))
        throw parse_error("expansion must list the top weight last");
    parse_coeff(j["norm"], p.norm2);
    return p;
}

// ---------------------------------------------------------------------------
// LaTeX emitters.
// ---------------------------------------------------------------------------

inline std::string rational_to_latex(const Rational& r) {
    if (denominator(r) == 1) return rat_to_string(r);
    std::string sign = r < 0 ? "-" : "";
    Rational a = r < 0 ? -r : r;
    std::ostringstream os;
    os << sign << "\\tfrac{" << numerator(a) << "}{" << denominator(a) << "}";
    return os.str();
}

inline std::string monomial_to_latex(const std::string& var, int e) {
    if (e == 0) return "1";
    if (e == 1) return var;
    return var + "^{" + std::to_string(e) + "}";
}

inline std::string vpoly_to_latex(const VPoly& p, const std::string& var = "v") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= p.degree(); ++j) {
        Rational c = p.coeff(j);
        if (c == 0) continue;
        std::string cs = rational_to_latex(c < 0 ? -c : c);
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        if (j == 0)
            os << cs;
        else if (cs == "1")
            os << monomial_to_latex(var, j);
        else
            os << cs << " " << monomial_to_latex(var, j);
    }
    return os.str();
}

inline std::string qrat_to_latex(const QRat& q, const std::string& var = "v") {
    if (q.den() == VPoly(Rational(1))) return vpoly_to_latex(q.num(), var);
    return "\\frac{" + vpoly_to_latex(q.num(), var) + "}{" + vpoly_to_latex(q.den(), var) + "}";
}

inline std::string weight_to_latex(const Weight& w, int rank) {
    std::ostringstream os;
    os << "(";
    for (int j = 0; j < rank; ++j) os << (j ? "," : "") << w[j];
    os << ")";
    return os.str();
}

inline std::string coeff_to_latex(const Rational& c) { return rational_to_latex(c); }
inline std::string coeff_to_latex(const VPoly& c) { return vpoly_to_latex(c); }
inline std::string coeff_to_latex(const QRat& c) { return qrat_to_latex(c); }

// Coefficient needs parentheses when glued to a symbol if it is a sum.
template <class F>
std::string coeff_factor_latex(const F& c) {
    std::string s = coeff_to_latex(c);
    if (s == "1") return "";
    if (s == "-1") return "-";
    if (s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos)
        return "\\left(" + s + "\\right) ";
    return s + " ";
}

template <class F>
std::string laurent_to_latex(const LaurentPoly<F>& f) {
    if (f.terms().empty()) return "0";
    const RootSystem& rs = f.root_system();
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        bool constant = true;
        for (int j = 0; j < rs.rank; ++j) constant = constant && w[j] == 0;
        if (constant)
            os << coeff_to_latex(c);
        else
            os << coeff_factor_latex(c) << "X^{" << weight_to_latex(w, rs.rank) << "}";
    }
    return os.str();
}

template <class C>
std::string orthopoly_to_latex(const RootSystem& rs, const OrthoPoly<C>& p) {
    std::ostringstream os;
    os << "P_{" << weight_to_latex(p.lambda, rs.rank) << "} = ";
    for (std::size_t i = p.support.size(); i-- > 0;) {
        if (i + 1 < p.support.size()) os << " + ";
        bool zero = true;
        for (int j = 0; j < rs.rank; ++j) zero = zero && p.support[i][j] == 0;
        if (zero)
            os << coeff_to_latex(p.coeffs[i]);
        else
            os << coeff_factor_latex(p.coeffs[i]) << "m_{"
               << weight_to_latex(p.support[i], rs.rank) << "}";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// CSV helpers and float formatting.
// ---------------------------------------------------------------------------

// Shortest representation that round-trips a double exactly.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(cells[i]);
    }
    return out;
}

}  // namespace rootpoly
