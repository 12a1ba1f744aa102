#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>
#include <string>

#include "rootpoly/errors.hpp"

namespace rootpoly {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in canonical form: gcd(num, den) = 1,
// den >= 1.  All arithmetic is exact.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

// Canonicalizing constructor accepting any nonzero denominator sign.
inline Rational make_rat(Int p, Int q) {
    if (q == 0) throw division_error("zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rational(p, q);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline int sign_of(const Rational& r) { return r.sign(); }

// Canonical decimal string: "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Accepts an optionally signed integer or "p/q" pair; rejects anything else.
inline Rational rat_from_string(const std::string& s) {
    auto bad = [&]() -> Rational {
        throw domain_error("not a rational literal: '" + s + "'");
    };
    std::size_t i = 0;
    auto scan_int = [&](std::string& out) {
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            if (s[i] == '-') out.push_back(s[i]);
            ++i;
        }
        std::size_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            out.push_back(s[i++]);
            ++digits;
        }
        return digits > 0;
    };
    std::string p, q;
    if (!scan_int(p)) return bad();
    if (i == s.size()) return Rational(Int(p));
    if (s[i] != '/') return bad();
    ++i;
    if (!scan_int(q) || i != s.size()) return bad();
    Int qi(q);
    if (qi == 0) throw division_error("zero denominator in '" + s + "'");
    return make_rat(Int(p), qi);
}

inline Rational rat_div(const Rational& a, const Rational& b) {
    if (b == 0) throw division_error("rational division by zero");
    return a / b;
}

// floor(r) as an exact integer.
inline Int rat_floor(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw division_error("zero raised to a negative power");
        return Rational(0);
    }
    Rational b = e > 0 ? base : rat_div(Rational(1), base);
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact Gaussian rational a + bi.
struct ComplexRational {
    Rational re{0};
    Rational im{0};

    ComplexRational() = default;
    ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit from real
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    ComplexRational conj() const { return {re, -im}; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
        Rational n2 = b.re * b.re + b.im * b.im;
        if (n2 == 0) throw division_error("complex rational division by zero");
        return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
    }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline std::string to_string(const ComplexRational& z) {
    std::ostringstream os;
    os << rat_to_string(z.re);
    if (z.im != 0) os << (z.im > 0 ? "+" : "") << rat_to_string(z.im) << "i";
    return os.str();
}

}  // namespace rootpoly
