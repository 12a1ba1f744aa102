#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rootpoly/errors.hpp"
#include "rootpoly/linalg.hpp"
#include "rootpoly/rational.hpp"

namespace rootpoly {

inline constexpr int kMaxRank = 4;

// Integral weight in fundamental-weight coordinates.  Doubles as the exponent
// type of every Laurent polynomial in the library.
struct Weight {
    std::array<int, kMaxRank> c{};
    int n = 0;

    Weight() = default;
    Weight(std::initializer_list<int> init) {
        if (init.size() > kMaxRank) throw domain_error("rank exceeds 4");
        n = static_cast<int>(init.size());
        int i = 0;
        for (int v : init) c[static_cast<std::size_t>(i++)] = v;
    }
    static Weight zero(int rank) {
        Weight w;
        w.n = rank;
        return w;
    }
    static Weight from_vector(const std::vector<int>& v) {
        if (v.size() > kMaxRank) throw domain_error("rank exceeds 4");
        Weight w;
        w.n = static_cast<int>(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w.c[i] = v[i];
        return w;
    }

    int operator[](std::size_t i) const { return c[i]; }
    int& operator[](std::size_t i) { return c[i]; }
    int rank() const { return n; }
    // Coordinate sum; for dominant weights this is the height used by all
    // box/cap bounds.
    int height() const {
        int s = 0;
        for (int i = 0; i < n; ++i) s += c[static_cast<std::size_t>(i)];
        return s;
    }
    bool is_zero() const {
        for (int i = 0; i < n; ++i)
            if (c[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r = a;
        for (int i = 0; i < a.n; ++i) r.c[static_cast<std::size_t>(i)] += b.c[static_cast<std::size_t>(i)];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight r = a;
        for (int i = 0; i < a.n; ++i) r.c[static_cast<std::size_t>(i)] -= b.c[static_cast<std::size_t>(i)];
        return r;
    }
    friend Weight operator-(const Weight& a) {
        Weight r = a;
        for (int i = 0; i < a.n; ++i) r.c[static_cast<std::size_t>(i)] = -r.c[static_cast<std::size_t>(i)];
        return r;
    }
    friend Weight operator*(int s, const Weight& a) {
        Weight r = a;
        for (int i = 0; i < a.n; ++i) r.c[static_cast<std::size_t>(i)] *= s;
        return r;
    }
    friend bool operator==(const Weight& a, const Weight& b) { return a.n == b.n && a.c == b.c; }

    // Graded lexicographic: by coordinate sum, then lex.  Total and
    // deterministic; fixes every iteration and serialization order.
    friend bool operator<(const Weight& a, const Weight& b) {
        int ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a.c < b.c;
    }

    std::vector<int> to_vector() const {
        return std::vector<int>(c.begin(), c.begin() + n);
    }
    std::string to_string() const {
        std::string s = "(";
        for (int i = 0; i < n; ++i) {
            if (i) s += ",";
            s += std::to_string(c[static_cast<std::size_t>(i)]);
        }
        return s + ")";
    }
};

// Root stored in simple-root coordinates together with derived data.
struct Root {
    std::array<int, kMaxRank> simple{};
    Weight fund;                           // same vector in fundamental coordinates
    std::array<int, kMaxRank> coroot{};    // <w, alpha^vee> = sum_j w_j * coroot[j]
    Rational len2;                         // <alpha, alpha>
    int cls = 0;                           // length class, 0 = long
    int height = 0;                        // sum of simple coordinates
};

// Nonnegative multiplicity parameter per length class (class 0 = long roots).
struct MultiplicityFn {
    std::vector<int> per_class;

    static MultiplicityFn constant(int k, int num_classes) {
        if (k < 0) throw domain_error("multiplicity must be nonnegative");
        return {std::vector<int>(static_cast<std::size_t>(num_classes), k)};
    }
    int of_class(int cls) const { return per_class[static_cast<std::size_t>(cls)]; }
    void validate(int num_classes) const {
        if (static_cast<int>(per_class.size()) != num_classes)
            throw domain_error("multiplicity function has wrong number of classes");
        for (int k : per_class)
            if (k < 0) throw domain_error("multiplicity must be nonnegative");
    }
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < per_class.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(per_class[i]);
        }
        return s;
    }
};

// Word in the simple reflections; composition reads left to right, so the
// rightmost generator acts first.
struct WeylElement {
    std::vector<int> word;
    WeylElement inverse() const {
        WeylElement w;
        w.word.assign(word.rbegin(), word.rend());
        return w;
    }
};

// Finite crystallographic root system of type A/B/C/D, rank <= 4, with the
// rank-one system normalized to <alpha, alpha> = 4 and long roots of squared
// length 4 in types B, C, D.
class RootSystem {
  public:
    char label = 'A';
    int rank = 1;
    Mat<Rational> simple_gram;     // <alpha_i, alpha_j>
    Mat<int> cartan;               // C_ij = 2<alpha_i,alpha_j>/<alpha_j,alpha_j>
    Mat<Rational> cartan_inv_t;    // (C^T)^{-1}: fundamental -> simple coordinates
    Mat<Rational> fund_gram;       // <pi_i, pi_j>
    std::vector<Root> positive;    // sorted by (height, lex simple coords)
    std::vector<Rational> class_len2;  // distinct root lengths, descending

    static RootSystem build(char label, int rank);
    static RootSystem build(const std::string& type) {
        if (type.size() != 2 || type[1] < '1' || type[1] > '9')
            throw domain_error("bad root system type '" + type + "' (expected e.g. A2, C3)");
        return build(type[0], type[1] - '0');
    }

    std::string type_string() const { return std::string(1, label) + std::to_string(rank); }
    int num_classes() const { return static_cast<int>(class_len2.size()); }
    int num_positive() const { return static_cast<int>(positive.size()); }

    void check_weight(const Weight& w) const {
        if (w.rank() != rank) throw domain_error("weight rank mismatch");
    }

    // ---- bilinear form ----

    Rational inner(const Weight& a, const Weight& b) const {
        check_weight(a);
        check_weight(b);
        Rational s(0);
        for (int i = 0; i < rank; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < rank; ++j)
                s += Rational(a[static_cast<std::size_t>(i)]) * fund_gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     b[static_cast<std::size_t>(j)];
        }
        return s;
    }

    // Form on rational vectors in fundamental coordinates (directions xi).
    Rational inner_vec(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
        Rational s(0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                s += a[static_cast<std::size_t>(i)] * fund_gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     b[static_cast<std::size_t>(j)];
        return s;
    }

    Rational inner_weight_vec(const Weight& a, const std::vector<Rational>& b) const {
        check_weight(a);
        Rational s(0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                s += Rational(a[static_cast<std::size_t>(i)]) * fund_gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                     b[static_cast<std::size_t>(j)];
        return s;
    }

    // <w, alpha^vee>, always an integer.
    long pairing(const Root& alpha, const Weight& w) const {
        check_weight(w);
        long s = 0;
        for (int j = 0; j < rank; ++j)
            s += static_cast<long>(alpha.coroot[static_cast<std::size_t>(j)]) * w[static_cast<std::size_t>(j)];
        return s;
    }

    Rational inner_root_vec(const Root& alpha, const std::vector<Rational>& xi) const {
        // <alpha, xi> = sum_j b_j <alpha_j, xi> with <alpha_j, xi> = xi_j * <alpha_j,alpha_j>/2.
        Rational s(0);
        for (int j = 0; j < rank; ++j) {
            int b = alpha.simple[static_cast<std::size_t>(j)];
            if (b == 0) continue;
            s += Rational(b) * xi[static_cast<std::size_t>(j)] * simple_gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] / 2;
        }
        return s;
    }

    // ---- reflections and the Weyl group ----

    Weight reflect(const Root& alpha, const Weight& w) const {
        long p = pairing(alpha, w);
        Weight r = w;
        for (int j = 0; j < rank; ++j)
            r[static_cast<std::size_t>(j)] -= static_cast<int>(p) * alpha.fund[static_cast<std::size_t>(j)];
        return r;
    }

    Weight simple_reflect(int i, const Weight& w) const {
        Weight r = w;
        int p = w[static_cast<std::size_t>(i)];
        for (int j = 0; j < rank; ++j)
            r[static_cast<std::size_t>(j)] -= p * cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return r;
    }

    std::vector<Rational> simple_reflect_vec(int i, const std::vector<Rational>& f) const {
        std::vector<Rational> r = f;
        Rational p = f[static_cast<std::size_t>(i)];
        for (int j = 0; j < rank; ++j)
            r[static_cast<std::size_t>(j)] -= p * cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return r;
    }

    Weight apply(const WeylElement& w, const Weight& x) const {
        Weight r = x;
        for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = simple_reflect(*it, r);
        return r;
    }

    std::vector<Weight> weyl_orbit(const Weight& w) const {
        check_weight(w);
        std::set<Weight> seen{w};
        std::vector<Weight> queue{w};
        while (!queue.empty()) {
            Weight cur = queue.back();
            queue.pop_back();
            for (int i = 0; i < rank; ++i) {
                Weight nxt = simple_reflect(i, cur);
                if (seen.insert(nxt).second) queue.push_back(nxt);
            }
        }
        return {seen.begin(), seen.end()};
    }

    // Orbit of a rational direction vector (fundamental coordinates).
    std::vector<std::vector<Rational>> weyl_orbit_vec(const std::vector<Rational>& xi) const {
        std::set<std::vector<Rational>> seen{xi};
        std::vector<std::vector<Rational>> queue{xi};
        while (!queue.empty()) {
            auto cur = queue.back();
            queue.pop_back();
            for (int i = 0; i < rank; ++i) {
                auto nxt = simple_reflect_vec(i, cur);
                if (seen.insert(nxt).second) queue.push_back(nxt);
            }
        }
        return {seen.begin(), seen.end()};
    }

    // ---- dominance ----

    bool is_dominant(const Weight& w) const {
        check_weight(w);
        for (int i = 0; i < rank; ++i)
            if (w[static_cast<std::size_t>(i)] < 0) return false;
        return true;
    }

    std::vector<Rational> weight_to_simple(const Weight& w) const {
        std::vector<Rational> f(static_cast<std::size_t>(rank));
        for (int i = 0; i < rank; ++i) f[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)];
        return rat_mat_vec(cartan_inv_t, f);
    }

    // mu <= lambda in dominance order: lambda - mu is a nonnegative integral
    // combination of simple roots.
    bool dominance_leq(const Weight& mu, const Weight& lambda) const {
        auto s = weight_to_simple(lambda - mu);
        for (const auto& x : s)
            if (x < 0 || !is_integer(x)) return false;
        return true;
    }

    // All dominant mu <= lambda, sorted by height of lambda - mu descending,
    // ties lexicographically by mu; lambda itself is last.
    std::vector<Weight> lower_ideal(const Weight& lambda) const {
        if (!is_dominant(lambda)) throw domain_error("lower_ideal requires a dominant weight");
        auto bound = weight_to_simple(lambda);
        std::vector<int> maxs(static_cast<std::size_t>(rank));
        for (int j = 0; j < rank; ++j) {
            if (bound[static_cast<std::size_t>(j)] < 0) return {};
            maxs[static_cast<std::size_t>(j)] = static_cast<int>(rat_floor(bound[static_cast<std::size_t>(j)]));
        }
        struct Entry {
            int ht;
            Weight mu;
        };
        std::vector<Entry> found;
        std::vector<int> s(static_cast<std::size_t>(rank), 0);
        while (true) {
            Weight mu = lambda;
            bool dominant = true;
            for (int i = 0; i < rank && dominant; ++i) {
                long v = mu[static_cast<std::size_t>(i)];
                for (int j = 0; j < rank; ++j)
                    v -= static_cast<long>(s[static_cast<std::size_t>(j)]) *
                         cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                if (v < 0) dominant = false;
                mu[static_cast<std::size_t>(i)] = static_cast<int>(v);
            }
            if (dominant) {
                int ht = 0;
                for (int j = 0; j < rank; ++j) ht += s[static_cast<std::size_t>(j)];
                found.push_back({ht, mu});
            }
            int j = 0;
            while (j < rank && s[static_cast<std::size_t>(j)] == maxs[static_cast<std::size_t>(j)]) {
                s[static_cast<std::size_t>(j)] = 0;
                ++j;
            }
            if (j == rank) break;
            ++s[static_cast<std::size_t>(j)];
        }
        std::sort(found.begin(), found.end(), [](const Entry& a, const Entry& b) {
            if (a.ht != b.ht) return a.ht > b.ht;
            return a.mu.c < b.mu.c;
        });
        std::vector<Weight> out;
        out.reserve(found.size());
        for (auto& e : found) out.push_back(e.mu);
        return out;
    }

    // ---- multiplicity-weighted data ----

    // Fundamental coordinates of sum_{alpha > 0} k_alpha alpha.
    std::vector<Rational> rho_k(const MultiplicityFn& k) const {
        k.validate(num_classes());
        std::vector<Rational> r(static_cast<std::size_t>(rank), Rational(0));
        for (const Root& a : positive)
            for (int j = 0; j < rank; ++j)
                r[static_cast<std::size_t>(j)] += Rational(k.of_class(a.cls)) * a.fund[static_cast<std::size_t>(j)];
        return r;
    }

    // <lambda, lambda + sum_alpha k_alpha alpha>: the spectral datum attached
    // to every constructed orthogonal polynomial.
    Rational eigenvalue(const MultiplicityFn& k, const Weight& lambda) const {
        auto r2 = rho_k(k);
        return inner(lambda, lambda) + inner_weight_vec(lambda, r2);
    }

  private:
    void generate_roots_and_check();
};

inline RootSystem RootSystem::build(char label, int rank) {
    RootSystem rs;
    rs.label = label;
    rs.rank = rank;
    if (rank < 1 || rank > kMaxRank) throw domain_error("rank must be between 1 and 4");
    bool ok = (label == 'A') || ((label == 'B' || label == 'C') && rank >= 2) ||
              (label == 'D' && rank >= 3);
    if (!ok) throw domain_error(std::string("unsupported type ") + label + std::to_string(rank));

    std::size_t n = static_cast<std::size_t>(rank);
    rs.simple_gram.assign(n, std::vector<Rational>(n, Rational(0)));
    auto& g = rs.simple_gram;
    auto chain = [&](std::size_t upto, const Rational& val) {
        for (std::size_t i = 0; i + 1 <= upto; ++i) g[i][i + 1] = g[i + 1][i] = val;
    };
    switch (label) {
        case 'A':
            for (std::size_t i = 0; i < n; ++i) g[i][i] = 4;
            chain(n - 1, Rational(-2));
            break;
        case 'B':
            for (std::size_t i = 0; i < n; ++i) g[i][i] = 4;
            g[n - 1][n - 1] = 2;
            chain(n - 1, Rational(-2));
            break;
        case 'C':
            for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
            g[n - 1][n - 1] = 4;
            chain(n - 1, Rational(-1));
            g[n - 2][n - 1] = g[n - 1][n - 2] = -2;
            break;
        case 'D':
            for (std::size_t i = 0; i < n; ++i) g[i][i] = 4;
            if (n >= 3) {
                chain(n - 2, Rational(-2));
                g[n - 3][n - 1] = g[n - 1][n - 3] = -2;
            }
            break;
        default:
            throw domain_error("unsupported type label");
    }

    rs.cartan.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational c = 2 * g[i][j] / g[j][j];
            if (!is_integer(c)) throw math_error("non-integral Cartan entry");
            rs.cartan[i][j] = static_cast<int>(num(c));
        }

    Mat<Rational> cart(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cart[i][j] = rs.cartan[i][j];
    Mat<Rational> cinv = rat_inverse(cart);
    rs.cartan_inv_t = rat_transpose(cinv);
    // fund_gram = C^{-1} G C^{-T}.
    Mat<Rational> tmp(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) tmp[i][j] += cinv[i][k] * g[k][j];
    rs.fund_gram.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) rs.fund_gram[i][j] += tmp[i][k] * rs.cartan_inv_t[k][j];

    rs.generate_roots_and_check();
    return rs;
}

inline void RootSystem::generate_roots_and_check() {
    std::size_t n = static_cast<std::size_t>(rank);
    using SC = std::array<int, kMaxRank>;
    auto inner_sc = [&](const SC& a, const SC& b) {
        Rational s(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a[i] != 0 && b[j] != 0) s += Rational(a[i]) * simple_gram[i][j] * b[j];
        return s;
    };
    auto reflect_sc = [&](const SC& beta, const SC& alpha) {
        Rational p = 2 * inner_sc(beta, alpha) / inner_sc(alpha, alpha);
        if (!is_integer(p)) throw math_error("non-integral root pairing");
        int pi = static_cast<int>(num(p));
        SC r = beta;
        for (std::size_t j = 0; j < n; ++j) r[j] -= pi * alpha[j];
        return r;
    };

    std::set<SC> roots;
    std::vector<SC> queue;
    for (std::size_t i = 0; i < n; ++i) {
        SC e{};
        e[i] = 1;
        roots.insert(e);
        queue.push_back(e);
        for (auto& x : e) x = -x;
        e[i] = -1;
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        SC beta = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            SC alpha{};
            alpha[i] = 1;
            SC r = reflect_sc(beta, alpha);
            if (roots.insert(r).second) queue.push_back(r);
        }
    }

    // Closure and integrality over the full (non-simple) reflection set.
    for (const SC& a : roots)
        for (const SC& b : roots)
            if (roots.find(reflect_sc(b, a)) == roots.end())
                throw math_error("root system not closed under reflections");

    std::vector<SC> pos;
    for (const SC& r : roots) {
        bool nonneg = true, nonpos = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (r[j] > 0) nonpos = false;
            if (r[j] < 0) nonneg = false;
        }
        if (!nonneg && !nonpos) throw math_error("root with mixed-sign coordinates");
        if (nonneg) pos.push_back(r);
    }
    std::sort(pos.begin(), pos.end(), [](const SC& a, const SC& b) {
        int ha = 0, hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        if (ha != hb) return ha < hb;
        return a < b;
    });

    std::set<Rational> lengths;
    for (const SC& r : pos) lengths.insert(inner_sc(r, r));
    if (lengths.size() > 2) throw math_error("more than two root lengths");
    class_len2.assign(lengths.rbegin(), lengths.rend());  // descending: long first

    for (const SC& b : pos) {
        Root r;
        r.simple = b;
        r.len2 = inner_sc(b, b);
        r.cls = static_cast<int>(
            std::find(class_len2.begin(), class_len2.end(), r.len2) - class_len2.begin());
        r.height = 0;
        for (std::size_t j = 0; j < n; ++j) r.height += b[j];
        r.fund = Weight::zero(rank);
        for (std::size_t i = 0; i < n; ++i) {
            long v = 0;
            for (std::size_t j = 0; j < n; ++j)
                v += static_cast<long>(b[j]) * cartan[j][i];
            r.fund[i] = static_cast<int>(v);
        }
        for (std::size_t j = 0; j < n; ++j) {
            // <pi_j, alpha^vee> = b_j <alpha_j,alpha_j> / <alpha,alpha>.
            Rational cr = Rational(b[j]) * simple_gram[j][j] / r.len2;
            if (!is_integer(cr)) throw math_error("non-integral coroot pairing");
            r.coroot[j] = static_cast<int>(num(cr));
        }
        positive.push_back(r);
    }
}

inline const Root* find_root(const RootSystem& rs, const Weight& fund_coords) {
    for (const Root& r : rs.positive)
        if (r.fund == fund_coords) return &r;
    return nullptr;
}

}  // namespace rootpoly
