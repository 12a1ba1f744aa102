#pragma once

#include <utility>
#include <vector>

#include "rootpoly/errors.hpp"
#include "rootpoly/rational.hpp"
#include "rootpoly/vpoly.hpp"

namespace rootpoly {

template <class T>
using Mat = std::vector<std::vector<T>>;

inline Mat<Rational> rat_identity(std::size_t n) {
    Mat<Rational> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat<Rational> rat_transpose(const Mat<Rational>& a) {
    if (a.empty()) return {};
    Mat<Rational> t(a[0].size(), std::vector<Rational>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline std::vector<Rational> rat_mat_vec(const Mat<Rational>& a, const std::vector<Rational>& x) {
    std::vector<Rational> r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

// Exact Gauss-Jordan inverse; throws singular_error on rank deficiency.
inline Mat<Rational> rat_inverse(Mat<Rational> a) {
    std::size_t n = a.size();
    Mat<Rational> inv = rat_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw singular_error("singular matrix in rat_inverse");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Exact dense solve over the rationals with partial pivoting.
inline std::vector<Rational> rat_solve(Mat<Rational> a, std::vector<Rational> b) {
    std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw singular_error("singular matrix in rat_solve");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        Rational s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

// Solution of A x = b over Q(v) in Cramer form: x_i = nums[i] / den with den =
// det(A) up to the sign of row swaps.  Fraction-free Bareiss elimination; every
// division below is exact in Q[v].
struct BareissSolution {
    std::vector<VPoly> nums;
    VPoly den;
};

inline BareissSolution bareiss_solve(Mat<VPoly> a, std::vector<VPoly> b) {
    std::size_t n = a.size();
    if (n == 0) return {{}, VPoly(Rational(1))};
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    VPoly prev(Rational(1));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw singular_error("singular matrix in bareiss_solve");
        std::swap(a[piv], a[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            for (std::size_t j = col + 1; j <= n; ++j)
                a[r][j] = exact_div(a[col][col] * a[r][j] - a[r][col] * a[col][j], prev);
            a[r][col] = VPoly();
        }
        prev = a[col][col];
    }
    // After elimination a[i][i] is the i-th leading principal minor of the
    // permuted matrix and a[n-1][n-1] its determinant; recover the Cramer
    // numerators N_i = x_i * det by exact back substitution.
    const VPoly& det = a[n - 1][n - 1];
    std::vector<VPoly> nums(n);
    for (std::size_t i = n; i-- > 0;) {
        VPoly s = a[i][n] * det;
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * nums[j];
        nums[i] = exact_div(s, a[i][i]);
    }
    return {std::move(nums), det};
}

}  // namespace rootpoly
