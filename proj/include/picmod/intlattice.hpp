#pragma once

// Integer lattice routines: Smith-style diagonalization with unimodular
// transforms and saturated kernel lattices.  The kernel basis comes out of
// the row transform, so it spans ker as a direct summand of Z^n, not merely
// a finite-index sublattice — restricted-form determinants depend on this.

#include "picmod/matrix.hpp"
#include "picmod/rational.hpp"

namespace picmod {

// u * a * v = d with u, v unimodular and d diagonal (divisor chain is not
// enforced; kernels and ranks only need the zero pattern).
struct IntDiagonalization {
    Matrix<Int> u;  // m x m
    Matrix<Int> d;  // m x n
    Matrix<Int> v;  // n x n
};

inline IntDiagonalization integer_diagonalize(const Matrix<Int>& a) {
    std::size_t m = a.rows(), n = a.cols();
    Matrix<Int> d = a;
    Matrix<Int> u = Matrix<Int>::identity(m);
    Matrix<Int> v = Matrix<Int>::identity(n);

    auto row_op = [&](std::size_t i, std::size_t k, const Int& q) {
        // row_i -= q * row_k, applied to d and u in lockstep
        for (std::size_t j = 0; j < n; ++j) d(i, j) -= q * d(k, j);
        for (std::size_t j = 0; j < m; ++j) u(i, j) -= q * u(k, j);
    };
    auto col_op = [&](std::size_t j, std::size_t k, const Int& q) {
        for (std::size_t i = 0; i < m; ++i) d(i, j) -= q * d(i, k);
        for (std::size_t i = 0; i < n; ++i) v(i, j) -= q * v(i, k);
    };
    auto swap_rows = [&](std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(d(i, j), d(k, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(u(i, j), u(k, j));
    };
    auto swap_cols = [&](std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(d(i, j), d(i, k));
        for (std::size_t i = 0; i < n; ++i) std::swap(v(i, j), v(i, k));
    };

    for (std::size_t t = 0; t < m && t < n; ++t) {
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m && !found; ++i)
            for (std::size_t j = t; j < n && !found; ++j)
                if (sgn(d(i, j)) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(pi, t);
        swap_cols(pj, t);

        // euclidean descent until row t and column t are clear beyond (t,t)
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(d(i, t)) == 0) continue;
                Int q = d(i, t) / d(t, t);
                row_op(i, t, q);
                if (sgn(d(i, t)) != 0) {
                    swap_rows(i, t);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(d(t, j)) == 0) continue;
                Int q = d(t, j) / d(t, t);
                col_op(j, t, q);
                if (sgn(d(t, j)) != 0) {
                    swap_cols(j, t);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (sgn(d(t, t)) < 0) {
            for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
        }
    }
    return {u, d, v};
}

// Z-basis of the saturated lattice { x in Z^m : x A = 0 } (row vectors).
inline std::vector<std::vector<Int>> row_kernel_lattice(const Matrix<Int>& a) {
    IntDiagonalization s = integer_diagonalize(a);
    std::size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<Int>> basis;
    for (std::size_t i = 0; i < m; ++i)
        if (i >= n || sgn(s.d(i, i)) == 0) basis.push_back(s.u.row(i));
    return basis;
}

}  // namespace picmod
