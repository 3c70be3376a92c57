#pragma once

// Integer symplectic machinery for Sp(8,Z): the named 8x8 matrices, the
// normalizer/centralizer classification relative to the order-three element
// M, the Z[w]-module structure on Z^8 with its Hermitian form H_M, theta
// level subgroup membership, fixed sublattices, and the reduction mod 2 of
// the centralizer onto 4x4 unitary matrices over F_4.
//
// Conventions: Z^8 elements are row vectors, a matrix N acts by x -> x N,
// E(x,y) = x E ty with E = [[0, I],[-I, 0]], and w acts on Z^8 as M.

#include <optional>

#include "picmod/cyclotomic.hpp"
#include "picmod/gf4.hpp"
#include "picmod/intlattice.hpp"
#include "picmod/matrix.hpp"

namespace picmod {

using SympMatrix = Matrix<Int>;

inline Matrix<Rational> to_rational_matrix(const Matrix<Int>& m) {
    return m.map<Rational>([](const Int& x) { return Rational(x); });
}

// exact inverse of an integer matrix; throws unless it is integral
inline Matrix<Int> int_inverse(const Matrix<Int>& m) {
    Matrix<Rational> inv = to_rational_matrix(m).inverse();
    return inv.map<Int>([](const Rational& x) {
        if (!x.is_integer()) throw std::domain_error("int_inverse: result not integral");
        return x.numerator();
    });
}

namespace blocks {

// assemble an (s*k) x (s*k) matrix from an s x s grid of k x k blocks
inline Matrix<Int> grid(std::size_t s, std::size_t k, const std::vector<Matrix<Int>>& b) {
    Matrix<Int> m(s * k, s * k);
    for (std::size_t bi = 0; bi < s; ++bi)
        for (std::size_t bj = 0; bj < s; ++bj) {
            const Matrix<Int>& blk = b.at(bi * s + bj);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) m(bi * k + i, bj * k + j) = blk(i, j);
        }
    return m;
}

}  // namespace blocks

// All of the named integer matrices, constructed once.
struct NamedMatrices {
    Matrix<Int> A;    // 4x4, order three on Z^4
    SympMatrix M;     // diag(A, tA^-1), order three in Sp(8,Z)
    SympMatrix E;     // the symplectic form
    SympMatrix T;     // conjugates M to M22
    SympMatrix M22;
    SympMatrix MB;    // swaps the two Z^4 halves pairwise; N_M \ C_M
    SympMatrix Md, Me, Mf;  // act on the eigenspace P^5 as Weyl generators
    SympMatrix Mpr, Mip;    // fix the product locus resp. its isogenous twin
    SympMatrix MC, MD;      // order four resp. two, both centralize M
    SympMatrix M12;         // M * MC, order twelve

    static const NamedMatrices& get() {
        static NamedMatrices n = build();
        return n;
    }

    static SympMatrix heisenberg_upper(const std::array<long, 4>& beta) {
        SympMatrix m = Matrix<Int>::identity(8);
        for (int i = 0; i < 4; ++i) m(i, 4 + i) = 2 * beta[i];
        return m;
    }
    static SympMatrix heisenberg_lower(const std::array<long, 4>& gamma) {
        SympMatrix m = Matrix<Int>::identity(8);
        for (int i = 0; i < 4; ++i) m(4 + i, i) = 2 * gamma[i];
        return m;
    }

private:
    static NamedMatrices build() {
        using blocks::grid;
        NamedMatrices n;
        Matrix<Int> I2 = Matrix<Int>::identity(2);
        Matrix<Int> Z2(2, 2);
        Matrix<Int> I4 = Matrix<Int>::identity(4);
        Matrix<Int> Z4(4, 4);

        n.A = grid(2, 2, {-I2, -I2, I2, Z2});
        Matrix<Int> tAinv = int_inverse(n.A).transpose();
        n.M = grid(2, 4, {n.A, Z4, Z4, tAinv});
        n.E = grid(2, 4, {Z4, I4, -I4, Z4});

        n.T = grid(4, 2, {I2, I2, Z2, -I2,    //
                          I2, Z2, -I2, I2,    //
                          Z2, I2, I2, -I2,    //
                          Z2, -I2, Z2, I2});
        n.M22 = grid(4, 2, {Z2, Z2, -I2, Z2,  //
                            Z2, -I2, Z2, I2,  //
                            I2, Z2, -I2, Z2,  //
                            Z2, -I2, Z2, Z2});

        Matrix<Int> B = grid(2, 2, {Z2, I2, I2, Z2});
        n.MB = grid(2, 4, {B, Z4, Z4, B});

        n.Md = Matrix<Int>{{1, 0, 0, 0, 2, 0, -1, 0},  //
                           {0, 1, 0, 0, 0, 0, 0, 0},   //
                           {0, 0, 1, 0, -1, 0, 2, 0},  //
                           {0, 0, 0, 1, 0, 0, 0, 0},   //
                           {0, 0, 0, 0, 1, 0, 0, 0},   //
                           {0, 0, 0, 0, 0, 1, 0, 0},   //
                           {0, 0, 0, 0, 0, 0, 1, 0},   //
                           {0, 0, 0, 0, 0, 0, 0, 1}};
        n.Me = Matrix<Int>{{-1, 0, 0, 0, 0, 1, 0, -2},  //
                           {0, 1, 0, 0, -1, 0, -1, 0},  //
                           {0, 0, -1, 0, 0, 1, 0, 1},   //
                           {0, 0, 0, 1, 2, 0, -1, 0},   //
                           {0, 0, 0, 0, -1, 0, 0, 0},   //
                           {0, 0, 0, 0, 0, 1, 0, 0},    //
                           {0, 0, 0, 0, 0, 0, -1, 0},   //
                           {0, 0, 0, 0, 0, 0, 0, 1}};

        Matrix<Int> Bf = grid(2, 2, {I2, Z2, Z2, -I2});
        n.Mf = grid(2, 4, {Z4, Bf, -Bf, Z4});

        Matrix<Int> Ap{{-1, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}};
        Matrix<Int> tApinv = int_inverse(Ap).transpose();
        n.Mpr = grid(2, 4, {Ap, Z4, Z4, tApinv});
        Matrix<Int> Bip{{0, -2, 0, 0}, {2, 0, 0, 0}, {0, 2, 0, -2}, {-2, 0, 2, 0}};
        n.Mip = grid(2, 4, {Ap, Bip, Z4, tApinv});

        Matrix<Int> C{{0, 1}, {-1, 0}};
        Matrix<Int> D{{0, 1}, {1, 0}};
        n.MC = grid(4, 2, {C, Z2, Z2, Z2,  //
                           Z2, C, Z2, Z2,  //
                           Z2, Z2, C, Z2,  //
                           Z2, Z2, Z2, C});
        n.MD = grid(4, 2, {D, Z2, Z2, Z2,  //
                           Z2, D, Z2, Z2,  //
                           Z2, Z2, D, Z2,  //
                           Z2, Z2, Z2, D});
        n.M12 = n.M * n.MC;
        return n;
    }
};

inline bool is_symplectic(const SympMatrix& n) {
    const SympMatrix& e = NamedMatrices::get().E;
    return n.rows() == 8 && n.cols() == 8 && n * e * n.transpose() == e;
}

// exact inverse using N E tN = E
inline SympMatrix symplectic_inverse(const SympMatrix& n) {
    const SympMatrix& e = NamedMatrices::get().E;
    return -(e * n.transpose() * e);
}

enum class NormalizerClass { Centralizer, NormalizerOnly, Outside };

inline NormalizerClass classify_normalizer(const SympMatrix& n) {
    if (!is_symplectic(n)) throw std::invalid_argument("classify_normalizer: not symplectic");
    const SympMatrix& m = NamedMatrices::get().M;
    if (n * m == m * n) return NormalizerClass::Centralizer;
    if (n * m == m * m * n) return NormalizerClass::NormalizerOnly;  // N M N^-1 = M^-1 = M^2
    return NormalizerClass::Outside;
}

inline const char* to_string(NormalizerClass c) {
    switch (c) {
        case NormalizerClass::Centralizer: return "centralizer";
        case NormalizerClass::NormalizerOnly: return "normalizer-only";
        default: return "outside";
    }
}

// theta level subgroup: N = I mod 2 with diag(a tb) = diag(c td) = 0 mod 4
inline bool in_gamma_2_4(const SympMatrix& n) {
    if (!is_symplectic(n)) throw std::invalid_argument("in_gamma_2_4: not symplectic");
    SympMatrix d = n - Matrix<Int>::identity(8);
    for (const Int& x : d.entries())
        if (sgn(x % 2) != 0) return false;
    auto diag_mod4 = [&](std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) {
        // diag(block(r0,c0) * t(block(r1,c1)))
        for (std::size_t i = 0; i < 4; ++i) {
            Int acc(0);
            for (std::size_t k = 0; k < 4; ++k) acc += n(r0 + i, c0 + k) * n(r1 + i, c1 + k);
            if (sgn(acc % 4) != 0) return false;
        }
        return true;
    };
    return diag_mod4(0, 0, 0, 4) && diag_mod4(4, 0, 4, 4);
}

// ---------------------------------------------------------------------------
// Z[w]-module structure (w acts as M) and the Hermitian form
//   H_M(x, y) = E(x, yM) - w E(x, y).

using GaussianLatticeVector = std::vector<Int>;  // 8 integers, row vector

inline GaussianLatticeVector f_basis_vector(std::size_t i) {
    GaussianLatticeVector v(8, Int(0));
    v.at(i) = 1;
    v.at(i + 4) = 1;
    return v;
}

inline Int symplectic_pairing(const GaussianLatticeVector& x, const GaussianLatticeVector& y) {
    const SympMatrix& e = NamedMatrices::get().E;
    Int acc(0);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) acc += x[i] * e(i, j) * y[j];
    return acc;
}

inline GaussianLatticeVector act(const GaussianLatticeVector& x, const SympMatrix& n) {
    GaussianLatticeVector y(8, Int(0));
    for (std::size_t j = 0; j < 8; ++j)
        for (std::size_t i = 0; i < 8; ++i) y[j] += x[i] * n(i, j);
    return y;
}

inline Cyclotomic hermitian_form(const GaussianLatticeVector& x, const GaussianLatticeVector& y) {
    const SympMatrix& m = NamedMatrices::get().M;
    Rational exy(symplectic_pairing(x, y));
    Rational exmy(symplectic_pairing(x, act(y, m)));
    // E(x, yM) - w E(x, y)
    return Cyclotomic(exmy, Rational(0)) - Cyclotomic(Rational(0), Rational(1)) * Cyclotomic(exy);
}

// determinant of E restricted to the saturated fixed lattice ker(N - I)
inline Int fixed_sublattice_det(const SympMatrix& n) {
    SympMatrix d = n - Matrix<Int>::identity(8);
    auto basis = row_kernel_lattice(d);
    if (basis.size() != 4)
        throw std::domain_error("fixed_sublattice_det: fixed lattice rank is not 4");
    Matrix<Int> gram(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) gram(i, j) = symplectic_pairing(basis[i], basis[j]);
    return gram.det_cofactor();
}

// ---------------------------------------------------------------------------
// Reduction of the centralizer to U(4, F_4).

namespace detail {

// rows f1..f4, f1 M..f4 M: a Z-basis of Z^8 realizing the Z[w]-structure
inline const Matrix<Int>& zomega_basis() {
    static Matrix<Int> p = [] {
        const SympMatrix& m = NamedMatrices::get().M;
        Matrix<Int> q(8, 8);
        for (std::size_t i = 0; i < 4; ++i) {
            GaussianLatticeVector f = f_basis_vector(i);
            GaussianLatticeVector fm = act(f, m);
            for (std::size_t j = 0; j < 8; ++j) {
                q(i, j) = f[j];
                q(4 + i, j) = fm[j];
            }
        }
        Int det = q.det_cofactor();
        if (!(det == 1 || det == -1))
            throw std::logic_error("zomega_basis: f-basis is not unimodular");
        return q;
    }();
    return p;
}

}  // namespace detail

// N in C_M written in the f-basis as A0 + A1 w (two integer 4x4 matrices)
inline std::pair<Matrix<Int>, Matrix<Int>> zomega_matrix(const SympMatrix& n) {
    if (classify_normalizer(n) != NormalizerClass::Centralizer)
        throw std::invalid_argument("zomega_matrix: input does not centralize M");
    const Matrix<Int>& p = detail::zomega_basis();
    Matrix<Int> conj = p * n * int_inverse(p);
    // Z[w]-linearity forces the block shape [[A0, A1], [-A1, A0 - A1]]
    Matrix<Int> a0(4, 4), a1(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            a0(i, j) = conj(i, j);
            a1(i, j) = conj(i, 4 + j);
        }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            if (conj(4 + i, j) != -a1(i, j) || conj(4 + i, 4 + j) != a0(i, j) - a1(i, j))
                throw std::logic_error("zomega_matrix: block structure violated");
        }
    return {a0, a1};
}

inline UnitaryF4Matrix reduce_to_unitary(const SympMatrix& n) {
    auto [a0, a1] = zomega_matrix(n);
    UnitaryF4Matrix u;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            unsigned bit0 = mpz_odd_p(a0(i, j).get_mpz_t()) ? 1u : 0u;
            unsigned bit1 = mpz_odd_p(a1(i, j).get_mpz_t()) ? 1u : 0u;
            u.set(i, j, GF4{(std::uint8_t)(bit0 | (bit1 << 1))});
        }
    if (!u.is_unitary()) throw std::logic_error("reduce_to_unitary: image not unitary");
    return u;
}

// A G-unitary transvection x -> x + lambda H(x,u) u for an isotropic u in
// Z[w]^4 (f-basis coordinates) and lambda = t(2w+1), returned as an element
// of Sp(8,Z) centralizing M.
inline SympMatrix unitary_transvection(const std::array<Cyclotomic, 4>& u, long t) {
    const Rational g[4] = {Rational(1), Rational(1), Rational(-1), Rational(-1)};
    Cyclotomic norm(0);
    for (int i = 0; i < 4; ++i) norm += Cyclotomic(g[i]) * u[i] * u[i].conj();
    if (!norm.is_zero())
        throw std::invalid_argument("unitary_transvection: vector is not isotropic");
    Cyclotomic lambda = Cyclotomic(Rational(t), Rational(2 * t));  // t (1 + 2w) ... see below
    // lambda must satisfy lambda + conj(lambda) = 0: conj(a+bw) = (a-b) - bw,
    // so the trace is 2a - b; take a = t, b = 2t.
    Matrix<Int> a0 = Matrix<Int>::identity(4), a1(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            // (G tu-bar)_i * u_j
            Cyclotomic x = lambda * Cyclotomic(g[i]) * u[i].conj() * u[j];
            if (!x.rational_part().is_integer() || !x.omega_part().is_integer())
                throw std::logic_error("unitary_transvection: non-integral entry");
            a0(i, j) += x.rational_part().numerator();
            a1(i, j) += x.omega_part().numerator();
        }
    // lift A0 + A1 w to the 8x8 integer matrix in the f-basis, then back
    Matrix<Int> block(8, 8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            block(i, j) = a0(i, j);
            block(i, 4 + j) = a1(i, j);
            block(4 + i, j) = -a1(i, j);
            block(4 + i, 4 + j) = a0(i, j) - a1(i, j);
        }
    const Matrix<Int>& p = detail::zomega_basis();
    SympMatrix n = int_inverse(p) * block * p;
    if (!is_symplectic(n)) throw std::logic_error("unitary_transvection: not symplectic");
    if (classify_normalizer(n) != NormalizerClass::Centralizer)
        throw std::logic_error("unitary_transvection: does not centralize M");
    return n;
}

// order of a finite-order integer matrix, with a safety cap
inline unsigned matrix_order(const Matrix<Int>& n, unsigned cap = 64) {
    Matrix<Int> p = n;
    Matrix<Int> id = Matrix<Int>::identity(n.rows());
    for (unsigned k = 1; k <= cap; ++k) {
        if (p == id) return k;
        p = p * n;
    }
    throw std::domain_error("matrix_order: order exceeds cap");
}

}  // namespace picmod
