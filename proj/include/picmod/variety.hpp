#pragma once

// The degree-ten hypersurface X in P^5 and everything verified about it:
// construction of F from the symmetric-function formulas, the 136 quadrics
// coming from even theta characteristics restricted through the eigenspace
// embedding P^5 -> P^15, invariant-theoretic identities, factorizations on
// special linear sections, singular-locus membership, the boundary
// configuration of 45 lines and 27 cusps, and the finite Heisenberg actions.

#include <unordered_set>

#include "picmod/symplectic.hpp"
#include "picmod/weyl.hpp"

namespace picmod {

// ---------------------------------------------------------------------------
// The eigenspace embedding P^5 -> P^15.

struct EmbeddingP5 {
    // coordinate slots (X0:X1:X2:X3:X1:X1:X6:X7:X2:X7:X2:X6:X3:X6:X7:X3)
    static const std::array<int, 16>& slots() {
        static const std::array<int, 16> s = {0, 1, 2, 3, 1, 1, 4, 5,
                                              2, 5, 2, 4, 3, 4, 5, 3};
        return s;
    }

    // index action sigma -> sigma A on F_2^4, bits of i are (s1 s2 s3 s4)
    static unsigned sigma_a(unsigned i) {
        const Matrix<Int>& a = NamedMatrices::get().A;
        unsigned out = 0;
        std::array<unsigned, 4> sigma = {(i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1};
        for (int j = 0; j < 4; ++j) {
            Int acc(0);
            for (int k = 0; k < 4; ++k) acc += Int((long)sigma[k]) * a(k, j);
            unsigned bit = mpz_odd_p(acc.get_mpz_t()) ? 1u : 0u;
            out |= bit << (3 - j);
        }
        return out;
    }

    static const std::vector<std::string>& p15_vars() {
        static const std::vector<std::string> v = [] {
            std::vector<std::string> out;
            for (int i = 0; i < 16; ++i) out.push_back("Y" + std::to_string(i));
            return out;
        }();
        return v;
    }

    // substitution Y_sigma -> X_{slot(sigma)}
    static const SubstitutionMap<Rational>& restriction_map() {
        static const SubstitutionMap<Rational> m = [] {
            SubstitutionMap<Rational> s;
            s.source_vars = p15_vars();
            for (int i = 0; i < 16; ++i)
                s.images.push_back(MultiPoly<Rational>::variable(p5_vars(), slots()[i]));
            return s;
        }();
        return m;
    }
};

// cycle structure of sigma -> sigma A: fixes 0, five 3-cycles
inline bool m_cycle_check(std::string* report = nullptr) {
    std::vector<std::vector<unsigned>> expected = {
        {1, 4, 5}, {2, 8, 10}, {3, 12, 15}, {6, 13, 11}, {7, 9, 14}};
    bool ok = EmbeddingP5::sigma_a(0) == 0;
    for (auto& cyc : expected)
        for (std::size_t k = 0; k < 3; ++k)
            ok = ok && EmbeddingP5::sigma_a(cyc[k]) == cyc[(k + 1) % 3];
    // the embedding is constant on the cycles of sigma A
    for (unsigned i = 0; i < 16; ++i)
        ok = ok && EmbeddingP5::slots()[i] == EmbeddingP5::slots()[EmbeddingP5::sigma_a(i)];
    if (report) *report = ok ? "all five 3-cycles match" : "cycle mismatch";
    return ok;
}

// ---------------------------------------------------------------------------
// Theta characteristics and the quadrics Q[eps | eps'].

struct ThetaCharPair {
    unsigned eps;   // 4 bits
    unsigned epsp;  // 4 bits
    bool even() const { return __builtin_popcount(eps & epsp) % 2 == 0; }
};

inline std::vector<ThetaCharPair> even_characteristics() {
    std::vector<ThetaCharPair> out;
    for (unsigned e = 0; e < 16; ++e)
        for (unsigned ep = 0; ep < 16; ++ep)
            if (ThetaCharPair{e, ep}.even()) out.push_back({e, ep});
    return out;
}

// Q[eps|eps'] = sum_sigma (-1)^{(sigma+eps).eps'} Y_sigma Y_{sigma+eps}
inline MultiPoly<Rational> quadric_p15(const ThetaCharPair& ch) {
    MultiPoly<Rational> q(EmbeddingP5::p15_vars());
    for (unsigned sigma = 0; sigma < 16; ++sigma) {
        unsigned tau = sigma ^ ch.eps;
        long sign = __builtin_popcount((sigma ^ ch.eps) & ch.epsp) % 2 ? -1 : 1;
        Mono m(16, 0);
        m[sigma] += 1;
        m[tau] += 1;
        q.add_term(m, Rational(sign));
    }
    return q;
}

struct QuadricFamily {
    std::vector<ThetaCharPair> chars;
    std::vector<MultiPoly<Rational>> restricted;  // on P^5, 6 variables
};

inline const QuadricFamily& restrict_quadrics() {
    static const QuadricFamily fam = [] {
        QuadricFamily f;
        f.chars = even_characteristics();
        for (const auto& ch : f.chars)
            f.restricted.push_back(substitute(quadric_p15(ch), EmbeddingP5::restriction_map()));
        return f;
    }();
    return fam;
}

// number of members of the family invariant under Y_sigma -> Y_{sigma A}
inline std::size_t m_invariant_quadric_count() {
    SubstitutionMap<Rational> perm;
    perm.source_vars = EmbeddingP5::p15_vars();
    for (unsigned i = 0; i < 16; ++i)
        perm.images.push_back(
            MultiPoly<Rational>::variable(EmbeddingP5::p15_vars(), EmbeddingP5::sigma_a(i)));
    std::size_t n = 0;
    for (const auto& ch : even_characteristics()) {
        auto q = quadric_p15(ch);
        if (substitute(q, perm) == q) ++n;
    }
    return n;
}

// ---------------------------------------------------------------------------
// The polynomial F.

// S_i = s_i(X1^2, X2^2, X3^2, X6^2, X7^2) inside the six-variable ring
inline MultiPoly<Rational> symmetric_square_sum(unsigned i) {
    MultiPoly<Rational> out(p5_vars());
    if (i > 5) throw std::invalid_argument("symmetric_square_sum: i in 0..5");
    if (i == 0) return MultiPoly<Rational>::constant(p5_vars(), Rational(1));
    std::array<std::size_t, 5> vars = {1, 2, 3, 4, 5};
    std::vector<std::size_t> idx(i);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                            std::size_t depth) {
        if (depth == i) {
            Mono m(6, 0);
            for (std::size_t k = 0; k < i; ++k) m[idx[k]] = 2;
            out.add_term(m, Rational(1));
            return;
        }
        for (std::size_t p = start; p + (i - depth) <= 5; ++p) {
            idx[depth] = vars[p];
            rec(p + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

inline MultiPoly<Rational> build_f4() {
    auto s1 = symmetric_square_sum(1), s2 = symmetric_square_sum(2);
    auto x0sq = MultiPoly<Rational>::variable(p5_vars(), 0, 2);
    auto x0q = MultiPoly<Rational>::variable(p5_vars(), 0, 4);
    return Rational(-6) * (s1 * s1) + Rational(16) * s2 + Rational(4) * (s1 * x0sq) +
           Rational(2) * x0q;
}

inline MultiPoly<Rational> build_f10() {
    auto s1 = symmetric_square_sum(1), s2 = symmetric_square_sum(2),
         s3 = symmetric_square_sum(3), s4 = symmetric_square_sum(4),
         s5 = symmetric_square_sum(5);
    auto x0sq = MultiPoly<Rational>::variable(p5_vars(), 0, 2);
    auto x0q = MultiPoly<Rational>::variable(p5_vars(), 0, 4);
    return s1 * s2 * s2 - Rational(3) * (s1 * s1 * s3) + Rational(12) * (s1 * s4) -
           Rational(48) * s5 + (Rational(-1) * (s2 * s2) + Rational(2) * (s1 * s3) +
                                Rational(4) * s4) * x0sq +
           s3 * x0q;
}

inline const MultiPoly<Rational>& build_f() {
    static const MultiPoly<Rational> f = [] {
        MultiPoly<Rational> mono(p5_vars());
        mono.add_term({1, 1, 1, 1, 1, 1}, Rational(1));
        return build_f10() - mono * build_f4();
    }();
    return f;
}

// the six partial derivatives, computed once
inline const std::vector<MultiPoly<Rational>>& f_gradient() {
    static const std::vector<MultiPoly<Rational>> g = [] {
        std::vector<MultiPoly<Rational>> out;
        for (std::size_t v = 0; v < 6; ++v) out.push_back(build_f().derivative(v));
        return out;
    }();
    return g;
}

inline bool verify_generator_invariance(const MultiPoly<Rational>& f, std::string* who = nullptr) {
    const char* names[4] = {"mb", "md", "me", "mf"};
    auto gens = WeylGenerators::get().list();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (substitute(f, to_substitution(gens[i])) != f) {
            if (who) *who = names[i];
            return false;
        }
    }
    return true;
}

// F = c (11520 I8 I2 - 4160 I6 I2^2 - 4608 I5^2 + 25 I2^5); returns c when
// the identity holds for a unique scalar, nullopt otherwise.  The combination
// coefficients are parameters so a perturbed combination can be refuted.
inline std::optional<Rational> invariant_identity_scalar(
    const MultiPoly<Rational>& f, const MultiPoly<Rational>& i2, const MultiPoly<Rational>& i5,
    const MultiPoly<Rational>& i6, const MultiPoly<Rational>& i8, long c8 = 11520,
    long c6 = -4160, long c5 = -4608, long c2 = 25) {
    MultiPoly<Rational> combo = Rational(c8) * (i8 * i2) + Rational(c6) * (i6 * i2 * i2) +
                                Rational(c5) * (i5 * i5) + Rational(c2) * i2.pow(5);
    if (combo.is_zero() || f.is_zero()) return std::nullopt;
    auto [fm, fc] = f.leading_term();
    auto [cm, cc] = combo.leading_term();
    if (fm != cm) return std::nullopt;
    Rational c = fc / cc;
    if (f == c * combo) return c;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parametrizations of the special subvarieties.

// Q22 inside Z : X3 = X6 = X7, parametrized bihomogeneously by
// (X0,...,X7) = (su, sv, tu, tv, tv, tv)
inline const SubstitutionMap<Rational>& q22_parametrization() {
    static const SubstitutionMap<Rational> m = [] {
        std::vector<std::string> pv = {"s", "t", "u", "v"};
        auto bil = [&](int a, int b) {
            MultiPoly<Rational> p(pv);
            Mono mo(4, 0);
            mo[a] = 1;
            mo[b] = 1;
            p.add_term(mo, Rational(1));
            return p;
        };
        SubstitutionMap<Rational> s;
        s.source_vars = p5_vars();
        s.images = {bil(0, 2), bil(0, 3), bil(1, 2), bil(1, 3), bil(1, 3), bil(1, 3)};
        return s;
    }();
    return m;
}

// linear parametrization of a plane given by canonical rows over Q(w)
inline SubstitutionMap<Cyclotomic> plane_parametrization(const Matrix<Cyclotomic>& rows) {
    std::vector<std::string> pv;
    for (std::size_t i = 0; i < rows.rows(); ++i) pv.push_back("u" + std::to_string(i));
    SubstitutionMap<Cyclotomic> s;
    s.source_vars = p5_vars();
    for (std::size_t j = 0; j < 6; ++j) {
        MultiPoly<Cyclotomic> img(pv);
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            if (rows(i, j) == Cyclotomic(0)) continue;
            Mono m(pv.size(), 0);
            m[i] = 1;
            img.add_term(m, rows(i, j));
        }
        s.images.push_back(std::move(img));
    }
    return s;
}

// linear parametrization of a line spanned by the rows of a 2x6 matrix
inline SubstitutionMap<Rational> line_parametrization(const Matrix<Frac64>& rows) {
    std::vector<std::string> pv = {"s", "t"};
    SubstitutionMap<Rational> m;
    m.source_vars = p5_vars();
    for (std::size_t j = 0; j < 6; ++j) {
        MultiPoly<Rational> img(pv);
        if (!rows(0, j).is_zero()) img.add_term({1, 0}, rows(0, j).to_rational());
        if (!rows(1, j).is_zero()) img.add_term({0, 1}, rows(1, j).to_rational());
        m.images.push_back(std::move(img));
    }
    return m;
}

// compose a linear group action with a parametrization: images of g o p
template <class C>
SubstitutionMap<C> compose_action(const WeylElement& g, const SubstitutionMap<C>& p) {
    SubstitutionMap<C> out;
    out.source_vars = p.source_vars;
    for (int i = 0; i < 6; ++i) {
        MultiPoly<C> img(p.images[0].vars());
        for (int j = 0; j < 6; ++j) {
            if (g.at(i, j).is_zero()) continue;
            img += C(g.at(i, j).to_rational()) * p.images[j];
        }
        out.images.push_back(std::move(img));
    }
    return out;
}

// number of family members identically zero under a parametrization
template <class C>
std::size_t quadric_vanishing_count(const SubstitutionMap<C>& param) {
    const QuadricFamily& fam = restrict_quadrics();
    std::size_t n = 0;
    for (const auto& q : fam.restricted) {
        MultiPoly<C> qc = q.template map_coeff<C>([](const Rational& r) { return C(r); });
        if (substitute(qc, param).is_zero()) ++n;
    }
    return n;
}

// all six partials of F vanish identically under the parametrization
template <class C>
bool singular_membership(const SubstitutionMap<C>& param) {
    for (const auto& d : f_gradient()) {
        MultiPoly<C> dc = d.template map_coeff<C>([](const Rational& r) { return C(r); });
        if (!substitute(dc, param).is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Factorizations on special sections.

// restriction X3 = X6 = X7 into the ring (X0, X1, X2, X3)
inline const SubstitutionMap<Rational>& z_restriction() {
    static const SubstitutionMap<Rational> m = [] {
        std::vector<std::string> zv = {"X0", "X1", "X2", "X3"};
        SubstitutionMap<Rational> s;
        s.source_vars = p5_vars();
        for (int i = 0; i < 4; ++i) s.images.push_back(MultiPoly<Rational>::variable(zv, i));
        for (int i = 0; i < 2; ++i) s.images.push_back(MultiPoly<Rational>::variable(zv, 3));
        return s;
    }();
    return m;
}

struct A2Factorization {
    MultiPoly<Rational> q22;  // X0 X3 - X1 X2
    MultiPoly<Rational> f22;  // degree six cofactor
};

inline A2Factorization factor_on_a2_space() {
    std::vector<std::string> zv = {"X0", "X1", "X2", "X3"};
    MultiPoly<Rational> q(zv);
    q.add_term({1, 0, 0, 1}, Rational(1));
    q.add_term({0, 1, 1, 0}, Rational(-1));
    auto fz = substitute(build_f(), z_restriction());
    auto quot = exact_divide(fz, q * q);
    if (!quot) throw std::domain_error("factor_on_a2_space: q22^2 does not divide F|Z");
    return {q, *quot};
}

// restriction X6 = X7 = 0 into the ring (X0, X1, X2, X3)
inline const SubstitutionMap<Rational>& w_restriction() {
    static const SubstitutionMap<Rational> m = [] {
        std::vector<std::string> wv = {"X0", "X1", "X2", "X3"};
        SubstitutionMap<Rational> s;
        s.source_vars = p5_vars();
        for (int i = 0; i < 4; ++i) s.images.push_back(MultiPoly<Rational>::variable(wv, i));
        for (int i = 0; i < 2; ++i) s.images.push_back(MultiPoly<Rational>(wv));
        return s;
    }();
    return m;
}

struct A1A1Factorization {
    MultiPoly<Rational> q67;    // X0^2 - X1^2 - X2^2 - X3^2
    MultiPoly<Rational> s67;    // the seven-term octic, as divided out
    Rational unit;              // F|_W = unit * q67 * s67_reference
};

// the seven-term octic from the statement, monic in X0^2 X1^2 X2^2 X3^2
inline MultiPoly<Rational> s67_reference() {
    std::vector<std::string> wv = {"X0", "X1", "X2", "X3"};
    MultiPoly<Rational> s(wv);
    s.add_term({2, 2, 2, 2}, Rational(1));
    s.add_term({0, 4, 4, 0}, Rational(-1));
    s.add_term({0, 4, 0, 4}, Rational(-1));
    s.add_term({0, 0, 4, 4}, Rational(-1));
    s.add_term({0, 4, 2, 2}, Rational(1));
    s.add_term({0, 2, 4, 2}, Rational(1));
    s.add_term({0, 2, 2, 4}, Rational(1));
    return s;
}

inline A1A1Factorization factor_on_a1a1_space() {
    std::vector<std::string> wv = {"X0", "X1", "X2", "X3"};
    MultiPoly<Rational> q(wv);
    q.add_term({2, 0, 0, 0}, Rational(1));
    q.add_term({0, 2, 0, 0}, Rational(-1));
    q.add_term({0, 0, 2, 0}, Rational(-1));
    q.add_term({0, 0, 0, 2}, Rational(-1));
    auto fw = substitute(build_f(), w_restriction());
    auto oct = exact_divide(fw, q);
    if (!oct) throw std::domain_error("factor_on_a1a1_space: quadric does not divide F|W");
    auto ref = s67_reference();
    auto unit = exact_divide(*oct, ref);
    if (!unit || unit->degree() != 0)
        throw std::domain_error("factor_on_a1a1_space: octic is not the stated one");
    return {q, *oct, unit->coeff(Mono(4, 0))};
}

// The birational map from the sextic component into P^4 with coordinates
// (X0 q22 : X1 q22 : X2 q22 : X3 q22 : r3), r3 = X3(X0-X1-X2+X3)(X0+X1+X2+X3),
// whose inverse is the projection to the first four coordinates.  The
// composition satisfies proj(map(X)) = q22 * X exactly.
struct S22BirationalMap {
    std::vector<MultiPoly<Rational>> coords;  // five cubics in X0..X3
    bool roundtrip_ok = false;
    bool cubic_ok = false;
};

inline S22BirationalMap s22_birational_map() {
    std::vector<std::string> zv = {"X0", "X1", "X2", "X3"};
    auto var = [&](int i) { return MultiPoly<Rational>::variable(zv, i); };
    MultiPoly<Rational> q(zv);
    q.add_term({1, 0, 0, 1}, Rational(1));
    q.add_term({0, 1, 1, 0}, Rational(-1));
    MultiPoly<Rational> r3 =
        var(3) * (var(0) - var(1) - var(2) + var(3)) * (var(0) + var(1) + var(2) + var(3));
    S22BirationalMap out;
    for (int i = 0; i < 4; ++i) out.coords.push_back(var(i) * q);
    out.coords.push_back(r3);
    out.cubic_ok = true;
    for (const auto& c : out.coords)
        out.cubic_ok = out.cubic_ok && c.is_homogeneous() && c.degree() == 3;
    // backward then forward on a symbolic generic point: projecting the image
    // gives q22 * X, and pushing that through the map again rescales every
    // coordinate by q22^3
    SubstitutionMap<Rational> back;
    back.source_vars = zv;
    for (int i = 0; i < 4; ++i) back.images.push_back(var(i) * q);
    MultiPoly<Rational> q3 = q * q * q;
    out.roundtrip_ok = true;
    for (const auto& c : out.coords)
        out.roundtrip_ok = out.roundtrip_ok && substitute(c, back) == q3 * c;
    return out;
}

// Igusa quartic: G = s2^2 - 4 s4 in the five variables X1, X2, X3, X6, X7
inline const std::vector<std::string>& igusa_vars() {
    static const std::vector<std::string> v = {"X1", "X2", "X3", "X6", "X7"};
    return v;
}

inline MultiPoly<Rational> igusa_quartic() {
    auto s2 = elementary_symmetric<Rational>(2, igusa_vars());
    auto s4 = elementary_symmetric<Rational>(4, igusa_vars());
    return s2 * s2 - Rational(4) * s4;
}

struct HessianIdentity {
    Rational scalar;            // F|_{H_alpha} = scalar * Hessian(G)
    std::size_t f_terms;        // 591
    std::size_t hessian_terms;  // 591
};

inline HessianIdentity igusa_hessian_identity() {
    // restrict F to the reflection hyperplane X0 = X1 + X2 + X3 + X6 + X7
    SubstitutionMap<Rational> sub;
    sub.source_vars = p5_vars();
    MultiPoly<Rational> sum(igusa_vars());
    for (int i = 0; i < 5; ++i) sum += MultiPoly<Rational>::variable(igusa_vars(), i);
    sub.images.push_back(sum);
    for (int i = 0; i < 5; ++i)
        sub.images.push_back(MultiPoly<Rational>::variable(igusa_vars(), i));
    auto fh = substitute(build_f(), sub);
    auto hes = hessian_det(igusa_quartic(), igusa_vars());
    if (fh.is_zero() || hes.is_zero())
        throw std::domain_error("igusa_hessian_identity: degenerate restriction");
    auto [fm, fc] = fh.leading_term();
    auto [hm, hc] = hes.leading_term();
    if (fm != hm || fh != (fc / hc) * hes)
        throw std::domain_error("igusa_hessian_identity: not proportional");
    return {fc / hc, fh.term_count(), hes.term_count()};
}

// ---------------------------------------------------------------------------
// Orbit of the quadric surface Q22 (the 120 singular quadrics).

struct RowSpace {
    Matrix<Frac64> rref;  // canonical spanning rows
    bool operator==(const RowSpace& o) const { return rref == o.rref; }
};

struct RowSpaceHash {
    std::size_t operator()(const RowSpace& r) const { return r.rref.hash(); }
};

inline Matrix<Frac64> act_on_rows(const Matrix<Frac64>& rows, const WeylElement& g) {
    Matrix<Frac64> out = rows * g.to_matrix().transpose();
    out.rref_in_place();
    return out;
}

struct QuadricSurface {
    Matrix<Frac64> subspace;   // 4x6 canonical rows spanning Z_g
    Matrix<Frac64> form;       // normalized 4x4 restriction of the quadric
    WeylElement transform;     // maps the seed surface onto this one

    bool operator==(const QuadricSurface& o) const {
        return subspace == o.subspace && form == o.form;
    }
};

struct QuadricSurfaceHash {
    std::size_t operator()(const QuadricSurface& s) const {
        return s.subspace.hash() * 0x9E3779B97F4A7C15ull ^ s.form.hash();
    }
};

// symmetric 6x6 matrix of q22 = X0 X3 - X1 X2 viewed inside P^5
inline Matrix<Frac64> q22_form6() {
    Matrix<Frac64> q(6, 6);
    q(0, 3) = q(3, 0) = Frac64(1, 2);
    q(1, 2) = q(2, 1) = Frac64(-1, 2);
    return q;
}

inline Matrix<Frac64> z_subspace_rows() {
    Matrix<Frac64> rows(4, 6);
    rows(0, 0) = Frac64(1);
    rows(1, 1) = Frac64(1);
    rows(2, 2) = Frac64(1);
    rows(3, 3) = rows(3, 4) = rows(3, 5) = Frac64(1);
    return rows;
}

inline Matrix<Frac64> normalize_form(Matrix<Frac64> m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) {
                Frac64 inv = m(i, j).inverse();
                for (auto k = 0u; k < m.rows(); ++k)
                    for (auto l = 0u; l < m.cols(); ++l) m(k, l) = inv * m(k, l);
                return m;
            }
    return m;
}

inline QuadricSurface make_quadric_surface(const WeylElement& g) {
    // surface g(Q22): subspace g(Z), quadratic form q22 o g^-1 restricted
    WeylElement ginv = g.inverse();
    Matrix<Frac64> rows = act_on_rows(z_subspace_rows(), g);
    Matrix<Frac64> q6 = ginv.to_matrix().transpose() * q22_form6() * ginv.to_matrix();
    Matrix<Frac64> restricted = rows * q6 * rows.transpose();
    return {rows, normalize_form(restricted), g};
}

inline const std::vector<QuadricSurface>& quadric_surface_orbit() {
    static const std::vector<QuadricSurface> orb = [] {
        const GroupTable& w = weyl_group();
        std::vector<QuadricSurface> out{make_quadric_surface(WeylElement::identity())};
        std::unordered_set<QuadricSurface, QuadricSurfaceHash> seen{out[0]};
        for (std::size_t head = 0; head < out.size(); ++head) {
            WeylElement cur = out[head].transform;
            for (const auto& g : w.generators()) {
                QuadricSurface next = make_quadric_surface(g * cur);
                if (seen.insert(next).second) out.push_back(next);
            }
        }
        return out;
    }();
    return orb;
}

// count of rank-two A2 subsystems straight from the root count: pairs of
// roots with b = -1, divided by the six such pairs inside each subsystem
inline std::size_t a2_subsystem_count() {
    const GroupTable& w = weyl_group();
    auto roots = orbit(w, simple_roots()[0], false);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (b_form(roots[i], roots[j]) == Frac64(-1)) ++pairs;
    return pairs / 6;
}

// ---------------------------------------------------------------------------
// Boundary: 45 lines, 27 cusps, incidence.

inline Matrix<Frac64> boundary_line_seed() {
    Matrix<Frac64> rows(2, 6);
    rows(0, 0) = Frac64(1);
    rows(1, 1) = Frac64(1);
    return rows;
}

inline const std::vector<Matrix<Frac64>>& boundary_lines() {
    static const std::vector<Matrix<Frac64>> lines = [] {
        const GroupTable& w = weyl_group();
        std::vector<Matrix<Frac64>> out{boundary_line_seed().rref()};
        std::unordered_set<RowSpace, RowSpaceHash> seen{RowSpace{out[0]}};
        for (std::size_t head = 0; head < out.size(); ++head) {
            Matrix<Frac64> cur = out[head];
            for (const auto& g : w.generators()) {
                Matrix<Frac64> next = act_on_rows(cur, g);
                if (seen.insert(RowSpace{next}).second) out.push_back(next);
            }
        }
        return out;
    }();
    return lines;
}

inline const std::vector<Vec6>& cusps() {
    static const std::vector<Vec6> c =
        orbit(weyl_group(), Vec6{Frac64(2), Frac64(0), Frac64(0), Frac64(0), Frac64(0),
                                 Frac64(0)}, true);
    return c;
}

inline bool point_on_line(const Vec6& p, const Matrix<Frac64>& line) {
    Matrix<Frac64> stacked(3, 6);
    for (int j = 0; j < 6; ++j) {
        stacked(0, j) = line(0, j);
        stacked(1, j) = line(1, j);
        stacked(2, j) = p[j];
    }
    return stacked.rank() == 2;
}

// intersection point of two distinct lines, if any
inline std::optional<Vec6> line_intersection(const Matrix<Frac64>& a, const Matrix<Frac64>& b) {
    Matrix<Frac64> cols(6, 4);
    for (int i = 0; i < 6; ++i) {
        cols(i, 0) = a(0, i);
        cols(i, 1) = a(1, i);
        cols(i, 2) = -b(0, i);
        cols(i, 3) = -b(1, i);
    }
    auto ker = cols.kernel_basis();
    if (ker.empty()) return std::nullopt;
    if (ker.size() > 1) throw std::logic_error("line_intersection: lines coincide");
    Vec6 p{};
    for (int i = 0; i < 6; ++i) p[i] = ker[0][0] * a(0, i) + ker[0][1] * a(1, i);
    return projective_normalize(p);
}

struct IncidenceReport {
    std::size_t line_count = 0;
    std::size_t cusp_count = 0;
    std::size_t intersection_points = 0;
    bool intersections_are_cusps = false;
    bool three_cusps_per_line = false;
    bool five_lines_per_cusp = false;
    bool f_vanishes_on_lines = false;
    bool ok() const {
        return line_count == 45 && cusp_count == 27 && intersection_points == 27 &&
               intersections_are_cusps && three_cusps_per_line && five_lines_per_cusp &&
               f_vanishes_on_lines;
    }
};

inline IncidenceReport boundary_incidence() {
    IncidenceReport rep;
    const auto& lines = boundary_lines();
    const auto& cs = cusps();
    rep.line_count = lines.size();
    rep.cusp_count = cs.size();

    std::unordered_map<Vec6, std::size_t, Vec6Hash> cusp_index;
    for (std::size_t i = 0; i < cs.size(); ++i) cusp_index.emplace(cs[i], i);

    std::unordered_set<Vec6, Vec6Hash> points;
    bool all_cusps = true;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            auto p = line_intersection(lines[i], lines[j]);
            if (!p) continue;
            points.insert(*p);
            all_cusps = all_cusps && cusp_index.count(*p) != 0;
        }
    rep.intersection_points = points.size();
    rep.intersections_are_cusps = all_cusps;

    rep.three_cusps_per_line = true;
    std::vector<std::size_t> lines_per_cusp(cs.size(), 0);
    for (const auto& l : lines) {
        std::size_t n = 0;
        for (std::size_t c = 0; c < cs.size(); ++c)
            if (point_on_line(cs[c], l)) {
                ++n;
                ++lines_per_cusp[c];
            }
        if (n != 3) rep.three_cusps_per_line = false;
    }
    rep.five_lines_per_cusp = true;
    for (auto n : lines_per_cusp)
        if (n != 5) rep.five_lines_per_cusp = false;

    rep.f_vanishes_on_lines = true;
    for (const auto& l : lines)
        if (!substitute(build_f(), line_parametrization(l)).is_zero())
            rep.f_vanishes_on_lines = false;
    return rep;
}

// ---------------------------------------------------------------------------
// Heisenberg actions on P^15 and the boundary 3-space.

// X_sigma -> (-1)^{beta . sigma} X_sigma
inline SubstitutionMap<Rational> heisenberg_sign_action(unsigned beta) {
    SubstitutionMap<Rational> s;
    s.source_vars = EmbeddingP5::p15_vars();
    for (unsigned i = 0; i < 16; ++i) {
        long sign = __builtin_popcount(beta & i) % 2 ? -1 : 1;
        MultiPoly<Rational> img(EmbeddingP5::p15_vars());
        Mono m(16, 0);
        m[i] = 1;
        img.add_term(m, Rational(sign));
        s.images.push_back(std::move(img));
    }
    return s;
}

// X_sigma -> X_{sigma + gamma}
inline SubstitutionMap<Rational> heisenberg_translation_action(unsigned gamma) {
    SubstitutionMap<Rational> s;
    s.source_vars = EmbeddingP5::p15_vars();
    for (unsigned i = 0; i < 16; ++i)
        s.images.push_back(
            MultiPoly<Rational>::variable(EmbeddingP5::p15_vars(), i ^ gamma));
    return s;
}

struct HeisenbergBoundary {
    std::size_t intersection_dim = 0;        // projective dimension
    Matrix<Frac64> line;                     // canonical rows of the section
    bool line_is_l = false;                  // equals X2 = X3 = X6 = X7 = 0
    bool point_component_is_p = false;       // the 0-dim component hits (1:0:...:0)
};

inline HeisenbergBoundary heisenberg_boundary_check() {
    HeisenbergBoundary out;
    // slots of the embedded P^5 that must vanish on the boundary P^3
    // X_{abcd} = 0 whenever (a, c) != (0, 0); free indices are 0, 1, 4, 5
    std::vector<unsigned> constrained;
    for (unsigned i = 0; i < 16; ++i) {
        unsigned a = (i >> 3) & 1, c = (i >> 1) & 1;
        if (a || c) constrained.push_back(i);
    }
    Matrix<Frac64> system(constrained.size(), 6);
    for (std::size_t r = 0; r < constrained.size(); ++r)
        system(r, EmbeddingP5::slots()[constrained[r]]) = Frac64(1);
    auto ker = system.kernel_basis();
    if (ker.empty()) return out;
    out.intersection_dim = ker.size() - 1;
    Matrix<Frac64> rows(ker.size(), 6);
    for (std::size_t i = 0; i < ker.size(); ++i)
        for (int j = 0; j < 6; ++j) rows(i, j) = ker[i][j];
    rows.rref_in_place();
    out.line = rows;
    out.line_is_l = rows == boundary_line_seed().rref();

    // the zero-dimensional boundary component: only Y_0 survives, which is
    // the cusp (1:0:...:0) on the eigenspace
    Matrix<Frac64> sys0(15, 6);
    for (unsigned i = 1; i < 16; ++i)
        sys0(i - 1, EmbeddingP5::slots()[i]) = Frac64(1);
    auto ker0 = sys0.kernel_basis();
    out.point_component_is_p =
        ker0.size() == 1 && projective_normalize(Vec6{ker0[0][0], ker0[0][1], ker0[0][2],
                                                      ker0[0][3], ker0[0][4], ker0[0][5]}) ==
                                Vec6{Frac64(1), Frac64(0), Frac64(0), Frac64(0), Frac64(0),
                                     Frac64(0)};
    return out;
}

// ---------------------------------------------------------------------------
// The branch conic factorization over Q(w).

inline bool branch_locus_factorization() {
    using C = Cyclotomic;
    std::vector<std::string> zv = {"Z0", "Z1", "Z2"};
    auto sq = [&](int i) { return MultiPoly<C>::variable(zv, i, 2); };
    MultiPoly<C> lhs = sq(0) * sq(0) + sq(1) * sq(1) + sq(2) * sq(2) - sq(0) * sq(1) -
                       sq(0) * sq(2) - sq(1) * sq(2);
    C w = C::omega(), w2 = C::omega_bar();
    MultiPoly<C> f1 = sq(0) + w2 * sq(1) + w * sq(2);
    MultiPoly<C> f2 = sq(0) + w * sq(1) + w2 * sq(2);
    bool product_ok = lhs == f1 * f2;

    // Galois conjugation swaps the factors
    auto conj_poly = [](const MultiPoly<C>& p) {
        return p.map_coeff<C>([](const C& x) { return x.conj(); });
    };
    bool galois_ok = conj_poly(f1) == f2 && conj_poly(f2) == f1;

    // the two conics share the four points (1 : +-1 : +-1)
    bool points_ok = true;
    for (long s1 : {1, -1})
        for (long s2 : {1, -1}) {
            std::vector<C> pt = {C(1), C(s1), C(s2)};
            auto conv = [](const C& c) { return c; };
            points_ok = points_ok && f1.evaluate(pt, conv).is_zero() &&
                        f2.evaluate(pt, conv).is_zero();
        }
    return product_ok && galois_ok && points_ok;
}

// ---------------------------------------------------------------------------
// Locating Q36 inside W' : X1 = X2, X6 = X7.

inline const std::vector<std::string>& wprime_vars() {
    static const std::vector<std::string> v = {"X0", "X1", "X3", "X6"};
    return v;
}

// restriction onto W' (X2 -> X1, X7 -> X6)
inline const SubstitutionMap<Rational>& wprime_restriction() {
    static const SubstitutionMap<Rational> m = [] {
        SubstitutionMap<Rational> s;
        s.source_vars = p5_vars();
        auto var = [&](int i) { return MultiPoly<Rational>::variable(wprime_vars(), i); };
        s.images = {var(0), var(1), var(1), var(2), var(3), var(3)};
        return s;
    }();
    return m;
}

struct Q36Location {
    WeylElement transform;          // maps the A1xA1 pair of W onto that of W'
    MultiPoly<Rational> q36_p5;     // quadric on P^5 cutting Q36 on W'
    MultiPoly<Rational> q36;        // its restriction to W' (4 variables)
    MultiPoly<Rational> s36;        // the degree-8 cofactor of F|_{W'}
    std::size_t vanishing_on_q36 = 0;
    std::size_t identically_zero_on_wprime = 0;
};

inline Q36Location q36_locate() {
    const GroupTable& w = weyl_group();
    Vec6 r1{Frac64(0), Frac64(0), Frac64(0), Frac64(0), Frac64(1), Frac64(1)};
    Vec6 r2{Frac64(0), Frac64(0), Frac64(0), Frac64(0), Frac64(1), Frac64(-1)};
    Vec6 a3 = projective_normalize(simple_roots()[2]);
    Vec6 a6 = projective_normalize(simple_roots()[5]);

    std::optional<WeylElement> found;
    for (const auto& g : w.elements()) {
        Vec6 i1 = projective_normalize(g.apply(r1));
        Vec6 i2 = projective_normalize(g.apply(r2));
        if ((i1 == a3 && i2 == a6) || (i1 == a6 && i2 == a3)) {
            found = g;
            break;
        }
    }
    if (!found) throw std::domain_error("q36_locate: no group element maps the root pair");

    Q36Location out;
    out.transform = *found;
    // the quadric q67 o g^-1 cuts Q36 = g(Q67) out of W'
    MultiPoly<Rational> q67(p5_vars());
    q67.add_term({2, 0, 0, 0, 0, 0}, Rational(1));
    q67.add_term({0, 2, 0, 0, 0, 0}, Rational(-1));
    q67.add_term({0, 0, 2, 0, 0, 0}, Rational(-1));
    q67.add_term({0, 0, 0, 2, 0, 0}, Rational(-1));
    out.q36_p5 = substitute(q67, to_substitution(found->inverse()));
    out.q36 = substitute(out.q36_p5, wprime_restriction());
    if (out.q36.is_zero() || out.q36.degree() != 2)
        throw std::domain_error("q36_locate: transported quadric degenerates on W'");

    auto fw = substitute(build_f(), wprime_restriction());
    auto s36 = exact_divide(fw, out.q36);
    if (!s36) throw std::domain_error("q36_locate: quadric does not divide F|_{W'}");
    out.s36 = *s36;

    // quadric counts on W'
    for (const auto& q : restrict_quadrics().restricted) {
        auto qw = substitute(q, wprime_restriction());
        if (qw.is_zero()) {
            ++out.identically_zero_on_wprime;
            continue;
        }
        if (qw.degree() == 2) {
            auto [qm, qc] = qw.leading_term();
            auto [bm, bc] = out.q36.leading_term();
            if (bc * qw == qc * out.q36) ++out.vanishing_on_q36;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Restrictions of the invariants I_k to the Hesse plane.

struct HesseInvariantRestrictions {
    bool i2_i5_i8_vanish = false;
    bool i6_i9_i12_nonzero = false;
    bool i6sq_i12_independent = false;
    bool ok() const { return i2_i5_i8_vanish && i6_i9_i12_nonzero && i6sq_i12_independent; }
};

inline HesseInvariantRestrictions hesse_invariant_restrictions(
    const std::vector<Vec6>& orbit27) {
    auto plane = eigenplane(class_c_representative(), Cyclotomic::omega());
    auto pw3 = plane_parametrization(plane);
    auto restrict_inv = [&](unsigned k) {
        auto ik = invariant_polynomial(k, orbit27);
        auto ikc = ik.map_coeff<Cyclotomic>([](const Rational& r) { return Cyclotomic(r); });
        return substitute(ikc, pw3);
    };
    HesseInvariantRestrictions out;
    out.i2_i5_i8_vanish =
        restrict_inv(2).is_zero() && restrict_inv(5).is_zero() && restrict_inv(8).is_zero();
    auto i6 = restrict_inv(6), i9 = restrict_inv(9), i12 = restrict_inv(12);
    out.i6_i9_i12_nonzero = !i6.is_zero() && !i9.is_zero() && !i12.is_zero();
    if (out.i6_i9_i12_nonzero) {
        auto i6sq = i6 * i6;
        auto [m6, c6] = i6sq.leading_term();
        auto [m12, c12] = i12.leading_term();
        bool proportional = (m6 == m12) && (c12 * i6sq == c6 * i12);
        out.i6sq_i12_independent = !proportional;
    }
    return out;
}

// ---------------------------------------------------------------------------
// The eight conics cutting Q67 out of S67.

struct ConicCheck {
    bool proportional = false;    // pullback of s67 ~ product of eight planes
    bool all_nonzero = false;     // each plane pulls back to a nonzero conic
    bool pairwise_distinct = false;
    bool sign_symmetry = false;   // X1 -> -X1 permutes the planes, fixes s67
};

inline ConicCheck q67_s67_conic_check() {
    ConicCheck out;
    std::vector<std::string> wv = {"X0", "X1", "X2", "X3"};
    std::vector<std::string> pv = {"a", "b", "c"};
    // stereographic parametrization of X0^2 = X1^2 + X2^2 + X3^2 from (1:1:0:0)
    auto mono = [&](unsigned ea, unsigned eb, unsigned ec, long coef) {
        MultiPoly<Rational> p(pv);
        p.add_term({ea, eb, ec}, Rational(coef));
        return p;
    };
    SubstitutionMap<Rational> param;
    param.source_vars = wv;
    param.images = {
        mono(2, 0, 0, -1) + mono(0, 2, 0, -1) + mono(0, 0, 2, -1),
        mono(2, 0, 0, 1) + mono(0, 2, 0, -1) + mono(0, 0, 2, -1),
        mono(1, 1, 0, 2),
        mono(1, 0, 1, 2),
    };

    auto s67 = s67_reference();
    auto pull_s67 = substitute(s67, param);

    MultiPoly<Rational> prod = MultiPoly<Rational>::constant(pv, Rational(1));
    std::vector<MultiPoly<Rational>> pulled_planes;
    for (long s1 : {1, -1})
        for (long s2 : {1, -1})
            for (long s3 : {1, -1}) {
                MultiPoly<Rational> plane(wv);
                plane.add_term({1, 0, 0, 0}, Rational(1));
                plane.add_term({0, 1, 0, 0}, Rational(s1));
                plane.add_term({0, 0, 1, 0}, Rational(s2));
                plane.add_term({0, 0, 0, 1}, Rational(s3));
                auto pb = substitute(plane, param);
                pulled_planes.push_back(pb);
                prod *= pb;
            }

    out.all_nonzero = true;
    for (const auto& p : pulled_planes) out.all_nonzero = out.all_nonzero && !p.is_zero();

    out.pairwise_distinct = true;
    for (std::size_t i = 0; i < pulled_planes.size(); ++i)
        for (std::size_t j = i + 1; j < pulled_planes.size(); ++j) {
            auto [mi, ci] = pulled_planes[i].leading_term();
            auto [mj, cj] = pulled_planes[j].leading_term();
            if (cj * pulled_planes[i] == ci * pulled_planes[j])
                out.pairwise_distinct = false;
        }

    if (!pull_s67.is_zero() && !prod.is_zero()) {
        auto [sm, sc] = pull_s67.leading_term();
        auto [pm, pc] = prod.leading_term();
        out.proportional = (sm == pm) && (pc * pull_s67 == sc * prod);
    }

    // X1 -> -X1 on W: s67 is even in X1; the eight planes get permuted
    SubstitutionMap<Rational> flip;
    flip.source_vars = wv;
    flip.images = {MultiPoly<Rational>::variable(wv, 0),
                   Rational(-1) * MultiPoly<Rational>::variable(wv, 1),
                   MultiPoly<Rational>::variable(wv, 2),
                   MultiPoly<Rational>::variable(wv, 3)};
    out.sign_symmetry = substitute(s67, flip) == s67;
    return out;
}

}  // namespace picmod
