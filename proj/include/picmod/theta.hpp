#pragma once

// Floating-point theta machinery: theta constants with characteristics,
// second-order thetanulls, samplers for the fixed-point subdomains of the
// Siegel space, the map to P^5, transformation sign rules, and the
// tolerance-band vanishing classifier that ties the numerics back to the
// exact geometry.
//
// Series convention: the classical normalization
//   theta[e|e'](tau, z) = sum_m exp(pi i [ (m+e/2) tau t(m+e/2)
//                                          + 2 (m+e/2) . (z+e'/2) ])
// (the exponent carries the factor pi i throughout).

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <array>
#include <complex>
#include <random>

#include "picmod/poly.hpp"
#include "picmod/symplectic.hpp"

namespace picmod {

using complexd = std::complex<double>;

struct ThetaConfig {
    int radius = 8;           // sum over |m_i + eps_i/2| <= radius
    double zero_tol = 1e-8;   // relative tolerance for "vanishing"
    double guard_factor = 1e3;  // band between zero and nonzero decisions

    void validate() const {
        if (radius < 1) throw std::invalid_argument("ThetaConfig: radius >= 1");
        if (!(zero_tol > 0 && zero_tol < 1))
            throw std::invalid_argument("ThetaConfig: tolerance in (0,1)");
    }
};

struct ThetaChar {
    std::array<int, 4> eps{};   // entries 0/1
    std::array<int, 4> epsp{};

    static ThetaChar from_bits(unsigned e, unsigned ep) {
        ThetaChar c;
        for (int i = 0; i < 4; ++i) {
            c.eps[i] = (e >> (3 - i)) & 1;
            c.epsp[i] = (ep >> (3 - i)) & 1;
        }
        return c;
    }
    unsigned eps_bits() const {
        return (unsigned)(eps[0] << 3 | eps[1] << 2 | eps[2] << 1 | eps[3]);
    }
    unsigned epsp_bits() const {
        return (unsigned)(epsp[0] << 3 | epsp[1] << 2 | epsp[2] << 1 | epsp[3]);
    }
    int parity() const {
        int s = 0;
        for (int i = 0; i < 4; ++i) s += eps[i] * epsp[i];
        return s % 2;
    }
    bool even() const { return parity() == 0; }
};

struct SiegelPoint {
    Eigen::Matrix4cd tau;

    // symmetry and positive-definiteness of the (symmetrized) imaginary part
    static SiegelPoint checked(const Eigen::Matrix4cd& t) {
        double asym = (t - t.transpose()).cwiseAbs().maxCoeff();
        if (asym > 1e-10) throw std::invalid_argument("SiegelPoint: tau not symmetric");
        Eigen::Matrix4d im = t.imag();
        Eigen::Matrix4d sym = 0.5 * (im + im.transpose());
        Eigen::LLT<Eigen::Matrix4d> llt(sym);
        if (llt.info() != Eigen::Success)
            throw std::invalid_argument("SiegelPoint: Im(tau) not positive definite");
        return {t};
    }
};

// fractional-linear action (a tau + b)(c tau + d)^{-1} of a symplectic matrix
inline Eigen::Matrix4cd fractional_action(const SympMatrix& n, const Eigen::Matrix4cd& tau) {
    Eigen::Matrix4d a, b, c, d;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            a(i, j) = n(i, j).get_d();
            b(i, j) = n(i, j + 4).get_d();
            c(i, j) = n(i + 4, j).get_d();
            d(i, j) = n(i + 4, j + 4).get_d();
        }
    Eigen::Matrix4cd num = a * tau + b.cast<complexd>();
    Eigen::Matrix4cd den = c * tau + d.cast<complexd>();
    return num * den.inverse();
}

inline double fixed_point_residual(const SympMatrix& n, const Eigen::Matrix4cd& tau) {
    return (fractional_action(n, tau) - tau).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Theta series.

// theta[e|e'](tau, z) truncated at the configured radius, with an internal
// half-radius partial sum as the convergence guard
inline complexd theta_value(const ThetaChar& ch, const SiegelPoint& sp,
                            const std::array<complexd, 4>& z, const ThetaConfig& cfg) {
    cfg.validate();
    const Eigen::Matrix4cd& tau = sp.tau;
    const double pi = 3.14159265358979323846;
    int n = cfg.radius;
    int half = n / 2;

    complexd full(0), partial(0);
    std::array<double, 4> v{};
    std::array<complexd, 4> zoff;
    for (int i = 0; i < 4; ++i) zoff[i] = z[i] + complexd(ch.epsp[i] * 0.5);

    for (int m0 = -n; m0 <= n; ++m0) {
        v[0] = m0 + ch.eps[0] * 0.5;
        complexd q0 = tau(0, 0) * v[0] * v[0];
        for (int m1 = -n; m1 <= n; ++m1) {
            v[1] = m1 + ch.eps[1] * 0.5;
            complexd q1 = q0 + 2.0 * tau(0, 1) * v[0] * v[1] + tau(1, 1) * v[1] * v[1];
            for (int m2 = -n; m2 <= n; ++m2) {
                v[2] = m2 + ch.eps[2] * 0.5;
                complexd lin2 = tau(0, 2) * v[0] + tau(1, 2) * v[1];
                complexd q2 = q1 + 2.0 * lin2 * v[2] + tau(2, 2) * v[2] * v[2];
                for (int m3 = -n; m3 <= n; ++m3) {
                    v[3] = m3 + ch.eps[3] * 0.5;
                    complexd lin3 = tau(0, 3) * v[0] + tau(1, 3) * v[1] + tau(2, 3) * v[2];
                    complexd q = q2 + 2.0 * lin3 * v[3] + tau(3, 3) * v[3] * v[3];
                    complexd zterm =
                        2.0 * (v[0] * zoff[0] + v[1] * zoff[1] + v[2] * zoff[2] + v[3] * zoff[3]);
                    complexd term = std::exp(complexd(0, pi) * (q + zterm));
                    full += term;
                    if (std::abs(v[0]) <= half && std::abs(v[1]) <= half &&
                        std::abs(v[2]) <= half && std::abs(v[3]) <= half)
                        partial += term;
                }
            }
        }
    }
    double scale = std::max(1.0, std::abs(full));
    if (std::abs(full - partial) > cfg.zero_tol * scale)
        throw std::runtime_error("theta_value: series not converged at configured radius");
    return full;
}

inline complexd thetanull(const ThetaChar& ch, const SiegelPoint& sp, const ThetaConfig& cfg) {
    return theta_value(ch, sp, {complexd(0), complexd(0), complexd(0), complexd(0)}, cfg);
}

// the sixteen second-order thetanulls theta[eps|0](2 tau, 0), indexed by
// i = eps1*8 + eps2*4 + eps3*2 + eps4
inline std::array<complexd, 16> second_order_nulls(const SiegelPoint& sp,
                                                   const ThetaConfig& cfg) {
    SiegelPoint doubled{2.0 * sp.tau};
    std::array<complexd, 16> out;
    for (unsigned e = 0; e < 16; ++e)
        out[e] = thetanull(ThetaChar::from_bits(e, 0), doubled, cfg);
    return out;
}

// ---------------------------------------------------------------------------
// Samplers for the fixed-point subdomains.

enum class FixedLocusTag { M, M_MB, M12, M_MB_MD, M_MPR };

// tau(b) = [[b + tb, -b], [-tb, b + tb]]
inline Eigen::Matrix4cd tau_from_b(const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd t;
    Eigen::Matrix2cd s = b + b.transpose();
    t.block<2, 2>(0, 0) = s;
    t.block<2, 2>(0, 2) = -b;
    t.block<2, 2>(2, 0) = -b.transpose();
    t.block<2, 2>(2, 2) = s;
    return t;
}

inline SiegelPoint sample_hermite_point(const Eigen::Matrix2cd& b) {
    SiegelPoint sp = SiegelPoint::checked(tau_from_b(b));
    if (fixed_point_residual(NamedMatrices::get().M, sp.tau) > 1e-9)
        throw std::logic_error("sample_hermite_point: not fixed by M");
    return sp;
}

// b = i I + uniform perturbation of the stated radius on the free entries,
// with rejection on positive definiteness
inline SiegelPoint sample_fixed_locus(FixedLocusTag tag, std::mt19937_64& rng,
                                      double radius = 0.2) {
    std::uniform_real_distribution<double> u(-radius, radius);
    auto rnd = [&] { return complexd(u(rng), u(rng)); };
    for (int attempt = 0; attempt < 100; ++attempt) {
        Eigen::Matrix2cd b;
        complexd i2(0, 1);
        switch (tag) {
            case FixedLocusTag::M: {
                b << i2 + rnd(), rnd(), rnd(), i2 + rnd();
                break;
            }
            case FixedLocusTag::M_MB: {  // b symmetric
                complexd off = rnd();
                b << i2 + rnd(), off, off, i2 + rnd();
                break;
            }
            case FixedLocusTag::M12: {  // b commutes with the rotation C
                complexd x = i2 + rnd(), y = rnd();
                b << x, y, -y, x;
                break;
            }
            case FixedLocusTag::M_MB_MD: {  // b symmetric with equal diagonal
                complexd x = i2 + rnd(), y = rnd();
                b << x, y, y, x;
                break;
            }
            case FixedLocusTag::M_MPR: {
                // fixed points of M_pr inside the M-fixed domain: direct
                // search in the 2x2 parameter showed b must be diagonal
                b << i2 + rnd(), complexd(0), complexd(0), i2 + rnd();
                break;
            }
        }
        Eigen::Matrix4cd t = tau_from_b(b);
        Eigen::Matrix4d im = t.imag();
        Eigen::LLT<Eigen::Matrix4d> llt(0.5 * (im + im.transpose()));
        if (llt.info() != Eigen::Success) continue;
        SiegelPoint sp{t};
        const NamedMatrices& nm = NamedMatrices::get();
        double res = fixed_point_residual(nm.M, t);
        switch (tag) {
            case FixedLocusTag::M: break;
            case FixedLocusTag::M_MB: res = std::max(res, fixed_point_residual(nm.MB, t)); break;
            case FixedLocusTag::M12:
                res = std::max(res, fixed_point_residual(nm.MC, t));
                res = std::max(res, fixed_point_residual(nm.M12, t));
                break;
            case FixedLocusTag::M_MB_MD:
                res = std::max(res, fixed_point_residual(nm.MB, t));
                res = std::max(res, fixed_point_residual(nm.MD, t));
                break;
            case FixedLocusTag::M_MPR:
                res = std::max(res, fixed_point_residual(nm.Mpr, t));
                break;
        }
        if (res > 1e-9) throw std::logic_error("sample_fixed_locus: fixed-point check failed");
        return sp;
    }
    throw std::runtime_error("sample_fixed_locus: rejection sampling exhausted");
}

// ---------------------------------------------------------------------------
// The map to P^5.

struct ThetaImage {
    std::array<complexd, 6> x;        // (X0, X1, X2, X3, X6, X7), max modulus 1
    double triple_residual = 0;       // worst relative defect of the 5 triples
};

inline ThetaImage theta_map_p5(const SiegelPoint& sp, const ThetaConfig& cfg) {
    auto nulls = second_order_nulls(sp, cfg);
    double scale = 0;
    for (const auto& t : nulls) scale = std::max(scale, std::abs(t));
    if (scale == 0) throw std::runtime_error("theta_map_p5: all thetanulls vanish");

    static const int triples[5][3] = {{1, 4, 5}, {2, 8, 10}, {3, 12, 15}, {6, 13, 11}, {7, 9, 14}};
    double worst = 0;
    for (auto& tr : triples)
        for (int k = 0; k < 3; ++k)
            worst = std::max(worst, std::abs(nulls[tr[k]] - nulls[tr[(k + 1) % 3]]) / scale);
    if (worst > cfg.zero_tol * cfg.guard_factor)
        throw std::runtime_error("theta_map_p5: eigenspace identities violated");

    ThetaImage img;
    img.triple_residual = worst;
    img.x = {nulls[0], nulls[1], nulls[2], nulls[3], nulls[6], nulls[7]};
    double m = 0;
    for (auto& v : img.x) m = std::max(m, std::abs(v));
    for (auto& v : img.x) v /= m;
    return img;
}

// evaluate an exact polynomial in the six eigenspace coordinates at a point
inline complexd evaluate_p5(const MultiPoly<Rational>& f, const std::array<complexd, 6>& x) {
    std::vector<complexd> pt(x.begin(), x.end());
    return f.evaluate(pt, [](const Rational& c) { return complexd(c.to_double()); });
}

// ---------------------------------------------------------------------------
// Transformation behavior under M_C and the forced vanishing count.

struct McSignRule {
    ThetaChar image;  // characteristic after the coordinate swap
    int sign;         // +1 or -1
};

// theta[e|e'](MC tau) = sign * theta[image](tau) with the swaps
// (e1 e2 e3 e4) -> (e2 e1 e4 e3) on both rows and sign (-1)^(e2 e2' + e4 e4')
inline McSignRule mc_theta_sign_rule(const ThetaChar& ch) {
    McSignRule r;
    r.image.eps = {ch.eps[1], ch.eps[0], ch.eps[3], ch.eps[2]};
    r.image.epsp = {ch.epsp[1], ch.epsp[0], ch.epsp[3], ch.epsp[2]};
    r.sign = (ch.eps[1] * ch.epsp[1] + ch.eps[3] * ch.epsp[3]) % 2 ? -1 : 1;
    return r;
}

// even characteristics fixed by the swap but picking up sign -1: their
// thetanulls vanish identically on the MC-fixed locus
inline std::vector<ThetaChar> mc_forced_vanishing() {
    std::vector<ThetaChar> out;
    for (unsigned e = 0; e < 16; ++e)
        for (unsigned ep = 0; ep < 16; ++ep) {
            ThetaChar ch = ThetaChar::from_bits(e, ep);
            if (!ch.even()) continue;
            McSignRule r = mc_theta_sign_rule(ch);
            if (r.image.eps_bits() == e && r.image.epsp_bits() == ep && r.sign == -1)
                out.push_back(ch);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Vanishing profile of the 136 even first-order thetanulls.

enum class ModuliClass {
    Generic,                  // 0 vanishing
    EllipticTimesThreefold,   // 28
    SurfaceTimesSurface,      // 36
    TorusSquareTimesSurface,  // 96
    TorusBoundary,            // 120
    Unknown
};

struct VanishingProfile {
    std::size_t vanishing = 0;
    std::size_t ambiguous = 0;
    ModuliClass cls = ModuliClass::Unknown;
};

inline VanishingProfile vanishing_profile(const SiegelPoint& sp, const ThetaConfig& cfg) {
    std::vector<complexd> values;
    double scale = 0;
    for (unsigned e = 0; e < 16; ++e)
        for (unsigned ep = 0; ep < 16; ++ep) {
            ThetaChar ch = ThetaChar::from_bits(e, ep);
            if (!ch.even()) continue;
            values.push_back(thetanull(ch, sp, cfg));
            scale = std::max(scale, std::abs(values.back()));
        }
    VanishingProfile out;
    for (const auto& v : values) {
        double r = std::abs(v) / scale;
        if (r < cfg.zero_tol)
            ++out.vanishing;
        else if (r < cfg.zero_tol * cfg.guard_factor)
            ++out.ambiguous;
    }
    if (out.ambiguous) {
        out.cls = ModuliClass::Unknown;
        return out;
    }
    switch (out.vanishing) {
        case 0: out.cls = ModuliClass::Generic; break;
        case 28: out.cls = ModuliClass::EllipticTimesThreefold; break;
        case 36: out.cls = ModuliClass::SurfaceTimesSurface; break;
        case 96: out.cls = ModuliClass::TorusSquareTimesSurface; break;
        case 120: out.cls = ModuliClass::TorusBoundary; break;
        default: out.cls = ModuliClass::Unknown;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isogeny diagram identities.

// N Omega_tau = Omega_tau2 N' as an exact identity of polynomial matrices in
// the three entries of a symbolic symmetric tau2
inline bool isogeny_diagram_symbolic() {
    using P = MultiPoly<Rational>;
    std::vector<std::string> tv = {"t11", "t12", "t22"};
    auto var = [&](int i) { return P::variable(tv, i); };
    auto cst = [&](long c) { return P::constant(tv, Rational(c)); };

    Matrix<P> tau2(2, 2, P(tv));
    tau2(0, 0) = var(0);
    tau2(0, 1) = tau2(1, 0) = var(1);
    tau2(1, 1) = var(2);

    Matrix<P> omega_tau(8, 4, P(tv));  // [[2 tau2, -tau2], [-tau2, 2 tau2], [I, 0], [0, I]]
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            omega_tau(i, j) = cst(2) * tau2(i, j);
            omega_tau(i, 2 + j) = cst(-1) * tau2(i, j);
            omega_tau(2 + i, j) = cst(-1) * tau2(i, j);
            omega_tau(2 + i, 2 + j) = cst(2) * tau2(i, j);
        }
    for (int i = 0; i < 4; ++i) omega_tau(4 + i, i) = cst(1);

    Matrix<P> n(4, 8, P(tv));  // [[I, I, 0, 0], [0, 0, I, I]]
    for (int i = 0; i < 2; ++i) {
        n(i, i) = cst(1);
        n(i, 2 + i) = cst(1);
        n(2 + i, 4 + i) = cst(1);
        n(2 + i, 6 + i) = cst(1);
    }

    Matrix<P> omega_tau2(4, 2, P(tv));  // [[tau2], [I]]
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) omega_tau2(i, j) = tau2(i, j);
    omega_tau2(2, 0) = cst(1);
    omega_tau2(3, 1) = cst(1);

    Matrix<P> nprime(2, 4, P(tv));  // [I I]
    nprime(0, 0) = nprime(0, 2) = cst(1);
    nprime(1, 1) = nprime(1, 3) = cst(1);

    return n * omega_tau == omega_tau2 * nprime;
}

// M Omega_tau = Omega_tau tA^{-1} for symbolic tau(b), b an arbitrary 2x2
inline bool period_equivariance_symbolic() {
    using P = MultiPoly<Rational>;
    std::vector<std::string> bv = {"b11", "b12", "b21", "b22"};
    auto var = [&](int i) { return P::variable(bv, i); };
    auto cst = [&](long c) { return P::constant(bv, Rational(c)); };

    Matrix<P> b(2, 2, P(bv));
    b(0, 0) = var(0);
    b(0, 1) = var(1);
    b(1, 0) = var(2);
    b(1, 1) = var(3);

    Matrix<P> tau(4, 4, P(bv));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            tau(i, j) = b(i, j) + b(j, i);
            tau(i, 2 + j) = cst(-1) * b(i, j);
            tau(2 + i, j) = cst(-1) * b(j, i);
            tau(2 + i, 2 + j) = b(i, j) + b(j, i);
        }

    Matrix<P> omega(8, 4, P(bv));  // [tau; I]
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) omega(i, j) = tau(i, j);
    for (int i = 0; i < 4; ++i) omega(4 + i, i) = cst(1);

    const NamedMatrices& nm = NamedMatrices::get();
    auto lift = [&](const Matrix<Int>& m) {
        Matrix<P> out(m.rows(), m.cols(), P(bv));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                out(i, j) = P::constant(bv, Rational(m(i, j)));
        return out;
    };
    Matrix<Int> ta_inv = int_inverse(nm.A).transpose();
    return lift(nm.M) * omega == omega * lift(ta_inv);
}

// numeric residual of N Omega_tau = Omega_tau2 N' at a concrete tau2
inline double isogeny_diagram_residual(const Eigen::Matrix2cd& tau2) {
    Eigen::Matrix4cd t;
    t.block<2, 2>(0, 0) = 2.0 * tau2;
    t.block<2, 2>(0, 2) = -tau2;
    t.block<2, 2>(2, 0) = -tau2;
    t.block<2, 2>(2, 2) = 2.0 * tau2;

    Eigen::Matrix<complexd, 8, 4> omega;
    omega.setZero();
    omega.block<4, 4>(0, 0) = t;
    for (int i = 0; i < 4; ++i) omega(4 + i, i) = 1.0;

    Eigen::Matrix<complexd, 4, 8> n;
    n.setZero();
    for (int i = 0; i < 2; ++i) {
        n(i, i) = n(i, 2 + i) = 1.0;
        n(2 + i, 4 + i) = n(2 + i, 6 + i) = 1.0;
    }
    Eigen::Matrix<complexd, 4, 2> omega2;
    omega2.setZero();
    omega2.block<2, 2>(0, 0) = tau2;
    omega2(2, 0) = omega2(3, 1) = 1.0;
    Eigen::Matrix<complexd, 2, 4> nprime;
    nprime.setZero();
    nprime(0, 0) = nprime(0, 2) = 1.0;
    nprime(1, 1) = nprime(1, 3) = 1.0;

    return (n * omega - omega2 * nprime).cwiseAbs().maxCoeff();
}

}  // namespace picmod
