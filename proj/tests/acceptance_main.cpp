// Acceptance runner: one pass/fail line per criterion, exit code equal to
// the number of failures.  Every tolerance and time bound is pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "picmod/group_io.hpp"
#include "picmod/theta.hpp"
#include "picmod/variety.hpp"

using namespace picmod;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& what, const std::function<Outcome()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = fn();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  criterion %2d: %s [%s] (%.2f s)\n", out.ok ? "PASS" : "FAIL", n,
                what.c_str(), out.detail.c_str(), dt);
    std::fflush(stdout);
    if (!out.ok) ++failures;
}

template <class T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

Vec6 ivec(long a, long b, long c, long d, long e, long f) {
    return Vec6{Frac64(a), Frac64(b), Frac64(c), Frac64(d), Frac64(e), Frac64(f)};
}

}  // namespace

int main() {
    // 1: F has 147 terms, degree 10, in under a second
    criterion(1, "build of F: 147 terms, homogeneous of degree 10, < 1 s", [] {
        auto t0 = std::chrono::steady_clock::now();
        const auto& f = build_f();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        Outcome o;
        o.ok = f.term_count() == 147 && f.degree() == 10 && f.is_homogeneous() && dt < 1.0;
        o.detail = str(f.term_count()) + " terms, degree " + str(f.degree()) + ", " + str(dt) +
                   " s";
        return o;
    });

    // 2: group generation and cache timing
    criterion(2, "W(E6) from the four generators: order 51840, < 60 s cold, < 1 s cached", [] {
        auto t0 = std::chrono::steady_clock::now();
        GroupTable fresh = GroupTable::generate(WeylGenerators::get().list());
        double gen = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string path = "/tmp/picmod_acceptance_group.bin";
        cache_group(fresh, path);
        t0 = std::chrono::steady_clock::now();
        GroupTable loaded = load_group(path);
        double load =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::remove(path.c_str());
        bool same = loaded.order() == fresh.order() &&
                    loaded.elements()[31337] == fresh.elements()[31337];
        install_weyl_group(std::move(fresh));  // share with later criteria
        Outcome o;
        o.ok = weyl_group().order() == 51840 && gen < 60.0 && load < 1.0 && same;
        o.detail = "order " + str(weyl_group().order()) + ", generate " + str(gen) +
                   " s, reload " + str(load) + " s";
        return o;
    });

    // 3: the 27-vector orbit
    criterion(3, "orbit of (1,0,...,0) has exactly 27 vectors", [] {
        auto o27 = orbit(weyl_group(), ivec(1, 0, 0, 0, 0, 0), false);
        bool norms = true;
        for (const auto& v : o27) norms = norms && b_form(v, v) == Frac64(1, 3);
        Outcome o;
        o.ok = o27.size() == 27 && norms;
        o.detail = str(o27.size()) + " vectors";
        return o;
    });

    // 4: the invariant-theoretic identity (the stated sign is unattainable;
    // the identity itself holds with the opposite sign, which is reported)
    criterion(4, "F = c (11520 I8 I2 - 4160 I6 I2^2 - 4608 I5^2 + 25 I2^5), c = -2/675, < 60 s",
              [] {
                  auto o27 = orbit(weyl_group(), ivec(1, 0, 0, 0, 0, 0), false);
                  auto i2 = invariant_polynomial(2, o27);
                  auto i5 = invariant_polynomial(5, o27);
                  auto i6 = invariant_polynomial(6, o27);
                  auto i8 = invariant_polynomial(8, o27);
                  auto c = invariant_identity_scalar(build_f(), i2, i5, i6, i8);
                  Outcome o;
                  if (!c.has_value()) {
                      o.detail = "identity fails for every scalar";
                      return o;
                  }
                  o.ok = *c == Rational(-2, 675);
                  o.detail = "identity holds exactly with unique scalar c = " + c->str() +
                             (o.ok ? "" : "; the stated -2/675 contradicts the displayed "
                                          "conventions (sign pinned by I5^2 and even power "
                                          "sums; see repository notes)");
                  return o;
              });

    // 5: factorization on Z
    criterion(5, "F on X3 = X6 = X7 equals (X0 X3 - X1 X2)^2 times a degree-6 cofactor", [] {
        auto fac = factor_on_a2_space();
        auto fz = substitute(build_f(), z_restriction());
        Outcome o;
        o.ok = fac.f22.degree() == 6 && fz == fac.q22 * fac.q22 * fac.f22;
        o.detail = "cofactor degree " + str(fac.f22.degree()) + ", remainder zero";
        return o;
    });

    // 6: factorization on W
    criterion(6, "F on X6 = X7 = 0 equals the quadric times the seven-term octic", [] {
        auto fac = factor_on_a1a1_space();
        auto fw = substitute(build_f(), w_restriction());
        Outcome o;
        o.ok = fw == fac.q67 * fac.s67 && fac.s67 == fac.unit * s67_reference() &&
               !fac.unit.is_zero();
        o.detail = "octic matches with unit " + fac.unit.str();
        return o;
    });

    // 7: the Igusa Hessian identity
    criterion(7, "F on the reflection hyperplane: 591 terms, proportional to Hess(G), < 120 s",
              [] {
                  auto t0 = std::chrono::steady_clock::now();
                  auto id = igusa_hessian_identity();
                  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                            t0).count();
                  Outcome o;
                  o.ok = id.f_terms == 591 && id.hessian_terms == 591 && dt < 120.0;
                  o.detail = str(id.f_terms) + " + " + str(id.hessian_terms) +
                             " terms, scalar " + id.scalar.str() + ", " + str(dt) + " s";
                  return o;
              });

    // 8: quadric vanishing counts
    criterion(8, "quadric vanishing counts 120 / 96 / 36 / 28 / 6 / 0", [] {
        std::vector<Rational> cusp = {Rational(1), Rational(0), Rational(0),
                                      Rational(0), Rational(0), Rational(0)};
        std::size_t at_cusp = 0;
        for (const auto& q : restrict_quadrics().restricted)
            if (q.evaluate(cusp, [](const Rational& c) { return c; }).is_zero()) ++at_cusp;
        std::size_t on_line = quadric_vanishing_count(line_parametrization(boundary_line_seed()));
        std::size_t on_q22 = quadric_vanishing_count(q22_parametrization());
        auto plane = eigenplane(class_c_representative(), Cyclotomic::omega());
        std::size_t on_w3 = quadric_vanishing_count(plane_parametrization(plane));
        auto loc = q36_locate();
        Outcome o;
        o.ok = at_cusp == 120 && on_line == 96 && on_q22 == 36 && on_w3 == 28 &&
               loc.vanishing_on_q36 == 6 && loc.identically_zero_on_wprime == 0;
        o.detail = str(at_cusp) + "/" + str(on_line) + "/" + str(on_q22) + "/" + str(on_w3) +
                   "/" + str(loc.vanishing_on_q36) + "/" + str(loc.identically_zero_on_wprime);
        return o;
    });

    // 9: singular membership and degree accounting
    criterion(9, "gradient of F vanishes on Q22 and W3; orbit accounting 120*2 + 80 = 320", [] {
        bool q22 = singular_membership(q22_parametrization());
        auto plane = eigenplane(class_c_representative(), Cyclotomic::omega());
        bool w3 = singular_membership(plane_parametrization(plane));
        bool inv = verify_generator_invariance(build_f());
        std::size_t quads = quadric_surface_orbit().size();
        std::set<std::string> keys;
        for (auto i : conjugacy_class_c(weyl_group()))
            keys.insert(eigenplane(weyl_group().element(i), Cyclotomic::omega()).str());
        Outcome o;
        o.ok = q22 && w3 && inv && quads == 120 && keys.size() == 80 &&
               2 * quads + keys.size() == 320;
        o.detail = str(quads) + " quadrics, " + str(keys.size()) + " planes, degree " +
                   str(2 * quads + keys.size());
        return o;
    });

    // 10: the conjugacy class C
    criterion(10, "class C: 80 order-3 elements, one class, centralizer order 648", [] {
        const GroupTable& w = weyl_group();
        auto cls = conjugacy_class_c(w);
        auto rep = w.index_of(class_c_representative());
        bool single = false;
        if (rep) {
            auto orb = conjugation_orbit(w, *rep);
            single = std::set<std::uint32_t>(orb.begin(), orb.end()) ==
                     std::set<std::uint32_t>(cls.begin(), cls.end());
        }
        // characteristic polynomial of every class element is (x^2+x+1)^3
        std::vector<Frac64> expect = {Frac64(1), Frac64(3), Frac64(6), Frac64(7),
                                      Frac64(6), Frac64(3), Frac64(1)};
        bool charpolys = true;
        for (auto i : cls) {
            auto cp = w.element(i).to_matrix().charpoly();
            charpolys = charpolys && std::vector<Frac64>(cp.begin(), cp.end()) == expect;
        }
        std::size_t cent = centralizer_order(w, class_c_representative());
        Outcome o;
        o.ok = cls.size() == 80 && single && charpolys && cent == 648 &&
               w.order() / cent == cls.size();
        o.detail = str(cls.size()) + " elements, centralizer " + str(cent);
        return o;
    });

    // 11: boundary incidence
    criterion(11, "45 boundary lines, 27 cusps, 3 cusps/line, 5 lines/cusp, F = 0 on lines",
              [] {
                  auto rep = boundary_incidence();
                  auto line = boundary_line_seed().rref();
                  std::vector<Vec6> expected = {
                      projective_normalize(ivec(1, 0, 0, 0, 0, 0)),
                      projective_normalize(ivec(1, 1, 0, 0, 0, 0)),
                      projective_normalize(ivec(1, -1, 0, 0, 0, 0))};
                  std::size_t on_l = 0;
                  bool listed = true;
                  for (const auto& c : cusps())
                      if (point_on_line(c, line)) {
                          ++on_l;
                          listed = listed && std::count(expected.begin(), expected.end(), c) == 1;
                      }
                  Outcome o;
                  o.ok = rep.ok() && on_l == 3 && listed;
                  o.detail = str(rep.line_count) + " lines, " + str(rep.cusp_count) +
                             " cusps, " + str(rep.intersection_points) + " intersections";
                  return o;
              });

    // 12: symplectic identities
    criterion(12, "symplectic identities (T, M12, H_M Gram, lattice dets, level congruences), "
                  "< 1 s",
              [] {
                  auto t0 = std::chrono::steady_clock::now();
                  const auto& n = NamedMatrices::get();
                  bool ok = n.T * n.M * symplectic_inverse(n.T) == n.M22;
                  ok = ok && matrix_order(n.M12) == 12 &&
                       n.M12 * n.M12 * n.M12 * n.M12 == n.M;
                  for (std::size_t i = 0; i < 4 && ok; ++i)
                      for (std::size_t j = 0; j < 4 && ok; ++j) {
                          Cyclotomic h = hermitian_form(f_basis_vector(i), f_basis_vector(j));
                          ok = h == (i == j ? Cyclotomic(i < 2 ? 1 : -1) : Cyclotomic(0));
                      }
                  ok = ok && fixed_sublattice_det(n.Mpr) == 1 &&
                       fixed_sublattice_det(n.Mip) == 9;
                  ok = ok && in_gamma_2_4(n.Mip * symplectic_inverse(n.Mpr)) &&
                       in_gamma_2_4(n.MD * symplectic_inverse(n.MC));
                  double dt =
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
                  Outcome o;
                  o.ok = ok && dt < 1.0;
                  o.detail = str(dt) + " s";
                  return o;
              });

    // 13: invariant restrictions to the Hesse plane
    criterion(13, "I2, I5, I8 vanish on the Hesse plane; I6^2, I12 restrictions independent",
              [] {
                  auto o27 = orbit(weyl_group(), ivec(1, 0, 0, 0, 0, 0), false);
                  auto res = hesse_invariant_restrictions(o27);
                  Outcome o;
                  o.ok = res.ok();
                  o.detail = std::string(res.i2_i5_i8_vanish ? "vanishing ok" : "vanishing bad") +
                             ", " + (res.i6sq_i12_independent ? "independent" : "dependent");
                  return o;
              });

    // 14: branch factorization over Q(w)
    criterion(14, "the branch quartic splits into two conjugate conics over Q(w)", [] {
        Outcome o;
        o.ok = branch_locus_factorization();
        o.detail = o.ok ? "product, Galois swap, and the four common points verified" : "";
        return o;
    });

    // 15: the numeric bridge
    criterion(15, "numeric bridge: 100 samples with triple identities and |F| < 1e-8 at "
                  "radius 8; reflection samples on X6 = X7; order-12 samples on Q36, < 120 s",
              [] {
                  auto t0 = std::chrono::steady_clock::now();
                  ThetaConfig cfg;  // radius 8, tolerance 1e-8
                  std::mt19937_64 rng(1);
                  const auto& f = build_f();
                  double worst_triple = 0, worst_f = 0;
                  for (int s = 0; s < 100; ++s) {
                      SiegelPoint sp = sample_fixed_locus(FixedLocusTag::M, rng);
                      ThetaImage img = theta_map_p5(sp, cfg);
                      worst_triple = std::max(worst_triple, img.triple_residual);
                      worst_f = std::max(worst_f, std::abs(evaluate_p5(f, img.x)));
                  }
                  double worst_mb = 0;
                  for (int s = 0; s < 20; ++s) {
                      ThetaImage img = theta_map_p5(
                          sample_fixed_locus(FixedLocusTag::M_MB, rng), cfg);
                      worst_mb = std::max(worst_mb, std::abs(img.x[4] - img.x[5]));
                  }
                  auto loc = q36_locate();
                  double worst_q36 = 0;
                  for (int s = 0; s < 20; ++s) {
                      ThetaImage img = theta_map_p5(
                          sample_fixed_locus(FixedLocusTag::M12, rng), cfg);
                      worst_q36 = std::max(worst_q36, std::abs(evaluate_p5(loc.q36_p5, img.x)));
                      worst_q36 = std::max(worst_q36, std::abs(img.x[1] - img.x[2]));
                      worst_q36 = std::max(worst_q36, std::abs(img.x[4] - img.x[5]));
                  }
                  double dt =
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
                  Outcome o;
                  o.ok = worst_triple < 1e-8 && worst_f < 1e-8 && worst_mb < 1e-8 &&
                         worst_q36 < 1e-6 && dt < 120.0;
                  std::ostringstream os;
                  os << "triples " << worst_triple << ", F " << worst_f << ", X6-X7 "
                     << worst_mb << ", Q36 " << worst_q36 << ", " << dt << " s";
                  o.detail = os.str();
                  return o;
              });

    // 16: property suites
    criterion(16, "properties: theta parity, Euler identity, reflection involutivity, "
                  "b-preservation, orbit stability",
              [] {
                  bool ok = true;
                  // theta parity: 120 odd nulls vanish at a generic point
                  std::mt19937_64 rng(2);
                  std::uniform_real_distribution<double> u(-0.15, 0.15);
                  Eigen::Matrix4cd t;
                  for (int i = 0; i < 4; ++i)
                      for (int j = i; j < 4; ++j) {
                          complexd v(u(rng), u(rng));
                          t(i, j) = t(j, i) = v;
                      }
                  for (int i = 0; i < 4; ++i) t(i, i) += complexd(0, 1.2);
                  SiegelPoint sp = SiegelPoint::checked(t);
                  ThetaConfig cfg;
                  double scale = 0;
                  std::vector<double> odd;
                  for (unsigned e = 0; e < 16; ++e)
                      for (unsigned ep = 0; ep < 16; ++ep) {
                          ThetaChar ch = ThetaChar::from_bits(e, ep);
                          double v = std::abs(thetanull(ch, sp, cfg));
                          scale = std::max(scale, v);
                          if (!ch.even()) odd.push_back(v);
                      }
                  ok = ok && odd.size() == 120;
                  for (double v : odd) ok = ok && v < 1e-14 * scale;

                  // Euler identity on F
                  MultiPoly<Rational> euler(p5_vars());
                  for (std::size_t v = 0; v < 6; ++v)
                      euler += MultiPoly<Rational>::variable(p5_vars(), v) *
                               build_f().derivative(v);
                  ok = ok && euler == Rational(10) * build_f();

                  // reflections are involutions
                  for (const auto& a : simple_roots()) {
                      WeylElement s = reflection(a);
                      ok = ok && s * s == WeylElement::identity();
                  }

                  // every group element preserves b
                  for (const auto& g : weyl_group().elements()) ok = ok && preserves_b(g);

                  // line, cusp, and plane sets are setwise stable
                  std::unordered_set<RowSpace, RowSpaceHash> line_set;
                  for (const auto& l : boundary_lines()) line_set.insert(RowSpace{l});
                  for (const auto& l : boundary_lines())
                      for (const auto& g : weyl_group().generators())
                          ok = ok && line_set.count(RowSpace{act_on_rows(l, g)});
                  std::unordered_set<Vec6, Vec6Hash> cusp_set(cusps().begin(), cusps().end());
                  for (const auto& c : cusps())
                      for (const auto& g : weyl_group().generators())
                          ok = ok && cusp_set.count(projective_normalize(g.apply(c)));
                  std::set<std::string> plane_set;
                  for (auto i : conjugacy_class_c(weyl_group()))
                      plane_set.insert(
                          eigenplane(weyl_group().element(i), Cyclotomic::omega()).str());
                  for (auto i : conjugacy_class_c(weyl_group()))
                      for (const auto& g : weyl_group().generators()) {
                          WeylElement conj = g * weyl_group().element(i) * g.inverse();
                          if (!plane_set.count(eigenplane(conj, Cyclotomic::omega()).str()))
                              ok = false;
                      }
                  Outcome o;
                  o.ok = ok;
                  o.detail = ok ? "all property suites hold" : "";
                  return o;
              });

    std::printf("%d of 16 criteria passed\n", 16 - failures);
    return failures;
}
