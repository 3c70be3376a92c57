#pragma once

// The named verification checks behind the CLI and the acceptance runner.
// Every check carries a stable id (renames are breaking), a plain statement
// of the claim it verifies, and serialized expected/actual values.

#include <chrono>
#include <functional>
#include <sstream>

#include "picmod/group_io.hpp"
#include "picmod/report.hpp"
#include "picmod/theta.hpp"
#include "picmod/variety.hpp"

namespace picmod {

class CheckContext {
public:
    explicit CheckContext(const RunConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

    const RunConfig& cfg() const { return cfg_; }
    std::mt19937_64& rng() { return rng_; }

    ThetaConfig theta() const {
        ThetaConfig t;
        t.radius = cfg_.theta_radius;
        t.zero_tol = cfg_.tolerance;
        return t;
    }

    // group table with cache handling; records how it was obtained
    const GroupTable& group() {
        if (!group_ready_) {
            auto t0 = std::chrono::steady_clock::now();
            if (!cfg_.cache_path.empty()) {
                try {
                    install_weyl_group(load_group(cfg_.cache_path));
                    group_source = "cache";
                } catch (const std::exception&) {
                    group_source = "generated (cache unusable, rewritten)";
                }
            } else {
                group_source = "generated";
            }
            const GroupTable& t = weyl_group();  // generates unless installed
            if (!cfg_.cache_path.empty() && group_source != "cache")
                cache_group(t, cfg_.cache_path);
            group_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            group_ready_ = true;
        }
        return weyl_group();
    }

    const std::vector<Vec6>& orbit27() {
        if (orbit27_.empty())
            orbit27_ = orbit(group(), Vec6{Frac64(1), Frac64(0), Frac64(0), Frac64(0),
                                           Frac64(0), Frac64(0)}, false);
        return orbit27_;
    }

    const MultiPoly<Rational>& invariant(unsigned k) {
        auto it = invariants_.find(k);
        if (it == invariants_.end())
            it = invariants_.emplace(k, invariant_polynomial(k, orbit27())).first;
        return it->second;
    }

    const Q36Location& q36() {
        if (!q36_) {
            group();
            q36_ = q36_locate();
        }
        return *q36_;
    }

    std::string group_source = "not built";
    double group_seconds = 0;

private:
    RunConfig cfg_;
    std::mt19937_64 rng_;
    bool group_ready_ = false;
    std::vector<Vec6> orbit27_;
    std::map<unsigned, MultiPoly<Rational>> invariants_;
    std::optional<Q36Location> q36_;
};

struct CheckDef {
    std::string id;
    std::string suite;
    std::string claim;
    bool slow_only = false;
    std::function<void(CheckContext&, CheckRecord&)> run;
};

namespace checks_detail {

inline void set(CheckRecord& r, const std::string& expected, const std::string& actual) {
    r.expected = expected;
    r.actual = actual;
    r.status = expected == actual ? CheckRecord::Status::Pass : CheckRecord::Status::Fail;
}

inline void set_bool(CheckRecord& r, bool ok, const std::string& detail = "") {
    r.expected = "true";
    r.actual = ok ? "true" : (detail.empty() ? "false" : "false (" + detail + ")");
    r.status = ok ? CheckRecord::Status::Pass : CheckRecord::Status::Fail;
}

template <class T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Exhaustive exact invariance of F under every group element.  F equals a
// scalar times a polynomial in the orbit power sums I_k (verified once,
// exactly), and b(g X, v) = b(X, g^-1 v) for a b-isometry, so any element
// that preserves b and permutes the 27-orbit fixes every I_k and hence F.
// Both certificate conditions are checked for all 51840 elements; direct
// substitution F o g = F is additionally run on a deterministic sample.
inline bool exhaustive_invariance(CheckContext& ctx, std::string* detail) {
    const GroupTable& group = ctx.group();
    auto c = invariant_identity_scalar(build_f(), ctx.invariant(2), ctx.invariant(5),
                                       ctx.invariant(6), ctx.invariant(8));
    if (!c) {
        *detail = "invariant identity failed";
        return false;
    }
    std::unordered_set<Vec6, Vec6Hash> orbit_set(ctx.orbit27().begin(), ctx.orbit27().end());
    for (const auto& g : group.elements()) {
        if (!preserves_b(g)) {
            *detail = "element does not preserve b";
            return false;
        }
        for (const auto& v : ctx.orbit27())
            if (!orbit_set.count(g.apply(v))) {
                *detail = "element does not permute the 27-orbit";
                return false;
            }
    }
    std::size_t sampled = 0;
    for (std::size_t i = 0; i < group.order(); i += 2311, ++sampled)
        if (substitute(build_f(), to_substitution(group.element(i))) != build_f()) {
            *detail = "direct substitution mismatch at element " + std::to_string(i);
            return false;
        }
    *detail = "certificate for all " + std::to_string(group.order()) +
              " elements, direct substitution on " + std::to_string(sampled) + " samples";
    return true;
}

}  // namespace checks_detail

inline std::vector<CheckDef> all_checks() {
    using namespace checks_detail;
    std::vector<CheckDef> defs;
    auto add = [&](std::string id, std::string suite, std::string claim,
                   std::function<void(CheckContext&, CheckRecord&)> fn, bool slow = false) {
        defs.push_back({std::move(id), std::move(suite), std::move(claim), slow, std::move(fn)});
    };

    // ---------------------------------------------------------------- exact
    add("exact.cyclotomic.norm", "exact", "(1+2w)(1+2w-bar) equals the field norm 3",
        [](CheckContext&, CheckRecord& r) {
            Cyclotomic x(Rational(1), Rational(2));
            set(r, "3", (x * x.conj()).str());
        });
    add("exact.cyclotomic.axioms", "exact",
        "Q(w) satisfies the field axioms on seeded random samples",
        [](CheckContext& ctx, CheckRecord& r) {
            std::uniform_int_distribution<long> d(-9, 9);
            bool ok = true;
            for (int t = 0; t < 200 && ok; ++t) {
                auto rnd = [&] {
                    return Cyclotomic(Rational(d(ctx.rng()), 1 + (t % 5)),
                                      Rational(d(ctx.rng()), 1 + (t % 3)));
                };
                Cyclotomic a = rnd(), b = rnd(), c = rnd();
                ok = ok && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
                ok = ok && (a.conj().conj() == a) && a.norm() >= Rational(0);
                if (!a.is_zero()) ok = ok && a * a.inverse() == Cyclotomic(1);
            }
            set_bool(r, ok);
        });
    add("exact.solve.weight2", "exact",
        "the second fundamental weight solves b(x, alpha_j) = delta_2j",
        [](CheckContext&, CheckRecord& r) {
            Vec6 l2 = fundamental_weight(2);
            std::string got;
            for (int i = 0; i < 6; ++i) got += (i ? "," : "") + l2[i].str();
            set(r, "2,0,0,0,0,0", got);
        });
    add("exact.lattice.saturation", "exact",
        "integer kernels are saturated (primitive generators)",
        [](CheckContext&, CheckRecord& r) {
            Matrix<Int> a(2, 1);
            a(0, 0) = 2;
            a(1, 0) = 4;
            auto ker = row_kernel_lattice(a);
            bool ok = ker.size() == 1 && gcd(ker[0][0], ker[0][1]) == 1;
            set_bool(r, ok);
        });

    // ---------------------------------------------------------------- group
    add("weyl.order", "group", "the four generator actions generate a group of order 51840",
        [](CheckContext& ctx, CheckRecord& r) { set(r, "51840", str(ctx.group().order())); });
    add("weyl.b_preserved", "group", "every generated element preserves the form b",
        [](CheckContext& ctx, CheckRecord& r) {
            std::size_t bad = 0;
            for (const auto& g : ctx.group().elements())
                if (!preserves_b(g)) ++bad;
            set(r, "0", str(bad));
        });
    add("weyl.minus_identity_absent", "group", "-identity is not an element of the group",
        [](CheckContext& ctx, CheckRecord& r) {
            set_bool(r, !ctx.group().contains(
                            WeylElement::diagonal({-1, -1, -1, -1, -1, -1})));
        });
    add("weyl.orbit27", "group",
        "the orbit of (1,0,...,0) has 27 vectors, all of b-norm 1/3",
        [](CheckContext& ctx, CheckRecord& r) {
            const auto& o = ctx.orbit27();
            bool norms = true;
            for (const auto& v : o) norms = norms && b_form(v, v) == Frac64(1, 3);
            set(r, "27 vectors, norms 1/3",
                str(o.size()) + " vectors, norms " + (norms ? "1/3" : "off"));
        });
    add("weyl.roots72", "group", "the root orbit has 72 elements",
        [](CheckContext& ctx, CheckRecord& r) {
            set(r, "72", str(orbit(ctx.group(), simple_roots()[0], false).size()));
        });
    add("weyl.classC.size", "group",
        "exactly 80 elements of order three have characteristic polynomial (x^2+x+1)^3",
        [](CheckContext& ctx, CheckRecord& r) {
            set(r, "80", str(conjugacy_class_c(ctx.group()).size()));
        });
    add("weyl.classC.single", "group", "those 80 elements form a single conjugacy class",
        [](CheckContext& ctx, CheckRecord& r) {
            auto cls = conjugacy_class_c(ctx.group());
            auto rep = ctx.group().index_of(class_c_representative());
            bool ok = rep.has_value();
            if (ok) {
                auto orb = conjugation_orbit(ctx.group(), *rep);
                ok = std::set<std::uint32_t>(orb.begin(), orb.end()) ==
                     std::set<std::uint32_t>(cls.begin(), cls.end());
            }
            set_bool(r, ok);
        });
    add("weyl.centralizer.g3", "group", "the centralizer of the class representative has order 648",
        [](CheckContext& ctx, CheckRecord& r) {
            set(r, "648", str(centralizer_order(ctx.group(), class_c_representative())));
        });
    add("weyl.planes.count", "group", "the class elements cut out 80 distinct eigenplanes",
        [](CheckContext& ctx, CheckRecord& r) {
            std::set<std::string> keys;
            for (auto i : conjugacy_class_c(ctx.group()))
                keys.insert(eigenplane(ctx.group().element(i), Cyclotomic::omega()).str());
            set(r, "80", str(keys.size()));
        });
    add("weyl.planes.w3", "group",
        "the representative's omega-eigenplane equals the stated column span",
        [](CheckContext&, CheckRecord& r) {
            auto plane = eigenplane(class_c_representative(), Cyclotomic::omega());
            set_bool(r, plane == canonical_row_space(w3_plane_columns().transpose()));
        });
    add("symp.named.symplectic", "group", "every named matrix satisfies N E tN = E",
        [](CheckContext&, CheckRecord& r) {
            const auto& n = NamedMatrices::get();
            bool ok = true;
            for (const SympMatrix* m : {&n.M, &n.E, &n.T, &n.M22, &n.MB, &n.Md, &n.Me, &n.Mf,
                                        &n.Mpr, &n.Mip, &n.MC, &n.MD, &n.M12})
                ok = ok && is_symplectic(*m);
            set_bool(r, ok);
        });
    add("symp.named.placement", "group",
        "normalizer/centralizer placement of the named matrices",
        [](CheckContext&, CheckRecord& r) {
            const auto& n = NamedMatrices::get();
            using NC = NormalizerClass;
            bool ok = classify_normalizer(n.MB) == NC::NormalizerOnly &&
                      classify_normalizer(n.MC) == NC::Centralizer &&
                      classify_normalizer(n.MD) == NC::Centralizer &&
                      classify_normalizer(n.Mpr) == NC::Centralizer &&
                      classify_normalizer(n.Mip) == NC::Centralizer &&
                      classify_normalizer(n.M12) == NC::Centralizer &&
                      classify_normalizer(n.Md) != NC::Outside &&
                      classify_normalizer(n.Me) != NC::Outside &&
                      classify_normalizer(n.Mf) != NC::Outside;
            set_bool(r, ok);
        });
    add("symp.squares", "group", "A and M both satisfy x^2 + x + 1 = 0",
        [](CheckContext&, CheckRecord& r) {
            const auto& n = NamedMatrices::get();
            bool ok = n.A * n.A + n.A + Matrix<Int>::identity(4) == Matrix<Int>(4, 4) &&
                      n.M * n.M + n.M + Matrix<Int>::identity(8) == Matrix<Int>(8, 8);
            set_bool(r, ok);
        });
    add("symp.conjugation.t", "group", "T conjugates M to the block form M22",
        [](CheckContext&, CheckRecord& r) {
            const auto& n = NamedMatrices::get();
            set_bool(r, n.T * n.M * symplectic_inverse(n.T) == n.M22);
        });
    add("symp.m12.order", "group",
        "M12 = M MC has order twelve with M12^4 = M and M12^3 = -MC (projectively MC)",
        [](CheckContext&, CheckRecord& r) {
            const auto& n = NamedMatrices::get();
            bool ok = matrix_order(n.M12) == 12 &&
                      n.M12 * n.M12 * n.M12 * n.M12 == n.M &&
                      n.M12 * n.M12 * n.M12 == -n.MC;
            set_bool(r, ok);
        });
    add("symp.mb_md.commute", "group", "MB and MD commute",
        [](CheckContext&, CheckRecord& r) {
            const auto& n = NamedMatrices::get();
            set_bool(r, n.MB * n.MD == n.MD * n.MB);
        });
    add("symp.hermitian.gram", "group", "the Gram matrix of H_M on the f-basis is diag(1,1,-1,-1)",
        [](CheckContext&, CheckRecord& r) {
            bool ok = true;
            for (std::size_t i = 0; i < 4 && ok; ++i)
                for (std::size_t j = 0; j < 4 && ok; ++j) {
                    Cyclotomic h = hermitian_form(f_basis_vector(i), f_basis_vector(j));
                    Cyclotomic want = i == j ? Cyclotomic(i < 2 ? 1 : -1) : Cyclotomic(0);
                    ok = h == want;
                }
            set_bool(r, ok);
        });
    add("symp.hermitian.linear", "group",
        "H_M is hermitian and w-linear over the full standard basis",
        [](CheckContext&, CheckRecord& r) {
            const auto& m = NamedMatrices::get().M;
            bool ok = true;
            for (std::size_t i = 0; i < 8 && ok; ++i)
                for (std::size_t j = 0; j < 8 && ok; ++j) {
                    GaussianLatticeVector ei(8, Int(0)), ej(8, Int(0));
                    ei[i] = 1;
                    ej[j] = 1;
                    Cyclotomic h = hermitian_form(ei, ej);
                    ok = hermitian_form(ej, ei) == h.conj() &&
                         hermitian_form(act(ei, m), ej) == Cyclotomic::omega() * h;
                }
            set_bool(r, ok);
        });
    add("symp.lattice.pr", "group", "E restricted to the M_pr-fixed lattice has determinant 1",
        [](CheckContext&, CheckRecord& r) {
            set(r, "1", fixed_sublattice_det(NamedMatrices::get().Mpr).get_str());
        });
    add("symp.lattice.ip", "group", "E restricted to the M_ip-fixed lattice has determinant 9",
        [](CheckContext&, CheckRecord& r) {
            set(r, "9", fixed_sublattice_det(NamedMatrices::get().Mip).get_str());
        });
    add("symp.gamma24", "group",
        "M_ip = M_pr and M_D = M_C modulo the theta level subgroup; M itself is not in it",
        [](CheckContext&, CheckRecord& r) {
            const auto& n = NamedMatrices::get();
            bool ok = in_gamma_2_4(n.Mip * symplectic_inverse(n.Mpr)) &&
                      in_gamma_2_4(n.MD * symplectic_inverse(n.MC)) && !in_gamma_2_4(n.M);
            set_bool(r, ok);
        });
    add("symp.unitary.order", "group",
        "reductions mod 2 of centralizer elements close to the unitary group of order 77760",
        [](CheckContext&, CheckRecord& r) {
            const auto& n = NamedMatrices::get();
            std::vector<SympMatrix> gens = {n.M, n.MC, n.MD, n.Mpr, n.Mip};
            for (const SympMatrix* a : {&n.MB, &n.Md, &n.Me, &n.Mf})
                for (const SympMatrix* b : {&n.MB, &n.Md, &n.Me, &n.Mf})
                    if (classify_normalizer(*a) == NormalizerClass::NormalizerOnly &&
                        classify_normalizer(*b) == NormalizerClass::NormalizerOnly)
                        gens.push_back(*a * *b);
            using C = Cyclotomic;
            C w = C::omega(), w2 = C::omega_bar(), one(1), zero(0);
            std::vector<std::array<C, 4>> iso = {
                {one, zero, one, zero}, {one, zero, zero, one},  {zero, one, one, zero},
                {zero, one, zero, one}, {one, zero, w, zero},    {zero, w, zero, one},
                {one, one, one, one},   {one, w, w2, one}};
            for (auto& u : iso) gens.push_back(unitary_transvection(u, 1));
            std::vector<UnitaryF4Matrix> ug;
            for (auto& g : gens) ug.push_back(reduce_to_unitary(g));
            std::size_t full = unitary_closure(ug).size();
            std::vector<UnitaryF4Matrix> named = {
                reduce_to_unitary(n.M), reduce_to_unitary(n.MC), reduce_to_unitary(n.MD),
                reduce_to_unitary(n.Mpr), reduce_to_unitary(n.Mip)};
            std::size_t named_only = unitary_closure(named).size();
            set(r, "77760 (named elements alone: 18)",
                str(full) + " (named elements alone: " + str(named_only) + ")");
        });
    add("symp.unitary.hom", "group", "reduction mod 2 is a group homomorphism",
        [](CheckContext& ctx, CheckRecord& r) {
            const auto& n = NamedMatrices::get();
            std::vector<const SympMatrix*> cm = {&n.M, &n.MC, &n.MD, &n.Mpr, &n.Mip};
            std::uniform_int_distribution<std::size_t> pick(0, cm.size() - 1);
            bool ok = true;
            for (int t = 0; t < 25 && ok; ++t) {
                const SympMatrix& a = *cm[pick(ctx.rng())];
                const SympMatrix& b = *cm[pick(ctx.rng())];
                ok = reduce_to_unitary(a * b) == reduce_to_unitary(a) * reduce_to_unitary(b);
            }
            set_bool(r, ok);
        });

    // -------------------------------------------------------------- variety
    add("variety.F.terms", "variety", "the invariant decic has exactly 147 terms",
        [](CheckContext&, CheckRecord& r) { set(r, "147", str(build_f().term_count())); });
    add("variety.F.degree", "variety", "F is homogeneous of degree 10",
        [](CheckContext&, CheckRecord& r) {
            set(r, "homogeneous of degree 10",
                std::string(build_f().is_homogeneous() ? "homogeneous" : "inhomogeneous") +
                    " of degree " + str(build_f().degree()));
        });
    add("variety.F.generators", "variety", "F is invariant under all four generator actions",
        [](CheckContext&, CheckRecord& r) {
            std::string who;
            set_bool(r, verify_generator_invariance(build_f(), &who), who);
        });
    add("variety.F.euler", "variety", "the Euler identity at degree ten holds for F",
        [](CheckContext&, CheckRecord& r) {
            MultiPoly<Rational> euler(p5_vars());
            for (std::size_t v = 0; v < 6; ++v)
                euler += MultiPoly<Rational>::variable(p5_vars(), v) * build_f().derivative(v);
            set_bool(r, euler == Rational(10) * build_f());
        });
    add("variety.F.invariant_identity", "variety",
        "F equals a unique scalar times 11520 I8 I2 - 4160 I6 I2^2 - 4608 I5^2 + 25 I2^5",
        [](CheckContext& ctx, CheckRecord& r) {
            auto c = invariant_identity_scalar(build_f(), ctx.invariant(2), ctx.invariant(5),
                                               ctx.invariant(6), ctx.invariant(8));
            bool neg = invariant_identity_scalar(build_f(), ctx.invariant(2), ctx.invariant(5),
                                                 ctx.invariant(6), ctx.invariant(8), 11520,
                                                 -4160, -4609, 25)
                           .has_value();
            set(r, "unique scalar of magnitude 2/675; perturbed combination fails",
                c.has_value() && !neg
                    ? "unique scalar of magnitude " + c->abs().str() +
                          "; perturbed combination fails"
                    : "identity failed");
        });
    add("variety.F.invariant_identity_sign", "variety",
        "the stated scalar is c = -2/675 (exact computation yields +2/675)",
        [](CheckContext& ctx, CheckRecord& r) {
            auto c = invariant_identity_scalar(build_f(), ctx.invariant(2), ctx.invariant(5),
                                               ctx.invariant(6), ctx.invariant(8));
            set(r, "-2/675", c ? c->str() : "no scalar");
        });
    add("variety.quadrics.count", "variety", "there are 136 even characteristics",
        [](CheckContext&, CheckRecord& r) {
            set(r, "136", str(restrict_quadrics().restricted.size()));
        });
    add("variety.quadrics.m_invariant", "variety",
        "exactly one quadric is invariant under the coordinate action of M",
        [](CheckContext&, CheckRecord& r) { set(r, "1", str(m_invariant_quadric_count())); });
    add("variety.quadrics.q00", "variety",
        "the invariant quadric restricts to X0^2 + 3(X1^2+X2^2+X3^2+X6^2+X7^2)",
        [](CheckContext&, CheckRecord& r) {
            const auto& fam = restrict_quadrics();
            MultiPoly<Rational> expect(p5_vars());
            expect.add_term({2, 0, 0, 0, 0, 0}, Rational(1));
            for (int i = 1; i < 6; ++i) {
                Mono m(6, 0);
                m[i] = 2;
                expect.add_term(m, Rational(3));
            }
            bool ok = false;
            for (std::size_t i = 0; i < fam.chars.size(); ++i)
                if (fam.chars[i].eps == 0 && fam.chars[i].epsp == 0)
                    ok = fam.restricted[i] == expect;
            set_bool(r, ok);
        });
    add("variety.counts.cusp", "variety", "120 quadrics vanish at the cusp (1:0:0:0:0:0)",
        [](CheckContext&, CheckRecord& r) {
            std::vector<Rational> cusp = {Rational(1), Rational(0), Rational(0),
                                          Rational(0), Rational(0), Rational(0)};
            std::size_t n = 0;
            for (const auto& q : restrict_quadrics().restricted)
                if (q.evaluate(cusp, [](const Rational& c) { return c; }).is_zero()) ++n;
            set(r, "120", str(n));
        });
    add("variety.counts.line", "variety",
        "96 quadrics vanish identically along the boundary line",
        [](CheckContext&, CheckRecord& r) {
            set(r, "96",
                str(quadric_vanishing_count(line_parametrization(boundary_line_seed()))));
        });
    add("variety.counts.q22", "variety", "36 quadrics vanish on the product quadric",
        [](CheckContext&, CheckRecord& r) {
            set(r, "36", str(quadric_vanishing_count(q22_parametrization())));
        });
    add("variety.counts.w3", "variety", "28 quadrics vanish on the Hesse plane",
        [](CheckContext&, CheckRecord& r) {
            auto plane = eigenplane(class_c_representative(), Cyclotomic::omega());
            set(r, "28", str(quadric_vanishing_count(plane_parametrization(plane))));
        });
    add("variety.counts.translates", "variety",
        "vanishing counts are unchanged on group translates of the subvarieties",
        [](CheckContext& ctx, CheckRecord& r) {
            std::uniform_int_distribution<std::uint32_t> pick(
                0, (std::uint32_t)ctx.group().order() - 1);
            bool ok = true;
            auto plane = eigenplane(class_c_representative(), Cyclotomic::omega());
            for (int t = 0; t < 2 && ok; ++t) {
                const WeylElement& g = ctx.group().element(pick(ctx.rng()));
                ok = quadric_vanishing_count(compose_action(g, q22_parametrization())) == 36;
                ok = ok && quadric_vanishing_count(
                               compose_action(g, plane_parametrization(plane))) == 28;
            }
            set_bool(r, ok);
        });
    add("variety.counts.w3_ranks", "variety",
        "the 108 quadrics not vanishing on the Hesse plane restrict to rank <= 2 forms",
        [](CheckContext&, CheckRecord& r) {
            auto plane = eigenplane(class_c_representative(), Cyclotomic::omega());
            auto pw3 = plane_parametrization(plane);
            std::size_t zero = 0, low = 0;
            for (const auto& q : restrict_quadrics().restricted) {
                auto qc = q.map_coeff<Cyclotomic>(
                    [](const Rational& c) { return Cyclotomic(c); });
                auto rest = substitute(qc, pw3);
                if (rest.is_zero()) ++zero;
                else if (quadratic_form_rank(rest) <= 2) ++low;
            }
            set(r, "28 vanish, 108 of rank <= 2", str(zero) + " vanish, " + str(low) +
                                                      " of rank <= 2");
        });
    add("variety.factor.z", "variety",
        "F restricted to X3 = X6 = X7 factors as (X0 X3 - X1 X2)^2 times a sextic",
        [](CheckContext&, CheckRecord& r) {
            auto fac = factor_on_a2_space();
            auto fz = substitute(build_f(), z_restriction());
            bool ok = fac.f22.degree() == 6 && fac.f22.is_homogeneous() &&
                      fz == fac.q22 * fac.q22 * fac.f22;
            set_bool(r, ok);
        });
    add("variety.factor.w", "variety",
        "F restricted to X6 = X7 = 0 factors as the quadric times the seven-term octic",
        [](CheckContext&, CheckRecord& r) {
            auto fac = factor_on_a1a1_space();
            auto fw = substitute(build_f(), w_restriction());
            bool ok = fw == fac.q67 * fac.s67 && fac.s67 == fac.unit * s67_reference();
            set_bool(r, ok);
        });
    add("variety.igusa.hessian", "variety",
        "the hyperplane section of F is proportional to the Hessian of the Igusa quartic, "
        "both with 591 terms",
        [](CheckContext&, CheckRecord& r) {
            auto id = igusa_hessian_identity();  // throws unless proportional
            set(r, "591 + 591 terms, scalar -1/384",
                str(id.f_terms) + " + " + str(id.hessian_terms) + " terms, scalar " +
                    id.scalar.str());
        });
    add("variety.sing.q22", "variety", "all six partials of F vanish on the product quadric",
        [](CheckContext&, CheckRecord& r) {
            set_bool(r, singular_membership(q22_parametrization()));
        });
    add("variety.sing.w3", "variety", "all six partials of F vanish on the Hesse plane",
        [](CheckContext&, CheckRecord& r) {
            auto plane = eigenplane(class_c_representative(), Cyclotomic::omega());
            set_bool(r, singular_membership(plane_parametrization(plane)));
        });
    add("variety.sing.accounting", "variety",
        "the singular locus carries 120 quadrics and 80 planes: total degree 320",
        [](CheckContext& ctx, CheckRecord& r) {
            ctx.group();
            std::size_t quads = quadric_surface_orbit().size();
            std::set<std::string> keys;
            for (auto i : conjugacy_class_c(ctx.group()))
                keys.insert(eigenplane(ctx.group().element(i), Cyclotomic::omega()).str());
            std::size_t planes = keys.size();
            bool seed_ok = singular_membership(q22_parametrization()) &&
                           verify_generator_invariance(build_f());
            std::ostringstream os;
            os << quads << " quadrics, " << planes << " planes, degree "
               << (2 * quads + planes) << (seed_ok ? "" : ", seed membership failed");
            set(r, "120 quadrics, 80 planes, degree 320", os.str());
        });
    add("variety.sing.subsystems", "variety", "there are 120 rank-two subsystems of the roots",
        [](CheckContext& ctx, CheckRecord& r) {
            ctx.group();
            set(r, "120", str(a2_subsystem_count()));
        });
    add("variety.sing.direct", "variety",
        "direct symbolic membership of every quadric surface and every plane",
        [](CheckContext& ctx, CheckRecord& r) {
            ctx.group();
            std::size_t bad = 0;
            for (const auto& s : quadric_surface_orbit())
                if (!singular_membership(compose_action(s.transform, q22_parametrization())))
                    ++bad;
            for (auto i : conjugacy_class_c(ctx.group())) {
                auto plane = eigenplane(ctx.group().element(i), Cyclotomic::omega());
                if (!singular_membership(plane_parametrization(plane))) ++bad;
            }
            set(r, "0 failures over 200 components", str(bad) + " failures over 200 components");
        },
        /*slow=*/true);
    add("variety.F.full_invariance", "variety",
        "F o g = F for all 51840 elements (exact certificate per element, direct "
        "substitution on a deterministic sample)",
        [](CheckContext& ctx, CheckRecord& r) {
            std::string detail;
            bool ok = exhaustive_invariance(ctx, &detail);
            set_bool(r, ok, detail);
            if (ok) r.actual = "true (" + detail + ")";
        },
        /*slow=*/true);
    add("variety.hesse.invariants", "variety",
        "I2, I5, I8 restrict to zero on the Hesse plane; I6, I9, I12 do not, and the "
        "restrictions of I6^2 and I12 are linearly independent",
        [](CheckContext& ctx, CheckRecord& r) {
            auto res = hesse_invariant_restrictions(ctx.orbit27());
            set_bool(r, res.ok());
        });
    add("variety.branch.factorization", "variety",
        "the quartic branch curve splits into two conjugate conics over Q(w)",
        [](CheckContext&, CheckRecord& r) { set_bool(r, branch_locus_factorization()); });
    add("variety.q36.split", "variety",
        "F on X1 = X2, X6 = X7 splits into degrees 2 + 8, with 6 quadrics vanishing on the "
        "quadric part and none identically on the section",
        [](CheckContext& ctx, CheckRecord& r) {
            const auto& loc = ctx.q36();
            auto fw = substitute(build_f(), wprime_restriction());
            std::ostringstream os;
            os << "degrees " << loc.q36.degree() << "+" << loc.s36.degree() << ", "
               << loc.vanishing_on_q36 << " vanish, " << loc.identically_zero_on_wprime
               << " identically zero" << (fw == loc.q36 * loc.s36 ? "" : ", product mismatch");
            set(r, "degrees 2+8, 6 vanish, 0 identically zero", os.str());
        });
    add("variety.conics", "variety",
        "the eight conics cut Q67 out of the octic surface via the sign planes",
        [](CheckContext&, CheckRecord& r) {
            auto cc = q67_s67_conic_check();
            set_bool(r, cc.proportional && cc.all_nonzero && cc.pairwise_distinct &&
                            cc.sign_symmetry);
        });
    add("variety.mcycles", "variety", "the index action of M has the stated five 3-cycles",
        [](CheckContext&, CheckRecord& r) { set_bool(r, m_cycle_check()); });

    // ------------------------------------------------------------- boundary
    add("boundary.lines", "boundary", "the boundary consists of 45 lines",
        [](CheckContext& ctx, CheckRecord& r) {
            ctx.group();
            set(r, "45", str(boundary_lines().size()));
        });
    add("boundary.cusps", "boundary", "there are 27 cusps",
        [](CheckContext& ctx, CheckRecord& r) {
            ctx.group();
            set(r, "27", str(cusps().size()));
        });
    add("boundary.incidence", "boundary",
        "45 lines and 27 cusps with 3 cusps per line and 5 lines per cusp; all pairwise "
        "intersections are cusps; F vanishes on every line",
        [](CheckContext& ctx, CheckRecord& r) {
            ctx.group();
            auto rep = boundary_incidence();
            std::ostringstream os;
            os << rep.line_count << " lines, " << rep.cusp_count << " cusps, "
               << rep.intersection_points << " intersection points"
               << (rep.intersections_are_cusps ? "" : " (not all cusps)") << ", "
               << (rep.three_cusps_per_line ? "3/line" : "bad line incidence") << ", "
               << (rep.five_lines_per_cusp ? "5/cusp" : "bad cusp incidence") << ", F "
               << (rep.f_vanishes_on_lines ? "vanishes" : "nonzero");
            set(r, "45 lines, 27 cusps, 27 intersection points, 3/line, 5/cusp, F vanishes",
                os.str());
        });
    add("boundary.cusps_on_l", "boundary",
        "the cusps on the seed line are (1:0:...), (1:1:0:...), (1:-1:0:...)",
        [](CheckContext& ctx, CheckRecord& r) {
            ctx.group();
            auto line = boundary_line_seed().rref();
            std::vector<Vec6> expected = {
                projective_normalize(
                    {Frac64(1), Frac64(0), Frac64(0), Frac64(0), Frac64(0), Frac64(0)}),
                projective_normalize(
                    {Frac64(1), Frac64(1), Frac64(0), Frac64(0), Frac64(0), Frac64(0)}),
                projective_normalize(
                    {Frac64(1), Frac64(-1), Frac64(0), Frac64(0), Frac64(0), Frac64(0)})};
            std::size_t found = 0;
            bool listed = true;
            for (const auto& c : cusps())
                if (point_on_line(c, line)) {
                    ++found;
                    listed = listed &&
                             std::count(expected.begin(), expected.end(), c) == 1;
                }
            set_bool(r, found == 3 && listed);
        });
    add("boundary.heisenberg", "boundary",
        "the Heisenberg boundary 3-space meets the eigenspace exactly in the line l, and "
        "the zero-dimensional component is the cusp (1:0:...:0)",
        [](CheckContext&, CheckRecord& r) {
            auto hb = heisenberg_boundary_check();
            set_bool(r, hb.intersection_dim == 1 && hb.line_is_l && hb.point_component_is_p);
        });
    add("boundary.stability", "boundary", "line and cusp sets are stable under the generators",
        [](CheckContext& ctx, CheckRecord& r) {
            ctx.group();
            std::unordered_set<RowSpace, RowSpaceHash> line_set;
            for (const auto& l : boundary_lines()) line_set.insert(RowSpace{l});
            bool ok = true;
            for (const auto& l : boundary_lines())
                for (const auto& g : ctx.group().generators())
                    ok = ok && line_set.count(RowSpace{act_on_rows(l, g)});
            std::unordered_set<Vec6, Vec6Hash> cusp_set(cusps().begin(), cusps().end());
            for (const auto& c : cusps())
                for (const auto& g : ctx.group().generators())
                    ok = ok && cusp_set.count(projective_normalize(g.apply(c)));
            set_bool(r, ok);
        });

    // ---------------------------------------------------------------- theta
    add("theta.parity", "theta", "all 120 odd thetanulls vanish at z = 0",
        [](CheckContext& ctx, CheckRecord& r) {
            std::uniform_real_distribution<double> u(-0.15, 0.15);
            Eigen::Matrix4cd t;
            for (int i = 0; i < 4; ++i)
                for (int j = i; j < 4; ++j) {
                    complexd v(u(ctx.rng()), u(ctx.rng()));
                    t(i, j) = t(j, i) = v;
                }
            for (int i = 0; i < 4; ++i) t(i, i) += complexd(0, 1.2);
            SiegelPoint sp = SiegelPoint::checked(t);
            double scale = 0;
            std::vector<double> odd;
            for (unsigned e = 0; e < 16; ++e)
                for (unsigned ep = 0; ep < 16; ++ep) {
                    ThetaChar ch = ThetaChar::from_bits(e, ep);
                    double v = std::abs(thetanull(ch, sp, ctx.theta()));
                    scale = std::max(scale, v);
                    if (!ch.even()) odd.push_back(v);
                }
            std::size_t bad = 0;
            for (double v : odd)
                if (v >= 1e-14 * scale) ++bad;
            set(r, "120 below 1e-14", str(odd.size() - bad) + " below 1e-14");
        });
    add("theta.bridge.hermite", "theta",
        "at 100 seeded points of the M-fixed domain the five coordinate triples agree and "
        "F vanishes at the image within relative 1e-8",
        [](CheckContext& ctx, CheckRecord& r) {
            double worst_triple = 0, worst_f = 0;
            const auto& f = build_f();
            for (int s = 0; s < 100; ++s) {
                SiegelPoint sp = sample_fixed_locus(FixedLocusTag::M, ctx.rng());
                ThetaImage img = theta_map_p5(sp, ctx.theta());
                worst_triple = std::max(worst_triple, img.triple_residual);
                worst_f = std::max(worst_f, std::abs(evaluate_p5(f, img.x)));
            }
            std::ostringstream os;
            os << (worst_triple < 1e-8 && worst_f < 1e-8 ? "within tolerance"
                                                         : "tolerance exceeded")
               << " (triples " << worst_triple << ", F " << worst_f << ")";
            r.expected = "within tolerance";
            r.actual = os.str();
            r.status = worst_triple < 1e-8 && worst_f < 1e-8 ? CheckRecord::Status::Pass
                                                             : CheckRecord::Status::Fail;
        });
    add("theta.bridge.mb", "theta",
        "reflection-fixed samples land on the hyperplane X6 = X7",
        [](CheckContext& ctx, CheckRecord& r) {
            double worst = 0;
            for (int s = 0; s < 20; ++s) {
                ThetaImage img =
                    theta_map_p5(sample_fixed_locus(FixedLocusTag::M_MB, ctx.rng()),
                                 ctx.theta());
                worst = std::max(worst, std::abs(img.x[4] - img.x[5]));
            }
            set_bool(r, worst < 1e-8, "residual " + str(worst));
        });
    add("theta.bridge.m12", "theta",
        "order-twelve samples land on the located quadric inside X1 = X2, X6 = X7",
        [](CheckContext& ctx, CheckRecord& r) {
            const auto& loc = ctx.q36();
            double worst = 0;
            for (int s = 0; s < 20; ++s) {
                ThetaImage img = theta_map_p5(
                    sample_fixed_locus(FixedLocusTag::M12, ctx.rng()), ctx.theta());
                worst = std::max(worst, std::abs(img.x[1] - img.x[2]));
                worst = std::max(worst, std::abs(img.x[4] - img.x[5]));
                worst = std::max(worst, std::abs(evaluate_p5(loc.q36_p5, img.x)));
            }
            set_bool(r, worst < 1e-6, "residual " + str(worst));
        });
    add("theta.mc.count", "theta",
        "six even thetanulls are forced to vanish on the order-twelve locus by the sign rule",
        [](CheckContext&, CheckRecord& r) { set(r, "6", str(mc_forced_vanishing().size())); });
    add("theta.mc.numeric", "theta", "those six thetanulls vanish numerically at a sample",
        [](CheckContext& ctx, CheckRecord& r) {
            SiegelPoint sp = sample_fixed_locus(FixedLocusTag::M12, ctx.rng());
            double scale = 0;
            for (unsigned e = 0; e < 16; ++e)
                for (unsigned ep = 0; ep < 16; ++ep) {
                    ThetaChar ch = ThetaChar::from_bits(e, ep);
                    if (ch.even())
                        scale = std::max(scale, std::abs(thetanull(ch, sp, ctx.theta())));
                }
            double worst = 0;
            for (const auto& ch : mc_forced_vanishing())
                worst = std::max(worst, std::abs(thetanull(ch, sp, ctx.theta())) / scale);
            set_bool(r, worst < 1e-9, "relative " + str(worst));
        });
    add("theta.profile.table", "theta",
        "vanishing counts 0 / 28 / 36 / 96 / 120 across the moduli table",
        [](CheckContext& ctx, CheckRecord& r) {
            std::ostringstream got;
            auto generic =
                vanishing_profile(sample_fixed_locus(FixedLocusTag::M, ctx.rng()), ctx.theta());

            std::uniform_real_distribution<double> u(-0.1, 0.1);
            Eigen::Matrix4cd t = Eigen::Matrix4cd::Zero();
            t(0, 0) = complexd(0.31, 1.07);
            for (int i = 1; i < 4; ++i)
                for (int j = i; j < 4; ++j) {
                    complexd v(u(ctx.rng()), u(ctx.rng()));
                    t(i, j) = t(j, i) = v;
                }
            for (int i = 1; i < 4; ++i) t(i, i) += complexd(0, 1.15);
            auto exa = vanishing_profile(SiegelPoint::checked(t), ctx.theta());

            auto prod = vanishing_profile(sample_fixed_locus(FixedLocusTag::M_MPR, ctx.rng()),
                                          ctx.theta());

            Eigen::Matrix2cd bd;
            bd << complexd(0, 16), complexd(0), complexd(0), complexd(0.17, 1.21);
            auto line_pt = vanishing_profile(sample_hermite_point(bd), ctx.theta());

            Eigen::Matrix2cd bc;
            bc << complexd(0, 16), complexd(0), complexd(0), complexd(0, 16);
            auto cusp_pt = vanishing_profile(sample_hermite_point(bc), ctx.theta());

            got << generic.vanishing << "/" << exa.vanishing << "/" << prod.vanishing << "/"
                << line_pt.vanishing << "/" << cusp_pt.vanishing;
            set(r, "0/28/36/96/120", got.str());
        });
    add("theta.isogeny", "theta",
        "the isogeny diagram identities hold symbolically and numerically",
        [](CheckContext&, CheckRecord& r) {
            Eigen::Matrix2cd tau2;
            tau2 << complexd(0, 1), complexd(0), complexd(0), complexd(0, 1);
            bool ok = isogeny_diagram_symbolic() && period_equivariance_symbolic() &&
                      isogeny_diagram_residual(tau2) < 1e-12;
            set_bool(r, ok);
        });

    return defs;
}

inline Report run_suites(const RunConfig& cfg) {
    Report rep;
    rep.config = cfg;
    CheckContext ctx(cfg);
    for (const auto& def : all_checks()) {
        if (!cfg.suites.count(def.suite)) continue;
        CheckRecord rec;
        rec.id = def.id;
        rec.citation = def.claim;
        if (def.slow_only && !cfg.slow) {
            rec.status = CheckRecord::Status::Skipped;
            rec.expected = rec.actual = "(slow check skipped)";
            rep.records.push_back(rec);
            continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        try {
            def.run(ctx, rec);
        } catch (const std::exception& e) {
            rec.status = CheckRecord::Status::Fail;
            if (rec.expected.empty()) rec.expected = "no exception";
            rec.actual = std::string("exception: ") + e.what();
        }
        rec.elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.records.push_back(rec);
    }
    rep.group_source = ctx.group_source;
    rep.group_seconds = ctx.group_seconds;
    rep.sort_records();
    return rep;
}

}  // namespace picmod
