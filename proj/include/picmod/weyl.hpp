#pragma once

// The Weyl group W(E6) acting on C^6 in coordinates (X0, X1, X2, X3, X6, X7):
// the invariant bilinear form b, the simple roots, reflections, the four
// explicit generators, breadth-first group closure with exact dedup, orbits,
// the order-three conjugacy class C with its eigenplanes, centralizers,
// fundamental weights, and the power-sum invariants I_k of the 27-orbit.

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>

#include "picmod/cyclotomic.hpp"
#include "picmod/frac64.hpp"
#include "picmod/matrix.hpp"
#include "picmod/poly.hpp"

namespace picmod {

using Vec6 = std::array<Frac64, 6>;

inline const std::vector<std::string>& p5_vars() {
    static const std::vector<std::string> v = {"X0", "X1", "X2", "X3", "X6", "X7"};
    return v;
}

// b(X, Y) = (1/3) X0 Y0 + X1 Y1 + X2 Y2 + X3 Y3 + X6 Y6 + X7 Y7
inline Frac64 b_form(const Vec6& x, const Vec6& y) {
    Frac64 acc = x[0] * y[0] / Frac64(3);
    for (int i = 1; i < 6; ++i) acc += x[i] * y[i];
    return acc;
}

inline const std::array<Vec6, 6>& simple_roots() {
    static const std::array<Vec6, 6> roots = {
        Vec6{Frac64(0), Frac64(-1), Frac64(-1), Frac64(0), Frac64(0), Frac64(0)},
        Vec6{Frac64(3, 2), Frac64(-1, 2), Frac64(1, 2), Frac64(1, 2), Frac64(1, 2),
             Frac64(1, 2)},
        Vec6{Frac64(0), Frac64(1), Frac64(-1), Frac64(0), Frac64(0), Frac64(0)},
        Vec6{Frac64(0), Frac64(0), Frac64(1), Frac64(-1), Frac64(0), Frac64(0)},
        Vec6{Frac64(0), Frac64(0), Frac64(0), Frac64(1), Frac64(-1), Frac64(0)},
        Vec6{Frac64(0), Frac64(0), Frac64(0), Frac64(0), Frac64(1), Frac64(-1)}};
    return roots;
}

// Gram matrix of the six simple roots under b.
inline Matrix<Frac64> root_gram_matrix() {
    const auto& roots = simple_roots();
    Matrix<Frac64> g(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) g(i, j) = b_form(roots[i], roots[j]);
    return g;
}

// pairs (i, j), 1-based, with b(alpha_i, alpha_j) = -1
inline std::vector<std::pair<int, int>> dynkin_edges() {
    Matrix<Frac64> g = root_gram_matrix();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (g(i, j) == Frac64(-1)) edges.emplace_back(i + 1, j + 1);
    return edges;
}

// A 6x6 exact matrix acting on column vectors.
struct WeylElement {
    std::array<Frac64, 36> a{};

    static WeylElement identity() {
        WeylElement g;
        for (int i = 0; i < 6; ++i) g.at(i, i) = Frac64(1);
        return g;
    }
    static WeylElement diagonal(std::array<int, 6> signs) {
        WeylElement g;
        for (int i = 0; i < 6; ++i) g.at(i, i) = Frac64(signs[i]);
        return g;
    }

    Frac64& at(int i, int j) { return a[6 * i + j]; }
    const Frac64& at(int i, int j) const { return a[6 * i + j]; }

    friend WeylElement operator*(const WeylElement& x, const WeylElement& y) {
        WeylElement r;
        for (int i = 0; i < 6; ++i)
            for (int k = 0; k < 6; ++k) {
                const Frac64& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (int j = 0; j < 6; ++j) r.at(i, j) += xik * y.at(k, j);
            }
        return r;
    }
    friend bool operator==(const WeylElement& x, const WeylElement& y) { return x.a == y.a; }

    Vec6 apply(const Vec6& v) const {
        Vec6 r{};
        for (int i = 0; i < 6; ++i) {
            Frac64 acc;
            for (int j = 0; j < 6; ++j) acc += at(i, j) * v[j];
            r[i] = acc;
        }
        return r;
    }

    Matrix<Frac64> to_matrix() const {
        Matrix<Frac64> m(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) m(i, j) = at(i, j);
        return m;
    }
    static WeylElement from_matrix(const Matrix<Frac64>& m) {
        WeylElement g;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) g.at(i, j) = m(i, j);
        return g;
    }

    WeylElement inverse() const { return from_matrix(to_matrix().inverse()); }

    Matrix<Rational> to_rational() const {
        Matrix<Rational> m(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) m(i, j) = at(i, j).to_rational();
        return m;
    }
    Matrix<Cyclotomic> to_cyclotomic() const {
        Matrix<Cyclotomic> m(6, 6, Cyclotomic(0));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) m(i, j) = Cyclotomic(at(i, j).to_rational());
        return m;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 0x2545F4914F6CDD1Dull;
        for (const auto& x : a) h = (h ^ x.hash()) * 0x100000001B3ull;
        return h;
    }
};

inline bool preserves_b(const WeylElement& g) {
    // t(g) B g = B with B = diag(1/3, 1, 1, 1, 1, 1)
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) {
            Frac64 acc = g.at(0, i) * g.at(0, j) / Frac64(3);
            for (int k = 1; k < 6; ++k) acc += g.at(k, i) * g.at(k, j);
            Frac64 expect = (i == j) ? (i == 0 ? Frac64(1, 3) : Frac64(1)) : Frac64(0);
            if (acc != expect) return false;
        }
    return true;
}

// s_alpha(X) = X - b(X, alpha) alpha, defined for roots with b(alpha,alpha)=2
inline WeylElement reflection(const Vec6& alpha) {
    if (b_form(alpha, alpha) != Frac64(2))
        throw std::invalid_argument("reflection: b(alpha, alpha) != 2");
    WeylElement g = WeylElement::identity();
    for (int j = 0; j < 6; ++j) {
        Vec6 ej{};
        ej[j] = Frac64(1);
        Frac64 c = b_form(ej, alpha);
        for (int i = 0; i < 6; ++i) g.at(i, j) -= c * alpha[i];
    }
    return g;
}

inline Vec6 reflect(const Vec6& alpha, const Vec6& x) {
    if (b_form(alpha, alpha) != Frac64(2))
        throw std::invalid_argument("reflect: b(alpha, alpha) != 2");
    Frac64 c = b_form(x, alpha);
    Vec6 r = x;
    for (int i = 0; i < 6; ++i) r[i] -= c * alpha[i];
    return r;
}

// The actions on P^5 of the named symplectic matrices M_B, M_d, M_e, M_f.
struct WeylGenerators {
    WeylElement mb, md, me, mf;

    static const WeylGenerators& get() {
        static WeylGenerators g = [] {
            WeylGenerators w;
            w.mb = WeylElement::identity();
            w.mb.at(4, 4) = Frac64(0);
            w.mb.at(5, 5) = Frac64(0);
            w.mb.at(4, 5) = Frac64(1);
            w.mb.at(5, 4) = Frac64(1);
            w.md = WeylElement::diagonal({1, 1, -1, -1, -1, -1});
            w.me = WeylElement::diagonal({1, 1, 1, -1, -1, 1});
            static const int mf_rows[6][6] = {{1, 3, 3, 3, 3, 3},    {1, -1, 3, -1, -1, -1},
                                              {1, 3, -1, -1, -1, -1}, {1, -1, -1, 3, -1, -1},
                                              {1, -1, -1, -1, -1, 3}, {1, -1, -1, -1, 3, -1}};
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) w.mf.at(i, j) = Frac64(mf_rows[i][j], 4);
            return w;
        }();
        return g;
    }

    std::vector<WeylElement> list() const { return {mb, md, me, mf}; }
};

// Closure of a generating set under multiplication, with exact hash dedup.
// Discovery order is deterministic (breadth-first, fixed generator order),
// which the cache format relies on.
class GroupTable {
public:
    static GroupTable generate(const std::vector<WeylElement>& gens) {
        for (const auto& g : gens)
            if (!preserves_b(g))
                throw std::invalid_argument("GroupTable: generator does not preserve b");
        GroupTable t;
        t.gens_ = gens;
        t.push(WeylElement::identity());
        for (std::size_t head = 0; head < t.elems_.size(); ++head) {
            WeylElement cur = t.elems_[head];
            for (const auto& g : gens) t.push(cur * g);
        }
        t.finish();
        return t;
    }

    // Rebuild from a stored element list (cache load); verifies closure
    // lazily via index lookups.
    static GroupTable from_elements(std::vector<WeylElement> elems,
                                    std::vector<WeylElement> gens) {
        GroupTable t;
        t.gens_ = std::move(gens);
        for (auto& e : elems) t.push(e);
        t.finish();
        return t;
    }

    std::size_t order() const { return elems_.size(); }
    const std::vector<WeylElement>& elements() const { return elems_; }
    const std::vector<WeylElement>& generators() const { return gens_; }
    const WeylElement& element(std::uint32_t i) const { return elems_.at(i); }

    std::optional<std::uint32_t> index_of(const WeylElement& g) const {
        auto it = idx_.find(g);
        if (it == idx_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const WeylElement& g) const { return idx_.count(g) != 0; }

    std::uint32_t multiply(std::uint32_t i, std::uint32_t j) const {
        auto k = index_of(element(i) * element(j));
        if (!k) throw std::logic_error("GroupTable: not closed under multiplication");
        return *k;
    }
    std::uint32_t inverse_index(std::uint32_t i) const {
        auto k = index_of(element(i).inverse());
        if (!k) throw std::logic_error("GroupTable: inverse not present");
        return *k;
    }

private:
    struct Hash {
        std::size_t operator()(const WeylElement& g) const { return g.hash(); }
    };

    void push(const WeylElement& g) {
        if (idx_.emplace(g, (std::uint32_t)elems_.size()).second) elems_.push_back(g);
    }
    void finish() { /* nothing yet; hook for invariants */ }

    std::vector<WeylElement> elems_;
    std::vector<WeylElement> gens_;
    std::unordered_map<WeylElement, std::uint32_t, Hash> idx_;
};

namespace detail {
inline std::optional<GroupTable>& weyl_group_storage() {
    static std::optional<GroupTable> t;
    return t;
}
}  // namespace detail

// Install a pre-built table (e.g. loaded from a cache) as the process-wide
// group; only honored before first use.  Returns whether it was installed.
inline bool install_weyl_group(GroupTable table) {
    auto& slot = detail::weyl_group_storage();
    if (slot.has_value()) return false;
    slot.emplace(std::move(table));
    return true;
}

// The full W(E6) table from the four generator actions, built once per
// process and shared (all consumers treat it as immutable).
inline const GroupTable& weyl_group() {
    auto& slot = detail::weyl_group_storage();
    if (!slot.has_value()) slot.emplace(GroupTable::generate(WeylGenerators::get().list()));
    return *slot;
}

// Scale a vector to the primitive integer representative with positive
// leading coordinate; this makes projective orbit dedup exact.
inline Vec6 projective_normalize(const Vec6& v) {
    std::int64_t l = 1;
    for (const auto& x : v) l = std::lcm(l, x.den());
    Vec6 w{};
    std::int64_t g = 0;
    for (int i = 0; i < 6; ++i) {
        w[i] = v[i] * Frac64(l);
        g = std::gcd(g, w[i].num());
    }
    if (g == 0) throw std::invalid_argument("projective_normalize: zero vector");
    int lead = 0;
    while (w[lead].is_zero()) ++lead;
    if (w[lead].num() < 0) g = -g;
    for (int i = 0; i < 6; ++i) w[i] = w[i] / Frac64(g);
    return w;
}

struct Vec6Hash {
    std::size_t operator()(const Vec6& v) const {
        std::uint64_t h = 0x9E3779B97F4A7C15ull;
        for (const auto& x : v) h = (h ^ x.hash()) * 0x100000001B3ull;
        return h;
    }
};

inline std::vector<Vec6> orbit(const GroupTable& group, const Vec6& seed, bool projective) {
    auto canon = [&](const Vec6& v) { return projective ? projective_normalize(v) : v; };
    std::vector<Vec6> out{canon(seed)};
    std::unordered_map<Vec6, std::uint32_t, Vec6Hash> seen{{out[0], 0}};
    for (std::size_t head = 0; head < out.size(); ++head) {
        Vec6 cur = out[head];
        for (const auto& g : group.generators()) {
            Vec6 next = canon(g.apply(cur));
            if (seen.emplace(next, (std::uint32_t)out.size()).second) out.push_back(next);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The conjugacy class C: 80 elements of order three whose characteristic
// polynomial is (x^2 + x + 1)^3, i.e. exactly those g with g^2 + g + I = 0.

inline const WeylElement& class_c_representative() {
    // the explicit order-three element with eigenplane W3 below
    static const WeylElement g3 = [] {
        static const int rows[6][6] = {{-1, 0, 0, 0, 0, -3}, {0, -1, -1, 1, 1, 0},
                                       {0, 1, -1, 1, -1, 0}, {0, -1, -1, -1, -1, 0},
                                       {0, -1, 1, 1, -1, 0}, {1, 0, 0, 0, 0, -1}};
        WeylElement g;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) g.at(i, j) = Frac64(rows[i][j], 2);
        return g;
    }();
    return g3;
}

// columns span the omega-eigenspace of the representative
inline Matrix<Cyclotomic> w3_plane_columns() {
    using C = Cyclotomic;
    C w = C::omega(), w2 = C::omega_bar(), z(0);
    Matrix<C> m(6, 3, z);
    m(0, 0) = C(3);
    m(1, 1) = C(1);
    m(2, 2) = C(1);
    m(3, 1) = w;
    m(3, 2) = -w2;
    m(4, 1) = -w2;
    m(4, 2) = -w;
    m(5, 0) = C(-1) + C(-2) * w;
    return m;
}

inline std::vector<std::uint32_t> conjugacy_class_c(const GroupTable& group) {
    std::vector<std::uint32_t> out;
    WeylElement id = WeylElement::identity();
    for (std::uint32_t i = 0; i < group.order(); ++i) {
        const WeylElement& g = group.element(i);
        if (g == id) continue;
        WeylElement q = g * g;
        bool zero = true;
        for (int r = 0; r < 6 && zero; ++r)
            for (int c = 0; c < 6 && zero; ++c) {
                Frac64 v = q.at(r, c) + g.at(r, c) + (r == c ? Frac64(1) : Frac64(0));
                if (!v.is_zero()) zero = false;
            }
        if (zero) out.push_back(i);
    }
    return out;
}

// the conjugation orbit of one element under the generators
inline std::vector<std::uint32_t> conjugation_orbit(const GroupTable& group,
                                                    std::uint32_t start) {
    std::vector<std::uint32_t> out{start};
    std::vector<bool> seen(group.order(), false);
    seen[start] = true;
    for (std::size_t head = 0; head < out.size(); ++head) {
        const WeylElement& cur = group.element(out[head]);
        for (const auto& h : group.generators()) {
            WeylElement conj = h * cur * h.inverse();
            auto k = group.index_of(conj);
            if (!k) throw std::logic_error("conjugation_orbit: left the group");
            if (!seen[*k]) {
                seen[*k] = true;
                out.push_back(*k);
            }
        }
    }
    return out;
}

inline std::size_t centralizer_order(const GroupTable& group, const WeylElement& g) {
    if (!group.contains(g)) throw std::invalid_argument("centralizer_order: not in group");
    std::size_t n = 0;
    for (const auto& h : group.elements())
        if (h * g == g * h) ++n;
    return n;
}

// Exact Q(w)-basis of the eigenspace ker(g - lambda I), returned in reduced
// row echelon form (rows span the plane) so set comparisons are canonical.
inline Matrix<Cyclotomic> eigenplane(const WeylElement& g, const Cyclotomic& lambda,
                                     std::size_t expected_dim = 3) {
    Matrix<Cyclotomic> m = g.to_cyclotomic();
    for (int i = 0; i < 6; ++i) m(i, i) -= lambda;
    auto basis = m.kernel_basis();
    if (basis.size() != expected_dim)
        throw std::domain_error("eigenplane: unexpected eigenspace dimension");
    Matrix<Cyclotomic> rows(basis.size(), 6, Cyclotomic(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < 6; ++j) rows(i, j) = basis[i][j];
    rows.rref_in_place();
    return rows;
}

// canonical row space form of a set of spanning rows over Q(w)
inline Matrix<Cyclotomic> canonical_row_space(Matrix<Cyclotomic> rows) {
    rows.rref_in_place();
    return rows;
}

inline Vec6 fundamental_weight(std::size_t i) {
    if (i < 1 || i > 6) throw std::invalid_argument("fundamental_weight: index in 1..6");
    const auto& roots = simple_roots();
    Matrix<Rational> system(6, 6);
    for (int r = 0; r < 6; ++r) {
        system(r, 0) = roots[r][0].to_rational() * Rational(1, 3);
        for (int c = 1; c < 6; ++c) system(r, c) = roots[r][c].to_rational();
    }
    Matrix<Rational> rhs(6, 1);
    rhs(i - 1, 0) = Rational(1);
    Matrix<Rational> sol = solve(system, rhs);
    Vec6 v{};
    for (int r = 0; r < 6; ++r)
        v[r] = Frac64(sol(r, 0).numerator().get_si(), sol(r, 0).denominator().get_si());
    return v;
}

// The polynomial substitution X_i -> (g X)_i, so f -> f(g X).
inline SubstitutionMap<Rational> to_substitution(const WeylElement& g) {
    SubstitutionMap<Rational> s;
    s.source_vars = p5_vars();
    for (int i = 0; i < 6; ++i) {
        MultiPoly<Rational> img(p5_vars());
        for (int j = 0; j < 6; ++j) {
            if (g.at(i, j).is_zero()) continue;
            Mono m(6, 0);
            m[j] = 1;
            img.add_term(m, g.at(i, j).to_rational());
        }
        s.images.push_back(std::move(img));
    }
    return s;
}

// I_k = sum over the 27-orbit of b(X, v_i)^k, an exact invariant polynomial
inline MultiPoly<Rational> invariant_polynomial(unsigned k, const std::vector<Vec6>& orbit27) {
    const auto& vars = p5_vars();
    MultiPoly<Rational> acc(vars);
    for (const auto& v : orbit27) {
        MultiPoly<Rational> lin(vars);
        for (int j = 0; j < 6; ++j) {
            Rational c = v[j].to_rational();
            if (j == 0) c = c / Rational(3);
            if (!c.is_zero()) {
                Mono m(6, 0);
                m[j] = 1;
                lin.add_term(m, c);
            }
        }
        acc += lin.pow(k);
    }
    return acc;
}

}  // namespace picmod
