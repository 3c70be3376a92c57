#pragma once

// Sparse multivariate polynomials over an exact coefficient ring, with a
// graded lexicographic term order fixed by the variable list.  No zero
// coefficients are ever stored, so term counts and canonical strings are
// well-defined.  Values are immutable in spirit: every operation returns a
// fresh polynomial.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "picmod/matrix.hpp"

namespace picmod {

using Mono = std::vector<unsigned>;

inline unsigned mono_degree(const Mono& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

// graded lex, earlier variables dominate; "greater" so map::begin() is the
// leading term
struct GrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        unsigned da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da > db;
        return a > b;  // lexicographic on exponent vectors
    }
};

template <class C>
class MultiPoly {
public:
    using TermMap = std::map<Mono, C, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const C& c) {
        MultiPoly p(std::move(vars));
        if (!(c == C(0))) p.terms_.emplace(Mono(p.vars_.size(), 0), c);
        return p;
    }
    static MultiPoly variable(std::vector<std::string> vars, std::size_t index,
                              unsigned power = 1) {
        MultiPoly p(std::move(vars));
        Mono m(p.vars_.size(), 0);
        m.at(index) = power;
        p.terms_.emplace(std::move(m), C(1));
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    std::size_t var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw std::invalid_argument("MultiPoly: unknown variable " + name);
    }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    unsigned degree() const {  // total degree; 0 for the zero polynomial
        unsigned d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = mono_degree(terms_.begin()->first);
        for (auto& [m, c] : terms_)
            if (mono_degree(m) != d) return false;
        return true;
    }

    std::pair<Mono, C> leading_term() const {
        if (terms_.empty()) throw std::domain_error("MultiPoly: zero has no leading term");
        return *terms_.begin();
    }

    void add_term(const Mono& m, const C& c) {
        if (m.size() != vars_.size()) throw std::invalid_argument("MultiPoly: bad monomial");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!(c == C(0))) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& f, const MultiPoly& g) {
        f.check_same_vars(g);
        MultiPoly r = f;
        for (auto& [m, c] : g.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& f, const MultiPoly& g) {
        f.check_same_vars(g);
        MultiPoly r = f;
        for (auto& [m, c] : g.terms_) r.add_term(m, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& f, const MultiPoly& g) {
        f.check_same_vars(g);
        MultiPoly r(f.vars_);
        Mono m(f.nvars());
        for (auto& [ma, ca] : f.terms_)
            for (auto& [mb, cb] : g.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend MultiPoly operator*(const C& s, const MultiPoly& f) {
        MultiPoly r(f.vars_);
        if (s == C(0)) return r;
        for (auto& [m, c] : f.terms_) r.terms_.emplace(m, s * c);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& g) { return *this = *this + g; }
    MultiPoly& operator-=(const MultiPoly& g) { return *this = *this - g; }
    MultiPoly& operator*=(const MultiPoly& g) { return *this = *this * g; }

    friend bool operator==(const MultiPoly& f, const MultiPoly& g) {
        return f.vars_ == g.vars_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const MultiPoly& f, const MultiPoly& g) { return !(f == g); }

    MultiPoly pow(unsigned k) const {
        MultiPoly r = constant(vars_, C(1));
        MultiPoly base = *this;
        for (; k; k >>= 1) {
            if (k & 1) r = r * base;
            if (k > 1) base = base * base;
        }
        return r;
    }

    MultiPoly derivative(std::size_t var) const {
        if (var >= nvars()) throw std::invalid_argument("MultiPoly: unknown variable");
        MultiPoly r(vars_);
        for (auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Mono d = m;
            d[var] -= 1;
            r.add_term(d, C((long)m[var]) * c);
        }
        return r;
    }
    MultiPoly derivative(const std::string& name) const { return derivative(var_index(name)); }

    // Map coefficients into another ring (e.g. Rational -> Cyclotomic).
    template <class C2, class F>
    MultiPoly<C2> map_coeff(F f) const {
        MultiPoly<C2> r(vars_);
        for (auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

    // Generic evaluation; conv maps a coefficient into T.
    template <class T, class F>
    T evaluate(const std::vector<T>& point, F conv) const {
        if (point.size() != nvars()) throw std::invalid_argument("MultiPoly: bad point");
        T acc(0);
        for (auto& [m, c] : terms_) {
            T t = conv(c);
            for (std::size_t i = 0; i < m.size(); ++i)
                for (unsigned e = 0; e < m[i]; ++e) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [m, c] : terms_) {
            std::string cs = detail::entry_to_string(c);
            if (!first) s += cs.size() && cs[0] == '-' ? " - " + cs.substr(1) : " + " + cs;
            else s += cs;
            first = false;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                s += "*" + vars_[i];
                if (m[i] > 1) s += "^" + std::to_string(m[i]);
            }
        }
        return s;
    }

private:
    void check_same_vars(const MultiPoly& g) const {
        if (vars_ != g.vars_) throw std::invalid_argument("MultiPoly: variable-set mismatch");
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Variable assignments carrying a polynomial composition; every variable of
// the source must be assigned.  Assignments live in a common target ring.
template <class C>
struct SubstitutionMap {
    std::vector<std::string> source_vars;
    std::vector<MultiPoly<C>> images;  // parallel to source_vars

    static SubstitutionMap identity(const std::vector<std::string>& vars) {
        SubstitutionMap s;
        s.source_vars = vars;
        for (std::size_t i = 0; i < vars.size(); ++i)
            s.images.push_back(MultiPoly<C>::variable(vars, i));
        return s;
    }
};

template <class C>
MultiPoly<C> substitute(const MultiPoly<C>& f, const SubstitutionMap<C>& sub) {
    if (sub.source_vars != f.vars() || sub.images.size() != f.nvars())
        throw std::invalid_argument("substitute: assignment does not cover the variables");
    if (f.is_zero()) {
        return sub.images.empty() ? MultiPoly<C>() : MultiPoly<C>(sub.images[0].vars());
    }
    const auto target_vars =
        sub.images.empty() ? std::vector<std::string>{} : sub.images[0].vars();
    for (auto& img : sub.images)
        if (img.vars() != target_vars)
            throw std::invalid_argument("substitute: images live in different rings");

    // memoize powers of each image
    std::vector<std::vector<MultiPoly<C>>> powers(f.nvars());
    auto power = [&](std::size_t v, unsigned e) -> const MultiPoly<C>& {
        auto& tab = powers[v];
        if (tab.empty()) tab.push_back(MultiPoly<C>::constant(target_vars, C(1)));
        while (tab.size() <= e) tab.push_back(tab.back() * sub.images[v]);
        return tab[e];
    };

    MultiPoly<C> acc(target_vars);
    for (auto& [m, c] : f.terms()) {
        MultiPoly<C> t = MultiPoly<C>::constant(target_vars, c);
        for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v] > 0) t = t * power(v, m[v]);
        acc += t;
    }
    return acc;
}

// Exact division: returns q with f = q*g, or nullopt if g does not divide f.
// Greedy leading-term division: when f = q*g the leading term of the running
// remainder is always divisible by lt(g), so a single failed step certifies
// non-divisibility.
template <class C>
std::optional<MultiPoly<C>> exact_divide(const MultiPoly<C>& f, const MultiPoly<C>& g) {
    if (g.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    if (f.vars() != g.vars()) throw std::invalid_argument("exact_divide: variable mismatch");
    MultiPoly<C> q(f.vars());
    MultiPoly<C> r = f;
    auto [gm, gc] = g.leading_term();
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        Mono d(rm.size());
        for (std::size_t i = 0; i < rm.size(); ++i) {
            if (rm[i] < gm[i]) return std::nullopt;
            d[i] = rm[i] - gm[i];
        }
        C c = rc / gc;
        MultiPoly<C> t(f.vars());
        t.add_term(d, c);
        q += t;
        r -= t * g;
    }
    return q;
}

// Elementary symmetric polynomial s_k in the given variables of a ring.
template <class C>
MultiPoly<C> elementary_symmetric(unsigned k, const std::vector<std::string>& vars) {
    if (k > vars.size())
        throw std::invalid_argument("elementary_symmetric: degree exceeds variable count");
    MultiPoly<C> r(vars);
    std::vector<std::size_t> idx(k);
    // iterate k-subsets of the variables
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            Mono m(vars.size(), 0);
            for (std::size_t i = 0; i < k; ++i) m[idx[i]] = 1;
            r.add_term(m, C(1));
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= vars.size(); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (k == 0) return MultiPoly<C>::constant(vars, C(1));
    rec(0, 0);
    return r;
}

// Determinant of the matrix of second partials with respect to the listed
// variables, expanded exactly.
template <class C>
MultiPoly<C> hessian_det(const MultiPoly<C>& f, const std::vector<std::string>& vars) {
    std::size_t n = vars.size();
    Matrix<MultiPoly<C>> h(n, n, MultiPoly<C>(f.vars()));
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly<C> fi = f.derivative(vars[i]);
        for (std::size_t j = 0; j < n; ++j) h(i, j) = fi.derivative(vars[j]);
    }
    return h.det_cofactor();
}

// Rank of the symmetric coefficient matrix of a homogeneous quadratic form.
template <class C>
std::size_t quadratic_form_rank(const MultiPoly<C>& q) {
    if (q.is_zero()) return 0;
    if (!q.is_homogeneous() || q.degree() != 2)
        throw std::invalid_argument("quadratic_form_rank: not a quadratic form");
    std::size_t n = q.nvars();
    Matrix<C> m(n, n, C(0));
    C half = C(1) / C(2);
    for (auto& [mono, c] : q.terms()) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned e = 0; e < mono[i]; ++e) support.push_back(i);
        if (support[0] == support[1]) {
            m(support[0], support[0]) = c;
        } else {
            m(support[0], support[1]) = half * c;
            m(support[1], support[0]) = half * c;
        }
    }
    return m.rank();
}

}  // namespace picmod
