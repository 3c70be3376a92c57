#pragma once

// shared helpers for the test suite: seeded generators for small exact values

#include <random>
#include <vector>

#include "picmod/cyclotomic.hpp"
#include "picmod/poly.hpp"
#include "picmod/rational.hpp"

namespace testsup {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240613);
    return gen;
}

inline picmod::Rational random_rational(long num_range = 20, long den_range = 8) {
    std::uniform_int_distribution<long> dn(-num_range, num_range);
    std::uniform_int_distribution<long> dd(1, den_range);
    return picmod::Rational(dn(rng()), dd(rng()));
}

inline picmod::Rational random_nonzero_rational() {
    for (;;) {
        auto r = random_rational();
        if (!r.is_zero()) return r;
    }
}

inline picmod::Cyclotomic random_cyclotomic() {
    return picmod::Cyclotomic(random_rational(), random_rational());
}

inline picmod::Cyclotomic random_nonzero_cyclotomic() {
    for (;;) {
        auto c = random_cyclotomic();
        if (!c.is_zero()) return c;
    }
}

template <class C, class Gen>
picmod::MultiPoly<C> random_poly(const std::vector<std::string>& vars, unsigned max_deg,
                                 std::size_t nterms, Gen gen_coeff) {
    picmod::MultiPoly<C> p(vars);
    std::uniform_int_distribution<unsigned> de(0, max_deg);
    for (std::size_t t = 0; t < nterms; ++t) {
        picmod::Mono m(vars.size());
        for (auto& e : m) e = de(rng());
        p.add_term(m, gen_coeff());
    }
    return p;
}

}  // namespace testsup
