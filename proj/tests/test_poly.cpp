#include <catch2/catch_amalgamated.hpp>

#include "picmod/poly.hpp"
#include "test_support.hpp"

using picmod::Mono;
using picmod::MultiPoly;
using picmod::Rational;
using picmod::SubstitutionMap;

namespace {

const std::vector<std::string> XY = {"X0", "X1"};
const std::vector<std::string> XYZ = {"X0", "X1", "X2"};

MultiPoly<Rational> rp(const std::vector<std::string>& vars, unsigned deg, std::size_t n) {
    return testsup::random_poly<Rational>(vars, deg, n,
                                          [] { return testsup::random_rational(); });
}

}  // namespace

TEST_CASE("ring basics") {
    auto x0 = MultiPoly<Rational>::variable(XY, 0);
    auto x1 = MultiPoly<Rational>::variable(XY, 1);
    auto zero = MultiPoly<Rational>(XY);

    CHECK((x0 * zero).is_zero());
    auto sq = (x0 + x1) * (x0 + x1);
    CHECK(sq.term_count() == 3);
    CHECK(sq.coeff({2, 0}) == Rational(1));
    CHECK(sq.coeff({1, 1}) == Rational(2));
    CHECK(sq.coeff({0, 2}) == Rational(1));

    auto other = MultiPoly<Rational>::variable(XYZ, 0);
    CHECK_THROWS_AS(x0 + other, std::invalid_argument);

    CHECK(sq.is_homogeneous());
    CHECK(sq.degree() == 2);
    CHECK(sq.str() == "1*X0^2 + 2*X0*X1 + 1*X1^2");
}

TEST_CASE("elementary symmetric functions") {
    auto s2 = picmod::elementary_symmetric<Rational>(2, XY);
    CHECK(s2 == MultiPoly<Rational>::variable(XY, 0) * MultiPoly<Rational>::variable(XY, 1));

    const std::vector<std::string> five = {"X1", "X2", "X3", "X6", "X7"};
    // s_1 and s_5 in the squared variables
    SubstitutionMap<Rational> squares;
    squares.source_vars = five;
    for (std::size_t i = 0; i < 5; ++i)
        squares.images.push_back(MultiPoly<Rational>::variable(five, i, 2));
    auto s1sq = substitute(picmod::elementary_symmetric<Rational>(1, five), squares);
    CHECK(s1sq.term_count() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        Mono m(5, 0);
        m[i] = 2;
        CHECK(s1sq.coeff(m) == Rational(1));
    }
    auto s5sq = substitute(picmod::elementary_symmetric<Rational>(5, five), squares);
    CHECK(s5sq.term_count() == 1);
    CHECK(s5sq.coeff({2, 2, 2, 2, 2}) == Rational(1));

    CHECK_THROWS_AS(picmod::elementary_symmetric<Rational>(6, five), std::invalid_argument);
}

TEST_CASE("substitution: identity, distributivity, homogeneity") {
    auto id = SubstitutionMap<Rational>::identity(XYZ);
    for (int t = 0; t < 30; ++t) {
        auto f = rp(XYZ, 4, 8);
        auto g = rp(XYZ, 4, 8);
        CHECK(substitute(f, id) == f);
        SubstitutionMap<Rational> lin;
        lin.source_vars = XYZ;
        for (int v = 0; v < 3; ++v) lin.images.push_back(rp(XY, 1, 3));
        CHECK(substitute(f + g, lin) == substitute(f, lin) + substitute(g, lin));
        CHECK(substitute(f * g, lin) == substitute(f, lin) * substitute(g, lin));
    }

    // missing assignment
    SubstitutionMap<Rational> partial;
    partial.source_vars = XY;
    partial.images.push_back(MultiPoly<Rational>::variable(XY, 0));
    CHECK_THROWS_AS(substitute(rp(XYZ, 2, 3), partial), std::invalid_argument);
}

TEST_CASE("derivatives and the Euler identity") {
    auto x0 = MultiPoly<Rational>::variable(XY, 0);
    CHECK((x0 * x0).derivative("X0") == Rational(2) * x0);
    CHECK_THROWS_AS(x0.derivative("X9"), std::invalid_argument);

    for (int t = 0; t < 20; ++t) {
        // homogenize a random polynomial by filtering to its top degree
        auto f = rp(XYZ, 5, 12);
        MultiPoly<Rational> h(XYZ);
        for (auto& [m, c] : f.terms())
            if (picmod::mono_degree(m) == f.degree()) h.add_term(m, c);
        if (h.is_zero()) continue;
        MultiPoly<Rational> euler(XYZ);
        for (std::size_t v = 0; v < 3; ++v)
            euler += MultiPoly<Rational>::variable(XYZ, v) * h.derivative(v);
        CHECK(euler == Rational((long)h.degree()) * h);
    }
}

TEST_CASE("hessian determinants") {
    auto x1 = MultiPoly<Rational>::variable(XY, 0);
    auto x2 = MultiPoly<Rational>::variable(XY, 1);
    CHECK(picmod::hessian_det(x1 * x1 + x2 * x2, XY) ==
          MultiPoly<Rational>::constant(XY, Rational(4)));
    CHECK(picmod::hessian_det(x1 * x2, XY) ==
          MultiPoly<Rational>::constant(XY, Rational(-1)));

    // invariance under conjugating by a variable swap
    for (int t = 0; t < 10; ++t) {
        auto f = rp(XYZ, 3, 8);
        SubstitutionMap<Rational> swap01;
        swap01.source_vars = XYZ;
        swap01.images = {MultiPoly<Rational>::variable(XYZ, 1),
                         MultiPoly<Rational>::variable(XYZ, 0),
                         MultiPoly<Rational>::variable(XYZ, 2)};
        auto lhs = substitute(picmod::hessian_det(f, XYZ), swap01);
        auto rhs = picmod::hessian_det(substitute(f, swap01), XYZ);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exact division") {
    auto x0 = MultiPoly<Rational>::variable(XY, 0);
    auto x1 = MultiPoly<Rational>::variable(XY, 1);
    auto q = picmod::exact_divide(x0 * x0 - x1 * x1, x0 - x1);
    REQUIRE(q.has_value());
    CHECK(*q == x0 + x1);

    CHECK(!picmod::exact_divide(x0 * x0 + x1, x0 - x1).has_value());
    CHECK_THROWS_AS(picmod::exact_divide(x0, MultiPoly<Rational>(XY)), std::domain_error);

    for (int t = 0; t < 40; ++t) {
        auto f = rp(XYZ, 3, 6);
        auto g = rp(XYZ, 3, 6);
        if (g.is_zero()) continue;
        auto quo = picmod::exact_divide(f * g, g);
        REQUIRE(quo.has_value());
        CHECK(*quo == f);
    }
}

TEST_CASE("quadratic form rank") {
    auto x0 = MultiPoly<Rational>::variable(XYZ, 0);
    auto x1 = MultiPoly<Rational>::variable(XYZ, 1);
    auto x2 = MultiPoly<Rational>::variable(XYZ, 2);
    CHECK(picmod::quadratic_form_rank(x0 * x0 + x1 * x1 + x2 * x2) == 3);
    CHECK(picmod::quadratic_form_rank(x0 * x1) == 2);
    CHECK(picmod::quadratic_form_rank(MultiPoly<Rational>(XYZ)) == 0);
    CHECK_THROWS_AS(picmod::quadratic_form_rank(x0 * x0 * x0), std::invalid_argument);
}
