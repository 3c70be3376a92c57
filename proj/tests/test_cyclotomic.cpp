#include <catch2/catch_amalgamated.hpp>

#include "picmod/cyclotomic.hpp"
#include "test_support.hpp"

using picmod::Cyclotomic;
using picmod::Rational;

namespace {

// independent oracle: multiply (a1 + b1 w)(a2 + b2 w) as abstract coefficients
// of 1, w, w^2, then rewrite w^2 = -1 - w
Cyclotomic mul_oracle(const Cyclotomic& x, const Cyclotomic& y) {
    Rational c0 = x.rational_part() * y.rational_part();
    Rational c1 = x.rational_part() * y.omega_part() + x.omega_part() * y.rational_part();
    Rational c2 = x.omega_part() * y.omega_part();
    return Cyclotomic(c0 - c2, c1 - c2);
}

}  // namespace

TEST_CASE("omega multiplication table") {
    Cyclotomic w = Cyclotomic::omega();
    CHECK(w * w == Cyclotomic(Rational(-1), Rational(-1)));        // w^2 = -1 - w
    CHECK(w * (w * w) == Cyclotomic(1));                           // w^3 = 1
    CHECK(w * Cyclotomic(Rational(-1), Rational(-1)) == Cyclotomic(1));
    CHECK(Cyclotomic::omega_bar() == w * w);
}

TEST_CASE("norm of 1+2w against hand expansion") {
    Cyclotomic x(Rational(1), Rational(2));
    Cyclotomic xbar = x.conj();
    CHECK(xbar == Cyclotomic(Rational(-1), Rational(-2)));
    Cyclotomic prod = mul_oracle(x, xbar);
    CHECK(prod == Cyclotomic(3));            // a^2 - a b + b^2 with a=1, b=2
    CHECK(x * xbar == prod);
    CHECK(x.norm() == Rational(3));
}

TEST_CASE("conjugation is an involutive automorphism fixing the rationals") {
    Cyclotomic w = Cyclotomic::omega();
    CHECK(w.conj() == Cyclotomic(Rational(-1), Rational(-1)));
    CHECK(Cyclotomic(5).conj() == Cyclotomic(5));
    for (int i = 0; i < 200; ++i) {
        Cyclotomic x = testsup::random_cyclotomic();
        Cyclotomic y = testsup::random_cyclotomic();
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
        if (x.conj() == x) CHECK(x.is_rational());
    }
}

TEST_CASE("field axioms and norm positivity, randomized") {
    for (int i = 0; i < 200; ++i) {
        Cyclotomic a = testsup::random_cyclotomic();
        Cyclotomic b = testsup::random_cyclotomic();
        Cyclotomic c = testsup::random_cyclotomic();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == mul_oracle(a, b));
        CHECK(a.norm() >= Rational(0));
        CHECK((a.norm() == Rational(0)) == a.is_zero());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Cyclotomic(1));
        }
    }
    CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(0), std::domain_error);
}
