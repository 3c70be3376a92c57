#include <catch2/catch_amalgamated.hpp>

#include "picmod/intlattice.hpp"
#include "picmod/matrix.hpp"
#include "test_support.hpp"

using picmod::Int;
using picmod::Matrix;
using picmod::Rational;

namespace {

Matrix<Rational> random_square(std::size_t n) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = testsup::random_rational(6, 3);
    return m;
}

Matrix<Rational> random_invertible(std::size_t n) {
    for (;;) {
        auto m = random_square(n);
        if (!(m.det() == Rational(0))) return m;
    }
}

}  // namespace

TEST_CASE("solve basics") {
    auto b = random_square(4);
    CHECK(solve(Matrix<Rational>::identity(4), b) == b);

    auto a = random_invertible(6);
    CHECK(a * a.inverse() == Matrix<Rational>::identity(6));

    Matrix<Rational> sing(2, 2, {Rational(1), Rational(2), Rational(2), Rational(4)});
    CHECK_THROWS_AS(sing.inverse(), std::domain_error);
}

TEST_CASE("fundamental weight system solves to (2,0,0,0,0,0)") {
    // rows: simple roots; bilinear form b = diag(1/3, 1, 1, 1, 1, 1)
    Matrix<Rational> roots{
        {Rational(0), Rational(-1), Rational(-1), Rational(0), Rational(0), Rational(0)},
        {Rational(3, 2), Rational(-1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2),
         Rational(1, 2)},
        {Rational(0), Rational(1), Rational(-1), Rational(0), Rational(0), Rational(0)},
        {Rational(0), Rational(0), Rational(1), Rational(-1), Rational(0), Rational(0)},
        {Rational(0), Rational(0), Rational(0), Rational(1), Rational(-1), Rational(0)},
        {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1), Rational(-1)}};
    Matrix<Rational> bform(6, 6);
    bform(0, 0) = Rational(1, 3);
    for (int i = 1; i < 6; ++i) bform(i, i) = Rational(1);
    Matrix<Rational> system = roots * bform;  // row j gives x -> b(alpha_j, x)
    Matrix<Rational> rhs(6, 1);
    rhs(1, 0) = Rational(1);  // delta_{2j}
    auto lambda = solve(system, rhs);
    CHECK(lambda.col(0) == std::vector<Rational>{Rational(2), Rational(0), Rational(0),
                                                 Rational(0), Rational(0), Rational(0)});
}

TEST_CASE("determinant routes agree; charpoly on a known matrix") {
    for (int t = 0; t < 20; ++t) {
        auto m = random_square(4);
        CHECK(m.det() == m.det_cofactor());
    }
    Matrix<Rational> a{{Rational(2), Rational(1)}, {Rational(0), Rational(3)}};
    auto cp = a.charpoly();  // x^2 - 5x + 6
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == Rational(6));
    CHECK(cp[1] == Rational(-5));
    CHECK(cp[2] == Rational(1));
}

TEST_CASE("kernel basis over a field") {
    Matrix<Rational> a{{Rational(1), Rational(2), Rational(3)},
                       {Rational(2), Rational(4), Rational(6)}};
    auto ker = a.kernel_basis();
    REQUIRE(ker.size() == 2);
    for (auto& v : ker) {
        auto img = a.apply(v);
        for (auto& x : img) CHECK(x == Rational(0));
    }
}

TEST_CASE("integer diagonalization with unimodular transforms") {
    std::uniform_int_distribution<long> d(-5, 5);
    for (int t = 0; t < 25; ++t) {
        std::size_t m = 3 + t % 3, n = 3 + (t / 3) % 3;
        Matrix<Int> a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Int(d(testsup::rng()));
        auto s = picmod::integer_diagonalize(a);
        CHECK(s.u * a * s.v == s.d);
        Int du = s.u.det_cofactor(), dv = s.v.det_cofactor();
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) CHECK(s.d(i, j) == 0);
    }
}

TEST_CASE("saturated row kernel lattice") {
    // x (2,4) = 0 over Z^2 : kernel is the primitive vector (2,-1) direction,
    // saturation must return (2,-1) (or its negative), not (4,-2)
    Matrix<Int> a(2, 1);
    a(0, 0) = 2;
    a(1, 0) = 4;
    auto ker = picmod::row_kernel_lattice(a);
    REQUIRE(ker.size() == 1);
    Int g = gcd(ker[0][0], ker[0][1]);
    CHECK(g == 1);
    CHECK(ker[0][0] * 2 + ker[0][1] * 4 == 0);

    std::uniform_int_distribution<long> d(-4, 4);
    for (int t = 0; t < 20; ++t) {
        Matrix<Int> b(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) b(i, j) = Int(d(testsup::rng()));
        for (auto& v : picmod::row_kernel_lattice(b)) {
            std::vector<Int> img(4, Int(0));
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t i = 0; i < 4; ++i) img[j] += v[i] * b(i, j);
            for (auto& x : img) CHECK(x == 0);
        }
    }
}
