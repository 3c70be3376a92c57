#include <catch2/catch_amalgamated.hpp>

#include "picmod/symplectic.hpp"
#include "test_support.hpp"

using namespace picmod;

namespace {
const NamedMatrices& N() { return NamedMatrices::get(); }
}

TEST_CASE("named matrices are symplectic and satisfy the defining relations") {
    CHECK(is_symplectic(Matrix<Int>::identity(8)));
    for (const SympMatrix* m : {&N().M, &N().E, &N().T, &N().M22, &N().MB, &N().Md, &N().Me,
                                &N().Mf, &N().Mpr, &N().Mip, &N().MC, &N().MD, &N().M12})
        CHECK(is_symplectic(*m));

    // x^2 + x + 1 = 0 for both A and M
    Matrix<Int> i4 = Matrix<Int>::identity(4), i8 = Matrix<Int>::identity(8);
    CHECK(N().A * N().A + N().A + i4 == Matrix<Int>(4, 4));
    CHECK(N().M * N().M + N().M + i8 == Matrix<Int>(8, 8));

    // a perturbed M is no longer symplectic
    SympMatrix bad = N().M;
    bad(0, 0) += 1;
    CHECK(!is_symplectic(bad));

    for (const SympMatrix* m : {&N().M, &N().T, &N().MC, &N().M12})
        CHECK(*m * symplectic_inverse(*m) == i8);
}

TEST_CASE("normalizer / centralizer placement") {
    CHECK(classify_normalizer(N().MB) == NormalizerClass::NormalizerOnly);
    CHECK(classify_normalizer(N().MC) == NormalizerClass::Centralizer);
    CHECK(classify_normalizer(N().MD) == NormalizerClass::Centralizer);
    CHECK(classify_normalizer(N().Mpr) == NormalizerClass::Centralizer);
    CHECK(classify_normalizer(N().Mip) == NormalizerClass::Centralizer);
    CHECK(classify_normalizer(N().M12) == NormalizerClass::Centralizer);
    CHECK(classify_normalizer(N().M) == NormalizerClass::Centralizer);
    // the remaining generators normalize <M> without centralizing it
    for (const SympMatrix* m : {&N().Md, &N().Me, &N().Mf})
        CHECK(classify_normalizer(*m) != NormalizerClass::Outside);
    // T moves M to M22, so it is outside the normalizer
    CHECK(classify_normalizer(N().T) == NormalizerClass::Outside);
    CHECK_THROWS_AS(classify_normalizer(Matrix<Int>(8, 8)), std::invalid_argument);
}

TEST_CASE("conjugation identities") {
    CHECK(N().T * N().M * symplectic_inverse(N().T) == N().M22);
    CHECK(matrix_order(N().M) == 3);
    CHECK(matrix_order(N().MC) == 4);
    CHECK(matrix_order(N().M12) == 12);
    CHECK(N().M12 * N().M12 * N().M12 * N().M12 == N().M);
    // MC^2 = -I, so the cube identity holds up to the center: M12^3 = -MC,
    // and -I acts trivially on the Siegel space
    CHECK(N().M12 * N().M12 * N().M12 == -N().MC);
    CHECK(N().MC * N().MC == -Matrix<Int>::identity(8));
    CHECK(N().MB * N().MD == N().MD * N().MB);
    CHECK(N().MB * N().M * symplectic_inverse(N().MB) == symplectic_inverse(N().M));
}

TEST_CASE("hermitian form H_M") {
    // Gram matrix on the f-basis
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Cyclotomic h = hermitian_form(f_basis_vector(i), f_basis_vector(j));
            if (i != j)
                CHECK(h == Cyclotomic(0));
            else
                CHECK(h == Cyclotomic(i < 2 ? 1 : -1));
        }

    // H(f1 M, f1) = w, i.e. the form is Z[w]-linear in its first slot
    GaussianLatticeVector f1m = act(f_basis_vector(0), N().M);
    CHECK(hermitian_form(f1m, f_basis_vector(0)) == Cyclotomic::omega());

    // hermitian symmetry and w-linearity over the full standard basis
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            GaussianLatticeVector ei(8, Int(0)), ej(8, Int(0));
            ei[i] = 1;
            ej[j] = 1;
            Cyclotomic hij = hermitian_form(ei, ej);
            CHECK(hermitian_form(ej, ei) == hij.conj());
            CHECK(hermitian_form(act(ei, N().M), ej) == Cyclotomic::omega() * hij);
            if (i == j) CHECK(hij.is_rational());
        }

    // H(x, x) is rational for arbitrary lattice vectors
    std::uniform_int_distribution<long> d(-5, 5);
    for (int t = 0; t < 50; ++t) {
        GaussianLatticeVector x(8);
        for (auto& c : x) c = Int(d(testsup::rng()));
        CHECK(hermitian_form(x, x).is_rational());
    }
}

TEST_CASE("theta level subgroup membership") {
    CHECK(in_gamma_2_4(Matrix<Int>::identity(8)));
    CHECK(in_gamma_2_4(N().Mip * symplectic_inverse(N().Mpr)));
    CHECK(in_gamma_2_4(N().MD * symplectic_inverse(N().MC)));
    CHECK(!in_gamma_2_4(N().M));

    // Heisenberg generators sit in the quotient of level 2 by level (2,4):
    // they are = I mod 2 but their diagonal obstruction is nonzero, and
    // their squares land back in the level (2,4) group.
    SympMatrix h = NamedMatrices::heisenberg_upper({1, 0, 1, 0});
    CHECK(is_symplectic(h));
    CHECK(!in_gamma_2_4(h));
    CHECK(in_gamma_2_4(h * h));
    SympMatrix hl = NamedMatrices::heisenberg_lower({0, 1, 0, 0});
    CHECK(is_symplectic(hl));
    CHECK(!in_gamma_2_4(hl));
    CHECK(in_gamma_2_4(hl * hl));
}

TEST_CASE("fixed sublattice determinants") {
    CHECK(fixed_sublattice_det(N().Mpr) == 1);
    CHECK(fixed_sublattice_det(N().Mip) == 9);
    CHECK_THROWS_AS(fixed_sublattice_det(Matrix<Int>::identity(8)), std::domain_error);
}

TEST_CASE("reduction to U(4, F_4)") {
    CHECK(reduce_to_unitary(Matrix<Int>::identity(8)) == UnitaryF4Matrix::identity());
    // M acts as w by construction
    CHECK(reduce_to_unitary(N().M) == UnitaryF4Matrix::scalar(GF4{2}));
    CHECK_THROWS_AS(reduce_to_unitary(N().MB), std::invalid_argument);

    // homomorphism on random words in the named centralizer elements
    std::vector<const SympMatrix*> cm = {&N().M, &N().MC, &N().MD, &N().Mpr, &N().Mip};
    std::uniform_int_distribution<std::size_t> pick(0, cm.size() - 1);
    for (int t = 0; t < 40; ++t) {
        const SympMatrix& a = *cm[pick(testsup::rng())];
        const SympMatrix& b = *cm[pick(testsup::rng())];
        CHECK(reduce_to_unitary(a * b) == reduce_to_unitary(a) * reduce_to_unitary(b));
    }
}

TEST_CASE("unitary group closure reaches order 77760") {
    std::vector<SympMatrix> gens = {N().M, N().MC, N().MD, N().Mpr, N().Mip};
    // products of two normalizer-only elements centralize M
    for (const SympMatrix* a : {&N().MB, &N().Md, &N().Me, &N().Mf})
        for (const SympMatrix* b : {&N().MB, &N().Md, &N().Me, &N().Mf})
            if (classify_normalizer(*a) == NormalizerClass::NormalizerOnly &&
                classify_normalizer(*b) == NormalizerClass::NormalizerOnly)
                gens.push_back(*a * *b);
    // deterministic unitary transvections as additional search input; the
    // pairwise ones land in a 1944-element subgroup, the full-support ones
    // complete the generation
    using C = Cyclotomic;
    C w = C::omega(), w2 = C::omega_bar(), one(1), zero(0);
    std::vector<std::array<C, 4>> isotropic = {
        {one, zero, one, zero}, {one, zero, zero, one},  {zero, one, one, zero},
        {zero, one, zero, one}, {one, zero, w, zero},    {zero, w, zero, one},
        {one, one, one, one},   {one, w, w2, one}};
    for (auto& u : isotropic) gens.push_back(unitary_transvection(u, 1));

    std::vector<UnitaryF4Matrix> ugens;
    for (auto& g : gens) ugens.push_back(reduce_to_unitary(g));
    auto group = unitary_closure(ugens);
    CHECK(group.size() == 77760);
    for (std::size_t i = 0; i < group.size(); i += 997) CHECK(group[i].is_unitary());

    // the named centralizer elements alone generate a small subgroup: MD and
    // Mip are congruent to MC and Mpr mod 2, so only three distinct images
    // remain; the achieved order is recorded, not assumed
    std::vector<UnitaryF4Matrix> named_only;
    for (const SympMatrix* m : {&N().M, &N().MC, &N().MD, &N().Mpr, &N().Mip})
        named_only.push_back(reduce_to_unitary(*m));
    CHECK(unitary_closure(named_only).size() == 18);
}
