#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace sva;

namespace {

Vec random_vec(const AlgebraPtr& g, std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-3, 3);
    std::vector<Scalar> c;
    for (size_t k = 0; k < g->dim(); ++k) c.push_back(g->field().of(small(rng)));
    return g->vec(std::move(c));
}

} // namespace

TEST_CASE("su(2)+R is accepted with the bi-invariant pairing") {
    Field f = fixtures::symbolic_field();
    auto base = fixtures::su2_u1(f);
    Matrix gram = Matrix::identity(4, f);
    auto g = QuadraticLieAlgebra::build(*base, gram);
    CHECK(g->dim() == 4);
    CHECK(g->pair(g->basis_vector(0), g->basis_vector(0)) == f.of(1));
}

TEST_CASE("abelian algebra with identity Gram is accepted") {
    Field f;
    LieData lie = LieData::Builder(f, {"e1", "e2"}).build();
    auto g = QuadraticLieAlgebra::build(lie, Matrix::identity(2, f));
    CHECK(g->bracket(g->basis_vector(0), g->basis_vector(1)).is_zero());
}

TEST_CASE("flipped sign breaks Jacobi") {
    Field f;
    LieData::Builder b(f, {"v1", "v2", "v3"});
    b.set("v2", "v3", {{"v1", "-1"}});
    b.set("v3", "v1", {{"v2", "-1"}});
    b.set("v1", "v2", {{"v3", "1"}}); // wrong sign
    CHECK_THROWS_AS(b.build(), JacobiFailure);
}

TEST_CASE("degenerate or asymmetric pairings are rejected") {
    Field f;
    LieData lie = LieData::Builder(f, {"e1", "e2"}).build();
    Matrix zero(2, 2, f);
    CHECK_THROWS_AS(QuadraticLieAlgebra::build(lie, zero), DegeneratePairing);
    Matrix asym = Matrix::identity(2, f);
    asym.at(0, 1) = f.of(1); // not symmetric
    CHECK_THROWS_AS(QuadraticLieAlgebra::build(lie, asym), DegeneratePairing);
}

TEST_CASE("g_ell bracket and pairing match the worked values") {
    Field f = fixtures::symbolic_field();
    auto g = fixtures::g_ell(f);
    REQUIRE(g->dim() == 8);
    // basis order: v1 v2 v3 v4 v1^ v2^ v3^ v4^
    Vec v2 = g->basis_vector(1), v3 = g->basis_vector(2);
    Vec b23 = g->bracket(v2, v3);
    Vec expected = g->basis_vector(0).scaled(f.of(-1)) + g->basis_vector(4).scaled(f.var("l"));
    CHECK(b23 == expected); // [v2,v3] = -v1 + l*v^1

    Vec v1 = g->basis_vector(0), d2 = g->basis_vector(5);
    CHECK(g->bracket(v1, d2) == g->basis_vector(6).scaled(f.of(-1))); // [v1, v^2] = -v^3

    CHECK(g->pair(g->basis_vector(0), g->basis_vector(4)) == f.of(1, 2)); // <v_i, v^j> = delta/2
    CHECK(g->pair(g->basis_vector(0), g->basis_vector(5)).is_zero());
    // isotropic vector pairs to zero with itself
    CHECK(g->pair(v1, v1).is_zero());
}

TEST_CASE("courant double of an abelian algebra has split signature") {
    Field f;
    LieData::Builder b(f, {"e1", "e2"});
    auto base = std::make_shared<LieData>(b.build());
    auto g = courant_double(*base, InvariantForm(base));
    CHECK(g->dim() == 4);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) CHECK(g->bracket(g->basis_vector(i), g->basis_vector(j)).is_zero());
}

TEST_CASE("non-closed twist is rejected") {
    Field f = fixtures::symbolic_field();
    auto base = fixtures::su2_u1(f);
    // v^1 ^ v^2 ^ v^4 is not closed: d(v^1^v^2^v^4) != 0
    InvariantForm bad = InvariantForm::monomial(base, {0, 1, 3}, f.of(1));
    CHECK_THROWS_AS(courant_double(*base, bad), NotClosed);
}

TEST_CASE("projection onto V+ and V-") {
    Field f = fixtures::symbolic_field();
    auto g = fixtures::g_ell(f);
    Subspace vp = fixtures::vplus_xa(g);
    Subspace vm = g->orthogonal_complement(vp);
    REQUIRE(vp.dim() == 4);
    REQUIRE(vm.dim() == 4);

    Vec d4 = g->basis_vector(7); // v^4
    auto parts = project({vp, vm}, d4);
    CHECK(parts[0] + parts[1] == d4);
    CHECK(vp.contains(parts[0]));
    CHECK(vm.contains(parts[1]));
    // pi+ v^4 = (1/2)((a x)^{-1} v4 + v^4)
    Vec expected = g->basis_vector(3).scaled(f.parse("1/(2*a*x)")) + d4.scaled(f.of(1, 2));
    CHECK(parts[0] == expected);

    // a vector already in V+ projects to (itself, 0)
    Vec in_plus = vp.basis_vector(2);
    auto parts2 = project({vp, vm}, in_plus);
    CHECK(parts2[0] == in_plus);
    CHECK(parts2[1].is_zero());

    // overlapping decomposition is rejected
    CHECK_THROWS_AS(project({vp, vp}, d4), NotComplementary);
}

TEST_CASE("algebra invariants hold on random vectors") {
    Field f = fixtures::symbolic_field();
    auto g = fixtures::g_ell(f);
    std::mt19937 rng(7);
    for (int t = 0; t < 12; ++t) {
        Vec a = random_vec(g, rng), b = random_vec(g, rng), c = random_vec(g, rng);
        CHECK(g->bracket(a, b) == -g->bracket(b, a));
        CHECK(g->pair(a, b) == g->pair(b, a));
        // invariance
        CHECK((g->pair(g->bracket(a, b), c) + g->pair(b, g->bracket(a, c))).is_zero());
        // jacobi
        Vec jac = g->bracket(g->bracket(a, b), c) + g->bracket(g->bracket(b, c), a) +
                  g->bracket(g->bracket(c, a), b);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("projection is linear and idempotent per component") {
    Field f = fixtures::symbolic_field();
    auto g = fixtures::g_ell(f);
    Subspace vp = fixtures::vplus_xa(g);
    Subspace vm = g->orthogonal_complement(vp);
    std::mt19937 rng(11);
    for (int t = 0; t < 6; ++t) {
        Vec a = random_vec(g, rng);
        auto parts = project({vp, vm}, a);
        auto again = project({vp, vm}, parts[0]);
        CHECK(again[0] == parts[0]);
        CHECK(again[1].is_zero());
        Scalar s = f.parse("2*l");
        auto scaled = project({vp, vm}, a.scaled(s));
        CHECK(scaled[0] == parts[0].scaled(s));
    }
}

TEST_CASE("subspace canonical form decides equality") {
    Field f = fixtures::symbolic_field();
    auto g = fixtures::g_ell(f);
    Vec a = g->basis_vector(0) + g->basis_vector(1).scaled(f.var("x"));
    Vec b = g->basis_vector(1);
    Subspace s1 = g->span({a, b});
    Subspace s2 = g->span({a + b.scaled(f.of(5)), b.scaled(f.var("l"))});
    CHECK(s1 == s2);
    CHECK(s1.contains(a + b.scaled(f.parse("x + 3"))));
}
