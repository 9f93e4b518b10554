#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "sva/report.hpp"

using namespace sva;

namespace {

// J_x on the base su(2)+R: J v4 = x v1, J v2 = v3
Matrix jx_matrix(const Field& f) {
    Matrix j(4, 4, f);
    j.at(0, 3) = f.var("x");              // v4 -> x v1
    j.at(3, 0) = -f.var("x").inverse();   // v1 -> -(1/x) v4
    j.at(2, 1) = f.of(1);                 // v2 -> v3
    j.at(1, 2) = f.of(-1);                // v3 -> -v2
    return j;
}

// K: K v1 = v2, K v4 = x v3
Matrix k_matrix(const Field& f) {
    Matrix j(4, 4, f);
    j.at(1, 0) = f.of(1);
    j.at(0, 1) = f.of(-1);
    j.at(2, 3) = f.var("x");
    j.at(3, 2) = -f.var("x").inverse();
    return j;
}

InvariantForm random_form(const LiePtr& base, std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-2, 2);
    InvariantForm a(base);
    for (uint32_t mask = 0; mask < 16; ++mask) a.add_term(mask, base->field().of(small(rng)));
    return a;
}

} // namespace

TEST_CASE("structure equations of su(2)+R") {
    Field f = fixtures::symbolic_field();
    auto base = fixtures::su2_u1(f);
    auto v = [&](std::vector<size_t> idx) { return InvariantForm::monomial(base, idx, f.of(1)); };
    CHECK(ce_d(v({0})) == v({1, 2}));      // dv^1 = v^23
    CHECK(ce_d(v({1})) == v({2, 0}));      // dv^2 = v^31
    CHECK(ce_d(v({2})) == v({0, 1}));      // dv^3 = v^12
    CHECK(ce_d(v({3})).is_zero());         // dv^4 = 0
    CHECK(ce_d(fixtures::h_ell(base, f.var("l"))).is_zero());
}

TEST_CASE("d^2 = 0 and Leibniz on random forms") {
    Field f = fixtures::symbolic_field();
    auto base = fixtures::su2_u1(f);
    std::mt19937 rng(3);
    for (int t = 0; t < 8; ++t) {
        InvariantForm a = random_form(base, rng);
        CHECK(ce_d(ce_d(a)).is_zero());
        // Leibniz on homogeneous parts
        for (size_t p = 0; p <= 2; ++p)
            for (size_t q = 0; q + p <= 3; ++q) {
                InvariantForm ap = a.degree_part(p);
                InvariantForm bq = random_form(base, rng).degree_part(q);
                InvariantForm lhs = ce_d(ap.wedge(bq));
                InvariantForm rhs = ce_d(ap).wedge(bq) +
                                    (p % 2 ? -ap.wedge(ce_d(bq)) : ap.wedge(ce_d(bq)));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("interior product is an antiderivation with i_X v^j = v^j(X)") {
    Field f = fixtures::symbolic_field();
    auto base = fixtures::su2_u1(f);
    std::vector<Scalar> v2{f.of(0), f.of(1), f.of(0), f.of(0)};
    std::vector<Scalar> v3{f.of(0), f.of(0), f.of(1), f.of(0)};
    InvariantForm h = fixtures::h_ell(base, f.var("l"));
    InvariantForm iv = contract(v3, contract(v2, h));
    // l * i_{v3} i_{v2} v^{123} = l * v^1
    CHECK(iv == InvariantForm::monomial(base, {0}, f.var("l")));
}

TEST_CASE("K-structure satisfies the SU(2) system") {
    Field f = fixtures::symbolic_field();
    auto base = fixtures::su2_u1(f);
    Scalar l = f.var("l"), x = f.var("x");
    auto v = [&](std::vector<size_t> idx, Scalar c) { return InvariantForm::monomial(base, idx, c); };

    // omega_K = l v^12 + l x v^43,  Psi_K = (v^1 + i v^2) ^ (i v^3 + x v^4)
    InvariantForm omega_k = v({0, 1}, l) + v({3, 2}, l * x);
    InvariantForm psi_k = (v({0}, f.of(1)) + v({1}, f.i())).wedge(v({2}, f.i()) + v({3}, x));
    InvariantForm theta = v({3}, -x);
    InvariantForm h = fixtures::h_ell(base, l);

    // d omega_K = -l x v^412
    CHECK(ce_d(omega_k) == v({3, 0, 1}, -(l * x)));
    // d^c_K omega_K = -l v^123 = -H_l
    CHECK(dc(omega_k, k_matrix(f)) == v({0, 1, 2}, -l));
    // dPsi_K = -x v^4 ^ Psi_K
    CHECK(ce_d(psi_k) == theta.wedge(psi_k));

    Report rep = verify_su_structure(omega_k, psi_k, theta, k_matrix(f), &h);
    CHECK(rep.pass());
}

TEST_CASE("J_x structure satisfies the SU(2) system on shell") {
    Field ffull = fixtures::symbolic_field();
    auto base = fixtures::su2_u1(full);
    const Field& f = full;
    Scalar l = f.var("l"), x = f.var("x");
    auto v = [&](std::vector<size_t> idx, Scalar c) { return InvariantForm::monomial(base, idx, c); };

    // omega_x = l x v^41 + l v^23, Psi_x = (l/2)(i v^1 + x v^4) ^ (v^2 + i v^3)
    InvariantForm omega_x = v({3, 0}, l * x) + v({1, 2}, l);
    InvariantForm psi_x =
        (v({0}, f.i()) + v({3}, x)).wedge(v({1}, f.of(1)) + v({2}, f.i())).scaled(l / f.of(2));
    InvariantForm theta = v({3}, -x);
    InvariantForm h = fixtures::h_ell(base, l);

    Report rep = verify_su_structure(omega_x, psi_x, theta, jx_matrix(f), &h);
    CHECK(rep.pass());

    // omega ^ omega is a nonzero top form
    CHECK(!omega_x.wedge(omega_x).is_zero());

    // dropping the Lee form breaks the system
    InvariantForm zero1(base);
    Report bad = verify_su_structure(omega_x, psi_x, zero1, jx_matrix(f), &h);
    CHECK(!bad.pass());
}

TEST_CASE("dc rejects non-complex J") {
    Field f = fixtures::symbolic_field();
    auto base = fixtures::su2_u1(f);
    InvariantForm omega = InvariantForm::monomial(base, {0, 1}, f.of(1));
    Matrix not_j = Matrix::identity(4, f);
    CHECK_THROWS_AS(dc(omega, not_j), NotAlmostComplex);
}
