#include "doctest.h"
#include "fixtures.hpp"
#include "nchodge/cochain.hpp"

#include <stdexcept>
#include <vector>

using namespace nchodge;

TEST_SUITE_BEGIN("cochain");

namespace {

// Small pool of valid cochains on the exterior algebra for identity tests.
std::vector<Cochain> e2_pool(const AInfCategory& E2) {
    int e = E2.id_of("e"), x = E2.id_of("x");
    Scalar one = Scalar::one(E2.field);
    Cochain fx = Cochain::zero(E2.field, 0); // x -> x, even
    fx.add({x}, x, one);
    fx.add({e}, e, one);
    Cochain fex = Cochain::zero(E2.field, 1); // e -> x, odd
    fex.add({e}, x, one);
    Cochain fxe = Cochain::zero(E2.field, -1); // x -> e, odd
    fxe.add({x}, e, one);
    Cochain f2 = Cochain::zero(E2.field, 0); // (x,x) -> x, arity 2
    f2.add({x, x}, x, one);
    return {fx, fex, fxe, f2, mu_cochain(E2), unit_cocycle(E2)};
}

} // namespace

TEST_CASE("the structure maps are a Maurer-Cartan element") {
    for (auto& [name, C] : corpus_all(field_q())) {
        CAPTURE(name);
        Cochain mu = mu_cochain(C);
        // [mu, mu] = 0 is the defining relation restated
        CHECK(gerstenhaber_bracket(C, mu, mu).is_zero());
        CHECK(cc_differential(C, mu).is_zero());
    }
}

TEST_CASE("unit cocycle is closed") {
    for (auto& [name, C] : corpus_all(field_q())) {
        CAPTURE(name);
        Cochain eta = unit_cocycle(C);
        CHECK(eta.parity() == 1);
        CHECK(cc_differential(C, eta).is_zero());
    }
}

TEST_CASE("differential squares to zero") {
    AInfCategory E2 = corpus_e2();
    for (const Cochain& phi : e2_pool(E2)) {
        check_cochain(E2, phi);
        CHECK(cc_differential(E2, cc_differential(E2, phi)).is_zero());
    }
    AInfCategory CT = corpus_clifford();
    Cochain ks = ks_cochain(CT);
    check_cochain(CT, ks);
    CHECK(cc_differential(CT, cc_differential(CT, ks)).is_zero());
}

TEST_CASE("bracket antisymmetry and Jacobi consequence") {
    AInfCategory E2 = corpus_e2();
    auto pool = e2_pool(E2);
    for (const Cochain& phi : pool) {
        for (const Cochain& psi : pool) {
            Cochain lhs = gerstenhaber_bracket(E2, phi, psi);
            Cochain rhs = gerstenhaber_bracket(E2, psi, phi);
            int sgn = (phi.parity() & psi.parity()) ? 1 : -1;
            CHECK(lhs == rhs.scaled(Scalar::integer(E2.field, sgn)));
            // d[phi,psi] = [d phi, psi] + (-1)^{|phi|'} [phi, d psi]
            Cochain dl = cc_differential(E2, lhs);
            Cochain r1 = gerstenhaber_bracket(E2, cc_differential(E2, phi), psi);
            Cochain r2 = gerstenhaber_bracket(E2, phi, cc_differential(E2, psi));
            int s2 = phi.parity() ? -1 : 1;
            CHECK(dl == r1 + r2.scaled(Scalar::integer(E2.field, s2)));
        }
    }
}

TEST_CASE("circle product on arity-one tables is composition") {
    AInfCategory E2 = corpus_e2();
    int e = E2.id_of("e"), x = E2.id_of("x");
    Scalar one = Scalar::one(E2.field);
    Cochain fx = Cochain::zero(E2.field, 0);
    fx.add({x}, x, one);
    fx.add({e}, e, one);
    CHECK(gerstenhaber_product(E2, fx, fx) == fx);
    Cochain fex = Cochain::zero(E2.field, 1);
    fex.add({e}, x, one);
    // fex after fx: x never reaches fex's only entry except through e
    Cochain comp = gerstenhaber_product(E2, fex, fx);
    CHECK(comp.eval({e}) == fex.eval({e}));
    CHECK(comp.eval({x}).empty());
}

TEST_CASE("degree validation rejects a misplaced entry") {
    AInfCategory E2 = corpus_e2();
    Cochain bad = Cochain::zero(E2.field, 0);
    bad.add({E2.id_of("x")}, E2.id_of("e"), Scalar::one(E2.field));
    CHECK_THROWS_AS(check_cochain(E2, bad), std::runtime_error);
}

TEST_CASE("family derivative is closed and needs a family") {
    for (AInfCategory C : {corpus_clifford(), corpus_clifford_scaled()}) {
        Cochain ks = ks_cochain(C);
        CHECK_FALSE(ks.is_zero());
        CHECK(cc_differential(C, ks).is_zero());
    }
    CHECK_THROWS_AS(ks_cochain(corpus_e2()), std::runtime_error);
}

TEST_CASE("mixed-slot evaluation is bilinear") {
    AInfCategory E2 = corpus_e2();
    int e = E2.id_of("e"), x = E2.id_of("x");
    Cochain mu = mu_cochain(E2);
    SpVec v; // 2e + 3x as one slot
    v[e] = Scalar::integer(E2.field, 2);
    v[x] = Scalar::integer(E2.field, 3);
    SpVec out = eval_cochain_mixed(mu, {Slot{x}, Slot{v}});
    // mu2(x, 2e + 3x) = 2*mu2(x,e) + 3*mu2(x,x) = 2x
    SpVec want;
    want[x] = Scalar::integer(E2.field, 2);
    CHECK(out == want);
}

TEST_SUITE_END();
