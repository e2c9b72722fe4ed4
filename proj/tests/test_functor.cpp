#include "doctest.h"
#include "fixtures.hpp"
#include "nchodge/functor.hpp"

using namespace nchodge;

TEST_SUITE_BEGIN("functor");

TEST_CASE("identity and corpus functors satisfy the functor relation") {
    AInfCategory K = corpus_k(), M2 = corpus_m2();
    AInfFunctor idk = identity_functor(K);
    CHECK(check_functor(K, K, idk, 6).ok);
    CHECK(functor_unit_strict(K, K, idk));

    AInfFunctor mor = morita_functor(K, M2);
    CHECK(check_functor(K, M2, mor, 6).ok);
    CHECK(functor_unit_strict(K, M2, mor));

    AInfCategory CT = corpus_clifford();
    AInfCategory CTs = corpus_clifford_scaled();
    AInfFunctor bc = clifford_basis_change(CT, CTs);
    CHECK(check_functor(CT, CTs, bc, 6).ok);
    CHECK(functor_unit_strict(CT, CTs, bc));

    AInfFunctor par = clifford_parity(CT);
    CHECK(check_functor(CT, CT, par, 6).ok);
    CHECK(functor_unit_strict(CT, CT, par));
}

TEST_CASE("inclusion into the unitalization") {
    AInfCategory CT = corpus_clifford();
    AInfCategory CTp = unitalize(CT);
    AInfFunctor inc = inclusion_functor(CT, CTp);
    CHECK(check_functor(CT, CTp, inc, 6).ok);
    // the inclusion is not unit-strict: e of CT is not the adjoined unit
    CHECK_FALSE(functor_unit_strict(CT, CTp, inc));

    // but its unitalized extension CT+ -> CT++ is
    AInfCategory CTpp = unitalize(CTp);
    AInfFunctor incp = unitalize_functor(CT, CTp, CTp, CTpp, inc);
    CHECK(check_functor(CTp, CTpp, incp, 6).ok);
    CHECK(functor_unit_strict(CTp, CTpp, incp));
}

TEST_CASE("functor degree bookkeeping is enforced") {
    AInfCategory E2 = corpus_e2();
    AInfFunctor bad = identity_functor(E2);
    // send x (deg 1) to e (deg 0): F^1 must preserve degree
    bad.F[1][Word{E2.id_of("x")}] = SpVec{{E2.id_of("e"), Scalar::one(E2.field)}};
    CHECK_THROWS(check_functor_degrees(E2, E2, bad));
}

TEST_CASE("corrupting a functor breaks the relation with a witness") {
    AInfCategory K = corpus_k(), M2 = corpus_m2();
    AInfFunctor mor = morita_functor(K, M2);
    // redirect e to the traceless generator h: F(e)F(e) != F(ee)
    mor.F[1][Word{K.id_of("e")}] = SpVec{{M2.id_of("h"), Scalar::one(M2.field)}};
    AinfCheck res = check_functor(K, M2, mor, 4);
    CHECK_FALSE(res.ok);
    CHECK_FALSE(res.witness.empty());
}

TEST_CASE("derived functor of the basis change is nonzero") {
    AInfCategory CT = corpus_clifford();
    AInfCategory CTs = corpus_clifford_scaled();
    AInfFunctor bc = clifford_basis_change(CT, CTs);
    AInfFunctor vbc = derive_functor(bc);
    // F(x) = t^{-1} xt has derivative -t^{-2} xt
    SpVec vx = vbc.eval(Word{CT.id_of("x")});
    REQUIRE(vx.size() == 1);
    CHECK(vx.begin()->second == Scalar::parse(CT.field, "ratfun:(-1)/(t^2)"));
    // constant components differentiate to zero
    CHECK(vbc.eval(Word{CT.id_of("e")}).empty());
}

TEST_CASE("eval_F_mixed expands vector slots") {
    AInfCategory K = corpus_k(), M2 = corpus_m2();
    AInfFunctor mor = morita_functor(K, M2);
    Scalar two = Scalar::integer(K.field, 2);
    SpVec v{{K.id_of("e"), two}};
    SpVec out = eval_F_mixed(mor, {Slot(&v)});
    CHECK(out.at(M2.id_of("u")) == two);
}

TEST_SUITE_END();
