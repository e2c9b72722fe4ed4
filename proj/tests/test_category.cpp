#include "doctest.h"
#include "fixtures.hpp"
#include "nchodge/category.hpp"
#include "nchodge/corpus.hpp"

using namespace nchodge;

TEST_SUITE_BEGIN("category");

TEST_CASE("corpus categories satisfy the quadratic relations") {
    for (auto& [name, C] : corpus_all(field_q())) {
        CAPTURE(name);
        CHECK(check_ainf(C, 6).ok);
        CHECK(check_strict_units(C).ok);
    }
    CHECK(check_ainf(fixtures::make_qc(), 6).ok);
    CHECK(check_ainf(fixtures::make_d1(), 6).ok);
    CHECK(check_ainf(fixtures::make_qt(), 6).ok);
}

TEST_CASE("corpus categories over a finite field") {
    for (auto& [name, C] : corpus_constant(field_gf(32003))) {
        CAPTURE(name);
        CHECK(check_ainf(C, 6).ok);
    }
}

TEST_CASE("unitalizations and opposites stay valid") {
    for (auto& [name, C] : corpus_all(field_q())) {
        CAPTURE(name);
        AInfCategory Cp = unitalize(C);
        CHECK(check_ainf(Cp, 6).ok);
        CHECK(check_strict_units(Cp).ok);
        AInfCategory Cop = opposite(C);
        CHECK(check_ainf(Cop, 6).ok);
        CHECK(check_strict_units(Cop).ok);
    }
    // iterated unitalization must pick fresh labels
    AInfCategory CT = corpus_clifford();
    AInfCategory CTpp = unitalize(unitalize(CT));
    CHECK(check_ainf(CTpp, 6).ok);
}

TEST_CASE("single-entry corruption is caught with a witness") {
    for (auto& [name, C0] : corpus_all(field_q())) {
        CAPTURE(name);
        AInfCategory C = C0;
        // bump the first stored structure constant by one
        bool bumped = false;
        for (auto& table : C.mu) {
            for (auto& [w, vec] : table) {
                auto it = vec.begin();
                it->second += Scalar::one(C.field);
                if (it->second.is_zero()) it->second += Scalar::one(C.field);
                bumped = true;
                break;
            }
            if (bumped) break;
        }
        REQUIRE(bumped);
        AinfCheck res = check_ainf(C, 6);
        bool units_fail = !check_strict_units(C).ok;
        CHECK((!res.ok || units_fail));
        if (!res.ok) CHECK_FALSE(res.witness.empty());
    }
}

TEST_CASE("degree-inhomogeneous entries are rejected") {
    AInfCategory C = corpus_e2();
    // mu^2(x,x) = e has degree 2 on the left, 0 on the right: ill-graded
    C.add_mu({1, 1}, 0, Scalar::one(C.field));
    AinfCheck res = check_ainf(C, 4);
    CHECK_FALSE(res.ok);
    CHECK(res.kind == AinfCheck::Kind::BadDegree);
}

TEST_CASE("from_dg validates and signs the product") {
    AInfCategory D1 = fixtures::make_d1();
    // mu^2(f,g) = (-1)^{|f|} f g: check on b (deg 1) against a (deg 0)
    int a = D1.id_of("a"), b = D1.id_of("b");
    const SpVec* ab = D1.mu_entry({a, b});
    REQUIRE(ab != nullptr);
    CHECK(ab->at(b) == Scalar::one(D1.field));

    // breaking the Leibniz rule must throw
    DgCategory dg;
    dg.name = "bad";
    int X = dg.add_object("X");
    dg.add_basis("e", X, X, 0);
    dg.add_basis("a", X, X, 0);
    dg.add_basis("b", X, X, 1);
    Scalar one = Scalar::one(dg.field);
    dg.set_product("e", "e", "e", one);
    for (const char* f : {"a", "b"}) {
        dg.set_product("e", f, f, one);
        dg.set_product(f, "e", f, one);
    }
    dg.set_product("a", "a", "a", one);
    // d(a*a) should be 2 a b, but a*b is set to 0 here
    dg.set_d("a", "b", one);
    dg.unit[X] = SpVec{{0, one}};
    CHECK_THROWS(from_dg(dg));
}

TEST_CASE("opposite squares back to the original tables") {
    AInfCategory C = fixtures::make_qc();
    AInfCategory Copop = opposite(opposite(C));
    for (std::size_t s = 0; s < C.mu.size(); ++s) {
        REQUIRE(Copop.mu.size() > s);
        CHECK(C.mu[s] == Copop.mu[s]);
    }
}

TEST_CASE("strict unit rules after unitalize") {
    AInfCategory C = fixtures::make_qc();
    AInfCategory Cp = unitalize(C);
    const StrictUnit& su = Cp.strict_unit_for(0);
    CHECK(su.adjoined);
    int ep = su.id;
    int x = Cp.id_of("x");
    const SpVec* l = Cp.mu_entry({ep, x});
    REQUIRE(l != nullptr);
    CHECK(l->at(x) == Scalar::one(Cp.field));
    const SpVec* r = Cp.mu_entry({x, ep});
    REQUIRE(r != nullptr);
    CHECK(r->at(x) == -Scalar::one(Cp.field)); // (-1)^{|x|} x, |x| = 1
    // the native unit e is an ordinary letter in the unitalized category
    CHECK_FALSE(Cp.is_unit_letter(Cp.id_of("e")));
    CHECK(Cp.is_unit_letter(ep));
}

TEST_CASE("eval_mu_mixed expands vector slots distributively") {
    AInfCategory C = fixtures::make_qc();
    int e = C.id_of("e"), x = C.id_of("x");
    Scalar one = Scalar::one(C.field);
    SpVec v{{e, one}, {x, Scalar::integer(C.field, 2)}};
    // mu^2(v, x) = mu^2(e,x) + 2 mu^2(x,x) = x + 2e
    SpVec out = eval_mu_mixed(C, {Slot(&v), Slot(x)});
    CHECK(out.at(x) == one);
    CHECK(out.at(e) == Scalar::integer(C.field, 2));
}

TEST_CASE("composable word enumeration is ordered and closed") {
    AInfCategory M2 = corpus_m2();
    auto words = composable_words(M2, 2, true);
    // all 16 pairs on one object are cyclically composable
    CHECK(words.size() == 16);
    CHECK(std::is_sorted(words.begin(), words.end(), WordLess{}) ||
          std::is_sorted(words.begin(), words.end()));
    for (const auto& w : words) {
        CHECK(M2.word_composable(w));
        CHECK(M2.cyclic_composable(w));
    }
}

TEST_SUITE_END();
