#include "nchodge/corpus.hpp"

namespace nchodge {

namespace {

Scalar half(FieldTag tag) { return Scalar::rational(tag, mpq_class(1, 2)); }

} // namespace

AInfCategory corpus_k(FieldTag tag) {
    DgCategory dg;
    dg.name = "k";
    dg.field = tag;
    dg.add_object("pt");
    dg.add_basis("e", 0, 0, 0);
    dg.set_product("e", "e", "e", Scalar::one(tag));
    dg.unit[0] = SpVec{{0, Scalar::one(tag)}};
    return from_dg(dg);
}

AInfCategory corpus_m2(FieldTag tag) {
    DgCategory dg;
    dg.name = "m2";
    dg.field = tag;
    dg.add_object("pt");
    dg.add_basis("u", 0, 0, 0);
    dg.add_basis("p", 0, 0, 0);
    dg.add_basis("q", 0, 0, 0);
    dg.add_basis("h", 0, 0, 0);
    Scalar one = Scalar::one(tag);
    Scalar hf = half(tag);
    for (const char* a : {"u", "p", "q", "h"}) {
        dg.set_product("u", a, a, one);
        if (std::string(a) != "u") dg.set_product(a, "u", a, one);
    }
    // u = I, p = E12, q = E21, h = E11 - E22; matrix products.
    dg.set_product("p", "q", "u", hf);
    dg.set_product("p", "q", "h", hf);
    dg.set_product("q", "p", "u", hf);
    dg.set_product("q", "p", "h", -hf);
    dg.set_product("p", "h", "p", -one);
    dg.set_product("h", "p", "p", one);
    dg.set_product("q", "h", "q", one);
    dg.set_product("h", "q", "q", -one);
    dg.set_product("h", "h", "u", one);
    dg.unit[0] = SpVec{{0, one}};
    return from_dg(dg);
}

AInfCategory corpus_e2(FieldTag tag) {
    DgCategory dg;
    dg.name = "e2";
    dg.field = tag;
    dg.add_object("pt");
    dg.add_basis("e", 0, 0, 0);
    dg.add_basis("x", 0, 0, 1);
    Scalar one = Scalar::one(tag);
    dg.set_product("e", "e", "e", one);
    dg.set_product("e", "x", "x", one);
    dg.set_product("x", "e", "x", one);
    dg.unit[0] = SpVec{{0, one}};
    AInfCategory C = from_dg(dg);
    C.cy_dim = 1;
    return C;
}

AInfCategory corpus_s2(FieldTag tag) {
    DgCategory dg;
    dg.name = "s2";
    dg.field = tag;
    dg.add_object("pt");
    dg.add_basis("e", 0, 0, 0);
    dg.add_basis("y", 0, 0, 2);
    Scalar one = Scalar::one(tag);
    dg.set_product("e", "e", "e", one);
    dg.set_product("e", "y", "y", one);
    dg.set_product("y", "e", "y", one);
    dg.unit[0] = SpVec{{0, one}};
    AInfCategory C = from_dg(dg);
    C.cy_dim = 2;
    return C;
}

namespace {

AInfCategory clifford_with(const std::string& name, const Scalar& xx) {
    FieldTag tag = field_ratfun();
    DgCategory dg;
    dg.name = name;
    dg.field = tag;
    dg.grading = Grading::mod(2);
    dg.add_object("pt");
    dg.add_basis("e", 0, 0, 0);
    dg.add_basis("x", 0, 0, 1);
    Scalar one = Scalar::one(tag);
    dg.set_product("e", "e", "e", one);
    dg.set_product("e", "x", "x", one);
    dg.set_product("x", "e", "x", one);
    dg.set_product("x", "x", "e", xx);
    dg.unit[0] = SpVec{{0, one}};
    AInfCategory C = from_dg(dg);
    C.family = true;
    return C;
}

} // namespace

AInfCategory corpus_clifford() {
    return clifford_with("clifford", Scalar::t(field_ratfun()));
}

AInfCategory corpus_clifford_scaled() {
    Scalar t = Scalar::t(field_ratfun());
    return clifford_with("clifford-scaled", t * t * t);
}

AInfFunctor clifford_basis_change(const AInfCategory& C, const AInfCategory& D) {
    AInfFunctor Fn;
    Fn.name = "basis-change";
    Fn.obj_map[0] = 0;
    Fn.add_by_name(C, D, {"e"}, "e", Scalar::one(C.field));
    Fn.add_by_name(C, D, {"x"}, "x", Scalar::t(C.field).inv());
    return Fn;
}

AInfFunctor clifford_parity(const AInfCategory& C) {
    AInfFunctor Fn;
    Fn.name = "parity";
    Fn.obj_map[0] = 0;
    Fn.add_by_name(C, C, {"e"}, "e", Scalar::one(C.field));
    Fn.add_by_name(C, C, {"x"}, "x", -Scalar::one(C.field));
    return Fn;
}

AInfFunctor morita_functor(const AInfCategory& K, const AInfCategory& M2) {
    AInfFunctor Fn;
    Fn.name = "morita";
    Fn.obj_map[0] = 0;
    Fn.add_by_name(K, M2, {"e"}, "u", Scalar::one(K.field));
    return Fn;
}

std::vector<std::pair<std::string, AInfCategory>> corpus_constant(FieldTag tag) {
    std::vector<std::pair<std::string, AInfCategory>> out;
    out.emplace_back("k", corpus_k(tag));
    out.emplace_back("m2", corpus_m2(tag));
    out.emplace_back("e2", corpus_e2(tag));
    out.emplace_back("s2", corpus_s2(tag));
    return out;
}

std::vector<std::pair<std::string, AInfCategory>> corpus_all(FieldTag tag) {
    auto out = corpus_constant(tag);
    out.emplace_back("clifford", corpus_clifford());
    return out;
}

} // namespace nchodge
