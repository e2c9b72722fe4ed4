#pragma once
// Extra categories the unit tests exercise beyond the shipped corpus:
// a minimal mu^3 example, a dg category with a nonzero differential, and a
// one-generator family whose mu^3 coefficient also moves with t (the richest
// small case for the pairing homotopies).

#include "nchodge/category.hpp"
#include "nchodge/corpus.hpp"

namespace nchodge::fixtures {

// Z/2-graded, constant coefficients, mu^2(x,x) = e and mu^3(x,x,x) = e.
inline AInfCategory make_qc(FieldTag tag = field_q()) {
    AInfCategory C;
    C.name = "qc";
    C.grading = Grading::mod(2);
    C.field = tag;
    int X = C.add_object("X");
    int e = C.add_basis("e", X, X, 0);
    int x = C.add_basis("x", X, X, 1);
    Scalar one = Scalar::one(tag);
    C.add_mu({e, e}, e, one);
    C.add_mu({e, x}, x, one);
    C.add_mu({x, e}, x, -one);
    C.add_mu({x, x}, e, one);
    C.add_mu({x, x, x}, e, one);
    C.unit[X] = SpVec{{e, one}};
    C.strict_unit[X] = StrictUnit{e, one, false};
    return C;
}

// dg category with d(a) = b: from_dg supplies mu^1/mu^2 and the sign rules.
inline AInfCategory make_d1(FieldTag tag = field_q()) {
    DgCategory dg;
    dg.name = "d1";
    dg.field = tag;
    int X = dg.add_object("X");
    dg.add_basis("e", X, X, 0);
    dg.add_basis("a", X, X, 0);
    dg.add_basis("b", X, X, 1);
    Scalar one = Scalar::one(tag);
    dg.set_product("e", "e", "e", one);
    for (const char* f : {"a", "b"}) {
        dg.set_product("e", f, f, one);
        dg.set_product(f, "e", f, one);
    }
    dg.set_product("a", "a", "a", one);
    dg.set_product("a", "b", "b", one);
    dg.set_d("a", "b", one);
    dg.unit[X] = SpVec{{0, one}};
    return from_dg(dg);
}

// One-generator family over Q(t) with a t-dependent mu^3: the pairing
// homotopy H3 fires on many word pairs here, which pins its conventions.
inline AInfCategory make_qt() {
    FieldTag tag = field_ratfun();
    AInfCategory C;
    C.name = "qt";
    C.grading = Grading::mod(2);
    C.field = tag;
    int X = C.add_object("X");
    int e = C.add_basis("e", X, X, 0);
    int x = C.add_basis("x", X, X, 1);
    Scalar one = Scalar::one(tag);
    C.add_mu({e, e}, e, one);
    C.add_mu({e, x}, x, one);
    C.add_mu({x, e}, x, -one);
    C.add_mu({x, x}, e, Scalar::parse(tag, "ratfun:-t"));
    C.add_mu({x, x, x}, e, Scalar::parse(tag, "ratfun:t^2"));
    C.unit[X] = SpVec{{e, one}};
    C.strict_unit[X] = StrictUnit{e, one, false};
    C.family = true;
    return C;
}

} // namespace nchodge::fixtures
