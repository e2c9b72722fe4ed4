#include "doctest.h"
#include "fixtures.hpp"
#include "nchodge/hochschild.hpp"

using namespace nchodge;

TEST_SUITE_BEGIN("hochschild");

namespace {

Chain one_word(const AInfCategory& C, const Word& w) {
    Chain a = Chain::zero(C.field);
    a.add(w, Scalar::one(C.field));
    return a;
}

} // namespace

TEST_CASE("b squares to zero on random chains") {
    for (auto& [name, C] : corpus_all(field_q())) {
        CAPTURE(name);
        Rng rng(17);
        for (int i = 0; i < 20; ++i) {
            Chain a = random_chain(C, rng, 3, 4, false);
            CHECK(hochschild_b(C, hochschild_b(C, a)).is_zero());
            Chain an = random_chain(C, rng, 3, 4, true);
            CHECK(b_nu(C, b_nu(C, an)).is_zero());
        }
    }
}

TEST_CASE("boundary values on the ground field") {
    AInfCategory K = corpus_k();
    int e = K.id_of("e");
    // unreduced complex: b(e[e|e]) = e[e] (three terms, one survives)
    Chain b2 = hochschild_b(K, one_word(K, {e, e, e}));
    CHECK(b2 == one_word(K, {e, e}));
    CHECK(hochschild_b(K, one_word(K, {e, e})).is_zero());
    // the normalized complex kills every unit-slot word
    CHECK(b_nu(K, one_word(K, {e, e, e})).is_zero());
    CHECK(normalize_nu(K, one_word(K, {e, e})).is_zero());
    CHECK_FALSE(normalize_nu(K, one_word(K, {e})).is_zero()); // native unit head survives
}

TEST_CASE("the exterior algebra has vanishing normalized boundary") {
    AInfCategory E2 = corpus_e2();
    for (int s = 0; s <= 4; ++s) {
        for (int d = -1; d <= 5; ++d) {
            for (const Word& w : nu_words_of_degree(E2, s, d)) {
                CHECK(b_nu(E2, one_word(E2, w)).is_zero());
            }
        }
    }
}

TEST_CASE("boundary values on the two-sphere algebra") {
    AInfCategory S2 = corpus_s2();
    int e = S2.id_of("e"), y = S2.id_of("y");
    Scalar two = Scalar::integer(S2.field, 2);
    // b(e[y|y]) = 2 y[y]
    Chain lhs = b_nu(S2, one_word(S2, {e, y, y}));
    CHECK(lhs == one_word(S2, {y, y}).scaled(two));
    // b(e[y^s]) = 2 y[y^{s-1}] for even s, zero for odd s
    for (int s = 1; s <= 4; ++s) {
        Word w{e};
        for (int i = 0; i < s; ++i) w.push_back(y);
        Chain out = b_nu(S2, one_word(S2, w));
        if (s % 2 == 0) {
            Word v{y};
            for (int i = 0; i + 1 < s; ++i) v.push_back(y);
            CHECK(out == one_word(S2, v).scaled(two));
        } else {
            CHECK(out.is_zero());
        }
    }
}

TEST_CASE("rotation signs and cyclic t") {
    AInfCategory S2 = corpus_s2();
    int e = S2.id_of("e"), y = S2.id_of("y");
    // eps(e,y) = [0, 1, 0]; moving y past e costs (-1)
    auto [w, par] = rotate_word(S2, {e, y}, 1);
    CHECK(w == Word{y, e});
    CHECK(par == 1);
    auto [w0, par0] = rotate_word(S2, {e, y}, 0);
    CHECK(w0 == Word{e, y});
    CHECK(par0 == 0);
    // t on the chain level reproduces the signed rotation
    Chain t1 = cyclic_t(S2, one_word(S2, {e, y}));
    CHECK(t1 == one_word(S2, {y, e}).scaled(-Scalar::one(S2.field)));
}

TEST_CASE("word degree bookkeeping") {
    AInfCategory S2 = corpus_s2();
    int e = S2.id_of("e"), y = S2.id_of("y");
    CHECK(word_degree(S2, {e}) == 0);
    CHECK(word_degree(S2, {e, y}) == 1);
    CHECK(word_degree(S2, {y, y}) == 3);
    ChainInfo info = check_chain(S2, one_word(S2, {e, y}) + one_word(S2, {y}).scaled(
                                          Scalar::integer(S2.field, 3)));
    CHECK_FALSE(info.homogeneous); // degrees 1 and 2 mixed
}

TEST_CASE("brace insertions reduce to b at arity zero") {
    AInfCategory Qc = fixtures::make_qc();
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        Chain a = random_chain(Qc, rng, 3, 3, true);
        CHECK(brace_b(Qc, {}, a) == hochschild_b(Qc, a));
    }
}

TEST_CASE("vee is a chain map to the opposite category") {
    AInfCategory Qc = fixtures::make_qc();
    AInfCategory Qop = opposite(Qc);
    Rng rng(23);
    for (int i = 0; i < 15; ++i) {
        Chain a = random_chain(Qc, rng, 3, 4, true);
        CHECK(vee(Qc, b_nu(Qc, a)) == b_nu(Qop, vee(Qc, a)));
    }
}

TEST_CASE("pushforward along the Morita functor is a chain map") {
    AInfCategory K = corpus_k(), M2 = corpus_m2();
    AInfFunctor mor = morita_functor(K, M2);
    Rng rng(31);
    for (int i = 0; i < 15; ++i) {
        Chain a = random_chain(K, rng, 3, 4, false);
        CHECK(pushforward(K, M2, mor, hochschild_b(K, a)) ==
              hochschild_b(M2, pushforward(K, M2, mor, a)));
    }
}

TEST_CASE("degenerate words and normalization") {
    AInfCategory E2p = unitalize(corpus_e2());
    int ep = E2p.strict_unit_for(0).id;
    int x = E2p.id_of("x");
    CHECK(word_degenerate(E2p, {x, ep}));       // adjoined unit in a slot
    CHECK(word_degenerate(E2p, {ep}));          // bare adjoined head
    CHECK_FALSE(word_degenerate(E2p, {ep, x})); // unit in head position is fine
    AInfCategory E2 = corpus_e2();
    CHECK_FALSE(word_degenerate(E2, {E2.id_of("e")})); // native bare unit survives
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Word w = random_cyclic_word(E2p, rng, 3, true);
        CHECK_FALSE(word_degenerate(E2p, w));
    }
}

TEST_SUITE_END();
