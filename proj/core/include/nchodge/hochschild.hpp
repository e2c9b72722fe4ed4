#pragma once

// Cyclic-word Hochschild chains a_0[a_1|...|a_s] and the operators acting
// on them. A word is stored as (a_0, a_1, ..., a_s); dst(a_s) = src(a_0).
//
// Sign bookkeeping: eps_j = |a_0|' + ... + |a_j|' (head included), and the
// rotation t^i carries (-1)^{(eps_s - eps_{s-i}) eps_{s-i}}, the Koszul cost
// of moving the last i letters past the first s+1-i. Every formula below
// recomputes its eps signs positionally in the rotated word.

#include "nchodge/category.hpp"
#include "nchodge/cochain.hpp"
#include "nchodge/functor.hpp"
#include "nchodge/rng.hpp"

#include <map>
#include <vector>

namespace nchodge {

struct Chain {
    FieldTag tag;
    std::map<Word, Scalar, WordLess> terms;

    static Chain zero(FieldTag tag);
    void add(const Word& w, const Scalar& c);
    Chain operator+(const Chain& o) const;
    Chain operator-(const Chain& o) const;
    Chain scaled(const Scalar& c) const;
    bool is_zero() const;
    bool operator==(const Chain& o) const;
    int max_bracket() const; // largest s over the support, -1 if zero
    std::string str(const AInfCategory& C) const;
};

// Total degree |a_0| + sum_{i>=1} (|a_i| - 1), normalized by the grading.
int word_degree(const AInfCategory& C, const Word& w);

// Throws unless every word is cyclically composable; returns the common
// degree through *deg when the chain is homogeneous, -1 sentinel otherwise
// (use homogeneous flag).
struct ChainInfo {
    bool homogeneous = true;
    int degree = 0;
};
ChainInfo check_chain(const AInfCategory& C, const Chain& a);

// eps_j for j = -1..s as a vector of parities indexed by j+1 (so [0] = 0).
std::vector<int> eps_prefix(const AInfCategory& C, const Word& w);

// t^i with its Koszul sign; i = 0..s. Returns the rotated word and the
// sign parity (0 or 1).
std::pair<Word, int> rotate_word(const AInfCategory& C, const Word& w, int i);

// The cyclic rotation t as an operator (single rotation of every word).
Chain cyclic_t(const AInfCategory& C, const Chain& a);

// Hochschild boundary: head terms mu(w'_0..w'_j)[w'_{j+1}|..] over all
// rotations placing a_0 inside the head, with t-signs only, plus internal
// terms (-1)^{eps_j} a_0[..|mu(a_{j+1}..a_k)|..].
Chain hochschild_b(const AInfCategory& C, const Chain& a);

// b^{p|1}(phi_1,...,phi_p | alpha): cochain insertions into the head of b.
// All phi-blocks (possibly empty) sit strictly before the rotated-in a_0;
// each phi_l contributes (-1)^{rp(phi_l) eps'_{j_l}} with eps' positional in
// the rotated word. p = 0 gives back hochschild_b.
Chain brace_b(const AInfCategory& C, const std::vector<const Cochain*>& phis,
              const Chain& a);

// Cap product phi ∩ alpha = (-1)^{|phi|} b^{1|1}(phi | alpha).
Chain cap(const AInfCategory& C, const Cochain& phi, const Chain& a);

// Pushforward along an A-infinity functor: nonempty consecutive F-blocks of
// each rotated word, a_0 inside the first block, t-signs only.
Chain pushforward(const AInfCategory& C, const AInfCategory& D,
                  const AInfFunctor& Fn, const Chain& a);

// a_0[a_1|..|a_s] -> (-1)^{sum_{1<=i<j<=s} |a_i|'|a_j|'} a_0[a_s|..|a_1],
// a chain over opposite(C).
Chain vee(const AInfCategory& C, const Chain& a);

// Degenerate words for the normalized complex: a designated unit letter in
// a bracket slot, or a bare adjoined-unit head (length 0).
bool word_degenerate(const AInfCategory& C, const Word& w);
Chain normalize_nu(const AInfCategory& C, const Chain& a);

// b followed by normalization (the boundary of the normalized complex).
Chain b_nu(const AInfCategory& C, const Chain& a);

// Random cyclically composable words/chains for randomized identities.
// nu = true avoids degenerate words. Throws after too many failed tries.
Word random_cyclic_word(const AInfCategory& C, Rng& rng, int s, bool nu);
Chain random_chain(const AInfCategory& C, Rng& rng, int terms, int s_max, bool nu);
// All non-degenerate cyclic words with bracket length s and given degree.
std::vector<Word> nu_words_of_degree(const AInfCategory& C, int s, int degree);

} // namespace nchodge
