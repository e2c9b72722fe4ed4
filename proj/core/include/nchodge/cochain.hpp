#pragma once

// Hochschild cochains on an A-infinity category, stored as finitely
// supported tables: one map for the arity-0 components (per object) and
// one map from basis words to output vectors for arity >= 1.
//
// All operations here are exact on finitely supported cochains: the
// Gerstenhaber circle product of tables supported in arities <= a and <= b
// is supported in arities <= a + b - 1, and the Hochschild differential
// M1 = [mu, -] of a table supported in arities <= a only needs mu up to
// arity a + s_max - 1, which the category stores in full.

#include "nchodge/category.hpp"

#include <map>
#include <vector>

namespace nchodge {

struct Cochain {
    FieldTag tag;
    // Reduced degree |phi|' = |phi| - 1. The arity-s component shifts
    // degree by |phi|' + 1 - s relative to the sum of input degrees.
    int rdeg = 0;
    // Arity-0 components: object id -> element of hom(X, X).
    std::map<int, SpVec> comp0;
    // Arity >= 1 components: input basis word -> output vector.
    std::map<Word, SpVec, WordLess> comps;

    static Cochain zero(FieldTag tag, int rdeg);

    void add0(int object, int out, const Scalar& c);
    void add(const Word& w, int out, const Scalar& c);

    // Value on a basis word (empty word is not accepted here; use eval0).
    SpVec eval(const Word& w) const;
    SpVec eval0(int object) const;

    bool is_zero() const;
    int max_arity() const;
    int parity() const; // parity of rdeg, the Koszul parity of the cochain

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(const Scalar& c) const;
    bool operator==(const Cochain& o) const;
};

// Check every table entry lands in the right hom space with
// deg(out) = sum |a_i|' + rdeg + 1 (and comp0 entries of degree rdeg + 1).
// Throws std::runtime_error naming the offending entry.
void check_cochain(const AInfCategory& C, const Cochain& phi);

// Cochain applied to a word where some slots are vectors; expands
// distributively (exact: finitely many terms).
SpVec eval_cochain_mixed(const Cochain& phi, const std::vector<Slot>& slots);

// Gerstenhaber circle product
//   (phi o psi)(a_1..a_s) = sum (-1)^{|psi|' eps_j}
//       phi(a_1..a_j, psi(a_{j+1}..a_k), a_{k+1}..a_s)
// with eps_j = |a_1|' + ... + |a_j|' and empty blocks allowed (psi^0).
Cochain gerstenhaber_product(const AInfCategory& C, const Cochain& phi,
                             const Cochain& psi);

// [phi, psi] = phi o psi - (-1)^{|phi|'|psi|'} psi o phi.
Cochain gerstenhaber_bracket(const AInfCategory& C, const Cochain& phi,
                             const Cochain& psi);

// The structure maps of C viewed as a cochain of reduced degree +1.
Cochain mu_cochain(const AInfCategory& C);

// Hochschild differential M1(phi) = [mu, phi].
Cochain cc_differential(const AInfCategory& C, const Cochain& phi);

// Two-slot insertion
//   M2(phi, psi)(a_1..a_s) = sum (-1)^{|phi|' eps_j + |psi|' eps_l}
//       mu(a_1.., phi(block_1), .., psi(block_2), ..a_s)
// over ordered non-overlapping (possibly empty) blocks.
Cochain m2(const AInfCategory& C, const Cochain& phi, const Cochain& psi);

// Cup product phi . psi = (-1)^{|phi|'} M2(phi, psi).
Cochain cup(const AInfCategory& C, const Cochain& phi, const Cochain& psi);

// The unit cocycle eta: comp0[X] = e_X, reduced degree -1. Requires the
// cohomological unit of every object to be designated.
Cochain unit_cocycle(const AInfCategory& C);

// Coefficientwise t-derivative of the structure maps; only meaningful for
// rational-function coefficients (family = true). Reduced degree +1.
Cochain ks_cochain(const AInfCategory& C);

} // namespace nchodge
