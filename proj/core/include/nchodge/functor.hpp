#pragma once

// A-infinity functors between finite categories, stored as finitely
// supported tables F^s (s >= 1) from source basis words to target vectors.
// F^1 is required on every basis letter that is to be transported; higher
// components are optional corrections.

#include "nchodge/category.hpp"

#include <map>
#include <string>
#include <vector>

namespace nchodge {

struct AInfFunctor {
    std::string name;
    std::map<int, int> obj_map;                        // source object -> target object
    std::vector<std::map<Word, SpVec, WordLess>> F;    // F[s] for arity s, F[0] unused
    int s_max = 0;

    void add(const Word& w, int out, const Scalar& c);
    void add_by_name(const AInfCategory& C, const AInfCategory& D,
                     const std::vector<std::string>& in,
                     const std::string& out, const Scalar& c);
    SpVec eval(const Word& w) const; // table lookup, absent = 0
};

// F applied to a word where some slots are vectors rather than letters;
// expands distributively. Used by the functor relation and the gm terms.
SpVec eval_F_mixed(const AInfFunctor& Fn, const std::vector<Slot>& slots);

// Degree bookkeeping: every F^s entry must satisfy
//   deg(out) = sum_i |a_i|' + 1  (F has reduced degree 0)
// and land in hom(F src, F dst). Throws on violation.
void check_functor_degrees(const AInfCategory& C, const AInfCategory& D,
                           const AInfFunctor& Fn);

// The A-infinity functor relation on all composable words of length <= cap:
//   sum_{r, partitions} mu_D(F(block_1), ..., F(block_r))
//     = sum_{j <= k} (-1)^{eps_j} F(a_1.., mu_C(a_{j+1}..a_k), ..a_s)
// with eps_j = |a_1|' + ... + |a_j|'. Returns a failure report like
// check_ainf; witness is the first failing word.
AinfCheck check_functor(const AInfCategory& C, const AInfCategory& D,
                        const AInfFunctor& Fn, int cap);

// Left-hand side of the relation as a vector, for reuse in pushforwards.
SpVec functor_lhs(const AInfCategory& D, const AInfFunctor& Fn, const Word& w);

AInfFunctor identity_functor(const AInfCategory& C);

// The identity-on-basis inclusion of C into its unitalization (basis ids
// are shared, unitalize only appends letters).
AInfFunctor inclusion_functor(const AInfCategory& C, const AInfCategory& Cplus);

// Extend F: C -> D to F+: C+ -> D+ with F+(e+_X) = e+_{FX} and no other
// new components. C+ and D+ must be the unitalizations of C and D.
AInfFunctor unitalize_functor(const AInfCategory& C, const AInfCategory& D,
                              const AInfCategory& Cplus, const AInfCategory& Dplus,
                              const AInfFunctor& Fn);

// True if F sends each designated strict unit of C to the designated strict
// unit of D (as elements) and no higher component touches a unit letter.
bool functor_unit_strict(const AInfCategory& C, const AInfCategory& D,
                         const AInfFunctor& Fn);

// Coefficientwise t-derivative v(F) of a functor between families,
// as a table of the same shape (reduced degree -1 as a transformation).
AInfFunctor derive_functor(const AInfFunctor& Fn);

} // namespace nchodge
