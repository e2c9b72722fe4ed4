#pragma once
// Built-in example categories used by the tests, benchmarks and the shipped
// corpus files, plus the functors between them that the functoriality checks
// exercise. Everything here is constructed through the public category API so
// the same data can round-trip through the file format.

#include "nchodge/category.hpp"
#include "nchodge/functor.hpp"

#include <string>
#include <utility>
#include <vector>

namespace nchodge {

// One object, one basis morphism e of degree 0 with e*e = e. Native strict
// unit; HH is one-dimensional in degree 0.
AInfCategory corpus_k(FieldTag tag = field_q());

// One object with End = 2x2 matrices, basis u = I, p = E12, q = E21,
// h = E11 - E22, all degree 0. Morita equivalent to corpus_k. Needs 1/2,
// so the field characteristic must not be 2.
AInfCategory corpus_m2(FieldTag tag = field_q());

// Exterior algebra on one degree-1 generator: basis e (deg 0), x (deg 1),
// x*x = 0; cy_dim 1.
AInfCategory corpus_e2(FieldTag tag = field_q());

// Cohomology-of-the-2-sphere type algebra: basis e (deg 0), y (deg 2),
// y*y = 0; cy_dim 2.
AInfCategory corpus_s2(FieldTag tag = field_q());

// Clifford-type family over Q(t), Z/2-graded: basis e (deg 0), x (deg 1),
// mu^2(x,x) = -t*e. The family flag is set; this is the carrier for the
// connection and covariance checks.
AInfCategory corpus_clifford();

// The same family written in the rescaled basis xt = t*x, so
// mu^2(xt,xt) = -t^3*e.
AInfCategory corpus_clifford_scaled();

// The identity functor of the Clifford family expressed as a change of
// basis: e -> e, x -> t^{-1}*xt. Strict (F^1 only), with a nonconstant
// coefficient so its t-derivative is nonzero.
AInfFunctor clifford_basis_change(const AInfCategory& C, const AInfCategory& D);

// The strict automorphism e -> e, x -> -x of the Clifford family.
AInfFunctor clifford_parity(const AInfCategory& C);

// The Morita functor corpus_k -> corpus_m2: object to the rank-2 object,
// e -> u. Strict.
AInfFunctor morita_functor(const AInfCategory& K, const AInfCategory& M2);

// The four constant-coefficient categories over the given field, by name.
std::vector<std::pair<std::string, AInfCategory>> corpus_constant(FieldTag tag);

// All five base categories (constant ones over the given field, plus the
// Clifford family over Q(t)).
std::vector<std::pair<std::string, AInfCategory>> corpus_all(FieldTag tag);

} // namespace nchodge
