#pragma once

// The Gauss-Manin connection on the truncated negative cyclic complex of a
// one-parameter family of categories, differentiated in the parameter t of
// the coefficient field K(t). The chain-level operator is
//
//   u nabla(xi) = u v(xi) - b^{1|1}(v(mu)|xi) - u B^{1|1}(v(mu)|xi)
//
// where v = d/dt acts coefficientwise and v(mu) is the derivative of the
// structure maps, a cochain of reduced degree +1. It commutes with b + uB
// on the nose and satisfies the Leibniz rule against scalar functions up
// to one power of u.
//
// For a family functor F: C -> D the failure of u nabla to commute with
// the cyclic pushforward is witnessed by an explicit homotopy built from
// three rotation sums H1, H2, H3; gm_functoriality_defect assembles the
// whole identity and is identically zero.

#include "nchodge/cyclic.hpp"

namespace nchodge {

// Coefficientwise d/dt. Requires the rational-function field.
Chain derive_chain(const Chain& a);
NegCyclicChain derive_cyclic(const NegCyclicChain& xi);

// u nabla against an arbitrary connection cochain vmu (reduced degree +1).
NegCyclicChain u_nabla(const AInfCategory& C, const Cochain& vmu,
                       const NegCyclicChain& xi);
// Convenience form with vmu = ks_cochain(C).
NegCyclicChain u_nabla_ks(const AInfCategory& C, const NegCyclicChain& xi);

// [u nabla, b + uB](xi); identically zero on the truncated complex.
NegCyclicChain connection_commutator_defect(const AInfCategory& C, const Cochain& vmu,
                                            const NegCyclicChain& xi);

// u nabla(f xi) - f u nabla(xi) - u (df/dt) xi for a scalar function f.
NegCyclicChain leibniz_defect(const AInfCategory& C, const Cochain& vmu,
                              const Scalar& f, const NegCyclicChain& xi);

// The three homotopy terms for a family functor F: C -> D. Per rotation
// of each word (original head at position i, t-sign included):
//
//   H1: one F-head F(w_0..w_j, vmu_C(w_{j+1}..w_m), w_{m+1}..w_k) with the
//       vmu block nonempty and strictly before position i, i <= k, extra
//       sign (-1)^{e_j} from moving vmu past the prefix; the tail letters
//       k+1..s feed the bracket as nonempty F-blocks.
//   H2: head w_0..w_m (m >= i) split into nonempty blocks, one block taken
//       through v(F) and the block holding position i strictly after it,
//       mu_D of the block values; tail F-blocks as in H1.
//   H3: designated unit of D at F(src w_0) as the head; all letters split
//       into nonempty blocks, one through v(F), the block holding position
//       i strictly after it; every block value lands in the bracket.
Chain gm_h1(const AInfCategory& C, const AInfCategory& D, const AInfFunctor& Fn,
            const Cochain& vmuC, const Chain& a);
Chain gm_h2(const AInfCategory& C, const AInfCategory& D, const AInfFunctor& Fn,
            const AInfFunctor& vF, const Chain& a);
Chain gm_h3(const AInfCategory& C, const AInfCategory& D, const AInfFunctor& Fn,
            const AInfFunctor& vF, const Chain& a);

// F_* b^{1|1}(vmu_C|a) - b^{1|1}(vmu_D|F_* a) - b H(a) - H(b a) for
// H = H1 - H2; identically zero. Validates the Hochschild-level module
// compatibility before any u-power enters.
Chain gm_defmod_defect(const AInfCategory& C, const AInfCategory& D,
                       const AInfFunctor& Fn, const Chain& a);

// H^u = H2 - H1 + u H3, componentwise on u-powers.
NegCyclicChain gm_homotopy_u(const AInfCategory& C, const AInfCategory& D,
                             const AInfFunctor& Fn, const NegCyclicChain& xi);

// F_*(u nabla xi) - u nabla(F_* xi) - (b+uB) H^u(xi) - H^u((b+uB) xi);
// identically zero for a unit-strict family functor.
NegCyclicChain gm_functoriality_defect(const AInfCategory& C, const AInfCategory& D,
                                       const AInfFunctor& Fn, const NegCyclicChain& xi);

} // namespace nchodge
