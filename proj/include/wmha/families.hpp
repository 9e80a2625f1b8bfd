#pragma once

#include "wmha/groupoid.hpp"
#include "wmha/wmha.hpp"

namespace wmha {

/// K(G): finite-support functions on the groupoid with pointwise product,
/// Delta(f)(p,q) = f(pq) on composable pairs, eps(f) = sum of unit values,
/// S(f) = f o inverse, E(p,q) = [s(p) = t(q)], F1 = [s(p) = s(q)],
/// F2 = [t(p) = t(q)], star = pointwise conjugation.
Structure build_KG(const Groupoid& g);

/// CG: the groupoid convolution algebra with Delta(l_p) = l_p # l_p,
/// eps(l_p) = 1, S(l_p) = l_{p^{-1}}, E = F1 = F2 = sum_e l_e # l_e,
/// star(l_p) = l_{p^{-1}}.
Structure build_CG(const Groupoid& g);

/// The evaluation pairing <f, l_p> = f(p) between K(G) and CG over a
/// common groupoid. Throws MathError when the groupoids differ.
DualPairing canonical_pairing(const Structure& kg, const Structure& cg);

/// Finite unital CG repackaged as raw weak Hopf data (Delta as a map into
/// the tensor square), for the Proposition 4.12 round trip.
Structure cg_as_weak_hopf(const Groupoid& g);

}  // namespace wmha
