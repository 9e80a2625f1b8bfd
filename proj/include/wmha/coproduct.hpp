#pragma once

#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include "wmha/algebra.hpp"
#include "wmha/rng.hpp"

namespace wmha {

/// One term of a covered Sweedler decomposition of Delta(basis element).
using SweedlerTerm = std::tuple<Scalar, Key, Key>;

/// A coproduct valued in M(A tensor A), held through its slice maps:
/// slice_right(a,b) = Delta(a)(1 tensor b) and
/// slice_left(a,b)  = (a tensor 1) Delta(b), both landing in A tensor A.
/// Regular coproducts also carry the opposite slices.
struct Coproduct {
  std::function<FinVec(const Key&, const Key&)> slice_right_basis;
  std::function<FinVec(const Key&, const Key&)> slice_left_basis;
  // Delta(a)(b tensor 1) and (1 tensor a) Delta(b); present iff regular.
  std::optional<std::function<FinVec(const Key&, const Key&)>> rslice_right_basis;
  std::optional<std::function<FinVec(const Key&, const Key&)>> rslice_left_basis;
  /// Windowed Sweedler decomposition: terms (c, p, q) with
  /// Delta(a) "=" sum c * (p tensor q), valid against any element whose
  /// legs are supported in the window.
  std::optional<std::function<std::vector<SweedlerTerm>(
      const Key&, const std::vector<Key>&)>>
      sweedler_basis;
  bool declared_star_hom = false;

  bool regular() const {
    return rslice_right_basis.has_value() && rslice_left_basis.has_value();
  }

  FinVec slice_right(const FinVec& a, const FinVec& b) const;
  FinVec slice_left(const FinVec& a, const FinVec& b) const;
  FinVec rslice_right(const FinVec& a, const FinVec& b) const;
  FinVec rslice_left(const FinVec& a, const FinVec& b) const;

  std::vector<SweedlerTerm> sweedler(const Key& a,
                                     const std::vector<Key>& window) const;

  /// Delta(a) as a multiplier of A tensor A (action pair through slices).
  TensorMultiplier delta(const BasedAlgebra& alg, const FinVec& a) const;
};

/// Default Sweedler rule for unital algebras: expand Delta(a)(1 tensor 1).
std::function<std::vector<SweedlerTerm>(const Key&, const std::vector<Key>&)>
make_unital_sweedler(const BasedAlgebra& alg, const Coproduct& cp);

/// Delta composed with the flip.
Coproduct cop_of(const Coproduct& cp);
/// The same coproduct viewed over A^op (slices unchanged as linear maps,
/// but the roles of the four canonical maps rotate: T1' = T4, T2' = T3).
Coproduct coproduct_for_opposite(const Coproduct& cp);

/// T_k on A tensor A. k in 1..4; 3 and 4 need regular slices
/// (throws MathError "not regular" otherwise).
/// T1(a#b) = Delta(a)(1#b), T2(a#b) = (a#1)Delta(b),
/// T3(a#b) = (1#b)Delta(a), T4(a#b) = Delta(b)(a#1).
FinVec canonical_map(int k, const Coproduct& cp, const FinVec& x);
LinOp canonical_map_op(int k, const Coproduct& cp);

/// Operator form of coassociativity:
/// (T2 x i)(i x T1) = (i x T1)(T2 x i) on all window basis triples.
VerificationReport check_coassociativity(const Coproduct& cp,
                                         const std::vector<Key>& window);

/// Homomorphism property through slices:
/// Delta(xy)(1#b) = Delta(x)(Delta(y)(1#b)) and the right-handed mirror.
VerificationReport check_coproduct_hom(const BasedAlgebra& alg, const Coproduct& cp,
                                       const std::vector<Key>& window);

/// Star-compatibility (star case only): Delta(a*) = Delta(a)* as actions.
VerificationReport check_star_hom(const BasedAlgebra& alg, const Coproduct& cp,
                                  const std::vector<Key>& window);

/// Fullness per Lemma-style leg spans: both one-leg spans of the slices
/// must reach every window basis vector.
VerificationReport check_full(const Coproduct& cp, const std::vector<Key>& window);

/// The weaker slice-non-degeneracy diagnostic (separate from fullness):
/// b = 0 whenever Delta(a)(1 tensor b) = 0 for all a, and its mirror.
VerificationReport check_slice_nondegenerate(const Coproduct& cp,
                                             const std::vector<Key>& window);

struct Counit {
  std::function<Scalar(const Key&)> on_basis;
  Scalar apply(const FinVec& v) const {
    Scalar s;
    for (const auto& [k, c] : v.terms()) s += c * on_basis(k);
    return s;
  }
};

struct CounitResult {
  enum class Status { Unique, NoSolution, NotUnique } status;
  Counit counit;          // populated when Unique
  std::size_t nullity = 0;  // solution space dimension when NotUnique
  FinVec certificate;       // inconsistency witness when NoSolution
};

/// Solve the two counit laws as one joint exact linear system over the
/// window. Partial solutions are rejected; NotUnique can only occur when
/// the coproduct is not full.
CounitResult solve_counit(const BasedAlgebra& alg, const Coproduct& cp,
                          const std::vector<Key>& window);

/// Both counit laws, checked verbatim for a given functional.
VerificationReport check_counit_laws(const BasedAlgebra& alg, const Coproduct& cp,
                                     const Counit& eps,
                                     const std::vector<Key>& window);

struct DualPairing {
  std::function<Scalar(const Key&, const Key&)> on_basis;
  Scalar apply(const FinVec& a, const FinVec& b) const {
    Scalar s;
    for (const auto& [ka, ca] : a.terms()) {
      for (const auto& [kb, cb] : b.terms()) s += ca * cb * on_basis(ka, kb);
    }
    return s;
  }
  /// <x tensor y, u tensor v> = <x,u><y,v>, extended bilinearly.
  Scalar apply_tensor(const FinVec& x, const FinVec& y) const;
};

/// Adjointness laws of a dual pairing on all window quadruples, plus
/// non-degeneracy of the window pairing matrix. When both sides are
/// regular, also the flipped T3/T4 laws.
VerificationReport check_pairing(const DualPairing& pr, const Coproduct& cpA,
                                 const Coproduct& cpB,
                                 const std::vector<Key>& windowA,
                                 const std::vector<Key>& windowB);

/// Seeded random-element version for lazy structures.
VerificationReport check_pairing_random(const DualPairing& pr, const Coproduct& cpA,
                                        const Coproduct& cpB,
                                        const std::vector<Key>& windowA,
                                        const std::vector<Key>& windowB,
                                        SeededRng& rng, int trials);

}  // namespace wmha
