#pragma once

// Internal helpers shared by the derivation and verification translation
// units. Not part of the public surface.

#include "wmha/wmha.hpp"

namespace wmha {

/// Lift a pair-space action to legs (i, j) of an arity-`arity` space.
std::function<FinVec(const FinVec&)> lift_action(
    const std::function<FinVec(const FinVec&)>& act, int i, int j, int arity);

/// x tensor y -> x tensor 1 tensor y (unital lift of a pair element).
FinVec lift_element_13(const FinVec& e, const FinVec& unit);

// Leg-wise multiplications of an A-tensor-A element by one-legged factors.
FinVec mul_first_left(const BasedAlgebra& alg, const FinVec& x, const FinVec& a);
FinVec mul_first_right(const BasedAlgebra& alg, const FinVec& x, const FinVec& a);
FinVec mul_second_left(const BasedAlgebra& alg, const FinVec& x, const FinVec& b);
FinVec mul_second_right(const BasedAlgebra& alg, const FinVec& x, const FinVec& b);

/// Sandwich (a tensor 1) F (1 tensor b) recovered from a realized action
/// through a covering local unit.
KernelMultiplier kernel_from_action(const BasedAlgebra& alg, const Multiplier& act);
/// Reverse sandwich (1 tensor b) F (a tensor 1), same technique.
FinVec reverse_sandwich(const BasedAlgebra& alg, const Multiplier& act,
                        const FinVec& b, const FinVec& a);

/// Everything the Definition 4.1 pipeline derives from (A, Delta) alone.
struct Derived {
  std::vector<Key> window;
  std::vector<Key> pairs;
  Counit eps;
  TensorMultiplier E;
  std::optional<FinVec> E_elem;
  KernelMultiplier F1, F2;
  GeneralizedInverse R1, R2;
  AntipodeMap S1, S2;
  std::optional<LinOp> S;      // S1 as endomorphism, when recoverable
  std::optional<LinOp> S_inv;  // its window inverse
};

/// Quiet derivation; throws MathError at the first impossible step.
Derived derive_core(const Structure& s, const VerifyOptions& opt);

/// Assemble R_k = (T_k restricted to the F-sandwich span)^{-1} after the
/// E-projection, by exact elimination. k is 1 or 2.
GeneralizedInverse assemble_R(int k, const BasedAlgebra& alg, const Coproduct& cp,
                              const TensorMultiplier& E, const KernelMultiplier& F,
                              const std::vector<Key>& pairs, std::string* error);

/// Window inverse of an endomorphism; nullopt when not bijective.
std::optional<LinOp> invert_endo(const LinOp& s, const std::vector<Key>& window);

VerificationReport verify_core(const Structure& s, const VerifyOptions& opt,
                               std::optional<Derived>* out);

/// Appendix A block: Delta_1(1) = E, well-definedness of the extension,
/// (Delta # i)(E) = (i # Delta)(E) = (E # 1)(1 # E), commutation of E12
/// with E23, extended coassociativity on sampled multipliers, and the
/// order relations of the triple idempotents.
VerificationReport appendix_a_checks(const Structure& s, const VerifyOptions& opt,
                                     const Derived& d);

}  // namespace wmha
