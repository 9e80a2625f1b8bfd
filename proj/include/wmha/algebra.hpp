#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wmha/basis.hpp"
#include "wmha/report.hpp"
#include "wmha/solve.hpp"

namespace wmha {

/// A linear map given by its rule on basis keys, extended linearly.
struct LinOp {
  std::function<FinVec(const Key&)> rule;

  FinVec apply(const FinVec& v) const {
    FinVec out;
    for (const auto& [k, c] : v.terms()) out += rule(k).scaled(c);
    return out;
  }
  FinVec operator()(const FinVec& v) const { return apply(v); }
};

LinOp compose(const LinOp& f, const LinOp& g);  // f after g

/// Dense realization of a LinOp over an explicit finite basis window,
/// for oracle mode: one image column per domain key.
struct WindowMatrix {
  std::vector<Key> domain;
  std::vector<FinVec> columns;
};

WindowMatrix realize(const LinOp& op, const std::vector<Key>& window);
/// Exhaustive rule/matrix agreement over the matrix window.
bool agrees(const LinOp& op, const WindowMatrix& m);

/// An algebra with a distinguished basis and computable structure
/// constants. Elements are finite-support combinations of basis keys.
struct BasedAlgebra {
  std::string name;
  bool finite = true;
  /// Basis enumeration; lazy algebras interpret the argument as window size.
  std::function<std::vector<Key>(int)> basis_fn;
  /// Structure constants: product of two basis elements.
  std::function<FinVec(const Key&, const Key&)> mult_basis;
  /// Optional conjugate-linear involution (applied to whole elements).
  std::optional<std::function<FinVec(const FinVec&)>> star;
  /// Unit element when the algebra is unital.
  std::optional<FinVec> unit;
  /// u with u*x = x = x*u for every x supported in the given key set
  /// (local units; used to cover Sweedler legs on lazy structures).
  std::optional<std::function<FinVec(const std::vector<Key>&)>> local_unit;

  std::vector<Key> basis(int window = 0) const { return basis_fn(window); }
  FinVec mul(const FinVec& a, const FinVec& b) const;
  FinVec star_of(const FinVec& a) const;
  bool has_star() const { return star.has_value(); }
  /// unit if unital, otherwise a local unit covering `support`.
  FinVec covering_unit(const std::vector<Key>& support) const;
};

/// A^op: same basis, product reversed; star and units carry over.
BasedAlgebra opposite(const BasedAlgebra& a);
/// A tensor A with pair keys and slot-wise operations.
BasedAlgebra tensor_square(const BasedAlgebra& a);
/// A tensor A tensor A with triple keys.
BasedAlgebra tensor_cube(const BasedAlgebra& a);

/// A two-sided multiplier, represented by its action maps only. This is
/// the one representation that works for unital and non-unital algebras
/// alike. A multiplier of the tensor square is the same struct over pair
/// keys (TensorMultiplier).
struct Multiplier {
  std::function<FinVec(const FinVec&)> left;   // x -> m*x
  std::function<FinVec(const FinVec&)> right;  // x -> x*m
};
using TensorMultiplier = Multiplier;

Multiplier from_element(const BasedAlgebra& a, const FinVec& m);
Multiplier identity_multiplier();
/// m*n as composition of actions.
Multiplier multiplier_product(const Multiplier& m, const Multiplier& n);
/// The unique element with the same actions (finite non-degenerate case);
/// uses the unit when present, otherwise solves through the left regular
/// representation. Throws MathError when no element matches.
FinVec element_of(const BasedAlgebra& a, const Multiplier& m,
                  const std::vector<Key>& window);

/// Interchange and module laws for a multiplier over a window:
/// (x*m)*y = x*(m*y), m*(xy) = (m*x)y, (xy)*m = x(y*m).
bool multiplier_laws_hold(const BasedAlgebra& a, const Multiplier& m,
                          const std::vector<Key>& window, std::string* witness);

/// A one-sided kernel multiplier: only the sandwich values
/// (a tensor 1) F (1 tensor b) are intrinsic. A full action pair is
/// attached when one exists (closed-form families, solved finite case).
struct KernelMultiplier {
  std::function<FinVec(const FinVec&, const FinVec&)> sandwich;
  std::optional<Multiplier> action;  // realization in M(A tensor A)
  std::optional<FinVec> element;     // finite unital case
};

/// Associativity, non-degeneracy, idempotency (A^2 = A) and star laws
/// over the window; exact and exhaustive.
VerificationReport check_algebra(const BasedAlgebra& a,
                                 const std::vector<Key>& window);

}  // namespace wmha
