#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wmha/basis.hpp"
#include "wmha/report.hpp"

namespace wmha {

/// A groupoid: partial product, everywhere-defined source/target/inverse.
/// Finite groupoids enumerate all elements; lazily infinite ones enumerate
/// a finite window (every algebra-level computation only ever touches
/// finite supports, so a window is all that is needed).
class Groupoid {
 public:
  bool finite() const { return finite_; }
  const std::string& name() const { return name_; }

  /// All elements (finite case) or the elements of the size-`window`
  /// window (lazy case; `window` counts base points).
  std::vector<Atom> elements(int window = 0) const { return elements_(window); }
  std::vector<Atom> units(int window = 0) const;

  Atom source(const Atom& p) const { return source_(p); }
  Atom target(const Atom& p) const { return target_(p); }
  Atom inverse(const Atom& p) const { return inverse_(p); }
  bool is_unit(const Atom& p) const { return source(p) == p && target(p) == p; }

  /// Defined exactly when source(p) = target(q).
  bool composable(const Atom& p, const Atom& q) const {
    return source_(p) == target_(q);
  }
  Atom compose(const Atom& p, const Atom& q) const;

  /// Raw partial product as stored/derived; empty when undefined.
  std::optional<Atom> try_compose(const Atom& p, const Atom& q) const {
    return compose_(p, q);
  }

  // Assembly (used by the builders).
  Groupoid(std::string name, bool finite,
           std::function<std::vector<Atom>(int)> elements,
           std::function<Atom(const Atom&)> source,
           std::function<Atom(const Atom&)> target,
           std::function<Atom(const Atom&)> inverse,
           std::function<std::optional<Atom>(const Atom&, const Atom&)> compose)
      : name_(std::move(name)),
        finite_(finite),
        elements_(std::move(elements)),
        source_(std::move(source)),
        target_(std::move(target)),
        inverse_(std::move(inverse)),
        compose_(std::move(compose)) {}

 private:
  std::string name_;
  bool finite_;
  std::function<std::vector<Atom>(int)> elements_;
  std::function<Atom(const Atom&)> source_;
  std::function<Atom(const Atom&)> target_;
  std::function<Atom(const Atom&)> inverse_;
  std::function<std::optional<Atom>(const Atom&, const Atom&)> compose_;
};

/// Build a groupoid from a GroupoidSpec JSON value. Kinds: pair,
/// equivalence, action, group, table, disjoint_union. Throws SpecError on
/// malformed payloads (unknown keys rejected) and on payloads violating
/// the kind's preconditions (e.g. an action that is not a left action).
Groupoid build_groupoid(const nlohmann::json& spec);

/// Exhaustively check every groupoid axiom over the window. Failures are
/// report rows with witnesses, not errors.
VerificationReport validate_groupoid(const Groupoid& g,
                                     const std::vector<Atom>& window);

/// Support closure used to pick evaluation windows for lazy structures:
/// closes `seed` under inverse, source, target and `steps` rounds of
/// pairwise products.
std::vector<Atom> support_closure(const Groupoid& g, std::vector<Atom> seed,
                                  int steps = 3);

}  // namespace wmha
