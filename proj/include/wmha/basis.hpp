#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wmha/scalar.hpp"

namespace wmha {

/// An opaque element token (groupoid element, algebra basis label).
using Atom = std::string;

/// A basis index: an ordered tuple of atoms. Arity 1 indexes A, arity 2
/// indexes A⊗A, arity 3 indexes A⊗A⊗A. Tensoring concatenates tuples.
class Key {
 public:
  Key() = default;
  explicit Key(Atom a) : parts_{std::move(a)} {}
  Key(Atom a, Atom b) : parts_{std::move(a), std::move(b)} {}
  Key(Atom a, Atom b, Atom c) : parts_{std::move(a), std::move(b), std::move(c)} {}
  explicit Key(std::vector<Atom> parts) : parts_(std::move(parts)) {}

  static Key concat(const Key& x, const Key& y) {
    std::vector<Atom> p = x.parts_;
    p.insert(p.end(), y.parts_.begin(), y.parts_.end());
    return Key(std::move(p));
  }

  std::size_t arity() const { return parts_.size(); }
  const Atom& at(std::size_t i) const { return parts_.at(i); }
  const std::vector<Atom>& parts() const& { return parts_; }
  std::vector<Atom> parts() const&& { return std::move(parts_); }

  /// Sub-tuple [from, from+len).
  Key slice(std::size_t from, std::size_t len) const {
    return Key(std::vector<Atom>(parts_.begin() + from, parts_.begin() + from + len));
  }

  Key permuted(const std::vector<std::size_t>& perm) const {
    std::vector<Atom> p(parts_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) p[i] = parts_[perm[i]];
    return Key(std::move(p));
  }

  bool operator<(const Key& o) const { return parts_ < o.parts_; }
  bool operator==(const Key& o) const { return parts_ == o.parts_; }
  bool operator!=(const Key& o) const { return !(*this == o); }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += "⊗";
      out += parts_[i];
    }
    return out;
  }

 private:
  std::vector<Atom> parts_;
};

/// A finite-support vector over the Scalar field: canonical sparse form,
/// no stored entry is zero, equality is exact.
class FinVec {
 public:
  FinVec() = default;

  static FinVec basis(const Key& k) { return basis(k, Scalar(1)); }
  static FinVec basis(const Key& k, const Scalar& c) {
    FinVec v;
    v.add(k, c);
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  const std::map<Key, Scalar>& terms() const& { return terms_; }
  // By value on temporaries, so `for (... : f(x).terms())` stays valid.
  std::map<Key, Scalar> terms() const&& { return std::move(terms_); }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  FinVec& add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return *this;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  FinVec& operator+=(const FinVec& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  FinVec& operator-=(const FinVec& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  FinVec operator+(const FinVec& o) const {
    FinVec r = *this;
    r += o;
    return r;
  }
  FinVec operator-(const FinVec& o) const {
    FinVec r = *this;
    r -= o;
    return r;
  }
  FinVec scaled(const Scalar& c) const {
    FinVec r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
  }

  bool operator==(const FinVec& o) const { return terms_ == o.terms_; }
  bool operator!=(const FinVec& o) const { return !(*this == o); }

  /// Entry-wise complex conjugation of the coefficients.
  FinVec conj_coeffs() const {
    FinVec r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v.conj());
    return r;
  }

  std::vector<Key> support() const {
    std::vector<Key> ks;
    ks.reserve(terms_.size());
    for (const auto& [k, v] : terms_) ks.push_back(k);
    return ks;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      if (!first) out += " + ";
      first = false;
      if (v.is_one()) {
        out += "[" + k.str() + "]";
      } else {
        out += "(" + v.str() + ")[" + k.str() + "]";
      }
    }
    return out;
  }

 private:
  std::map<Key, Scalar> terms_;
};

/// Tensor product: bilinear, keys concatenate.
FinVec tensor(const FinVec& v, const FinVec& w);

/// Apply a linear basis rule to the legs [pos, pos+len) of every key,
/// leaving the surrounding legs in place.
FinVec map_legs(const FinVec& v, std::size_t pos, std::size_t len,
                const std::function<FinVec(const Key&)>& op);

/// Permute tensor legs of every key.
FinVec permute_legs(const FinVec& v, const std::vector<std::size_t>& perm);

/// The flip map on A⊗A.
inline FinVec flip(const FinVec& v) { return permute_legs(v, {1, 0}); }

}  // namespace wmha
