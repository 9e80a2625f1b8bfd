#pragma once

// Brute-force oracles for the slice and pairing computations, independent
// of the closed-form rules in the library: everything here is evaluated
// by exhaustive scans over groupoid tables.

#include "wmha/groupoid.hpp"
#include "wmha/basis.hpp"

namespace oracles {

using namespace wmha;

// Pointwise-function coproduct slices: Delta(f)(p,q) = f(pq) when pq is
// defined, scanned over the whole window.
inline FinVec kg_slice_right(const Groupoid& g, const std::vector<Atom>& window,
                             const FinVec& f, const FinVec& b) {
  FinVec out;
  for (const auto& p : window) {
    for (const auto& q : window) {
      auto pq = g.try_compose(p, q);
      if (!pq) continue;
      Scalar c = f.coeff(Key(*pq)) * b.coeff(Key(q));
      out.add(Key(p, q), c);
    }
  }
  return out;
}

inline FinVec kg_slice_left(const Groupoid& g, const std::vector<Atom>& window,
                            const FinVec& a, const FinVec& f) {
  FinVec out;
  for (const auto& p : window) {
    for (const auto& q : window) {
      auto pq = g.try_compose(p, q);
      if (!pq) continue;
      Scalar c = a.coeff(Key(p)) * f.coeff(Key(*pq));
      out.add(Key(p, q), c);
    }
  }
  return out;
}

// Convolution product on CG from the table.
inline FinVec cg_mul(const Groupoid& g, const FinVec& x, const FinVec& y) {
  FinVec out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      auto pq = g.try_compose(kx.at(0), ky.at(0));
      if (pq) out.add(Key(*pq), cx * cy);
    }
  }
  return out;
}

// CG slices: Delta(l_p) = l_p # l_p extended linearly, then multiplied.
inline FinVec cg_slice_right(const Groupoid& g, const FinVec& a, const FinVec& b) {
  FinVec out;
  for (const auto& [ka, ca] : a.terms()) {
    FinVec second = cg_mul(g, FinVec::basis(ka), b);
    for (const auto& [ks, cs] : second.terms()) {
      out.add(Key::concat(ka, ks), ca * cs);
    }
  }
  return out;
}

inline FinVec cg_slice_left(const Groupoid& g, const FinVec& a, const FinVec& b) {
  FinVec out;
  for (const auto& [kb, cb] : b.terms()) {
    FinVec first = cg_mul(g, a, FinVec::basis(kb));
    for (const auto& [kf, cf] : first.terms()) {
      out.add(Key::concat(kf, kb), cb * cf);
    }
  }
  return out;
}

// Evaluation pairing <f, l_p> = f(p) on tensor squares.
inline Scalar eval_pairing_tensor(const FinVec& x, const FinVec& y) {
  Scalar s;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      if (kx == ky) s += cx * cy;
    }
  }
  return s;
}

}  // namespace oracles
