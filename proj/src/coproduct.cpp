#include "wmha/coproduct.hpp"

#include <map>

namespace wmha {

namespace {

FinVec bilinear(const std::function<FinVec(const Key&, const Key&)>& rule,
                const FinVec& a, const FinVec& b) {
  FinVec out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) out += rule(ka, kb).scaled(ca * cb);
  }
  return out;
}

}  // namespace

FinVec Coproduct::slice_right(const FinVec& a, const FinVec& b) const {
  return bilinear(slice_right_basis, a, b);
}
FinVec Coproduct::slice_left(const FinVec& a, const FinVec& b) const {
  return bilinear(slice_left_basis, a, b);
}
FinVec Coproduct::rslice_right(const FinVec& a, const FinVec& b) const {
  if (!rslice_right_basis) throw MathError("not regular: Delta(a)(b tensor 1) unavailable");
  return bilinear(*rslice_right_basis, a, b);
}
FinVec Coproduct::rslice_left(const FinVec& a, const FinVec& b) const {
  if (!rslice_left_basis) throw MathError("not regular: (1 tensor a)Delta(b) unavailable");
  return bilinear(*rslice_left_basis, a, b);
}

std::vector<SweedlerTerm> Coproduct::sweedler(
    const Key& a, const std::vector<Key>& window) const {
  if (!sweedler_basis) {
    throw MathError("no Sweedler covering available for this coproduct");
  }
  return (*sweedler_basis)(a, window);
}

TensorMultiplier Coproduct::delta(const BasedAlgebra& alg, const FinVec& a) const {
  const Coproduct* cp = this;
  auto left = [cp, &alg, a](const FinVec& x) {
    // Delta(a)(u tensor v) = (Delta(a)(1 tensor v)) * (u tensor 1)
    FinVec out;
    for (const auto& [k, c] : x.terms()) {
      FinVec s = cp->slice_right(a, FinVec::basis(k.slice(1, 1)));
      for (const auto& [sk, sc] : s.terms()) {
        out += tensor(alg.mul(FinVec::basis(sk.slice(0, 1)),
                              FinVec::basis(k.slice(0, 1))),
                      FinVec::basis(sk.slice(1, 1)))
                   .scaled(c * sc);
      }
    }
    return out;
  };
  auto right = [cp, &alg, a](const FinVec& x) {
    // (u tensor v) Delta(a) = (1 tensor v) ((u tensor 1) Delta(a))
    FinVec out;
    for (const auto& [k, c] : x.terms()) {
      FinVec s = cp->slice_left(FinVec::basis(k.slice(0, 1)), a);
      for (const auto& [sk, sc] : s.terms()) {
        out += tensor(FinVec::basis(sk.slice(0, 1)),
                      alg.mul(FinVec::basis(k.slice(1, 1)),
                              FinVec::basis(sk.slice(1, 1))))
                   .scaled(c * sc);
      }
    }
    return out;
  };
  return TensorMultiplier{left, right};
}

std::function<std::vector<SweedlerTerm>(const Key&, const std::vector<Key>&)>
make_unital_sweedler(const BasedAlgebra& alg, const Coproduct& cp) {
  if (!alg.unit) throw MathError(alg.name + ": unital Sweedler rule needs a unit");
  FinVec unit = *alg.unit;
  auto slice = cp.slice_right_basis;
  return [unit, slice](const Key& a, const std::vector<Key>&) {
    // Delta(a) = Delta(a)(1 tensor 1) lives in A tensor A here.
    std::vector<SweedlerTerm> terms;
    for (const auto& [uk, uc] : unit.terms()) {
      FinVec s = slice(a, uk).scaled(uc);
      for (const auto& [k, c] : s.terms()) {
        terms.emplace_back(c, k.slice(0, 1), k.slice(1, 1));
      }
    }
    return terms;
  };
}

Coproduct cop_of(const Coproduct& cp) {
  Coproduct out;
  // Delta^cop(a) = sigma(Delta(a)); transported multiplier products give
  // sigma(M) x = sigma(M sigma(x)), so every cop slice is a flipped
  // opposite-side slice. Needs the regular slices.
  if (!cp.regular()) throw MathError("cop needs a regular coproduct");
  auto sr = cp.slice_right_basis, sl = cp.slice_left_basis;
  auto rr = *cp.rslice_right_basis, rl = *cp.rslice_left_basis;
  out.slice_right_basis = [rr](const Key& a, const Key& b) {
    return flip(rr(a, b));  // Delta^cop(a)(1#b) = flip(Delta(a)(b#1))
  };
  out.slice_left_basis = [rl](const Key& a, const Key& b) {
    return flip(rl(a, b));  // (a#1)Delta^cop(b) = flip((1#a)Delta(b))
  };
  out.rslice_right_basis = [sr](const Key& a, const Key& b) {
    return flip(sr(a, b));  // Delta^cop(a)(b#1) = flip(Delta(a)(1#b))
  };
  out.rslice_left_basis = [sl](const Key& a, const Key& b) {
    return flip(sl(a, b));  // (1#a)Delta^cop(b) = flip((a#1)Delta(b))
  };
  if (cp.sweedler_basis) {
    auto sw = *cp.sweedler_basis;
    out.sweedler_basis = [sw](const Key& a, const std::vector<Key>& w) {
      auto terms = sw(a, w);
      std::vector<SweedlerTerm> flipped;
      flipped.reserve(terms.size());
      for (const auto& [c, p, q] : terms) flipped.emplace_back(c, q, p);
      return flipped;
    };
  }
  out.declared_star_hom = false;
  return out;
}

Coproduct coproduct_for_opposite(const Coproduct& cp) {
  if (!cp.regular()) throw MathError("opposite transition needs a regular coproduct");
  Coproduct out;
  auto sr = cp.slice_right_basis, sl = cp.slice_left_basis;
  auto rr = *cp.rslice_right_basis, rl = *cp.rslice_left_basis;
  // Over A^op products reverse, so Delta(a) *op (1#b) = (1#b) Delta(a)
  // and so on; the canonical maps rotate T1 <-> T3, T2 <-> T4.
  out.slice_right_basis = [rl](const Key& a, const Key& b) { return rl(b, a); };
  out.slice_left_basis = [rr](const Key& a, const Key& b) { return rr(b, a); };
  out.rslice_right_basis = [sl](const Key& a, const Key& b) { return sl(b, a); };
  out.rslice_left_basis = [sr](const Key& a, const Key& b) { return sr(b, a); };
  out.sweedler_basis = cp.sweedler_basis;
  out.declared_star_hom = false;
  return out;
}

FinVec canonical_map(int k, const Coproduct& cp, const FinVec& x) {
  FinVec out;
  for (const auto& [key, c] : x.terms()) {
    FinVec a = FinVec::basis(key.slice(0, 1));
    FinVec b = FinVec::basis(key.slice(1, 1));
    FinVec img;
    switch (k) {
      case 1:
        img = cp.slice_right(a, b);
        break;
      case 2:
        img = cp.slice_left(a, b);
        break;
      case 3:
        img = cp.rslice_left(b, a);  // (1 tensor b) Delta(a)
        break;
      case 4:
        img = cp.rslice_right(b, a);  // Delta(b)(a tensor 1)
        break;
      default:
        throw MathError("canonical_map: k must be 1..4");
    }
    out += img.scaled(c);
  }
  return out;
}

LinOp canonical_map_op(int k, const Coproduct& cp) {
  return LinOp{[k, &cp](const Key& key) {
    return canonical_map(k, cp, FinVec::basis(key));
  }};
}

VerificationReport check_coassociativity(const Coproduct& cp,
                                         const std::vector<Key>& window) {
  VerificationReport rep;
  auto t1 = [&cp](const Key& k) { return canonical_map(1, cp, FinVec::basis(k)); };
  auto t2 = [&cp](const Key& k) { return canonical_map(2, cp, FinVec::basis(k)); };
  bool ok = true;
  std::string witness;
  for (const auto& a : window) {
    for (const auto& b : window) {
      for (const auto& c : window) {
        FinVec triple = FinVec::basis(Key::concat(Key::concat(a, b), c));
        FinVec lhs = map_legs(map_legs(triple, 1, 2, t1), 0, 2, t2);
        FinVec rhs = map_legs(map_legs(triple, 0, 2, t2), 1, 2, t1);
        if (lhs != rhs) {
          ok = false;
          witness = a.str() + " ⊗ " + b.str() + " ⊗ " + c.str();
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  rep.check("def1.1:coassoc", ok, witness);
  return rep;
}

VerificationReport check_coproduct_hom(const BasedAlgebra& alg, const Coproduct& cp,
                                       const std::vector<Key>& window) {
  VerificationReport rep;
  bool ok = true;
  std::string witness;
  for (const auto& x : window) {
    TensorMultiplier dx = cp.delta(alg, FinVec::basis(x));
    for (const auto& y : window) {
      FinVec xy = alg.mult_basis(x, y);
      for (const auto& b : window) {
        FinVec lhs = cp.slice_right(xy, FinVec::basis(b));
        FinVec rhs = dx.left(cp.slice_right(FinVec::basis(y), FinVec::basis(b)));
        if (lhs != rhs) {
          ok = false;
          witness = x.str() + ", " + y.str() + " against " + b.str();
          break;
        }
        FinVec lhs2 = cp.slice_left(FinVec::basis(b), xy);
        TensorMultiplier dy = cp.delta(alg, FinVec::basis(y));
        FinVec rhs2 = dy.right(cp.slice_left(FinVec::basis(b), FinVec::basis(x)));
        if (lhs2 != rhs2) {
          ok = false;
          witness = x.str() + ", " + y.str() + " against " + b.str();
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  rep.check("coproduct:hom", ok, witness);
  return rep;
}

VerificationReport check_star_hom(const BasedAlgebra& alg, const Coproduct& cp,
                                  const std::vector<Key>& window) {
  VerificationReport rep;
  if (!alg.has_star()) {
    rep.skip("def1.1:star-hom", "no star structure");
    return rep;
  }
  if (!cp.regular()) {
    rep.fail("def1.1:star-hom", "", "star coproduct must be regular");
    return rep;
  }
  BasedAlgebra sq = tensor_square(alg);
  bool ok = true;
  std::string witness;
  for (const auto& a : window) {
    FinVec sa = alg.star_of(FinVec::basis(a));
    for (const auto& b : window) {
      FinVec sb = alg.star_of(FinVec::basis(b));
      // Delta(a*)(1#b) = ((1#b*)Delta(a))*
      FinVec lhs = cp.slice_right(sa, FinVec::basis(b));
      FinVec rhs = sq.star_of(cp.rslice_left(sb, FinVec::basis(a)));
      // (b#1)Delta(a*) = (Delta(a)(b*#1))*
      FinVec lhs2 = cp.slice_left(FinVec::basis(b), sa);
      FinVec rhs2 = sq.star_of(cp.rslice_right(FinVec::basis(a), sb));
      if (lhs != rhs || lhs2 != rhs2) {
        ok = false;
        witness = a.str() + ", " + b.str();
        break;
      }
    }
    if (!ok) break;
  }
  rep.check("def1.1:star-hom", ok, witness);
  return rep;
}

VerificationReport check_full(const Coproduct& cp, const std::vector<Key>& window) {
  VerificationReport rep;
  // Right legs: (omega tensor i)((c tensor 1) Delta(b)) over all window b,c.
  // Left legs:  (i tensor omega)(Delta(b)(1 tensor c)).
  KeyIndex right_idx, left_idx;
  Rref right_span, left_span;
  for (const auto& b : window) {
    for (const auto& c : window) {
      std::map<Key, FinVec> by_first, by_second;
      for (const auto& [k, s] : cp.slice_left(FinVec::basis(c), FinVec::basis(b)).terms()) {
        by_first[k.slice(0, 1)].add(k.slice(1, 1), s);
      }
      for (const auto& [k, s] : cp.slice_right(FinVec::basis(b), FinVec::basis(c)).terms()) {
        by_second[k.slice(1, 1)].add(k.slice(0, 1), s);
      }
      for (const auto& [p, v] : by_first) right_span.add(to_srow(v, right_idx));
      for (const auto& [q, v] : by_second) left_span.add(to_srow(v, left_idx));
    }
  }
  bool right_ok = true, left_ok = true;
  std::string rw, lw;
  for (const auto& k : window) {
    if (right_ok && !right_span.reduce(to_srow(FinVec::basis(k), right_idx))) {
      right_ok = false;
      rw = k.str();
    }
    if (left_ok && !left_span.reduce(to_srow(FinVec::basis(k), left_idx))) {
      left_ok = false;
      lw = k.str();
    }
  }
  rep.check("def1.10:full:right-leg", right_ok, rw,
            "span rank " + std::to_string(right_span.rank()));
  rep.check("def1.10:full:left-leg", left_ok, lw,
            "span rank " + std::to_string(left_span.rank()));
  return rep;
}

VerificationReport check_slice_nondegenerate(const Coproduct& cp,
                                             const std::vector<Key>& window) {
  VerificationReport rep;
  bool ok = true;
  std::string witness;
  for (const auto& b : window) {
    bool all_zero = true;
    for (const auto& a : window) {
      if (!cp.slice_right(FinVec::basis(a), FinVec::basis(b)).is_zero()) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) {
      ok = false;
      witness = "right slot " + b.str();
      break;
    }
  }
  for (const auto& c : window) {
    if (!ok) break;
    bool all_zero = true;
    for (const auto& a : window) {
      if (!cp.slice_left(FinVec::basis(c), FinVec::basis(a)).is_zero()) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) {
      ok = false;
      witness = "left slot " + c.str();
      break;
    }
  }
  rep.check("coproduct:slice-nondegenerate", ok, witness);
  return rep;
}

CounitResult solve_counit(const BasedAlgebra& alg, const Coproduct& cp,
                          const std::vector<Key>& window) {
  // Unknowns eps_k for k in the window; both counit laws jointly, every
  // equation stacked over its (a, b, law) block. Pairs whose slice legs
  // leave the window are outside the unknowns and are skipped (window
  // discipline for lazy structures; finite structures never skip).
  std::map<Key, std::size_t> pos;
  for (std::size_t i = 0; i < window.size(); ++i) pos[window[i]] = i;

  std::vector<FinVec> generators(window.size());
  FinVec target;
  int block = 0;
  for (const auto& a : window) {
    for (const auto& b : window) {
      for (int law = 1; law <= 2; ++law) {
        FinVec s = law == 1 ? cp.slice_right(FinVec::basis(a), FinVec::basis(b))
                            : cp.slice_left(FinVec::basis(a), FinVec::basis(b));
        bool inside = true;
        for (const auto& [k, c] : s.terms()) {
          if (!pos.count(law == 1 ? k.slice(0, 1) : k.slice(1, 1))) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        Atom tag = "#" + std::to_string(block);
        for (const auto& [k, c] : s.terms()) {
          Key unknown = law == 1 ? k.slice(0, 1) : k.slice(1, 1);
          Key rest = law == 1 ? k.slice(1, 1) : k.slice(0, 1);
          generators[pos[unknown]].add(Key::concat(rest, Key(tag)), c);
        }
        FinVec ab = law == 1 ? alg.mul(FinVec::basis(a), FinVec::basis(b))
                             : alg.mul(FinVec::basis(a), FinVec::basis(b));
        for (const auto& [k, c] : ab.terms()) {
          target.add(Key::concat(k, Key(tag)), c);
        }
        ++block;
      }
    }
  }

  auto sol = span_solve_system(generators, target);
  CounitResult res;
  if (!sol.ok()) {
    res.status = CounitResult::Status::NoSolution;
    res.certificate = sol.certificate;
    return res;
  }
  if (sol.nullity > 0) {
    res.status = CounitResult::Status::NotUnique;
    res.nullity = sol.nullity;
    return res;
  }
  res.status = CounitResult::Status::Unique;
  std::map<Key, Scalar> values;
  for (std::size_t i = 0; i < window.size(); ++i) values[window[i]] = sol.coeffs[i];
  res.counit = Counit{[values](const Key& k) {
    auto it = values.find(k);
    if (it == values.end()) throw MathError("counit: key outside solved window: " + k.str());
    return it->second;
  }};
  return res;
}

VerificationReport check_counit_laws(const BasedAlgebra& alg, const Coproduct& cp,
                                     const Counit& eps,
                                     const std::vector<Key>& window) {
  VerificationReport rep;
  bool ok = true;
  std::string witness;
  for (const auto& a : window) {
    for (const auto& b : window) {
      FinVec ab = alg.mult_basis(a, b);
      FinVec lhs1, lhs2;
      for (const auto& [k, c] : cp.slice_right(FinVec::basis(a), FinVec::basis(b)).terms()) {
        lhs1.add(k.slice(1, 1), c * eps.on_basis(k.slice(0, 1)));
      }
      for (const auto& [k, c] : cp.slice_left(FinVec::basis(a), FinVec::basis(b)).terms()) {
        lhs2.add(k.slice(0, 1), c * eps.on_basis(k.slice(1, 1)));
      }
      if (lhs1 != ab || lhs2 != ab) {
        ok = false;
        witness = a.str() + ", " + b.str();
        break;
      }
    }
    if (!ok) break;
  }
  rep.check("def1.8:counit-laws", ok, witness);
  return rep;
}

Scalar DualPairing::apply_tensor(const FinVec& x, const FinVec& y) const {
  Scalar s;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      s += cx * cy * on_basis(kx.slice(0, 1), ky.slice(0, 1)) *
           on_basis(kx.slice(1, 1), ky.slice(1, 1));
    }
  }
  return s;
}

namespace {

void pairing_adjointness(VerificationReport& rep, const DualPairing& pr,
                         const Coproduct& cpA, const Coproduct& cpB,
                         const std::vector<std::pair<FinVec, FinVec>>& a_tensors,
                         const std::vector<std::pair<FinVec, FinVec>>& b_tensors) {
  bool both_regular = cpA.regular() && cpB.regular();
  bool t12_ok = true, t21_ok = true, t3_ok = true, t4_ok = true;
  std::string w12, w21, w3, w4;
  for (const auto& [a, a2] : a_tensors) {
    FinVec aa = tensor(a, a2);
    FinVec t1a = canonical_map(1, cpA, aa);
    FinVec t2a = canonical_map(2, cpA, aa);
    FinVec t3a, t4a;
    if (both_regular) {
      t3a = canonical_map(3, cpA, aa);
      t4a = canonical_map(4, cpA, aa);
    }
    for (const auto& [b, b2] : b_tensors) {
      FinVec bb = tensor(b, b2);
      if (t12_ok && pr.apply_tensor(t1a, bb) !=
                        pr.apply_tensor(aa, canonical_map(2, cpB, bb))) {
        t12_ok = false;
        w12 = aa.str() + " | " + bb.str();
      }
      if (t21_ok && pr.apply_tensor(t2a, bb) !=
                        pr.apply_tensor(aa, canonical_map(1, cpB, bb))) {
        t21_ok = false;
        w21 = aa.str() + " | " + bb.str();
      }
      if (both_regular) {
        FinVec flipped = tensor(b2, b);
        if (t3_ok && pr.apply_tensor(t3a, bb) !=
                         pr.apply_tensor(tensor(a2, a), canonical_map(3, cpB, flipped))) {
          t3_ok = false;
          w3 = aa.str() + " | " + bb.str();
        }
        if (t4_ok && pr.apply_tensor(t4a, bb) !=
                         pr.apply_tensor(tensor(a2, a), canonical_map(4, cpB, flipped))) {
          t4_ok = false;
          w4 = aa.str() + " | " + bb.str();
        }
      }
    }
  }
  rep.check("def1.5:adjoint:T1-T2", t12_ok, w12);
  rep.check("def1.5:adjoint:T2-T1", t21_ok, w21);
  if (both_regular) {
    rep.check("def1.5:adjoint:T3-flip", t3_ok, w3);
    rep.check("def1.5:adjoint:T4-flip", t4_ok, w4);
  } else {
    rep.skip("def1.5:adjoint:T3-flip", "not regular");
    rep.skip("def1.5:adjoint:T4-flip", "not regular");
  }
}

}  // namespace

VerificationReport check_pairing(const DualPairing& pr, const Coproduct& cpA,
                                 const Coproduct& cpB,
                                 const std::vector<Key>& windowA,
                                 const std::vector<Key>& windowB) {
  VerificationReport rep;
  // Non-degeneracy of the window pairing matrix: trivial kernels on both
  // sides, i.e. rows and columns are each linearly independent.
  {
    std::vector<FinVec> rows, cols;
    for (const auto& a : windowA) {
      FinVec row;
      for (const auto& b : windowB) row.add(b, pr.on_basis(a, b));
      rows.push_back(row);
    }
    for (const auto& b : windowB) {
      FinVec col;
      for (const auto& a : windowA) col.add(a, pr.on_basis(a, b));
      cols.push_back(col);
    }
    bool ok = span_rank(rows) == windowA.size() && span_rank(cols) == windowB.size();
    rep.check("def1.5:nondegenerate", ok, "",
              "window " + std::to_string(windowA.size()) + "x" +
                  std::to_string(windowB.size()));
  }
  std::vector<std::pair<FinVec, FinVec>> a_tensors, b_tensors;
  for (const auto& a : windowA) {
    for (const auto& a2 : windowA) {
      a_tensors.emplace_back(FinVec::basis(a), FinVec::basis(a2));
    }
  }
  for (const auto& b : windowB) {
    for (const auto& b2 : windowB) {
      b_tensors.emplace_back(FinVec::basis(b), FinVec::basis(b2));
    }
  }
  pairing_adjointness(rep, pr, cpA, cpB, a_tensors, b_tensors);
  return rep;
}

VerificationReport check_pairing_random(const DualPairing& pr, const Coproduct& cpA,
                                        const Coproduct& cpB,
                                        const std::vector<Key>& windowA,
                                        const std::vector<Key>& windowB,
                                        SeededRng& rng, int trials) {
  VerificationReport rep;
  std::vector<std::pair<FinVec, FinVec>> a_tensors, b_tensors;
  for (int t = 0; t < trials; ++t) {
    a_tensors.emplace_back(rng.element(windowA), rng.element(windowA));
    b_tensors.emplace_back(rng.element(windowB), rng.element(windowB));
  }
  // Evaluate law-by-law on matching random quadruple draws rather than the
  // full product (trials x trials would be quadratic).
  bool t12_ok = true, t21_ok = true, t3_ok = true, t4_ok = true;
  std::string w12, w21, w3, w4;
  bool both_regular = cpA.regular() && cpB.regular();
  for (int t = 0; t < trials; ++t) {
    FinVec aa = tensor(a_tensors[t].first, a_tensors[t].second);
    FinVec bb = tensor(b_tensors[t].first, b_tensors[t].second);
    if (t12_ok && pr.apply_tensor(canonical_map(1, cpA, aa), bb) !=
                      pr.apply_tensor(aa, canonical_map(2, cpB, bb))) {
      t12_ok = false;
      w12 = "trial " + std::to_string(t);
    }
    if (t21_ok && pr.apply_tensor(canonical_map(2, cpA, aa), bb) !=
                      pr.apply_tensor(aa, canonical_map(1, cpB, bb))) {
      t21_ok = false;
      w21 = "trial " + std::to_string(t);
    }
    if (both_regular) {
      FinVec aa_f = tensor(a_tensors[t].second, a_tensors[t].first);
      FinVec bb_f = tensor(b_tensors[t].second, b_tensors[t].first);
      if (t3_ok && pr.apply_tensor(canonical_map(3, cpA, aa), bb) !=
                       pr.apply_tensor(aa_f, canonical_map(3, cpB, bb_f))) {
        t3_ok = false;
        w3 = "trial " + std::to_string(t);
      }
      if (t4_ok && pr.apply_tensor(canonical_map(4, cpA, aa), bb) !=
                       pr.apply_tensor(aa_f, canonical_map(4, cpB, bb_f))) {
        t4_ok = false;
        w4 = "trial " + std::to_string(t);
      }
    }
  }
  rep.check("def1.5:adjoint:T1-T2", t12_ok, w12);
  rep.check("def1.5:adjoint:T2-T1", t21_ok, w21);
  if (both_regular) {
    rep.check("def1.5:adjoint:T3-flip", t3_ok, w3);
    rep.check("def1.5:adjoint:T4-flip", t4_ok, w4);
  }
  return rep;
}

}  // namespace wmha
