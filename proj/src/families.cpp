#include "wmha/families.hpp"

#include <memory>
#include <set>

#include "wmha/wmha_internal.hpp"

namespace wmha {

namespace {

// Window atoms for the family Sweedler rules: close the hinted supports
// under inverse/source/target and a couple of product rounds so that all
// covered legs are enumerated.
std::vector<Atom> closure_atoms(const Groupoid& g, const std::vector<Key>& hint) {
  std::vector<Atom> seed;
  seed.reserve(hint.size());
  for (const auto& k : hint) {
    for (const auto& a : k.parts()) seed.push_back(a);
  }
  return support_closure(g, seed, 3);
}

}  // namespace

Structure build_KG(const Groupoid& g) {
  auto rep = validate_groupoid(g, g.elements(g.finite() ? 0 : 3));
  if (!rep.all_passed()) {
    throw SpecError("invalid groupoid for K(G): " + rep.to_text());
  }
  auto gp = std::make_shared<Groupoid>(g);

  Structure s;
  s.name = "K(" + g.name() + ")";
  BasedAlgebra& A = s.alg;
  A.name = s.name;
  A.finite = g.finite();
  A.basis_fn = [gp](int w) {
    std::vector<Key> out;
    for (const auto& e : gp->elements(w)) out.push_back(Key(e));
    return out;
  };
  A.mult_basis = [](const Key& x, const Key& y) {
    return x == y ? FinVec::basis(x) : FinVec();
  };
  A.star = [](const FinVec& v) { return v.conj_coeffs(); };
  if (g.finite()) {
    FinVec unit;
    for (const auto& e : g.elements()) unit.add(Key(e), Scalar(1));
    A.unit = unit;
  }
  A.local_unit = [](const std::vector<Key>& support) {
    FinVec u;
    for (const auto& k : support) u.add(k, Scalar(1));
    return u;
  };

  Coproduct& cp = s.cp;
  cp.declared_star_hom = true;
  cp.slice_right_basis = [gp](const Key& a, const Key& b) {
    // Delta(d_a)(1 # d_b) = d_{a b^{-1}} # d_b when s(a) = s(b)
    const Atom &pa = a.at(0), &pb = b.at(0);
    if (gp->source(pa) != gp->source(pb)) return FinVec();
    return FinVec::basis(Key(gp->compose(pa, gp->inverse(pb)), pb));
  };
  cp.slice_left_basis = [gp](const Key& a, const Key& b) {
    // (d_a # 1) Delta(d_b) = d_a # d_{a^{-1} b} when t(a) = t(b)
    const Atom &pa = a.at(0), &pb = b.at(0);
    if (gp->target(pa) != gp->target(pb)) return FinVec();
    return FinVec::basis(Key(pa, gp->compose(gp->inverse(pa), pb)));
  };
  cp.rslice_right_basis = [gp](const Key& a, const Key& b) {
    // Delta(d_a)(d_b # 1) = d_b # d_{b^{-1} a} when t(a) = t(b)
    const Atom &pa = a.at(0), &pb = b.at(0);
    if (gp->target(pa) != gp->target(pb)) return FinVec();
    return FinVec::basis(Key(pb, gp->compose(gp->inverse(pb), pa)));
  };
  cp.rslice_left_basis = [gp](const Key& a, const Key& b) {
    // (1 # d_a) Delta(d_b) = d_{b a^{-1}} # d_a when s(a) = s(b)
    const Atom &pa = a.at(0), &pb = b.at(0);
    if (gp->source(pa) != gp->source(pb)) return FinVec();
    return FinVec::basis(Key(gp->compose(pb, gp->inverse(pa)), pa));
  };
  cp.sweedler_basis = [gp](const Key& a, const std::vector<Key>& hint) {
    // Delta(d_g) = sum over factorizations g = p q; enumerate both legs
    // against the closed window.
    const Atom& ga = a.at(0);
    std::vector<SweedlerTerm> terms;
    std::set<Atom> seen;
    auto emit = [&](const Atom& p, const Atom& q) {
      if (seen.insert(q).second) terms.emplace_back(Scalar(1), Key(p), Key(q));
    };
    if (gp->finite()) {
      for (const auto& q : gp->elements()) {
        if (gp->source(q) == gp->source(ga)) {
          emit(gp->compose(ga, gp->inverse(q)), q);
        }
      }
    } else {
      for (const auto& w : closure_atoms(*gp, hint)) {
        if (gp->source(w) == gp->source(ga)) {
          emit(gp->compose(ga, gp->inverse(w)), w);
        }
        if (gp->target(w) == gp->target(ga)) {
          emit(w, gp->compose(gp->inverse(w), ga));
        }
      }
    }
    return terms;
  };

  s.counit = Counit{[gp](const Key& k) {
    return gp->is_unit(k.at(0)) ? Scalar(1) : Scalar(0);
  }};
  s.antipode = LinOp{[gp](const Key& k) {
    return FinVec::basis(Key(gp->inverse(k.at(0))));
  }};
  s.antipode_inv = s.antipode;  // the groupoid inverse is involutive

  // E, F1, F2 act by multiplication with source/target indicator functions.
  auto indicator = [gp](int which) {
    return [gp, which](const FinVec& x) {
      FinVec out;
      for (const auto& [k, c] : x.terms()) {
        const Atom &p = k.at(0), &q = k.at(1);
        bool keep = which == 0   ? gp->source(p) == gp->target(q)
                    : which == 1 ? gp->source(p) == gp->source(q)
                                 : gp->target(p) == gp->target(q);
        if (keep) out.add(k, c);
      }
      return out;
    };
  };
  s.E = TensorMultiplier{indicator(0), indicator(0)};
  if (g.finite()) {
    FinVec e;
    for (const auto& p : g.elements()) {
      for (const auto& q : g.elements()) {
        if (g.source(p) == g.target(q)) e.add(Key(p, q), Scalar(1));
      }
    }
    s.E_element = e;
  }
  KernelMultiplier f1, f2;
  f1.action = Multiplier{indicator(1), indicator(1)};
  f2.action = Multiplier{indicator(2), indicator(2)};
  auto sandwich_of = [gp](int which) {
    return [gp, which](const FinVec& a, const FinVec& b) {
      FinVec out;
      for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
          const Atom &p = ka.at(0), &q = kb.at(0);
          bool keep = which == 1 ? gp->source(p) == gp->source(q)
                                 : gp->target(p) == gp->target(q);
          if (keep) out.add(Key::concat(ka, kb), ca * cb);
        }
      }
      return out;
    };
  };
  f1.sandwich = sandwich_of(1);
  f2.sandwich = sandwich_of(2);
  if (g.finite()) {
    FinVec e1, e2;
    for (const auto& p : g.elements()) {
      for (const auto& q : g.elements()) {
        if (g.source(p) == g.source(q)) e1.add(Key(p, q), Scalar(1));
        if (g.target(p) == g.target(q)) e2.add(Key(p, q), Scalar(1));
      }
    }
    f1.element = e1;
    f2.element = e2;
  }
  s.F1 = f1;
  s.F2 = f2;
  // S is involutive, so F3 = F1 and F4 = F2.
  s.F3 = f1;
  s.F4 = f2;
  return s;
}

Structure build_CG(const Groupoid& g) {
  auto rep = validate_groupoid(g, g.elements(g.finite() ? 0 : 3));
  if (!rep.all_passed()) {
    throw SpecError("invalid groupoid for CG: " + rep.to_text());
  }
  auto gp = std::make_shared<Groupoid>(g);

  Structure s;
  s.name = "C[" + g.name() + "]";
  BasedAlgebra& A = s.alg;
  A.name = s.name;
  A.finite = g.finite();
  A.basis_fn = [gp](int w) {
    std::vector<Key> out;
    for (const auto& e : gp->elements(w)) out.push_back(Key(e));
    return out;
  };
  A.mult_basis = [gp](const Key& x, const Key& y) {
    const Atom &p = x.at(0), &q = y.at(0);
    if (!gp->composable(p, q)) return FinVec();
    return FinVec::basis(Key(gp->compose(p, q)));
  };
  A.star = [gp](const FinVec& v) {
    FinVec out;
    for (const auto& [k, c] : v.terms()) {
      out.add(Key(gp->inverse(k.at(0))), c.conj());
    }
    return out;
  };
  if (g.finite()) {
    FinVec unit;
    for (const auto& e : g.units()) unit.add(Key(e), Scalar(1));
    A.unit = unit;
  }
  A.local_unit = [gp](const std::vector<Key>& support) {
    std::set<Atom> units;
    for (const auto& k : support) {
      units.insert(gp->source(k.at(0)));
      units.insert(gp->target(k.at(0)));
    }
    FinVec u;
    for (const auto& e : units) u.add(Key(e), Scalar(1));
    return u;
  };

  Coproduct& cp = s.cp;
  cp.declared_star_hom = true;
  cp.slice_right_basis = [gp](const Key& a, const Key& b) {
    const Atom &p = a.at(0), &q = b.at(0);
    if (!gp->composable(p, q)) return FinVec();
    return FinVec::basis(Key(p, gp->compose(p, q)));
  };
  cp.slice_left_basis = [gp](const Key& a, const Key& b) {
    const Atom &p = a.at(0), &q = b.at(0);
    if (!gp->composable(p, q)) return FinVec();
    return FinVec::basis(Key(gp->compose(p, q), q));
  };
  cp.rslice_right_basis = [gp](const Key& a, const Key& b) {
    const Atom &p = a.at(0), &q = b.at(0);
    if (!gp->composable(p, q)) return FinVec();
    return FinVec::basis(Key(gp->compose(p, q), p));
  };
  cp.rslice_left_basis = [gp](const Key& a, const Key& b) {
    const Atom &p = a.at(0), &q = b.at(0);
    if (!gp->composable(p, q)) return FinVec();
    return FinVec::basis(Key(q, gp->compose(p, q)));
  };
  cp.sweedler_basis = [](const Key& a, const std::vector<Key>&) {
    // Delta(l_p) = l_p # l_p exactly; no covering needed.
    return std::vector<SweedlerTerm>{{Scalar(1), a, a}};
  };

  s.counit = Counit{[](const Key&) { return Scalar(1); }};
  s.antipode = LinOp{[gp](const Key& k) {
    return FinVec::basis(Key(gp->inverse(k.at(0))));
  }};
  s.antipode_inv = s.antipode;

  // E = sum_e l_e # l_e acts as the target (left) / source (right) match
  // indicator; same multiplier for F1 and F2.
  auto e_left = [gp](const FinVec& x) {
    FinVec out;
    for (const auto& [k, c] : x.terms()) {
      if (gp->target(k.at(0)) == gp->target(k.at(1))) out.add(k, c);
    }
    return out;
  };
  auto e_right = [gp](const FinVec& x) {
    FinVec out;
    for (const auto& [k, c] : x.terms()) {
      if (gp->source(k.at(0)) == gp->source(k.at(1))) out.add(k, c);
    }
    return out;
  };
  s.E = TensorMultiplier{e_left, e_right};
  if (g.finite()) {
    FinVec e;
    for (const auto& u : g.units()) e.add(Key(u, u), Scalar(1));
    s.E_element = e;
  }
  KernelMultiplier f;
  f.action = *s.E;
  auto gpc = gp;
  f.sandwich = [gpc](const FinVec& a, const FinVec& b) {
    // (a # 1)(sum_e l_e # l_e)(1 # b): terms l_{pe} # l_{eq} = l_p # l_q
    // whenever s(p) = t(q).
    FinVec out;
    for (const auto& [ka, ca] : a.terms()) {
      for (const auto& [kb, cb] : b.terms()) {
        if (gpc->source(ka.at(0)) == gpc->target(kb.at(0))) {
          out.add(Key::concat(ka, kb), ca * cb);
        }
      }
    }
    return out;
  };
  f.element = s.E_element;
  s.F1 = f;
  s.F2 = f;
  s.F3 = f;
  s.F4 = f;
  return s;
}

DualPairing canonical_pairing(const Structure& kg, const Structure& cg) {
  // <f, l_p> = f(p); both bases are indexed by the groupoid elements, so
  // agreement of the index sets is the groupoid-match requirement.
  auto ka = kg.alg.basis(3);
  auto cb = cg.alg.basis(3);
  if (ka != cb) throw MathError("canonical pairing: groupoid mismatch");
  return DualPairing{[](const Key& f, const Key& p) {
    return f == p ? Scalar(1) : Scalar(0);
  }};
}

Structure cg_as_weak_hopf(const Groupoid& g) {
  if (!g.finite()) throw SpecError("weak Hopf adapter needs a finite groupoid");
  Structure cg = build_CG(g);
  auto gp = std::make_shared<Groupoid>(g);
  LinOp delta{[](const Key& k) { return FinVec::basis(Key::concat(k, k)); }};
  Structure s = weak_hopf_structure(cg.alg, delta, cg.counit, cg.antipode,
                                    "C[" + g.name() + "] as weak Hopf");
  return s;
}

}  // namespace wmha
