// The Definition 4.1 verifier and its regular / star / weak-Hopf layers.

#include <set>

#include "wmha/wmha_internal.hpp"

namespace wmha {

namespace {

std::vector<Key> make_triples(const std::vector<Key>& window) {
  std::vector<Key> out;
  for (const auto& a : window) {
    for (const auto& b : window) {
      for (const auto& c : window) out.push_back(Key::concat(Key::concat(a, b), c));
    }
  }
  return out;
}

// Q_k = R_k T_k realized through the F-sandwich alone.
LinOp sandwich_projector(const KernelMultiplier& f) {
  auto sandwich = f.sandwich;
  return LinOp{[sandwich](const Key& k) {
    return sandwich(FinVec::basis(k.slice(0, 1)), FinVec::basis(k.slice(1, 1)));
  }};
}

bool multiplier_actions_equal(const Multiplier& x, const Multiplier& y,
                              const std::vector<Key>& basis, std::string* w) {
  for (const auto& k : basis) {
    FinVec b = FinVec::basis(k);
    if (x.left(b) != y.left(b) || x.right(b) != y.right(b)) {
      if (w) *w = k.str();
      return false;
    }
  }
  return true;
}

// m(v) for v in A tensor A: multiply the two legs.
FinVec mul_legs(const BasedAlgebra& alg, const FinVec& v) {
  FinVec out;
  for (const auto& [k, c] : v.terms()) {
    out += alg.mult_basis(k.slice(0, 1), k.slice(1, 1)).scaled(c);
  }
  return out;
}

bool is_identity_multiplier(const Multiplier& m, const std::vector<Key>& basis) {
  for (const auto& k : basis) {
    FinVec b = FinVec::basis(k);
    if (m.left(b) != b || m.right(b) != b) return false;
  }
  return true;
}

VerificationReport regular_impl(const Structure& s, const VerifyOptions& opt,
                                const Derived& d);
VerificationReport star_impl(const Structure& s, const VerifyOptions& opt,
                             const Derived& d);

}  // namespace

VerificationReport verify_core(const Structure& s, const VerifyOptions& opt,
                               std::optional<Derived>* out) {
  VerificationReport rep(s.name);
  std::vector<Key> window = s.alg.basis(opt.window);
  std::size_t n = window.size();
  bool generic = s.alg.finite && s.alg.unit.has_value();
  bool cube_ok = generic && n * n * n <= static_cast<std::size_t>(opt.max_dim);

  rep.merge(check_algebra(s.alg, window));
  rep.merge(check_coassociativity(s.cp, window));
  rep.merge(check_coproduct_hom(s.alg, s.cp, window));
  if (s.alg.has_star()) rep.merge(check_star_hom(s.alg, s.cp, window));
  rep.merge(check_full(s.cp, window));
  rep.merge(check_slice_nondegenerate(s.cp, window));
  if (!rep.all_passed()) {
    rep.set_verdict("not-wmha");
    return rep;
  }

  Derived d;
  d.window = window;
  for (const auto& a : window) {
    for (const auto& b : window) d.pairs.push_back(Key::concat(a, b));
  }

  // Counit: one joint exact linear system for both laws.
  {
    auto eps = solve_counit(s.alg, s.cp, window);
    if (eps.status == CounitResult::Status::NoSolution) {
      rep.fail("def1.8:counit-exists", eps.certificate.str());
      rep.set_verdict("not-wmha");
      return rep;
    }
    if (eps.status == CounitResult::Status::NotUnique) {
      rep.fail("prop1.12:counit-unique", "", "solution space dimension " +
                                                 std::to_string(eps.nullity));
      rep.set_verdict("not-wmha");
      return rep;
    }
    rep.pass("def1.8:counit-exists");
    rep.pass("prop1.12:counit-unique");
    d.eps = eps.counit;
    rep.merge(check_counit_laws(s.alg, s.cp, d.eps, window));
    if (opt.oracle && s.counit) {
      bool ok = true;
      std::string w;
      for (const auto& k : window) {
        if (d.eps.on_basis(k) != s.counit->on_basis(k)) {
          ok = false;
          w = k.str();
          break;
        }
      }
      rep.check("def1.8:counit-matches-closed-form", ok, w);
    }
    if (s.alg.has_star()) {
      // eps(a*) = conj(eps(a)) for the unique counit.
      bool ok = true;
      std::string w;
      for (const auto& k : window) {
        if (d.eps.apply(s.alg.star_of(FinVec::basis(k))) !=
            d.eps.on_basis(k).conj()) {
          ok = false;
          w = k.str();
          break;
        }
      }
      rep.check("prop1.12:counit-star", ok, w);
    }
  }

  BasedAlgebra sq = tensor_square(s.alg);

  // The canonical idempotent E.
  if (generic) {
    auto e = find_E(s.alg, s.cp, window);
    if (!e.found) {
      rep.fail("lem3.3:E-exists", e.failure);
      rep.set_verdict("not-wmha");
      return rep;
    }
    rep.pass("lem3.3:E-exists", "solved element with " +
                                    std::to_string(e.element.support_size()) +
                                    " terms");
    d.E = e.action;
    d.E_elem = e.element;
    if (opt.oracle && s.E_element) {
      rep.check("lem3.3:E-matches-closed-form", e.element == *s.E_element,
                e.element.str());
    } else if (opt.oracle && s.E) {
      std::string w;
      rep.check("lem3.3:E-matches-closed-form",
                multiplier_actions_equal(e.action, *s.E, d.pairs, &w), w);
    }
  } else if (s.E) {
    d.E = *s.E;
    d.E_elem = s.E_element;
    rep.pass("lem3.3:E-exists", "closed form (lazy window)");
  } else {
    rep.fail("lem3.3:E-exists", "", "no generic path and no closed form");
    rep.set_verdict("not-wmha");
    return rep;
  }

  {
    Multiplier ee = multiplier_product(d.E, d.E);
    std::string w;
    rep.check("prop3.5:E-idempotent",
              multiplier_actions_equal(ee, d.E, d.pairs, &w), w);
  }
  {
    bool ok = true;
    std::string w;
    for (const auto& a : window) {
      for (const auto& b : window) {
        FinVec sr = s.cp.slice_right(FinVec::basis(a), FinVec::basis(b));
        FinVec sl = s.cp.slice_left(FinVec::basis(b), FinVec::basis(a));
        if (d.E.left(sr) != sr || d.E.right(sl) != sl) {
          ok = false;
          w = a.str() + ", " + b.str();
          break;
        }
      }
      if (!ok) break;
    }
    rep.check("prop3.5:E-absorbs-Delta", ok, w);
  }
  {
    // (4.1): Ran(T1) = E (A # A) and Ran(T2) = (A # A) E.
    std::vector<FinVec> t1_img, t2_img, el_img, er_img;
    for (const auto& p : d.pairs) {
      FinVec bp = FinVec::basis(p);
      t1_img.push_back(canonical_map(1, s.cp, bp));
      t2_img.push_back(canonical_map(2, s.cp, bp));
      el_img.push_back(d.E.left(bp));
      er_img.push_back(d.E.right(bp));
    }
    std::size_t r1 = span_rank(t1_img), rl = span_rank(el_img);
    std::size_t r2 = span_rank(t2_img), rr = span_rank(er_img);
    rep.check("def4.1:(4.1):Ran-T1", span_equal(t1_img, el_img), "",
              "rank T1 = " + std::to_string(r1) + ", rank E(A⊗A) = " +
                  std::to_string(rl));
    rep.check("def4.1:(4.1):Ran-T2", span_equal(t2_img, er_img), "",
              "rank T2 = " + std::to_string(r2) + ", rank (A⊗A)E = " +
                  std::to_string(rr));
    if (!rep.all_passed()) {
      // (4.1) pins everything downstream; a wrong E cannot support the
      // generalized inverses.
      rep.set_verdict("not-wmha");
      return rep;
    }
  }
  if (s.alg.has_star()) {
    bool ok = true;
    std::string w;
    for (const auto& p : d.pairs) {
      FinVec bp = FinVec::basis(p);
      if (sq.star_of(d.E.right(sq.star_of(bp))) != d.E.left(bp) ||
          sq.star_of(d.E.left(sq.star_of(bp))) != d.E.right(bp)) {
        ok = false;
        w = p.str();
        break;
      }
    }
    rep.check("prop3.5:E-star", ok, w);
  }

  // Proposition 3.11 commutation rules in multiplied (element) form.
  {
    bool ok1 = true, ok2 = true;
    std::string w1, w2;
    auto e_left_12 = lift_action(d.E.left, 0, 1, 3);
    auto e_right_23 = lift_action(d.E.right, 1, 2, 3);
    for (const auto& a : window) {
      for (const auto& b : window) {
        FinVec u_l = d.E.left(FinVec::basis(Key::concat(a, b)));
        FinVec u_r = d.E.right(FinVec::basis(Key::concat(a, b)));
        for (const auto& c : window) {
          if (ok1) {
            FinVec lhs;
            for (const auto& [k, cc] : u_l.terms()) {
              lhs += tensor(FinVec::basis(k.slice(0, 1)),
                            s.cp.slice_right(FinVec::basis(k.slice(1, 1)),
                                             FinVec::basis(c)))
                         .scaled(cc);
            }
            FinVec rhs = e_left_12(
                tensor(FinVec::basis(a),
                       s.cp.slice_right(FinVec::basis(b), FinVec::basis(c))));
            if (lhs != rhs) {
              ok1 = false;
              w1 = a.str() + ", " + b.str() + ", " + c.str();
            }
          }
          if (ok2) {
            FinVec lhs;
            for (const auto& [k, cc] : u_r.terms()) {
              lhs += tensor(s.cp.slice_left(FinVec::basis(c),
                                            FinVec::basis(k.slice(0, 1))),
                            FinVec::basis(k.slice(1, 1)))
                         .scaled(cc);
            }
            FinVec rhs = e_right_23(
                tensor(s.cp.slice_left(FinVec::basis(c), FinVec::basis(a)),
                       FinVec::basis(b)));
            if (lhs != rhs) {
              ok2 = false;
              w2 = a.str() + ", " + b.str() + ", " + c.str();
            }
          }
        }
      }
    }
    rep.check("prop3.11:T1R1-commutation", ok1, w1);
    rep.check("prop3.11:T2R2-commutation", ok2, w2);
  }

  // Kernel multipliers: solved from (4.3) on the generic path.
  if (generic && d.E_elem) {
    for (int which : {1, 2}) {
      auto f = solve_F(s.alg, *d.E_elem, which, window);
      std::string id = "def4.1:(4.3):F" + std::to_string(which);
      if (f.status == KernelSolveResult::Status::NoSolution) {
        rep.fail(id, f.certificate.str(), "no solution; not a WMHA");
        rep.set_verdict("not-wmha");
        return rep;
      }
      if (f.status == KernelSolveResult::Status::NotUnique) {
        rep.fail(id, "", "underdetermined; fullness must have failed");
        rep.set_verdict("not-wmha");
        return rep;
      }
      rep.pass(id, "solved uniquely");
      if (which == 1) {
        d.F1 = f.f;
      } else {
        d.F2 = f.f;
      }
    }
    if (opt.oracle && s.F1 && s.F1->element) {
      rep.check("rem3.18:F1-matches-closed-form", *d.F1.element == *s.F1->element,
                d.F1.element->str());
    } else if (opt.oracle && s.F1) {
      bool ok = true;
      std::string w;
      for (const auto& a : window) {
        for (const auto& b : window) {
          if (d.F1.sandwich(FinVec::basis(a), FinVec::basis(b)) !=
              s.F1->sandwich(FinVec::basis(a), FinVec::basis(b))) {
            ok = false;
            w = a.str() + ", " + b.str();
            break;
          }
        }
        if (!ok) break;
      }
      rep.check("rem3.18:F1-matches-closed-form", ok, w);
    }
    if (opt.oracle && s.F2 && s.F2->element) {
      rep.check("rem3.18:F2-matches-closed-form", *d.F2.element == *s.F2->element,
                d.F2.element->str());
    } else if (opt.oracle && s.F2) {
      bool ok = true;
      std::string w;
      for (const auto& a : window) {
        for (const auto& b : window) {
          if (d.F2.sandwich(FinVec::basis(a), FinVec::basis(b)) !=
              s.F2->sandwich(FinVec::basis(a), FinVec::basis(b))) {
            ok = false;
            w = a.str() + ", " + b.str();
            break;
          }
        }
        if (!ok) break;
      }
      rep.check("rem3.18:F2-matches-closed-form", ok, w);
    }
  } else if (s.F1 && s.F2) {
    d.F1 = *s.F1;
    d.F2 = *s.F2;
    // (4.3) in action form on the window triples.
    if (d.F1.action && d.F2.action) {
      auto e13 = lift_action(d.E.left, 0, 2, 3);
      auto f1_12 = lift_action(d.F1.action->left, 0, 1, 3);
      auto e23 = lift_action(d.E.left, 1, 2, 3);
      auto f2_23 = lift_action(d.F2.action->left, 1, 2, 3);
      auto e12 = lift_action(d.E.left, 0, 1, 3);
      bool ok1 = true, ok2 = true;
      std::string w1, w2;
      for (const auto& t : make_triples(window)) {
        FinVec bt = FinVec::basis(t);
        if (ok1 && e13(f1_12(bt)) != e13(e23(bt))) {
          ok1 = false;
          w1 = t.str();
        }
        if (ok2 && f2_23(e13(bt)) != e12(e13(bt))) {
          ok2 = false;
          w2 = t.str();
        }
      }
      rep.check("def4.1:(4.3):F1", ok1, w1, "closed form, action route");
      rep.check("def4.1:(4.3):F2", ok2, w2, "closed form, action route");
    } else {
      rep.skip("def4.1:(4.3):F1", "no action realization on this window");
      rep.skip("def4.1:(4.3):F2", "no action realization on this window");
    }
  } else {
    rep.fail("def4.1:(4.3):F1", "", "no generic path and no closed form");
    rep.set_verdict("not-wmha");
    return rep;
  }

  // F idempotency through the projectors Q_k.
  LinOp q1 = sandwich_projector(d.F1);
  LinOp q2 = sandwich_projector(d.F2);
  {
    bool ok1 = true, ok2 = true;
    std::string w1, w2;
    for (const auto& p : d.pairs) {
      FinVec x = q1.rule(p);
      if (ok1 && q1.apply(x) != x) {
        ok1 = false;
        w1 = p.str();
      }
      FinVec y = q2.rule(p);
      if (ok2 && q2.apply(y) != y) {
        ok2 = false;
        w2 = p.str();
      }
    }
    rep.check("rem3.18:F1-idempotent", ok1, w1);
    rep.check("rem3.18:F2-idempotent", ok2, w2);
  }

  // (4.4): kernels of T1/T2 against the (1 - F) sandwich spans.
  {
    for (int which : {1, 2}) {
      std::vector<FinVec> images;
      images.reserve(d.pairs.size());
      for (const auto& p : d.pairs) {
        images.push_back(canonical_map(which, s.cp, FinVec::basis(p)));
      }
      std::vector<FinVec> ker = kernel_basis(d.pairs, images);
      std::vector<FinVec> span;
      const KernelMultiplier& f = which == 1 ? d.F1 : d.F2;
      for (const auto& p : d.pairs) {
        FinVec v = FinVec::basis(p) -
                   f.sandwich(FinVec::basis(p.slice(0, 1)),
                              FinVec::basis(p.slice(1, 1)));
        if (!v.is_zero()) span.push_back(v);
      }
      bool ok = span_equal(ker, span);
      std::string witness;
      if (!ok) {
        for (const auto& v : ker) {
          if (!span_membership(v, span)) {
            witness = v.str();
            break;
          }
        }
        if (witness.empty()) {
          for (const auto& v : span) {
            if (!span_membership(v, ker)) {
              witness = v.str();
              break;
            }
          }
        }
      }
      rep.check("def4.1:(4.4):Ker-T" + std::to_string(which), ok, witness,
                "dim Ker = " + std::to_string(span_rank(ker)) +
                    ", dim sandwich span = " + std::to_string(span_rank(span)));
    }
    if (!rep.all_passed()) {
      rep.set_verdict("not-wmha");
      return rep;
    }
  }

  // Generalized inverses assembled from the projections; antipodes.
  try {
  for (int k : {1, 2}) {
    const KernelMultiplier& f = k == 1 ? d.F1 : d.F2;
    {
      std::vector<FinVec> w_span, ker_span;
      std::vector<FinVec> images;
      for (const auto& p : d.pairs) {
        w_span.push_back(f.sandwich(FinVec::basis(p.slice(0, 1)),
                                    FinVec::basis(p.slice(1, 1))));
        images.push_back(canonical_map(k, s.cp, FinVec::basis(p)));
      }
      ker_span = kernel_basis(d.pairs, images);
      std::size_t rw = span_rank(w_span), rk = span_rank(ker_span);
      std::vector<FinVec> both = w_span;
      both.insert(both.end(), ker_span.begin(), ker_span.end());
      bool ok = rw + rk == d.pairs.size() && span_rank(both) == d.pairs.size();
      rep.check("geninv:RanQ-oplus-KerT" + std::to_string(k), ok, "",
                "dim RanQ = " + std::to_string(rw) + ", dim Ker = " +
                    std::to_string(rk) + ", dim A⊗A = " +
                    std::to_string(d.pairs.size()));
    }
    std::string err;
    GeneralizedInverse gi =
        assemble_R(k, s.alg, s.cp, d.E, f, d.pairs, &err);
    if (!err.empty()) {
      rep.fail("geninv:R" + std::to_string(k) + "-assembly", err);
      rep.set_verdict("not-wmha");
      return rep;
    }
    rep.pass("geninv:R" + std::to_string(k) + "-assembly");
    if (k == 1) {
      d.R1 = gi;
    } else {
      d.R2 = gi;
    }
    rep.merge(check_geninv_conditions(gi, s.alg, s.cp, window));
  }

  // Assumption 3.12: module and cop commutation rules of the projectors.
  {
    bool mod_ok = true;
    std::string wm;
    for (const auto& a : window) {
      for (const auto& b : window) {
        FinVec qab1 = q1.rule(Key::concat(a, b));
        FinVec qab2 = q2.rule(Key::concat(a, b));
        for (const auto& c : window) {
          FinVec dc = FinVec::basis(c);
          if (q1.apply(tensor(s.alg.mul(dc, FinVec::basis(a)), FinVec::basis(b))) !=
                  mul_first_left(s.alg, qab1, dc) ||
              q1.apply(tensor(FinVec::basis(a), s.alg.mul(FinVec::basis(b), dc))) !=
                  mul_second_right(s.alg, qab1, dc) ||
              q2.apply(tensor(s.alg.mul(dc, FinVec::basis(a)), FinVec::basis(b))) !=
                  mul_first_left(s.alg, qab2, dc) ||
              q2.apply(tensor(FinVec::basis(a), s.alg.mul(FinVec::basis(b), dc))) !=
                  mul_second_right(s.alg, qab2, dc)) {
            mod_ok = false;
            wm = a.str() + ", " + b.str() + ", " + c.str();
            break;
          }
        }
        if (!mod_ok) break;
      }
      if (!mod_ok) break;
    }
    rep.check("asm3.12:RT-module-laws", mod_ok, wm);
  }
  if (s.cp.regular()) {
    Coproduct cop = cop_of(s.cp);
    bool ok1 = true, ok2 = true;
    std::string w1, w2;
    auto q1_rule = [&q1](const Key& k) { return q1.rule(k); };
    auto q2_rule = [&q2](const Key& k) { return q2.rule(k); };
    for (const auto& a : window) {
      for (const auto& b : window) {
        FinVec u1 = q1.rule(Key::concat(a, b));
        FinVec u2 = q2.rule(Key::concat(a, b));
        for (const auto& c : window) {
          if (ok1) {
            // (i # Delta^cop) Q1 = (Q1 # i)(i # Delta^cop), against 1#1#c
            FinVec lhs;
            for (const auto& [k, cc] : u1.terms()) {
              lhs += tensor(FinVec::basis(k.slice(0, 1)),
                            cop.slice_right(FinVec::basis(k.slice(1, 1)),
                                            FinVec::basis(c)))
                         .scaled(cc);
            }
            FinVec rhs = map_legs(
                tensor(FinVec::basis(a),
                       cop.slice_right(FinVec::basis(b), FinVec::basis(c))),
                0, 2, q1_rule);
            if (lhs != rhs) {
              ok1 = false;
              w1 = a.str() + ", " + b.str() + ", " + c.str();
            }
          }
          if (ok2) {
            // (Delta^cop # i) Q2 = (i # Q2)(Delta^cop # i), against c#1#1
            FinVec lhs;
            for (const auto& [k, cc] : u2.terms()) {
              lhs += tensor(cop.slice_left(FinVec::basis(c),
                                           FinVec::basis(k.slice(0, 1))),
                            FinVec::basis(k.slice(1, 1)))
                         .scaled(cc);
            }
            FinVec rhs = map_legs(
                tensor(cop.slice_left(FinVec::basis(c), FinVec::basis(a)),
                       FinVec::basis(b)),
                1, 2, q2_rule);
            if (lhs != rhs) {
              ok2 = false;
              w2 = a.str() + ", " + b.str() + ", " + c.str();
            }
          }
        }
      }
    }
    rep.check("asm3.12:R1T1-cop-commutation", ok1, w1);
    rep.check("asm3.12:R2T2-cop-commutation", ok2, w2);
  } else {
    rep.skip("asm3.12:R1T1-cop-commutation", "not regular");
    rep.skip("asm3.12:R2T2-cop-commutation", "not regular");
  }

  // Proposition 3.15 coproduct rules for the projectors.
  {
    bool ok1 = true, ok2 = true;
    std::string w1, w2;
    auto q1_rule = [&q1](const Key& k) { return q1.rule(k); };
    auto q2_rule = [&q2](const Key& k) { return q2.rule(k); };
    for (const auto& a : window) {
      for (const auto& b : window) {
        FinVec u1 = q1.rule(Key::concat(a, b));
        FinVec u2 = q2.rule(Key::concat(a, b));
        for (const auto& c : window) {
          if (ok1) {
            // (Delta # i) Q1 = (i # Q1)(Delta # i), against c#1#1
            FinVec lhs;
            for (const auto& [k, cc] : u1.terms()) {
              lhs += tensor(s.cp.slice_left(FinVec::basis(c),
                                            FinVec::basis(k.slice(0, 1))),
                            FinVec::basis(k.slice(1, 1)))
                         .scaled(cc);
            }
            FinVec rhs = map_legs(
                tensor(s.cp.slice_left(FinVec::basis(c), FinVec::basis(a)),
                       FinVec::basis(b)),
                1, 2, q1_rule);
            if (lhs != rhs) {
              ok1 = false;
              w1 = a.str() + ", " + b.str() + ", " + c.str();
            }
          }
          if (ok2) {
            // (i # Delta) Q2 = (Q2 # i)(i # Delta), against 1#1#c
            FinVec lhs;
            for (const auto& [k, cc] : u2.terms()) {
              lhs += tensor(FinVec::basis(k.slice(0, 1)),
                            s.cp.slice_right(FinVec::basis(k.slice(1, 1)),
                                             FinVec::basis(c)))
                         .scaled(cc);
            }
            FinVec rhs = map_legs(
                tensor(FinVec::basis(a),
                       s.cp.slice_right(FinVec::basis(b), FinVec::basis(c))),
                0, 2, q2_rule);
            if (lhs != rhs) {
              ok2 = false;
              w2 = a.str() + ", " + b.str() + ", " + c.str();
            }
          }
        }
      }
    }
    rep.check("prop3.15:F1-coproduct-rule", ok1, w1);
    rep.check("prop3.15:F2-coproduct-rule", ok2, w2);
  }

  // Antipodes from the generalized inverses.
  try {
    d.S1 = derive_antipode(1, s.alg, s.cp, d.R1, d.eps, window);
    rep.pass("prop2.4:S1-derived");
  } catch (const MathError& e) {
    rep.fail("prop2.4:S1-derived", e.what());
    rep.set_verdict("not-wmha");
    return rep;
  }
  try {
    d.S2 = derive_antipode(2, s.alg, s.cp, d.R2, d.eps, window);
    rep.pass("prop2.4:S2-derived");
  } catch (const MathError& e) {
    rep.fail("prop2.4:S2-derived", e.what());
    rep.set_verdict("not-wmha");
    return rep;
  }

  if (opt.oracle && s.antipode) {
    bool ok = true;
    std::string w;
    for (const auto& a : window) {
      for (const auto& b : window) {
        if (d.S1.left_apply(FinVec::basis(a), FinVec::basis(b)) !=
            s.alg.mul(s.antipode->rule(a), FinVec::basis(b))) {
          ok = false;
          w = a.str() + ", " + b.str();
          break;
        }
      }
      if (!ok) break;
    }
    rep.check("prop2.4:S-matches-closed-form", ok, w);
    // R1/R2 rebuilt from the closed-form antipode against the assembled ones.
    try {
      AntipodeMap sc = antipode_from_endo(s.alg, *s.antipode, s.antipode_inv, 1);
      GeneralizedInverse r1c = build_R_from_antipode(1, s.alg, s.cp, sc);
      GeneralizedInverse r2c = build_R_from_antipode(2, s.alg, s.cp, sc);
      bool rok = true;
      std::string rw;
      for (const auto& p : d.pairs) {
        if (r1c.R.rule(p) != d.R1.R.rule(p) || r2c.R.rule(p) != d.R2.R.rule(p)) {
          rok = false;
          rw = p.str();
          break;
        }
      }
      rep.check("oracle:R-matches-closed-form", rok, rw);
    } catch (const MathError& e) {
      rep.fail("oracle:R-matches-closed-form", e.what());
    }
  }

  // Non-unital windows cannot recover S1/S2 as endomorphisms directly;
  // certify the closed form against the derived actions instead and adopt
  // it when it matches everywhere on the window.
  if (s.antipode && (!d.S1.endo || !d.S2.endo)) {
    bool match = true;
    for (const auto& a : window) {
      FinVec sa = s.antipode->rule(a);
      for (const auto& b : window) {
        FinVec db = FinVec::basis(b);
        if (d.S1.left_apply(FinVec::basis(a), db) != s.alg.mul(sa, db) ||
            d.S2.right_apply(db, FinVec::basis(a)) != s.alg.mul(db, sa)) {
          match = false;
          break;
        }
      }
      if (!match) break;
    }
    if (match) {
      d.S1.endo = s.antipode;
      d.S2.endo = s.antipode;
      if (s.antipode_inv) {
        d.S1.endo_inv = s.antipode_inv;
        d.S2.endo_inv = s.antipode_inv;
      }
    }
  }

  rep.merge(check_antipode_identities(s.alg, s.cp, d.S1, window,
                                      IdentitySide::Direct));
  {
    // Round trip: R rebuilt from the derived antipode equals R.
    bool ok = true;
    std::string w;
    try {
      GeneralizedInverse r1b = build_R_from_antipode(1, s.alg, s.cp, d.S1);
      GeneralizedInverse r2b = build_R_from_antipode(2, s.alg, s.cp, d.S2);
      for (const auto& p : d.pairs) {
        if (r1b.R.rule(p) != d.R1.R.rule(p) || r2b.R.rule(p) != d.R2.R.rule(p)) {
          ok = false;
          w = p.str();
          break;
        }
      }
    } catch (const MathError& e) {
      ok = false;
      w = e.what();
    }
    rep.check("prop2.4:R-round-trip", ok, w);
  }

  // S1 = S2 in the sandwiched sense, and the bridge identities.
  {
    bool eq = true, b1 = true, b2 = true;
    std::string weq, wb1, wb2;
    for (const auto& a : window) {
      for (const auto& b : window) {
        FinVec da = FinVec::basis(a), db = FinVec::basis(b);
        FinVec r1ab = d.R1.R.rule(Key::concat(a, b));
        for (const auto& c : window) {
          FinVec dc = FinVec::basis(c);
          if (eq && s.alg.mul(dc, d.S1.left_apply(da, db)) !=
                        s.alg.mul(d.S2.right_apply(dc, da), db)) {
            eq = false;
            weq = a.str() + ", " + b.str() + ", " + c.str();
          }
          if (b1) {
            // (3.1): c·(sum a1 S1(a2) b) = (sum (c a1) S2(a2))·b
            FinVec lhs = s.alg.mul(dc, mul_legs(s.alg, r1ab));
            FinVec rhs;
            for (const auto& [k, cc] :
                 canonical_map(2, s.cp, tensor(dc, da)).terms()) {
              rhs += d.S2.right_apply(FinVec::basis(k.slice(0, 1)),
                                      FinVec::basis(k.slice(1, 1)))
                         .scaled(cc);
            }
            rhs = s.alg.mul(rhs, db);
            if (lhs != rhs) {
              b1 = false;
              wb1 = a.str() + ", " + b.str() + ", " + c.str();
            }
          }
          if (b2) {
            // (3.2): c·(sum S1(a1)(a2 b)) = (sum (c S2(a1)) a2)·b
            FinVec lhs;
            for (const auto& [k, cc] :
                 canonical_map(1, s.cp, tensor(da, db)).terms()) {
              lhs += d.S1.left_apply(FinVec::basis(k.slice(0, 1)),
                                     FinVec::basis(k.slice(1, 1)))
                         .scaled(cc);
            }
            lhs = s.alg.mul(dc, lhs);
            FinVec rhs = s.alg.mul(mul_legs(s.alg, d.R2.R.rule(Key::concat(c, a))), db);
            if (lhs != rhs) {
              b2 = false;
              wb2 = a.str() + ", " + b.str() + ", " + c.str();
            }
          }
        }
      }
    }
    rep.check("prop3.17:S1=S2", eq, weq);
    rep.check("prop3.17:(3.1)", b1, wb1);
    rep.check("prop3.17:(3.2)", b2, wb2);
    // Both directions of the equivalence: the (4.3) data held (F solved /
    // verified above), so S1 = S2 must hold too, and conversely.
    bool f43 = rep.find("def4.1:(4.3):F1")->status == CheckResult::Status::Pass &&
               rep.find("def4.1:(4.3):F2")->status == CheckResult::Status::Pass;
    rep.check("prop3.17:equivalence-both-ways", f43 == eq, "",
              std::string("(4.3) ") + (f43 ? "holds" : "fails") + ", S1=S2 " +
                  (eq ? "holds" : "fails"));
  }
  } catch (const MathError& e) {
    rep.fail("geninv:application", e.what());
    rep.set_verdict("not-wmha");
    return rep;
  }

  // Appendix A block (extensions need the unital finite window).
  if (cube_ok) {
    rep.merge(appendix_a_checks(s, opt, d));
  } else {
    rep.skip("def4.1:(4.2):coassoc-E",
             generic ? "window exceeds WMHA_MAX_DIM" : "lazy window");
    rep.skip("asm3.10:E12-E23-commute", "see (4.2)");
    rep.skip("propA.2:Delta1(1)=E", "see (4.2)");
  }

  if (d.S1.endo || s.antipode) {
    if (s.antipode) {
      d.S = s.antipode;
      d.S_inv = s.antipode_inv ? s.antipode_inv : invert_endo(*s.antipode, window);
    } else {
      d.S = d.S1.endo;
      d.S_inv = invert_endo(*d.S1.endo, window);
    }
  }

  rep.set_verdict(rep.all_passed() ? "wmha" : "not-wmha");
  if (out) *out = std::move(d);
  return rep;
}

namespace {

VerificationReport regular_impl(const Structure& s, const VerifyOptions& opt,
                                const Derived& d) {
  VerificationReport rep;
  const std::vector<Key>& window = d.window;
  BasedAlgebra sq = tensor_square(s.alg);

  if (!d.S || !d.S_inv) {
    rep.fail("def4.5:S-bijective", "", "antipode is not a bijection of A");
    return rep;
  }
  LinOp S = *d.S, Sinv = *d.S_inv;
  {
    bool ok = true;
    std::string w;
    for (const auto& a : window) {
      if (Sinv.apply(S.rule(a)) != FinVec::basis(a) ||
          S.apply(Sinv.rule(a)) != FinVec::basis(a)) {
        ok = false;
        w = a.str();
        break;
      }
    }
    rep.check("def4.5:S-bijective", ok, w);
  }

  // Prop 4.6: (S # S)E = sigma E and (S # S)F2 = sigma F1 (sandwiched).
  {
    bool oke = true, okf = true;
    std::string we, wf;
    for (const auto& a : window) {
      for (const auto& b : window) {
        FinVec da = FinVec::basis(a), db = FinVec::basis(b);
        FinVec lhs = map_legs(map_legs(d.E.right(tensor(da, db)), 0, 1, S.rule),
                              1, 1, S.rule);
        FinVec rhs = flip(d.E.left(tensor(S.rule(b), S.rule(a))));
        if (oke && lhs != rhs) {
          oke = false;
          we = a.str() + ", " + b.str();
        }
        FinVec lf = map_legs(map_legs(d.F2.sandwich(da, db), 0, 1, S.rule), 1, 1,
                             S.rule);
        FinVec rf = flip(d.F1.sandwich(S.rule(b), S.rule(a)));
        if (okf && lf != rf) {
          okf = false;
          wf = a.str() + ", " + b.str();
        }
      }
    }
    rep.check("prop4.6:(SxS)E=sigmaE", oke, we);
    rep.check("prop4.6:(SxS)F2=sigmaF1", okf, wf);
  }

  // Prop 4.7: F1 = (i # S)E and F2 = (S # i)E.
  {
    bool ok1 = true, ok2 = true;
    std::string w1, w2;
    for (const auto& a : window) {
      for (const auto& b : window) {
        FinVec da = FinVec::basis(a), db = FinVec::basis(b);
        if (ok1 && d.F1.sandwich(da, S.rule(b)) !=
                       map_legs(d.E.right(tensor(da, db)), 1, 1, S.rule)) {
          ok1 = false;
          w1 = a.str() + ", " + b.str();
        }
        if (ok2) {
          if (d.F2.action) {
            FinVec lhs = reverse_sandwich(s.alg, *d.F2.action, db, S.rule(a));
            FinVec rhs = map_legs(d.E.right(tensor(da, db)), 0, 1, S.rule);
            if (lhs != rhs) {
              ok2 = false;
              w2 = a.str() + ", " + b.str();
            }
          }
        }
      }
    }
    rep.check("prop4.7:F1=(ixS)E", ok1, w1);
    if (d.F2.action) {
      rep.check("prop4.7:F2=(Sxi)E", ok2, w2);
    } else {
      rep.skip("prop4.7:F2=(Sxi)E", "no F2 action realization");
    }
  }

  // Prop 4.8 / 4.9: R3, R4 and the inverse antipodes.
  LinOp t3 = canonical_map_op(3, s.cp);
  LinOp t4 = canonical_map_op(4, s.cp);
  LinOp r3{[&, S, Sinv](const Key& k) {
    return map_legs(canonical_map(1, s.cp, map_legs(FinVec::basis(k), 1, 1, S.rule)),
                    1, 1, Sinv.rule);
  }};
  LinOp r4{[&, S, Sinv](const Key& k) {
    return map_legs(canonical_map(2, s.cp, map_legs(FinVec::basis(k), 0, 1, S.rule)),
                    0, 1, Sinv.rule);
  }};
  {
    bool ok3 = true, ok4 = true;
    std::string w3, w4;
    for (const auto& p : d.pairs) {
      FinVec bp = FinVec::basis(p);
      if (ok3 && t3.apply(r3.rule(p)) != d.E.right(bp)) {
        ok3 = false;
        w3 = p.str();
      }
      if (ok4 && t4.apply(r4.rule(p)) != d.E.left(bp)) {
        ok4 = false;
        w4 = p.str();
      }
    }
    rep.check("prop4.9:T3R3=(.)E", ok3, w3);
    rep.check("prop4.9:T4R4=E(.)", ok4, w4);
  }
  // S3(a) b-form: b S3(a) = (eps # i) R3(a # b); S4(a) b = (i # eps) R4(b # a).
  AntipodeMap s3, s4;
  s3.k = 3;
  s4.k = 4;
  {
    LinOp r3c = r3, r4c = r4;
    Counit eps = d.eps;
    s3.right_basis = [r3c, eps](const Key& b, const Key& a) {
      FinVec out;
      for (const auto& [key, c] : r3c.rule(Key::concat(a, b)).terms()) {
        out.add(key.slice(1, 1), c * eps.on_basis(key.slice(0, 1)));
      }
      return out;
    };
    s4.left_basis = [r4c, eps](const Key& a, const Key& b) {
      FinVec out;
      for (const auto& [key, c] : r4c.rule(Key::concat(b, a)).terms()) {
        out.add(key.slice(0, 1), c * eps.on_basis(key.slice(1, 1)));
      }
      return out;
    };
    s3.endo = Sinv;
    s3.endo_inv = S;
    s4.endo = Sinv;
    s4.endo_inv = S;
    bool ok3 = true, ok4 = true;
    std::string w3, w4;
    for (const auto& a : window) {
      for (const auto& b : window) {
        FinVec da = FinVec::basis(a), db = FinVec::basis(b);
        if (ok3 && s3.right_apply(db, da) != s.alg.mul(db, Sinv.rule(a))) {
          ok3 = false;
          w3 = a.str() + ", " + b.str();
        }
        if (ok4 && s4.left_apply(da, db) != s.alg.mul(Sinv.rule(a), db)) {
          ok4 = false;
          w4 = a.str() + ", " + b.str();
        }
      }
    }
    rep.check("prop4.8:S3=S-inverse", ok3, w3);
    rep.check("prop4.8:S4=S-inverse", ok4, w4);
  }
  {
    VerificationReport inv3 = check_antipode_identities(s.alg, s.cp, s3, window,
                                                        IdentitySide::Inverse);
    VerificationReport inv4 = check_antipode_identities(s.alg, s.cp, s4, window,
                                                        IdentitySide::Inverse);
    for (const auto& c : inv3.checks()) {
      rep.check(c.id + ":S3", c.status != CheckResult::Status::Fail, c.witness);
    }
    for (const auto& c : inv4.checks()) {
      rep.check(c.id + ":S4", c.status != CheckResult::Status::Fail, c.witness);
    }
  }
  rep.merge(check_relations(s.alg, s.cp, d.S1, d.S2, s3, s4,
                            d.S1.endo ? d.S1.endo : d.S,
                            d.S1.endo ? invert_endo(*d.S1.endo, window) : d.S_inv,
                            window));

  // F3 = (i # S^{-1})E and F4 = (S^{-1} # i)E, with the Prop 4.9 kernel
  // sandwiches and the second halves of (4.7)/(4.8).
  std::optional<KernelMultiplier> f3, f4;
  if (d.E_elem) {
    FinVec f3e = map_legs(*d.E_elem, 1, 1, Sinv.rule);
    FinVec f4e = map_legs(*d.E_elem, 0, 1, Sinv.rule);
    KernelMultiplier k3 = kernel_from_action(s.alg, from_element(sq, f3e));
    k3.element = f3e;
    KernelMultiplier k4 = kernel_from_action(s.alg, from_element(sq, f4e));
    k4.element = f4e;
    f3 = k3;
    f4 = k4;
  } else if (s.F3 && s.F4) {
    f3 = *s.F3;
    f4 = *s.F4;
  }
  if (f3 && f4 && f3->action && f4->action) {
    bool ok3 = true, ok4 = true;
    std::string w3, w4;
    for (const auto& a : window) {
      for (const auto& b : window) {
        FinVec da = FinVec::basis(a), db = FinVec::basis(b);
        if (ok3 && r3.apply(t3.rule(Key::concat(a, b))) !=
                       reverse_sandwich(s.alg, *f3->action, db, da)) {
          ok3 = false;
          w3 = a.str() + ", " + b.str();
        }
        if (ok4 && r4.apply(t4.rule(Key::concat(a, b))) !=
                       reverse_sandwich(s.alg, *f4->action, db, da)) {
          ok4 = false;
          w4 = a.str() + ", " + b.str();
        }
      }
    }
    rep.check("prop4.9:R3T3=F3-sandwich", ok3, w3);
    rep.check("prop4.9:R4T4=F4-sandwich", ok4, w4);

    auto e13 = lift_action(d.E.left, 0, 2, 3);
    auto f3_12 = lift_action(f3->action->left, 0, 1, 3);
    auto f4_23 = lift_action(f4->action->left, 1, 2, 3);
    auto e23 = lift_action(d.E.left, 1, 2, 3);
    auto e12 = lift_action(d.E.left, 0, 1, 3);
    bool ok47 = true, ok48 = true;
    std::string w47, w48;
    for (const auto& t : make_triples(window)) {
      FinVec bt = FinVec::basis(t);
      FinVec e13t = e13(bt);
      if (ok47 && f3_12(e13t) != e23(e13t)) {
        ok47 = false;
        w47 = t.str();
      }
      if (ok48 && e13(f4_23(bt)) != e13(e12(bt))) {
        ok48 = false;
        w48 = t.str();
      }
    }
    rep.check("(4.7):F3", ok47, w47);
    rep.check("(4.8):F4", ok48, w48);
  } else {
    rep.skip("prop4.9:R3T3=F3-sandwich", "no F3/F4 realization");
    rep.skip("prop4.9:R4T4=F4-sandwich", "no F3/F4 realization");
    rep.skip("(4.7):F3", "no F3/F4 realization");
    rep.skip("(4.8):F4", "no F3/F4 realization");
  }

  // Remark 4.10: the op and cop structures are again weak multiplier Hopf
  // algebras, with the same (resp. flipped) idempotent E.
  if (opt.with_op_cop && s.cp.regular() && s.alg.finite) {
    VerifyOptions sub = opt;
    sub.with_op_cop = false;
    sub.oracle = false;
    {
      Structure op;
      op.name = s.name + "^op";
      op.alg = opposite(s.alg);
      op.cp = coproduct_for_opposite(s.cp);
      if (op.alg.unit) {
        op.cp.sweedler_basis = make_unital_sweedler(op.alg, op.cp);
      } else {
        op.cp.sweedler_basis = s.cp.sweedler_basis;
      }
      std::optional<Derived> dop;
      VerificationReport r = verify_core(op, sub, &dop);
      rep.check("rem4.10:op-is-wmha", r.all_passed(), "",
                "re-verified Definition 4.1 on (A^op, Delta)");
      if (dop && dop->E_elem && d.E_elem) {
        rep.check("rem4.10:op:E-unchanged", *dop->E_elem == *d.E_elem, "");
      }
    }
    {
      Structure cop;
      cop.name = s.name + "^cop";
      cop.alg = s.alg;
      cop.cp = cop_of(s.cp);
      if (cop.alg.unit) cop.cp.sweedler_basis = make_unital_sweedler(cop.alg, cop.cp);
      std::optional<Derived> dcop;
      VerificationReport r = verify_core(cop, sub, &dcop);
      rep.check("rem4.10:cop-is-wmha", r.all_passed(), "",
                "re-verified Definition 4.1 on (A, Delta^cop)");
      if (dcop && dcop->E_elem && d.E_elem) {
        rep.check("rem4.10:cop:E=sigmaE", *dcop->E_elem == flip(*d.E_elem), "");
      }
    }
  } else if (opt.with_op_cop) {
    rep.skip("rem4.10:op-is-wmha", "lazy window");
    rep.skip("rem4.10:cop-is-wmha", "lazy window");
  }
  return rep;
}

VerificationReport star_impl(const Structure& s, const VerifyOptions& opt,
                             const Derived& d) {
  VerificationReport rep;
  const std::vector<Key>& window = d.window;
  BasedAlgebra sq = tensor_square(s.alg);
  rep.merge(check_star_hom(s.alg, s.cp, window));

  if (!d.S || !d.S_inv) {
    rep.skip("prop4.14:S-star-involution", "no bijective antipode");
    return rep;
  }
  LinOp S = *d.S, Sinv = *d.S_inv;
  {
    bool ok = true;
    std::string w;
    for (const auto& a : window) {
      if (s.alg.star_of(S.apply(s.alg.star_of(S.rule(a)))) != FinVec::basis(a)) {
        ok = false;
        w = a.str();
        break;
      }
    }
    rep.check("prop4.14:S-star-involution", ok, w);
  }

  // T3(a* # b*) = T1(a # b)* and T4(a* # b*) = T2(a # b)*.
  {
    bool ok3 = true, ok4 = true;
    std::string w3, w4;
    for (const auto& a : window) {
      FinVec sa = s.alg.star_of(FinVec::basis(a));
      for (const auto& b : window) {
        FinVec sb = s.alg.star_of(FinVec::basis(b));
        if (ok3 && canonical_map(3, s.cp, tensor(sa, sb)) !=
                       sq.star_of(canonical_map(1, s.cp,
                                                tensor(FinVec::basis(a),
                                                       FinVec::basis(b))))) {
          ok3 = false;
          w3 = a.str() + ", " + b.str();
        }
        if (ok4 && canonical_map(4, s.cp, tensor(sa, sb)) !=
                       sq.star_of(canonical_map(2, s.cp,
                                                tensor(FinVec::basis(a),
                                                       FinVec::basis(b))))) {
          ok4 = false;
          w4 = a.str() + ", " + b.str();
        }
      }
    }
    rep.check("prop4.14:T3-star-conjugate", ok3, w3);
    rep.check("prop4.14:T4-star-conjugate", ok4, w4);
  }

  // F1* = F3 and F2* = F4 through the sandwiches.
  std::optional<KernelMultiplier> f3, f4;
  if (d.E_elem) {
    KernelMultiplier k3 =
        kernel_from_action(s.alg, from_element(sq, map_legs(*d.E_elem, 1, 1, Sinv.rule)));
    KernelMultiplier k4 =
        kernel_from_action(s.alg, from_element(sq, map_legs(*d.E_elem, 0, 1, Sinv.rule)));
    f3 = k3;
    f4 = k4;
  } else if (s.F3 && s.F4) {
    f3 = *s.F3;
    f4 = *s.F4;
  }
  if (f3 && f4 && f3->action && f4->action) {
    bool ok1 = true, ok2 = true;
    std::string w1, w2;
    for (const auto& a : window) {
      FinVec sa = s.alg.star_of(FinVec::basis(a));
      for (const auto& b : window) {
        FinVec sb = s.alg.star_of(FinVec::basis(b));
        FinVec da = FinVec::basis(a), db = FinVec::basis(b);
        if (ok1 && sq.star_of(d.F1.sandwich(da, db)) !=
                       reverse_sandwich(s.alg, *f3->action, sb, sa)) {
          ok1 = false;
          w1 = a.str() + ", " + b.str();
        }
        if (ok2 && sq.star_of(d.F2.sandwich(da, db)) !=
                       reverse_sandwich(s.alg, *f4->action, sb, sa)) {
          ok2 = false;
          w2 = a.str() + ", " + b.str();
        }
      }
    }
    rep.check("prop4.14:F1-star=F3", ok1, w1);
    rep.check("prop4.14:F2-star=F4", ok2, w2);
  } else {
    rep.skip("prop4.14:F1-star=F3", "no F3/F4 realization");
    rep.skip("prop4.14:F2-star=F4", "no F3/F4 realization");
  }
  return rep;
}

}  // namespace

VerificationReport verify_wmha(const Structure& s, const VerifyOptions& opt) {
  std::optional<Derived> d;
  VerificationReport rep = verify_core(s, opt, &d);
  if (!rep.all_passed() || !d) {
    rep.set_verdict("not-wmha");
    return rep;
  }
  bool is_mha = is_identity_multiplier(d->E, d->pairs);

  VerificationReport reg = regular_impl(s, opt, *d);
  rep.merge(reg);
  bool regular_ok = reg.all_passed() && reg.find("def4.5:S-bijective") &&
                    reg.find("def4.5:S-bijective")->status ==
                        CheckResult::Status::Pass;

  bool star_ok = false;
  if (s.alg.has_star()) {
    VerificationReport st = star_impl(s, opt, *d);
    rep.merge(st);
    star_ok = st.all_passed();
  }

  if (s.from_weak_hopf) {
    rep.set_verdict(rep.failures() == 0 ? "weak-hopf" : "not-wmha");
  } else if (is_mha) {
    rep.set_verdict("mha");
  } else if (regular_ok && star_ok) {
    rep.set_verdict("regular-wmha-star");
  } else if (regular_ok) {
    rep.set_verdict("regular-wmha");
  } else {
    rep.set_verdict("wmha");
  }
  return rep;
}

VerificationReport check_regular(const Structure& s, const VerifyOptions& opt) {
  try {
    Derived d = derive_core(s, opt);
    VerificationReport rep = regular_impl(s, opt, d);
    rep.set_verdict(rep.all_passed() ? "regular-wmha" : "not-wmha");
    return rep;
  } catch (const MathError& e) {
    VerificationReport rep(s.name);
    rep.fail("def4.5:derivation", e.what());
    rep.set_verdict("not-wmha");
    return rep;
  }
}

VerificationReport check_star(const Structure& s, const VerifyOptions& opt) {
  try {
    Derived d = derive_core(s, opt);
    VerificationReport rep = star_impl(s, opt, d);
    rep.set_verdict(rep.all_passed() ? "wmha-star" : "not-wmha");
    return rep;
  } catch (const MathError& e) {
    VerificationReport rep(s.name);
    rep.fail("def4.13:derivation", e.what());
    rep.set_verdict("not-wmha");
    return rep;
  }
}

Structure weak_hopf_structure(const BasedAlgebra& alg, const LinOp& delta,
                              std::optional<Counit> eps, std::optional<LinOp> s,
                              const std::string& name) {
  if (!alg.unit) throw SpecError("weak Hopf data needs a unital algebra");
  Structure st;
  st.name = name;
  st.alg = alg;
  st.from_weak_hopf = true;
  BasedAlgebra sq = tensor_square(alg);
  BasedAlgebra algc = alg;
  LinOp dl = delta;
  FinVec unit = *alg.unit;
  st.cp.slice_right_basis = [sq, dl, algc](const Key& a, const Key& b) {
    return mul_second_right(algc, dl.rule(a), FinVec::basis(b));
  };
  st.cp.slice_left_basis = [sq, dl, algc](const Key& a, const Key& b) {
    return mul_first_left(algc, dl.rule(b), FinVec::basis(a));
  };
  st.cp.rslice_right_basis = [sq, dl, algc](const Key& a, const Key& b) {
    return mul_first_right(algc, dl.rule(a), FinVec::basis(b));
  };
  st.cp.rslice_left_basis = [sq, dl, algc](const Key& a, const Key& b) {
    return mul_second_left(algc, dl.rule(b), FinVec::basis(a));
  };
  st.cp.sweedler_basis = [dl](const Key& a, const std::vector<Key>&) {
    std::vector<SweedlerTerm> terms;
    for (const auto& [k, c] : dl.rule(a).terms()) {
      terms.emplace_back(c, k.slice(0, 1), k.slice(1, 1));
    }
    return terms;
  };
  st.cp.declared_star_hom = alg.has_star();
  st.counit = std::move(eps);
  if (s) {
    st.antipode = *s;
  }
  return st;
}

VerificationReport weak_hopf_adapter(const Structure& s, const VerifyOptions& opt) {
  VerificationReport rep = verify_wmha(s, opt);
  std::vector<Key> window = s.alg.basis(opt.window);
  if (!s.alg.unit) return rep;
  FinVec unit = *s.alg.unit;
  BasedAlgebra sq = tensor_square(s.alg);

  // E = Delta(1).
  {
    FinVec d1 = s.cp.slice_right(unit, unit);
    VerifyOptions quiet = opt;
    quiet.with_op_cop = false;
    try {
      Derived dd = derive_core(s, quiet);
      if (dd.E_elem) {
        rep.check("ex3.7:E=Delta(1)", *dd.E_elem == d1, dd.E_elem->str());
      }
      // Weak multiplicativity of the counit, both directions.
      bool ok1 = true, ok2 = true;
      std::string w1, w2;
      for (const auto& a : window) {
        FinVec da = FinVec::basis(a);
        for (const auto& b : window) {
          FinVec deltab = s.cp.slice_right(FinVec::basis(b), unit);
          for (const auto& c : window) {
            FinVec dc = FinVec::basis(c);
            FinVec abc = s.alg.mul(s.alg.mul(da, FinVec::basis(b)), dc);
            Scalar want = dd.eps.apply(abc);
            FinVec x1 = sq.mul(sq.mul(tensor(unit, da), deltab), tensor(dc, unit));
            Scalar got1;
            for (const auto& [k, cc] : x1.terms()) {
              got1 += cc * dd.eps.on_basis(k.slice(0, 1)) *
                      dd.eps.on_basis(k.slice(1, 1));
            }
            if (ok1 && got1 != want) {
              ok1 = false;
              w1 = a.str() + ", " + b.str() + ", " + c.str();
            }
            FinVec x2 = sq.mul(sq.mul(tensor(da, unit), deltab), tensor(unit, dc));
            Scalar got2;
            for (const auto& [k, cc] : x2.terms()) {
              got2 += cc * dd.eps.on_basis(k.slice(0, 1)) *
                      dd.eps.on_basis(k.slice(1, 1));
            }
            if (ok2 && got2 != want) {
              ok2 = false;
              w2 = a.str() + ", " + b.str() + ", " + c.str();
            }
          }
        }
      }
      rep.check("prop4.12:weak-multiplicativity-1", ok1, w1,
                "(eps x eps)((1#a)Delta(b)(c#1)) = eps(abc)");
      rep.check("prop4.12:weak-multiplicativity-2", ok2, w2,
                "(eps x eps)((a#1)Delta(b)(1#c)) = eps(abc)");
    } catch (const MathError& e) {
      rep.fail("prop4.12:weak-multiplicativity-1", e.what());
    }
  }
  if (rep.failures() == 0 && rep.verdict() != "not-wmha") {
    rep.set_verdict("weak-hopf");
  } else if (rep.failures() != 0) {
    rep.set_verdict("not-wmha");
  }
  return rep;
}

}  // namespace wmha
