#include "wmha/algebra.hpp"

#include <algorithm>

namespace wmha {

LinOp compose(const LinOp& f, const LinOp& g) {
  return LinOp{[f, g](const Key& k) { return f.apply(g.rule(k)); }};
}

WindowMatrix realize(const LinOp& op, const std::vector<Key>& window) {
  WindowMatrix m;
  m.domain = window;
  m.columns.reserve(window.size());
  for (const auto& k : window) m.columns.push_back(op.rule(k));
  return m;
}

bool agrees(const LinOp& op, const WindowMatrix& m) {
  for (std::size_t i = 0; i < m.domain.size(); ++i) {
    if (op.rule(m.domain[i]) != m.columns[i]) return false;
  }
  return true;
}

FinVec BasedAlgebra::mul(const FinVec& a, const FinVec& b) const {
  FinVec out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      out += mult_basis(ka, kb).scaled(ca * cb);
    }
  }
  return out;
}

FinVec BasedAlgebra::star_of(const FinVec& a) const {
  if (!star) throw MathError(name + ": no star structure");
  return (*star)(a);
}

FinVec BasedAlgebra::covering_unit(const std::vector<Key>& support) const {
  if (unit) return *unit;
  if (local_unit) return (*local_unit)(support);
  throw MathError(name + ": no unit and no local units available");
}

BasedAlgebra opposite(const BasedAlgebra& a) {
  BasedAlgebra op = a;
  op.name = a.name + "^op";
  auto mult = a.mult_basis;
  op.mult_basis = [mult](const Key& x, const Key& y) { return mult(y, x); };
  return op;
}

BasedAlgebra tensor_square(const BasedAlgebra& a) {
  BasedAlgebra t;
  t.name = a.name + "⊗" + a.name;
  t.finite = a.finite;
  auto basis = a.basis_fn;
  t.basis_fn = [basis](int w) {
    std::vector<Key> out;
    auto b = basis(w);
    for (const auto& x : b) {
      for (const auto& y : b) out.push_back(Key::concat(x, y));
    }
    return out;
  };
  auto mult = a.mult_basis;
  t.mult_basis = [mult](const Key& x, const Key& y) {
    return tensor(mult(x.slice(0, 1), y.slice(0, 1)),
                  mult(x.slice(1, 1), y.slice(1, 1)));
  };
  if (a.star) {
    auto star = *a.star;
    // (x tensor y)* = x* tensor y*, conjugate-linear in the coefficient.
    t.star = [star](const FinVec& v) {
      FinVec out;
      for (const auto& [k, c] : v.terms()) {
        out += tensor(star(FinVec::basis(k.slice(0, 1))),
                      star(FinVec::basis(k.slice(1, 1))))
                   .scaled(c.conj());
      }
      return out;
    };
  }
  if (a.unit) t.unit = tensor(*a.unit, *a.unit);
  if (a.local_unit) {
    auto lu = *a.local_unit;
    t.local_unit = [lu](const std::vector<Key>& support) {
      std::vector<Key> left, right;
      for (const auto& k : support) {
        left.push_back(k.slice(0, 1));
        right.push_back(k.slice(1, 1));
      }
      return tensor(lu(left), lu(right));
    };
  }
  return t;
}

BasedAlgebra tensor_cube(const BasedAlgebra& a) {
  BasedAlgebra t;
  t.name = a.name + "⊗3";
  t.finite = a.finite;
  auto basis = a.basis_fn;
  t.basis_fn = [basis](int w) {
    std::vector<Key> out;
    auto b = basis(w);
    for (const auto& x : b) {
      for (const auto& y : b) {
        for (const auto& z : b) out.push_back(Key::concat(Key::concat(x, y), z));
      }
    }
    return out;
  };
  auto mult = a.mult_basis;
  t.mult_basis = [mult](const Key& x, const Key& y) {
    return tensor(tensor(mult(x.slice(0, 1), y.slice(0, 1)),
                         mult(x.slice(1, 1), y.slice(1, 1))),
                  mult(x.slice(2, 1), y.slice(2, 1)));
  };
  if (a.unit) t.unit = tensor(tensor(*a.unit, *a.unit), *a.unit);
  if (a.local_unit) {
    auto lu = *a.local_unit;
    t.local_unit = [lu](const std::vector<Key>& support) {
      std::vector<Key> l1, l2, l3;
      for (const auto& k : support) {
        l1.push_back(k.slice(0, 1));
        l2.push_back(k.slice(1, 1));
        l3.push_back(k.slice(2, 1));
      }
      return tensor(tensor(lu(l1), lu(l2)), lu(l3));
    };
  }
  return t;
}

Multiplier from_element(const BasedAlgebra& a, const FinVec& m) {
  // The algebra is a value bag of rules; capture a copy so the multiplier
  // can outlive the caller's algebra object.
  BasedAlgebra alg = a;
  return Multiplier{[alg, m](const FinVec& x) { return alg.mul(m, x); },
                    [alg, m](const FinVec& x) { return alg.mul(x, m); }};
}

Multiplier identity_multiplier() {
  return Multiplier{[](const FinVec& x) { return x; },
                    [](const FinVec& x) { return x; }};
}

Multiplier multiplier_product(const Multiplier& m, const Multiplier& n) {
  auto ml = m.left, nl = n.left, mr = m.right, nr = n.right;
  return Multiplier{[ml, nl](const FinVec& x) { return ml(nl(x)); },
                    [mr, nr](const FinVec& x) { return nr(mr(x)); }};
}

FinVec element_of(const BasedAlgebra& a, const Multiplier& m,
                  const std::vector<Key>& window) {
  if (a.unit) return m.left(*a.unit);
  // Solve  sum_i c_i (delta_i * x) = m.left(x)  for all window x jointly.
  std::vector<FinVec> generators;
  FinVec target;
  auto stack = [&window](const FinVec& img, const Key& tag) {
    FinVec out;
    for (const auto& [k, c] : img.terms()) out.add(Key::concat(k, tag), c);
    return out;
  };
  for (const auto& i : window) {
    FinVec gi;
    for (const auto& x : window) {
      gi += stack(a.mul(FinVec::basis(i), FinVec::basis(x)), x);
    }
    generators.push_back(gi);
  }
  for (const auto& x : window) target += stack(m.left(FinVec::basis(x)), x);
  auto sol = span_solve_system(generators, target);
  if (!sol.ok()) throw MathError(a.name + ": multiplier is not an element on this window");
  FinVec out;
  for (std::size_t i = 0; i < window.size(); ++i) out.add(window[i], sol.coeffs[i]);
  return out;
}

bool multiplier_laws_hold(const BasedAlgebra& a, const Multiplier& m,
                          const std::vector<Key>& window, std::string* witness) {
  for (const auto& x : window) {
    FinVec bx = FinVec::basis(x);
    for (const auto& y : window) {
      FinVec by = FinVec::basis(y);
      FinVec xy = a.mul(bx, by);
      if (a.mul(m.right(bx), by) != a.mul(bx, m.left(by)) ||
          m.left(xy) != a.mul(m.left(bx), by) ||
          m.right(xy) != a.mul(bx, m.right(by))) {
        if (witness) *witness = "(" + x.str() + ", " + y.str() + ")";
        return false;
      }
    }
  }
  return true;
}

VerificationReport check_algebra(const BasedAlgebra& a,
                                 const std::vector<Key>& window) {
  VerificationReport rep(a.name);
  if (window.empty()) {
    rep.fail("algebra:nonempty", "empty basis window");
    rep.set_verdict("not-an-algebra");
    return rep;
  }

  {
    bool ok = true;
    std::string witness;
    for (const auto& x : window) {
      for (const auto& y : window) {
        FinVec xy = a.mult_basis(x, y);
        for (const auto& z : window) {
          FinVec lhs = a.mul(xy, FinVec::basis(z));
          FinVec rhs = a.mul(FinVec::basis(x), a.mult_basis(y, z));
          if (lhs != rhs) {
            ok = false;
            witness = x.str() + ", " + y.str() + ", " + z.str();
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    rep.check("algebra:assoc", ok, witness);
  }

  // Non-degeneracy: the left and right regular representations are
  // injective on the window.
  {
    auto stacked = [&](bool left) {
      std::vector<FinVec> vs;
      for (const auto& i : window) {
        FinVec vi;
        for (const auto& x : window) {
          FinVec img = left ? a.mult_basis(i, x) : a.mult_basis(x, i);
          for (const auto& [k, c] : img.terms()) vi.add(Key::concat(k, x), c);
        }
        vs.push_back(vi);
      }
      return vs;
    };
    bool left_ok = span_rank(stacked(true)) == window.size();
    bool right_ok = span_rank(stacked(false)) == window.size();
    rep.check("algebra:nondegenerate", left_ok && right_ok,
              left_ok ? "right annihilator" : "left annihilator");
  }

  // A^2 = A on the window.
  {
    std::vector<FinVec> products;
    for (const auto& x : window) {
      for (const auto& y : window) products.push_back(a.mult_basis(x, y));
    }
    std::size_t r = span_rank(products);
    rep.check("algebra:idempotent", r == window.size(), "",
              "rank " + std::to_string(r) + " of " + std::to_string(window.size()));
  }

  if (a.has_star()) {
    bool ok = true;
    std::string witness;
    for (const auto& x : window) {
      FinVec bx = FinVec::basis(x);
      FinVec ix = FinVec::basis(x, Scalar::i());
      if (a.star_of(a.star_of(bx)) != bx ||
          a.star_of(ix) != a.star_of(bx).scaled(-Scalar::i())) {
        ok = false;
        witness = x.str();
        break;
      }
      for (const auto& y : window) {
        FinVec by = FinVec::basis(y);
        if (a.star_of(a.mul(bx, by)) != a.mul(a.star_of(by), a.star_of(bx))) {
          ok = false;
          witness = "(" + x.str() + ", " + y.str() + ")";
          break;
        }
      }
      if (!ok) break;
    }
    rep.check("algebra:star", ok, witness);
  }

  if (a.unit) {
    bool ok = true;
    std::string witness;
    for (const auto& x : window) {
      FinVec bx = FinVec::basis(x);
      if (a.mul(*a.unit, bx) != bx || a.mul(bx, *a.unit) != bx) {
        ok = false;
        witness = x.str();
        break;
      }
    }
    rep.check("algebra:unit", ok, witness);
  }

  rep.set_verdict(rep.all_passed() ? "algebra" : "not-an-algebra");
  return rep;
}

}  // namespace wmha
