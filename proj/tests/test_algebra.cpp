#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "wmha/families.hpp"
#include "wmha/rng.hpp"

using namespace wmha;
using nlohmann::json;

namespace {
Groupoid pair2() {
  return build_groupoid(json{{"kind", "pair"}, {"points", {"1", "2"}}});
}
Groupoid natpair() {
  return build_groupoid(json{{"kind", "pair"}, {"points", "nat"}});
}
}  // namespace

TEST_CASE("K(G) on the 2-point pair groupoid is a 4-dim unital *-algebra") {
  Structure s = build_KG(pair2());
  auto window = s.alg.basis();
  REQUIRE(window.size() == 4);
  auto rep = check_algebra(s.alg, window);
  CHECK(rep.all_passed());
  // commutative, pointwise product
  for (const auto& x : window) {
    for (const auto& y : window) {
      CHECK(s.alg.mult_basis(x, y) == s.alg.mult_basis(y, x));
    }
  }
}

TEST_CASE("CG on the 2-point pair groupoid is non-degenerate") {
  Structure s = build_CG(pair2());
  auto rep = check_algebra(s.alg, s.alg.basis());
  CHECK(rep.all_passed());
  const CheckResult* nd = rep.find("algebra:nondegenerate");
  REQUIRE(nd != nullptr);
  CHECK(nd->status == CheckResult::Status::Pass);
}

TEST_CASE("a zero row in the left regular representation is caught") {
  BasedAlgebra a;
  a.name = "degenerate";
  std::vector<Key> basis = {Key("a"), Key("b")};
  a.basis_fn = [basis](int) { return basis; };
  a.mult_basis = [](const Key& x, const Key& y) {
    // a annihilates everything; b acts as an idempotent.
    if (x == Key("b") && y == Key("b")) return FinVec::basis(Key("b"));
    return FinVec();
  };
  auto rep = check_algebra(a, basis);
  const CheckResult* nd = rep.find("algebra:nondegenerate");
  REQUIRE(nd != nullptr);
  CHECK(nd->status == CheckResult::Status::Fail);
}

TEST_CASE("from_element of a unit delta is idempotent") {
  Structure s = build_KG(pair2());
  FinVec du = FinVec::basis(Key("(1,1)"));
  Multiplier m = from_element(s.alg, du);
  Multiplier mm = multiplier_product(m, m);
  for (const auto& k : s.alg.basis()) {
    CHECK(mm.left(FinVec::basis(k)) == m.left(FinVec::basis(k)));
    CHECK(mm.right(FinVec::basis(k)) == m.right(FinVec::basis(k)));
  }
}

TEST_CASE("the unit of finite CG is the sum over all units") {
  Structure s = build_CG(pair2());
  REQUIRE(s.alg.unit.has_value());
  CHECK(*s.alg.unit ==
        FinVec::basis(Key("(1,1)")) + FinVec::basis(Key("(2,2)")));
  for (const auto& k : s.alg.basis()) {
    CHECK(s.alg.mul(*s.alg.unit, FinVec::basis(k)) == FinVec::basis(k));
    CHECK(s.alg.mul(FinVec::basis(k), *s.alg.unit) == FinVec::basis(k));
  }
}

TEST_CASE("from_element is an algebra embedding") {
  Structure s = build_CG(pair2());
  auto window = s.alg.basis();
  for (const auto& x : window) {
    for (const auto& y : window) {
      Multiplier lhs = multiplier_product(from_element(s.alg, FinVec::basis(x)),
                                          from_element(s.alg, FinVec::basis(y)));
      Multiplier rhs = from_element(s.alg, s.alg.mult_basis(x, y));
      for (const auto& z : window) {
        CHECK(lhs.left(FinVec::basis(z)) == rhs.left(FinVec::basis(z)));
        CHECK(lhs.right(FinVec::basis(z)) == rhs.right(FinVec::basis(z)));
      }
    }
  }
}

TEST_CASE("every multiplier of a finite unital algebra is an element") {
  Structure s = build_CG(pair2());
  auto window = s.alg.basis();
  SeededRng rng(5);
  for (int t = 0; t < 10; ++t) {
    FinVec mystery = rng.element(window);
    Multiplier m = from_element(s.alg, mystery);
    CHECK(element_of(s.alg, m, window) == mystery);
  }
}

TEST_CASE("multiplier interchange law on seeded random pairs of a lazy algebra") {
  Structure s = build_KG(natpair());
  auto window = s.alg.basis(4);
  SeededRng rng(9);
  for (int t = 0; t < 100; ++t) {
    FinVec el = rng.element(window);
    Multiplier m = from_element(s.alg, el);
    std::string w;
    CHECK(multiplier_laws_hold(s.alg, m, {window[rng.below(window.size())],
                                          window[rng.below(window.size())]},
                               &w));
  }
}

TEST_CASE("opposite of a commutative algebra has identical structure constants") {
  Structure s = build_KG(pair2());
  BasedAlgebra op = opposite(s.alg);
  for (const auto& x : s.alg.basis()) {
    for (const auto& y : s.alg.basis()) {
      CHECK(op.mult_basis(x, y) == s.alg.mult_basis(x, y));
    }
  }
}

TEST_CASE("op of op restores the structure constants") {
  Structure s = build_CG(pair2());
  BasedAlgebra opop = opposite(opposite(s.alg));
  for (const auto& x : s.alg.basis()) {
    for (const auto& y : s.alg.basis()) {
      CHECK(opop.mult_basis(x, y) == s.alg.mult_basis(x, y));
    }
  }
}

TEST_CASE("tensor square of K(G) passes the algebra checks") {
  Structure s = build_KG(pair2());
  BasedAlgebra sq = tensor_square(s.alg);
  auto rep = check_algebra(sq, sq.basis());
  CHECK(rep.all_passed());
}
