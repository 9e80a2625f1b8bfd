#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wmha/basis.hpp"
#include "wmha/rng.hpp"
#include "wmha/scalar.hpp"

using namespace wmha;

TEST_CASE("rational arithmetic is exact") {
  Scalar half = Scalar::of(1, 2);
  Scalar third = Scalar::of(1, 3);
  CHECK((half + third) == Scalar::of(5, 6));
  CHECK((half * third) == Scalar::of(1, 6));
  CHECK((half - half).is_zero());
  CHECK(Scalar::of(2, 4) == half);  // canonical form
}

TEST_CASE("gaussian rational conjugation and i^2 = -1") {
  Scalar z = Scalar(mpq_class(2), mpq_class(3));  // 2 + 3i
  CHECK(z.conj() == Scalar(mpq_class(2), mpq_class(-3)));
  CHECK(z.conj().conj() == z);
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(z.str() == "2+3i");
  CHECK(Scalar::i().str() == "i");
}

TEST_CASE("inverse and division by zero") {
  Scalar z = Scalar(mpq_class(1), mpq_class(1));
  CHECK(z * z.inverse() == Scalar(1));
  CHECK_THROWS_AS(Scalar().inverse(), MathError);
}

TEST_CASE("field axioms on seeded samples") {
  SeededRng rng(17);
  for (int t = 0; t < 100; ++t) {
    Scalar a = rng.small_scalar(), b = rng.small_scalar(), c = rng.small_scalar();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("rational literal parsing") {
  CHECK(parse_rational("3/6") == mpq_class(1, 2));
  CHECK(parse_rational("-2") == mpq_class(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), SpecError);
  CHECK_THROWS_AS(parse_rational("x"), SpecError);
  CHECK_THROWS_AS(parse_rational(""), SpecError);
}

TEST_CASE("finvec stays in canonical sparse form") {
  FinVec v;
  v.add(Key("p"), Scalar(1));
  v.add(Key("p"), Scalar(-1));
  CHECK(v.is_zero());
  v.add(Key("q"), Scalar(2));
  CHECK(v.support_size() == 1);
  CHECK(v.coeff(Key("q")) == Scalar(2));
  CHECK(v.coeff(Key("p")).is_zero());
  FinVec w = v - v;
  CHECK(w.is_zero());
  CHECK(w == FinVec());
}

TEST_CASE("tensor product is bilinear on basis vectors") {
  FinVec p = FinVec::basis(Key("p"));
  FinVec q = FinVec::basis(Key("q"));
  FinVec r = FinVec::basis(Key("r"));
  CHECK(tensor(p, q) == FinVec::basis(Key("p", "q")));
  CHECK(tensor(FinVec(), q).is_zero());
  CHECK(tensor(p + q, r) ==
        FinVec::basis(Key("p", "r")) + FinVec::basis(Key("q", "r")));
}

TEST_CASE("leg maps and flips") {
  FinVec v = FinVec::basis(Key("a", "b", "c"), Scalar(2));
  FinVec swapped = permute_legs(v, {2, 1, 0});
  CHECK(swapped == FinVec::basis(Key("c", "b", "a"), Scalar(2)));
  CHECK(flip(FinVec::basis(Key("x", "y"))) == FinVec::basis(Key("y", "x")));

  auto dup = [](const Key& k) {
    return FinVec::basis(Key(k.at(0), k.at(0)));
  };
  FinVec out = map_legs(FinVec::basis(Key("a", "b")), 1, 1, dup);
  CHECK(out == FinVec::basis(Key("a", "b", "b")));
}

TEST_CASE("conjugation of coefficients") {
  FinVec v = FinVec::basis(Key("p"), Scalar::i());
  CHECK(v.conj_coeffs() == FinVec::basis(Key("p"), -Scalar::i()));
}
