#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "wmha/groupoid.hpp"

using namespace wmha;
using nlohmann::json;

namespace {
json pair_spec(std::vector<std::string> pts) {
  return json{{"kind", "pair"}, {"points", pts}};
}
json z2_spec() {
  return json{{"kind", "group"},
              {"elements", {"e", "g"}},
              {"table", {{"e,e", "e"}, {"e,g", "g"}, {"g,e", "g"}, {"g,g", "e"}}},
              {"unit", "e"}};
}
}  // namespace

TEST_CASE("pair groupoid composition: (2,1)(1,2) = (2,2)") {
  Groupoid g = build_groupoid(pair_spec({"1", "2"}));
  CHECK(g.compose("(2,1)", "(1,2)") == "(2,2)");
  CHECK(g.source("(2,1)") == "(1,1)");
  CHECK(g.target("(2,1)") == "(2,2)");
  CHECK(g.inverse("(2,1)") == "(1,2)");
  CHECK_FALSE(g.composable("(2,1)", "(2,1)"));
  CHECK_THROWS_AS(g.compose("(2,1)", "(2,1)"), MathError);
}

TEST_CASE("action groupoid of Z/2 swapping two points") {
  json spec = {{"kind", "action"},
               {"group",
                {{"elements", {"e", "g"}},
                 {"table", {{"e,e", "e"}, {"e,g", "g"}, {"g,e", "g"}, {"g,g", "e"}}},
                 {"unit", "e"}}},
               {"points", {"1", "2"}},
               {"action", {{"e,1", "1"}, {"e,2", "2"}, {"g,1", "2"}, {"g,2", "1"}}}};
  Groupoid g = build_groupoid(spec);
  CHECK(g.compose("(1,g,2)", "(2,g,1)") == "(1,e,1)");
  CHECK(g.elements().size() == 4);
  CHECK(validate_groupoid(g, g.elements()).all_passed());
}

TEST_CASE("a group is a one-unit groupoid with a total product") {
  json spec = {{"kind", "group"},
               {"elements", {"e", "g", "h"}},
               {"table",
                {{"e,e", "e"}, {"e,g", "g"}, {"e,h", "h"},
                 {"g,e", "g"}, {"g,g", "h"}, {"g,h", "e"},
                 {"h,e", "h"}, {"h,g", "e"}, {"h,h", "g"}}},
               {"unit", "e"}};
  Groupoid g = build_groupoid(spec);
  CHECK(g.units() == std::vector<Atom>{"e"});
  for (const auto& p : g.elements()) {
    for (const auto& q : g.elements()) CHECK(g.composable(p, q));
  }
  CHECK(validate_groupoid(g, g.elements()).all_passed());
}

TEST_CASE("pair groupoid counting: n^2 elements, n units, n^3 composable pairs") {
  for (std::size_t n : {2u, 3u}) {
    std::vector<std::string> pts;
    for (std::size_t i = 1; i <= n; ++i) pts.push_back(std::to_string(i));
    Groupoid g = build_groupoid(pair_spec(pts));
    auto elems = g.elements();
    CHECK(elems.size() == n * n);
    CHECK(g.units().size() == n);
    std::size_t composable = 0;
    for (const auto& p : elems) {
      for (const auto& q : elems) {
        if (g.composable(p, q)) ++composable;
      }
    }
    CHECK(composable == n * n * n);
  }
}

TEST_CASE("validation catches a corrupted composition table") {
  // pair groupoid on two points, with (2,1)(1,2) corrupted to (1,1):
  // the product must have the target of its left factor.
  json spec = {{"kind", "table"},
               {"elements", {"a", "b", "c", "d"}},  // a=(1,1) b=(1,2) c=(2,1) d=(2,2)
               {"source", {{"a", "a"}, {"b", "d"}, {"c", "a"}, {"d", "d"}}},
               {"target", {{"a", "a"}, {"b", "a"}, {"c", "d"}, {"d", "d"}}},
               {"inverse", {{"a", "a"}, {"b", "c"}, {"c", "b"}, {"d", "d"}}},
               {"compose",
                {{"a,a", "a"}, {"a,b", "b"}, {"b,c", "a"}, {"b,d", "b"},
                 {"c,a", "c"}, {"c,b", "a"},  // corrupted: should be d
                 {"d,c", "c"}, {"d,d", "d"}}}};
  Groupoid g = build_groupoid(spec);
  auto rep = validate_groupoid(g, g.elements());
  CHECK_FALSE(rep.all_passed());
  const CheckResult* chk = rep.find("groupoid:composable-iff");
  REQUIRE(chk != nullptr);
  CHECK(chk->status == CheckResult::Status::Fail);
  CHECK_FALSE(chk->witness.empty());
}

TEST_CASE("lazy pair groupoid over the naturals validates on a window") {
  Groupoid g = build_groupoid(json{{"kind", "pair"}, {"points", "nat"}});
  CHECK_FALSE(g.finite());
  auto window = g.elements(5);
  CHECK(window.size() == 25);
  CHECK(validate_groupoid(g, window).all_passed());
}

TEST_CASE("equivalence groupoid composes only within classes") {
  json spec = {{"kind", "equivalence"},
               {"points", {"1", "2", "a"}},
               {"classes", {{"1", "2"}, {"a"}}}};
  Groupoid g = build_groupoid(spec);
  CHECK(g.elements().size() == 5);  // 4 in the 2-class, 1 unit in the 1-class
  CHECK(validate_groupoid(g, g.elements()).all_passed());
}

TEST_CASE("disjoint union keeps the parts apart") {
  json spec = {{"kind", "disjoint_union"}, {"parts", {z2_spec(), z2_spec()}}};
  Groupoid g = build_groupoid(spec);
  CHECK(g.elements().size() == 4);
  CHECK(g.units().size() == 2);
  CHECK_FALSE(g.composable("u0:e", "u1:e"));
  CHECK(g.compose("u0:g", "u0:g") == "u0:e");
  CHECK(validate_groupoid(g, g.elements()).all_passed());
}

TEST_CASE("malformed specs are rejected with the violated constraint") {
  CHECK_THROWS_AS(build_groupoid(json{{"kind", "nope"}}), SpecError);
  CHECK_THROWS_AS(build_groupoid(json{{"kind", "pair"}}), SpecError);
  CHECK_THROWS_AS(build_groupoid(json{{"kind", "pair"},
                                      {"points", {"1"}},
                                      {"extra", 1}}),
                  SpecError);  // unknown keys rejected
  // action that is not a left action: g.(g.1) != (gg).1
  json bad_action = {{"kind", "action"},
                     {"group",
                      {{"elements", {"e", "g"}},
                       {"table",
                        {{"e,e", "e"}, {"e,g", "g"}, {"g,e", "g"}, {"g,g", "e"}}},
                       {"unit", "e"}}},
                     {"points", {"1", "2"}},
                     {"action", {{"e,1", "1"}, {"e,2", "2"}, {"g,1", "2"}, {"g,2", "2"}}}};
  CHECK_THROWS_AS(build_groupoid(bad_action), SpecError);
  // group table that is not associative
  json bad_group = {{"kind", "group"},
                    {"elements", {"e", "g"}},
                    {"table",
                     {{"e,e", "e"}, {"e,g", "g"}, {"g,e", "g"}, {"g,g", "g"}}},
                    {"unit", "e"}};
  CHECK_THROWS_AS(build_groupoid(bad_group), SpecError);
}

TEST_CASE("support closure reaches inverses, units and products") {
  Groupoid g = build_groupoid(json{{"kind", "pair"}, {"points", "nat"}});
  auto cl = support_closure(g, {"(0,1)"});
  // must contain the inverse, both units, and products like (0,1)(1,0)
  auto has = [&cl](const Atom& a) {
    return std::find(cl.begin(), cl.end(), a) != cl.end();
  };
  CHECK(has("(1,0)"));
  CHECK(has("(0,0)"));
  CHECK(has("(1,1)"));
}
