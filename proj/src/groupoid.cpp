#include "wmha/groupoid.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <set>

namespace wmha {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const std::string& where) {
  if (!j.is_object()) throw SpecError(where + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw SpecError(where + ": unknown key \"" + it.key() + "\"");
    }
  }
}

std::vector<Atom> parse_atoms(const json& j, const std::string& where) {
  if (!j.is_array()) throw SpecError(where + ": expected an array of strings");
  std::vector<Atom> out;
  std::set<Atom> seen;
  for (const auto& e : j) {
    if (!e.is_string()) throw SpecError(where + ": expected strings");
    Atom a = e.get<std::string>();
    if (!seen.insert(a).second) throw SpecError(where + ": duplicate \"" + a + "\"");
    out.push_back(std::move(a));
  }
  return out;
}

void reject_commas(const std::vector<Atom>& atoms, const std::string& where) {
  for (const auto& a : atoms) {
    if (a.find(',') != std::string::npos) {
      throw SpecError(where + ": token \"" + a + "\" must not contain a comma");
    }
  }
}

std::pair<Atom, Atom> split_pair_key(const std::string& key, const std::string& where) {
  auto c = key.find(',');
  if (c == std::string::npos || key.find(',', c + 1) != std::string::npos) {
    throw SpecError(where + ": key \"" + key + "\" is not of the form \"x,y\"");
  }
  return {key.substr(0, c), key.substr(c + 1)};
}

Atom pair_token(const Atom& y, const Atom& x) { return "(" + y + "," + x + ")"; }

// A finite group given by its multiplication table.
struct GroupTable {
  std::vector<Atom> elements;
  Atom unit;
  std::map<std::pair<Atom, Atom>, Atom> mul;

  const Atom& times(const Atom& a, const Atom& b) const {
    auto it = mul.find({a, b});
    if (it == mul.end()) throw SpecError("group table: missing product " + a + "," + b);
    return it->second;
  }
};

GroupTable parse_group(const json& j, const std::string& where) {
  require_keys(j, {"elements", "table", "unit"}, where);
  if (!j.contains("elements") || !j.contains("table") || !j.contains("unit")) {
    throw SpecError(where + ": needs elements/table/unit");
  }
  GroupTable g;
  g.elements = parse_atoms(j.at("elements"), where + ".elements");
  reject_commas(g.elements, where);
  g.unit = j.at("unit").get<std::string>();
  std::set<Atom> universe(g.elements.begin(), g.elements.end());
  if (!universe.count(g.unit)) throw SpecError(where + ": unit not in elements");
  for (auto it = j.at("table").begin(); it != j.at("table").end(); ++it) {
    auto [a, b] = split_pair_key(it.key(), where + ".table");
    Atom c = it.value().get<std::string>();
    if (!universe.count(a) || !universe.count(b) || !universe.count(c)) {
      throw SpecError(where + ".table: unknown element in \"" + it.key() + "\"");
    }
    g.mul[{a, b}] = c;
  }
  // A group: total, associative, unital, with inverses.
  for (const auto& a : g.elements) {
    for (const auto& b : g.elements) {
      if (!g.mul.count({a, b})) {
        throw SpecError(where + ": table is not total at " + a + "," + b);
      }
    }
  }
  for (const auto& a : g.elements) {
    if (g.times(g.unit, a) != a || g.times(a, g.unit) != a) {
      throw SpecError(where + ": unit law fails at " + a);
    }
    bool has_inverse = false;
    for (const auto& b : g.elements) {
      if (g.times(a, b) == g.unit && g.times(b, a) == g.unit) has_inverse = true;
    }
    if (!has_inverse) throw SpecError(where + ": no inverse for " + a);
  }
  for (const auto& a : g.elements) {
    for (const auto& b : g.elements) {
      for (const auto& c : g.elements) {
        if (g.times(g.times(a, b), c) != g.times(a, g.times(b, c))) {
          throw SpecError(where + ": not associative at " + a + "," + b + "," + c);
        }
      }
    }
  }
  return g;
}

Groupoid build_pair_like(const std::string& name, std::vector<Atom> points,
                         std::function<bool(const Atom&, const Atom&)> related) {
  auto elem = [points, related](int) {
    std::vector<Atom> out;
    for (const auto& y : points) {
      for (const auto& x : points) {
        if (related(y, x)) out.push_back(pair_token(y, x));
      }
    }
    return out;
  };
  auto parse = [](const Atom& t) -> std::pair<Atom, Atom> {
    auto c = t.find(',');
    return {t.substr(1, c - 1), t.substr(c + 1, t.size() - c - 2)};
  };
  auto src = [parse](const Atom& t) { auto [y, x] = parse(t); return pair_token(x, x); };
  auto tgt = [parse](const Atom& t) { auto [y, x] = parse(t); return pair_token(y, y); };
  auto inv = [parse](const Atom& t) { auto [y, x] = parse(t); return pair_token(x, y); };
  auto comp = [parse](const Atom& p, const Atom& q) -> std::optional<Atom> {
    auto [z, y1] = parse(p);
    auto [y2, x] = parse(q);
    if (y1 != y2) return std::nullopt;
    return pair_token(z, x);
  };
  return Groupoid(name, true, elem, src, tgt, inv, comp);
}

// Pair groupoid over the natural numbers; window w uses points 0..w-1.
Groupoid build_nat_pair() {
  auto elem = [](int window) {
    if (window <= 0) window = 1;
    std::vector<Atom> out;
    for (int y = 0; y < window; ++y) {
      for (int x = 0; x < window; ++x) {
        out.push_back(pair_token(std::to_string(y), std::to_string(x)));
      }
    }
    return out;
  };
  auto parse = [](const Atom& t) -> std::pair<Atom, Atom> {
    auto c = t.find(',');
    return {t.substr(1, c - 1), t.substr(c + 1, t.size() - c - 2)};
  };
  auto src = [parse](const Atom& t) { auto [y, x] = parse(t); return pair_token(x, x); };
  auto tgt = [parse](const Atom& t) { auto [y, x] = parse(t); return pair_token(y, y); };
  auto inv = [parse](const Atom& t) { auto [y, x] = parse(t); return pair_token(x, y); };
  auto comp = [parse](const Atom& p, const Atom& q) -> std::optional<Atom> {
    auto [z, y1] = parse(p);
    auto [y2, x] = parse(q);
    if (y1 != y2) return std::nullopt;
    return pair_token(z, x);
  };
  return Groupoid("pair(nat)", false, elem, src, tgt, inv, comp);
}

Groupoid build_action(const json& spec) {
  require_keys(spec, {"kind", "group", "points", "action"}, "action spec");
  GroupTable h = parse_group(spec.at("group"), "action.group");
  std::vector<Atom> points = parse_atoms(spec.at("points"), "action.points");
  reject_commas(points, "action.points");
  std::set<Atom> point_set(points.begin(), points.end());

  std::map<std::pair<Atom, Atom>, Atom> act;  // (h, x) -> hx
  for (auto it = spec.at("action").begin(); it != spec.at("action").end(); ++it) {
    auto [g, x] = split_pair_key(it.key(), "action.action");
    Atom y = it.value().get<std::string>();
    if (!point_set.count(x) || !point_set.count(y)) {
      throw SpecError("action: unknown point in \"" + it.key() + "\"");
    }
    act[{g, x}] = y;
  }
  auto apply = [act](const Atom& g, const Atom& x) -> Atom {
    auto it = act.find({g, x});
    if (it == act.end()) throw SpecError("action: missing value at " + g + "," + x);
    return it->second;
  };
  // Left action laws: e.x = x and (kh).x = k.(h.x).
  for (const auto& x : points) {
    if (apply(h.unit, x) != x) throw SpecError("action: e.x != x at " + x);
    for (const auto& k : h.elements) {
      for (const auto& g : h.elements) {
        if (apply(h.times(k, g), x) != apply(k, apply(g, x))) {
          throw SpecError("action: (kh)x != k(hx) at " + k + "," + g + "," + x);
        }
      }
    }
  }

  auto token = [](const Atom& y, const Atom& g, const Atom& x) {
    return "(" + y + "," + g + "," + x + ")";
  };
  auto parse = [](const Atom& t) -> std::array<Atom, 3> {
    auto c1 = t.find(',');
    auto c2 = t.find(',', c1 + 1);
    return {t.substr(1, c1 - 1), t.substr(c1 + 1, c2 - c1 - 1),
            t.substr(c2 + 1, t.size() - c2 - 2)};
  };
  auto elems = [points, h, apply, token](int) {
    std::vector<Atom> out;
    for (const auto& g : h.elements) {
      for (const auto& x : points) out.push_back(token(apply(g, x), g, x));
    }
    return out;
  };
  auto unit_tok = [h, token](const Atom& x) { return token(x, h.unit, x); };
  auto src = [parse, unit_tok](const Atom& t) { return unit_tok(parse(t)[2]); };
  auto tgt = [parse, unit_tok](const Atom& t) { return unit_tok(parse(t)[0]); };
  // Group inverse lookup.
  auto ginv = [h](const Atom& g) -> Atom {
    for (const auto& b : h.elements) {
      if (h.times(g, b) == h.unit) return b;
    }
    throw SpecError("group: no inverse");
  };
  auto inv = [parse, ginv, token](const Atom& t) {
    auto [y, g, x] = parse(t);
    return token(x, ginv(g), y);
  };
  auto comp = [parse, h, token](const Atom& p, const Atom& q) -> std::optional<Atom> {
    auto [z, k, y1] = parse(p);
    auto [y2, g, x] = parse(q);
    if (y1 != y2) return std::nullopt;
    return token(z, h.times(k, g), x);
  };
  return Groupoid("action", true, elems, src, tgt, inv, comp);
}

Groupoid build_group(const json& spec) {
  require_keys(spec, {"kind", "elements", "table", "unit"}, "group spec");
  json inner;
  inner["elements"] = spec.at("elements");
  inner["table"] = spec.at("table");
  inner["unit"] = spec.at("unit");
  GroupTable h = parse_group(inner, "group");
  auto ginv = [h](const Atom& g) -> Atom {
    for (const auto& b : h.elements) {
      if (h.times(g, b) == h.unit) return b;
    }
    throw SpecError("group: no inverse");
  };
  auto elems = [h](int) { return h.elements; };
  auto src = [h](const Atom&) { return h.unit; };
  auto tgt = [h](const Atom&) { return h.unit; };
  auto inv = [ginv](const Atom& g) { return ginv(g); };
  auto comp = [h](const Atom& a, const Atom& b) -> std::optional<Atom> {
    return h.times(a, b);
  };
  return Groupoid("group", true, elems, src, tgt, inv, comp);
}

Groupoid build_table(const json& spec) {
  require_keys(spec, {"kind", "elements", "source", "target", "inverse", "compose"},
               "table spec");
  for (const char* k : {"elements", "source", "target", "inverse", "compose"}) {
    if (!spec.contains(k)) throw SpecError(std::string("table spec: missing ") + k);
  }
  auto elements = parse_atoms(spec.at("elements"), "table.elements");
  reject_commas(elements, "table.elements");
  std::set<Atom> universe(elements.begin(), elements.end());

  auto parse_map = [&](const char* field) {
    std::map<Atom, Atom> m;
    for (auto it = spec.at(field).begin(); it != spec.at(field).end(); ++it) {
      Atom v = it.value().get<std::string>();
      if (!universe.count(it.key()) || !universe.count(v)) {
        throw SpecError(std::string("table.") + field + ": unknown element");
      }
      m[it.key()] = v;
    }
    for (const auto& e : elements) {
      if (!m.count(e)) {
        throw SpecError(std::string("table.") + field + ": missing " + e);
      }
    }
    return m;
  };
  auto src = parse_map("source");
  auto tgt = parse_map("target");
  auto inv = parse_map("inverse");

  std::map<std::pair<Atom, Atom>, Atom> comp;
  for (auto it = spec.at("compose").begin(); it != spec.at("compose").end(); ++it) {
    auto [p, q] = split_pair_key(it.key(), "table.compose");
    Atom r = it.value().get<std::string>();
    if (!universe.count(p) || !universe.count(q) || !universe.count(r)) {
      throw SpecError("table.compose: unknown element in \"" + it.key() + "\"");
    }
    comp[{p, q}] = r;
  }

  auto elem_fn = [elements](int) { return elements; };
  auto src_fn = [src](const Atom& p) { return src.at(p); };
  auto tgt_fn = [tgt](const Atom& p) { return tgt.at(p); };
  auto inv_fn = [inv](const Atom& p) { return inv.at(p); };
  auto comp_fn = [comp](const Atom& p, const Atom& q) -> std::optional<Atom> {
    auto it = comp.find({p, q});
    if (it == comp.end()) return std::nullopt;
    return it->second;
  };
  return Groupoid("table", true, elem_fn, src_fn, tgt_fn, inv_fn, comp_fn);
}

Groupoid build_disjoint_union(const json& spec) {
  require_keys(spec, {"kind", "parts"}, "disjoint_union spec");
  if (!spec.contains("parts") || !spec.at("parts").is_array() ||
      spec.at("parts").empty()) {
    throw SpecError("disjoint_union: needs a non-empty parts array");
  }
  auto parts = std::make_shared<std::vector<Groupoid>>();
  for (const auto& p : spec.at("parts")) parts->push_back(build_groupoid(p));
  bool finite = true;
  for (const auto& p : *parts) finite = finite && p.finite();

  auto tag = [](std::size_t i, const Atom& a) {
    return "u" + std::to_string(i) + ":" + a;
  };
  auto untag = [](const Atom& t) -> std::pair<std::size_t, Atom> {
    auto c = t.find(':');
    if (t.empty() || t[0] != 'u' || c == std::string::npos) {
      throw MathError("disjoint union: foreign element " + t);
    }
    return {std::stoul(t.substr(1, c - 1)), t.substr(c + 1)};
  };
  auto elems = [parts, tag](int w) {
    std::vector<Atom> out;
    for (std::size_t i = 0; i < parts->size(); ++i) {
      for (const auto& a : (*parts)[i].elements(w)) out.push_back(tag(i, a));
    }
    return out;
  };
  auto src = [parts, tag, untag](const Atom& t) {
    auto [i, a] = untag(t);
    return tag(i, (*parts)[i].source(a));
  };
  auto tgt = [parts, tag, untag](const Atom& t) {
    auto [i, a] = untag(t);
    return tag(i, (*parts)[i].target(a));
  };
  auto inv = [parts, tag, untag](const Atom& t) {
    auto [i, a] = untag(t);
    return tag(i, (*parts)[i].inverse(a));
  };
  auto comp = [parts, tag, untag](const Atom& p, const Atom& q) -> std::optional<Atom> {
    auto [i, a] = untag(p);
    auto [j, b] = untag(q);
    if (i != j) return std::nullopt;
    auto r = (*parts)[i].try_compose(a, b);
    if (!r) return std::nullopt;
    return tag(i, *r);
  };
  return Groupoid("disjoint_union", finite, elems, src, tgt, inv, comp);
}

}  // namespace

Atom Groupoid::compose(const Atom& p, const Atom& q) const {
  auto r = compose_(p, q);
  if (!r) throw MathError("compose undefined: " + p + " * " + q);
  return *r;
}

std::vector<Atom> Groupoid::units(int window) const {
  std::vector<Atom> out;
  std::set<Atom> seen;
  for (const auto& p : elements(window)) {
    Atom u = source(p);
    if (seen.insert(u).second) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Groupoid build_groupoid(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("kind")) {
    throw SpecError("groupoid spec: missing kind");
  }
  std::string kind = spec.at("kind").get<std::string>();
  if (kind == "pair") {
    require_keys(spec, {"kind", "points"}, "pair spec");
    if (!spec.contains("points")) throw SpecError("pair spec: missing points");
    if (spec.at("points").is_string()) {
      if (spec.at("points").get<std::string>() != "nat") {
        throw SpecError("pair spec: points must be an array or \"nat\"");
      }
      return build_nat_pair();
    }
    auto points = parse_atoms(spec.at("points"), "pair.points");
    return build_pair_like("pair", points, [](const Atom&, const Atom&) { return true; });
  }
  if (kind == "equivalence") {
    require_keys(spec, {"kind", "points", "classes"}, "equivalence spec");
    auto points = parse_atoms(spec.at("points"), "equivalence.points");
    if (!spec.contains("classes") || !spec.at("classes").is_array()) {
      throw SpecError("equivalence spec: missing classes");
    }
    std::map<Atom, int> cls;
    int idx = 0;
    for (const auto& c : spec.at("classes")) {
      for (const auto& a : parse_atoms(c, "equivalence.classes")) {
        if (cls.count(a)) throw SpecError("equivalence: point in two classes: " + a);
        cls[a] = idx;
      }
      ++idx;
    }
    for (const auto& p : points) {
      if (!cls.count(p)) throw SpecError("equivalence: point not classified: " + p);
    }
    if (cls.size() != points.size()) {
      throw SpecError("equivalence: classes mention unknown points");
    }
    return build_pair_like("equivalence", points, [cls](const Atom& y, const Atom& x) {
      return cls.at(y) == cls.at(x);
    });
  }
  if (kind == "action") return build_action(spec);
  if (kind == "group") return build_group(spec);
  if (kind == "table") return build_table(spec);
  if (kind == "disjoint_union") return build_disjoint_union(spec);
  throw SpecError("groupoid spec: unknown kind \"" + kind + "\"");
}

VerificationReport validate_groupoid(const Groupoid& g,
                                     const std::vector<Atom>& window) {
  VerificationReport rep(g.name());
  std::set<Atom> in_window(window.begin(), window.end());

  // compose defined iff source(p) = target(q); product source/target laws.
  {
    bool ok = true;
    std::string witness;
    for (const auto& p : window) {
      for (const auto& q : window) {
        auto r = g.try_compose(p, q);
        bool should = g.source(p) == g.target(q);
        if (should != r.has_value()) {
          ok = false;
          witness = "(" + p + ", " + q + ")";
          break;
        }
        if (r && (g.target(*r) != g.target(p) || g.source(*r) != g.source(q))) {
          ok = false;
          witness = "(" + p + ", " + q + ") -> " + *r;
          break;
        }
      }
      if (!ok) break;
    }
    rep.check("groupoid:composable-iff", ok, witness);
  }

  // Associativity wherever defined.
  {
    bool ok = true;
    std::string witness;
    for (const auto& p : window) {
      for (const auto& q : window) {
        if (!g.composable(p, q)) continue;
        auto pq = g.try_compose(p, q);
        for (const auto& r : window) {
          bool left_def = pq && g.composable(*pq, r);
          bool right_def = g.composable(q, r);
          if (left_def != right_def) {
            ok = false;
            witness = "(" + p + ", " + q + ", " + r + ")";
            break;
          }
          if (!left_def) continue;
          auto lhs = g.try_compose(*pq, r);
          auto qr = g.try_compose(q, r);
          auto rhs = qr ? g.try_compose(p, *qr) : std::nullopt;
          if (!lhs || !rhs || *lhs != *rhs) {
            ok = false;
            witness = "(" + p + ", " + q + ", " + r + ")";
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    rep.check("groupoid:assoc", ok, witness);
  }

  // p p^-1 p = p and p^-1 p p^-1 = p^-1; inverse swaps source and target.
  {
    bool ok = true;
    std::string witness;
    for (const auto& p : window) {
      Atom pi = g.inverse(p);
      if (g.source(p) != g.target(pi) || g.target(p) != g.source(pi)) {
        ok = false;
        witness = p;
        break;
      }
      auto a = g.try_compose(p, pi);
      auto b = a ? g.try_compose(*a, p) : std::nullopt;
      if (!b || *b != p) {
        ok = false;
        witness = p;
        break;
      }
      auto c = g.try_compose(pi, p);
      auto d = c ? g.try_compose(*c, pi) : std::nullopt;
      if (!d || *d != pi) {
        ok = false;
        witness = p;
        break;
      }
    }
    rep.check("groupoid:inverse", ok, witness);
  }

  // p p^-1 = target unit, p^-1 p = source unit; units behave as units.
  {
    bool ok = true;
    std::string witness;
    for (const auto& p : window) {
      Atom pi = g.inverse(p);
      auto t = g.try_compose(p, pi);
      auto s = g.try_compose(pi, p);
      if (!t || *t != g.target(p) || !s || *s != g.source(p)) {
        ok = false;
        witness = p;
        break;
      }
      auto up = g.try_compose(g.target(p), p);
      auto pu = g.try_compose(p, g.source(p));
      if (!up || *up != p || !pu || *pu != p) {
        ok = false;
        witness = p;
        break;
      }
    }
    rep.check("groupoid:units-absorb", ok, witness);
  }

  // Units are fixed by inverse and are exactly the sources/targets seen.
  {
    bool ok = true;
    std::string witness;
    for (const auto& p : window) {
      for (const Atom& u : {g.source(p), g.target(p)}) {
        if (g.inverse(u) != u || !g.is_unit(u)) {
          ok = false;
          witness = p;
          break;
        }
      }
      if (!ok) break;
    }
    rep.check("groupoid:units", ok, witness);
  }

  // Finite case: closure of the element set under the operations.
  if (g.finite()) {
    bool ok = true;
    std::string witness;
    for (const auto& p : window) {
      if (!in_window.count(g.inverse(p)) || !in_window.count(g.source(p)) ||
          !in_window.count(g.target(p))) {
        ok = false;
        witness = p;
        break;
      }
      for (const auto& q : window) {
        auto r = g.try_compose(p, q);
        if (r && !in_window.count(*r)) {
          ok = false;
          witness = "(" + p + ", " + q + ")";
          break;
        }
      }
      if (!ok) break;
    }
    rep.check("groupoid:closure", ok, witness);
  }

  rep.set_verdict(rep.all_passed() ? "valid-groupoid" : "invalid-groupoid");
  return rep;
}

std::vector<Atom> support_closure(const Groupoid& g, std::vector<Atom> seed,
                                  int steps) {
  std::set<Atom> out(seed.begin(), seed.end());
  for (int round = 0; round < steps; ++round) {
    std::set<Atom> next = out;
    for (const auto& p : out) {
      next.insert(g.inverse(p));
      next.insert(g.source(p));
      next.insert(g.target(p));
      for (const auto& q : out) {
        auto r = g.try_compose(p, q);
        if (r) next.insert(*r);
      }
    }
    if (next == out) break;
    out = std::move(next);
  }
  return {out.begin(), out.end()};
}

}  // namespace wmha
