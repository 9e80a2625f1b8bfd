#include "wmha/io.hpp"

#include <map>
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

FinVec parse_element(const json& j, const std::set<Atom>& basis,
                     const std::string& where, int key_arity = 1) {
  if (!j.is_array()) throw SpecError(where + ": expected an array of terms");
  FinVec v;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != static_cast<std::size_t>(key_arity) + 2) {
      throw SpecError(where + ": term must be [keys..., re, im]");
    }
    std::vector<Atom> parts;
    for (int i = 0; i < key_arity; ++i) {
      Atom a = term[i].get<std::string>();
      if (!basis.count(a)) throw SpecError(where + ": unknown basis token " + a);
      parts.push_back(a);
    }
    Scalar c = Scalar::parse(term[key_arity].get<std::string>(),
                             term[key_arity + 1].get<std::string>());
    v.add(Key(parts), c);
  }
  return v;
}

}  // namespace

BasedAlgebra parse_algebra(const json& j) {
  require_keys(j, {"basis", "mult", "star", "unit", "delta", "eps", "antipode"},
               "algebra");
  if (!j.contains("basis") || !j.contains("mult")) {
    throw SpecError("algebra: needs basis and mult");
  }
  std::vector<Atom> basis;
  std::set<Atom> bset;
  for (const auto& e : j.at("basis")) {
    Atom a = e.get<std::string>();
    if (a.find(',') != std::string::npos) {
      throw SpecError("algebra: basis token \"" + a + "\" must not contain a comma");
    }
    if (!bset.insert(a).second) throw SpecError("algebra: duplicate basis token " + a);
    basis.push_back(a);
  }

  auto table = std::make_shared<std::map<std::pair<Atom, Atom>, FinVec>>();
  for (auto it = j.at("mult").begin(); it != j.at("mult").end(); ++it) {
    auto c = it.key().find(',');
    if (c == std::string::npos) throw SpecError("algebra.mult: key must be \"i,j\"");
    Atom x = it.key().substr(0, c), y = it.key().substr(c + 1);
    if (!bset.count(x) || !bset.count(y)) {
      throw SpecError("algebra.mult: unknown token in \"" + it.key() + "\"");
    }
    (*table)[{x, y}] = parse_element(it.value(), bset, "algebra.mult");
  }

  BasedAlgebra a;
  a.name = "table-algebra";
  a.finite = true;
  std::vector<Key> keys;
  keys.reserve(basis.size());
  for (const auto& b : basis) keys.push_back(Key(b));
  a.basis_fn = [keys](int) { return keys; };
  a.mult_basis = [table](const Key& x, const Key& y) {
    auto it = table->find({x.at(0), y.at(0)});
    return it == table->end() ? FinVec() : it->second;
  };
  if (j.contains("star")) {
    auto star = std::make_shared<std::map<Atom, FinVec>>();
    for (auto it = j.at("star").begin(); it != j.at("star").end(); ++it) {
      if (!bset.count(it.key())) throw SpecError("algebra.star: unknown token");
      (*star)[it.key()] = parse_element(it.value(), bset, "algebra.star");
    }
    for (const auto& b : basis) {
      if (!star->count(b)) throw SpecError("algebra.star: missing " + b);
    }
    a.star = [star](const FinVec& v) {
      FinVec out;
      for (const auto& [k, c] : v.terms()) {
        out += star->at(k.at(0)).scaled(c.conj());
      }
      return out;
    };
  }
  if (j.contains("unit")) {
    a.unit = parse_element(j.at("unit"), bset, "algebra.unit");
  }
  return a;
}

Structure parse_table_structure(const json& j, bool as_weak_hopf) {
  BasedAlgebra alg = parse_algebra(j);
  if (!j.contains("delta")) {
    throw SpecError("table structure: needs a delta map");
  }
  if (!alg.unit) {
    throw SpecError("table structure: delta in A tensor A needs a unital algebra");
  }
  std::set<Atom> bset;
  for (const auto& k : alg.basis()) bset.insert(k.at(0));
  auto delta = std::make_shared<std::map<Atom, FinVec>>();
  for (auto it = j.at("delta").begin(); it != j.at("delta").end(); ++it) {
    if (!bset.count(it.key())) throw SpecError("delta: unknown token " + it.key());
    (*delta)[it.key()] = parse_element(it.value(), bset, "delta", 2);
  }
  for (const auto& b : bset) {
    if (!delta->count(b)) throw SpecError("delta: missing " + b);
  }
  LinOp dl{[delta](const Key& k) { return delta->at(k.at(0)); }};

  std::optional<Counit> eps;
  if (j.contains("eps")) {
    auto values = std::make_shared<std::map<Atom, Scalar>>();
    for (auto it = j.at("eps").begin(); it != j.at("eps").end(); ++it) {
      if (!bset.count(it.key())) throw SpecError("eps: unknown token " + it.key());
      (*values)[it.key()] = Scalar::parse(it.value().at(0).get<std::string>(),
                                          it.value().at(1).get<std::string>());
    }
    eps = Counit{[values](const Key& k) {
      auto it = values->find(k.at(0));
      if (it == values->end()) throw MathError("eps: missing value at " + k.str());
      return it->second;
    }};
  }
  std::optional<LinOp> s;
  if (j.contains("antipode")) {
    auto values = std::make_shared<std::map<Atom, FinVec>>();
    for (auto it = j.at("antipode").begin(); it != j.at("antipode").end(); ++it) {
      if (!bset.count(it.key())) throw SpecError("antipode: unknown token");
      (*values)[it.key()] = parse_element(it.value(), bset, "antipode");
    }
    s = LinOp{[values](const Key& k) { return values->at(k.at(0)); }};
  }

  Structure st = weak_hopf_structure(alg, dl, eps, s, "table-structure");
  st.from_weak_hopf = as_weak_hopf;
  return st;
}

}  // namespace wmha
