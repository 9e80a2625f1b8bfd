#include "wmha/basis.hpp"

namespace wmha {

FinVec tensor(const FinVec& v, const FinVec& w) {
  FinVec out;
  for (const auto& [kv, cv] : v.terms()) {
    for (const auto& [kw, cw] : w.terms()) {
      out.add(Key::concat(kv, kw), cv * cw);
    }
  }
  return out;
}

FinVec map_legs(const FinVec& v, std::size_t pos, std::size_t len,
                const std::function<FinVec(const Key&)>& op) {
  FinVec out;
  for (const auto& [k, c] : v.terms()) {
    Key head = k.slice(0, pos);
    Key mid = k.slice(pos, len);
    Key tail = k.slice(pos + len, k.arity() - pos - len);
    FinVec image = op(mid);
    for (const auto& [mk, mc] : image.terms()) {
      out.add(Key::concat(Key::concat(head, mk), tail), c * mc);
    }
  }
  return out;
}

FinVec permute_legs(const FinVec& v, const std::vector<std::size_t>& perm) {
  FinVec out;
  for (const auto& [k, c] : v.terms()) out.add(k.permuted(perm), c);
  return out;
}

}  // namespace wmha
