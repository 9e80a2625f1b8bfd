#include "wmha/solve.hpp"

#include <algorithm>

namespace wmha {

SRow to_srow(const FinVec& v, KeyIndex& index) {
  SRow r;
  r.reserve(v.terms().size());
  for (const auto& [k, c] : v.terms()) r.emplace_back(index.id(k), c);
  std::sort(r.begin(), r.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

FinVec from_srow(const SRow& r, const KeyIndex& index) {
  FinVec v;
  for (const auto& [col, c] : r) v.add(index.key(col), c);
  return v;
}

void srow_axpy(SRow& r, const Scalar& f, const SRow& s) {
  if (f.is_zero()) return;
  SRow out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || s[j].first < r[i].first) {
      out.emplace_back(s[j].first, -(f * s[j].second));
      ++j;
    } else {
      Scalar c = r[i].second - f * s[j].second;
      if (!c.is_zero()) out.emplace_back(r[i].first, c);
      ++i;
      ++j;
    }
  }
  r = std::move(out);
}

void Rref::sweep(SRow& v, std::map<int, Scalar>* combo) const {
  std::size_t i = 0;
  while (i < v.size()) {
    auto it = col_to_row_.find(v[i].first);
    if (it == col_to_row_.end()) {
      ++i;
      continue;
    }
    const Row& row = rows_[it->second];
    Scalar f = v[i].second;  // row is normalized: leading entry 1
    srow_axpy(v, f, row.vec);
    if (combo) {
      for (const auto& [g, c] : row.combo) {
        auto [jt, fresh] = combo->emplace(g, f * c);
        if (!fresh) {
          jt->second += f * c;
          if (jt->second.is_zero()) combo->erase(jt);
        }
      }
    }
    // All columns < v[i].first were already pivot-free; the axpy cannot
    // reintroduce them because stored rows are fully reduced.
  }
}

int Rref::add(SRow v, std::map<int, Scalar>* relation) {
  int gen = next_gen_++;
  std::map<int, Scalar> combo;
  sweep(v, track_ ? &combo : nullptr);
  if (v.empty()) {
    if (relation && track_) *relation = std::move(combo);
    return gen;
  }
  // Normalize leading entry to 1.
  Scalar lead_inv = v.front().second.inverse();
  for (auto& [c, val] : v) val *= lead_inv;
  std::map<int, Scalar> self;
  if (track_) {
    // stored_row = lead_inv * (generator - sum combo_j * gen_j)
    self.emplace(gen, lead_inv);
    for (const auto& [g, c] : combo) self.emplace(g, -(lead_inv * c));
  }
  int pivot = v.front().first;
  // Back-eliminate the new pivot from existing rows to keep full RREF.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto& row = rows_[r];
    auto pos = std::lower_bound(
        row.vec.begin(), row.vec.end(), pivot,
        [](const auto& e, int col) { return e.first < col; });
    if (pos == row.vec.end() || pos->first != pivot) continue;
    Scalar f = pos->second;
    srow_axpy(row.vec, f, v);
    if (track_) {
      for (const auto& [g, c] : self) {
        auto [jt, fresh] = row.combo.emplace(g, -(f * c));
        if (!fresh) {
          jt->second -= f * c;
          if (jt->second.is_zero()) row.combo.erase(jt);
        }
      }
    }
  }
  col_to_row_.emplace(pivot, static_cast<int>(rows_.size()));
  rows_.push_back(Row{std::move(v), std::move(self)});
  pivots_.push_back(pivot);
  return gen;
}

bool Rref::reduce(SRow v, std::map<int, Scalar>* combo, SRow* remainder) const {
  std::map<int, Scalar> acc;
  sweep(v, track_ ? &acc : nullptr);
  if (!v.empty()) {
    if (remainder) *remainder = std::move(v);
    return false;
  }
  if (combo && track_) *combo = std::move(acc);
  return true;
}

std::size_t span_rank(const std::vector<FinVec>& vectors) {
  KeyIndex index;
  Rref rref;
  for (const auto& v : vectors) rref.add(to_srow(v, index));
  return rref.rank();
}

bool span_membership(const FinVec& v, const std::vector<FinVec>& span) {
  KeyIndex index;
  Rref rref;
  for (const auto& g : span) rref.add(to_srow(g, index));
  return rref.reduce(to_srow(v, index));
}

bool span_equal(const std::vector<FinVec>& u, const std::vector<FinVec>& v) {
  KeyIndex index;
  Rref ru, rv, ruv;
  for (const auto& g : u) {
    ru.add(to_srow(g, index));
    ruv.add(to_srow(g, index));
  }
  for (const auto& g : v) {
    rv.add(to_srow(g, index));
    ruv.add(to_srow(g, index));
  }
  return ru.rank() == rv.rank() && ru.rank() == ruv.rank();
}

SolveResult span_solve_system(const std::vector<FinVec>& generators,
                              const FinVec& target) {
  KeyIndex index;
  Rref rref(/*track=*/true);
  for (const auto& g : generators) rref.add(to_srow(g, index));
  SolveResult res;
  res.nullity = generators.size() - rref.rank();
  std::map<int, Scalar> combo;
  SRow remainder;
  if (!rref.reduce(to_srow(target, index), &combo, &remainder)) {
    res.status = SolveResult::Status::Inconsistent;
    res.certificate = from_srow(remainder, index);
    return res;
  }
  res.coeffs.assign(generators.size(), Scalar());
  for (const auto& [g, c] : combo) res.coeffs[g] = c;
  res.status = res.nullity == 0 ? SolveResult::Status::Unique
                                : SolveResult::Status::NonUnique;
  return res;
}

std::vector<FinVec> kernel_basis(const std::vector<Key>& domain,
                                 const std::vector<FinVec>& images) {
  KeyIndex index;
  Rref rref(/*track=*/true);
  std::vector<FinVec> kernel;
  for (std::size_t i = 0; i < images.size(); ++i) {
    std::map<int, Scalar> relation;
    std::size_t before = rref.rank();
    rref.add(to_srow(images[i], index), &relation);
    if (rref.rank() == before) {
      // images[i] = sum_j relation_j * images[j]  with j < i
      FinVec k = FinVec::basis(domain[i]);
      for (const auto& [g, c] : relation) {
        k.add(domain[g], -c);
      }
      kernel.push_back(std::move(k));
    }
  }
  return kernel;
}

}  // namespace wmha
