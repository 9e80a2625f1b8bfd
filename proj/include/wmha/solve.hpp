#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmha/basis.hpp"

namespace wmha {

/// Bidirectional Key <-> dense column index table.
class KeyIndex {
 public:
  int id(const Key& k) {
    auto [it, fresh] = ids_.emplace(k, static_cast<int>(keys_.size()));
    if (fresh) keys_.push_back(k);
    return it->second;
  }
  std::optional<int> find(const Key& k) const {
    auto it = ids_.find(k);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }
  const Key& key(int i) const { return keys_.at(i); }
  std::size_t size() const { return keys_.size(); }

 private:
  std::map<Key, int> ids_;
  std::vector<Key> keys_;
};

/// Sparse row over Scalar, entries sorted by column.
using SRow = std::vector<std::pair<int, Scalar>>;

SRow to_srow(const FinVec& v, KeyIndex& index);
FinVec from_srow(const SRow& r, const KeyIndex& index);
/// r -= f * s (merge of sorted rows).
void srow_axpy(SRow& r, const Scalar& f, const SRow& s);

/// Incremental exact reduced row echelon form with optional tracking of how
/// every stored row combines the inserted generators. Everything downstream
/// (rank, membership, kernels, linear systems, factorizations) runs on this.
class Rref {
 public:
  explicit Rref(bool track = false) : track_(track) {}

  /// Insert generator number `generator_count()`; returns its id.
  /// If the vector reduces to zero and tracking is on, `relation` (when
  /// non-null) receives coefficients c with  v = sum_j c_j * generator_j.
  int add(SRow v, std::map<int, Scalar>* relation = nullptr);

  /// Reduce `v` against the current span. Returns true iff v lies in the
  /// span; then `combo` (if tracking) gives v as a combination of the
  /// inserted generators. Otherwise `remainder` receives the reduced rest.
  bool reduce(SRow v, std::map<int, Scalar>* combo = nullptr,
              SRow* remainder = nullptr) const;

  std::size_t rank() const { return rows_.size(); }
  int generator_count() const { return next_gen_; }
  const std::vector<int>& pivot_cols() const { return pivots_; }
  /// The reduced (echelon) basis of the span accumulated so far.
  std::vector<SRow> reduced_rows() const {
    std::vector<SRow> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.vec);
    return out;
  }

 private:
  struct Row {
    SRow vec;
    std::map<int, Scalar> combo;
  };
  // One left-to-right elimination sweep; accumulates combo when tracking.
  void sweep(SRow& v, std::map<int, Scalar>* combo) const;

  bool track_;
  int next_gen_ = 0;
  std::vector<Row> rows_;          // pivot order
  std::vector<int> pivots_;        // pivot column of rows_[i]
  std::map<int, int> col_to_row_;  // pivot column -> row index
};

/// Outcome of an exact linear solve  sum_i x_i * g_i = target.
struct SolveResult {
  enum class Status { Unique, NonUnique, Inconsistent } status;
  std::vector<Scalar> coeffs;  // one per generator (a particular solution)
  std::size_t nullity = 0;     // dimension of the solution space
  FinVec certificate;          // non-zero remainder when inconsistent
  bool ok() const { return status != Status::Inconsistent; }
};

std::size_t span_rank(const std::vector<FinVec>& vectors);
bool span_membership(const FinVec& v, const std::vector<FinVec>& span);
bool span_equal(const std::vector<FinVec>& u, const std::vector<FinVec>& v);
SolveResult span_solve_system(const std::vector<FinVec>& generators,
                              const FinVec& target);
/// Kernel of the linear map sending domain[i] to images[i]; vectors are
/// returned over the domain keys.
std::vector<FinVec> kernel_basis(const std::vector<Key>& domain,
                                 const std::vector<FinVec>& images);

}  // namespace wmha
