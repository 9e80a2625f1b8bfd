#pragma once

#include <cstdint>
#include <vector>

#include "wmha/basis.hpp"

namespace wmha {

/// SplitMix64: tiny, fully reproducible across platforms. Used for every
/// randomized check so that same seed means byte-identical reports.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Gaussian integer with both parts in {-2..2}.
  Scalar small_scalar() {
    long re = static_cast<long>(below(5)) - 2;
    long im = static_cast<long>(below(5)) - 2;
    return {mpq_class(re), mpq_class(im)};
  }

  /// Random element with support drawn from `basis` (at most `max_terms`
  /// terms, possibly fewer after cancellation; never all-zero coefficients
  /// are forced, so the zero vector can occur).
  FinVec element(const std::vector<Key>& basis, std::size_t max_terms = 3) {
    FinVec v;
    if (basis.empty()) return v;
    std::size_t n = 1 + below(max_terms);
    for (std::size_t t = 0; t < n; ++t) {
      v.add(basis[below(basis.size())], small_scalar());
    }
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace wmha
