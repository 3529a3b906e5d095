#pragma once

#include "spl/core/ground_set.hpp"

#include <vector>

namespace spl {

using IntVec = std::vector<long>;

/// psi(a) = (nu_{p_1}(a), ..., nu_{p_r}(a)) over a fixed prime list.
struct ValuationVectors {
  std::vector<Int> primes;
  std::vector<Rat> elements;
  std::vector<IntVec> vectors;

  /// Primes default to the prime support of A (plus that of `extra`).
  static ValuationVectors of(const GroundSet& A, const GroundSet& extra = {});
  /// The distinct vectors, sorted.
  std::vector<IntVec> distinct() const;
};

/// d_*: 0 for a singleton, else 1 + max over the fibers of the last
/// coordinate that takes at least two values. Vectors must share a length.
unsigned skew_dimension(const std::vector<IntVec>& X);

/// Binary set: at most two values in the last coordinate, every slice binary
/// in one dimension less; in dimension one, at most two points.
bool is_binary(const std::vector<IntVec>& X);

/// A largest binary subset of X (duplicates ignored), ties broken toward
/// smaller coordinate values. Throws when |X| exceeds the limit.
std::vector<IntVec> largest_binary_subset(const std::vector<IntVec>& X, std::size_t limit = 12);

}  // namespace spl
