#pragma once

#include "spl/core/ground_set.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

namespace spl {

/// Adaptive decision tree of prime queries. An inner node asks for nu_p and
/// branches on the answer; a leaf holds at most one element.
struct QueryStrategy {
  std::optional<Int> prime;  ///< empty at a leaf
  std::map<long, std::shared_ptr<const QueryStrategy>> children;
  std::optional<Rat> element;  ///< the element a leaf resolves, when known

  static QueryStrategy leaf(std::optional<Rat> element = std::nullopt);
  bool is_leaf() const { return !prime.has_value(); }
  /// Longest root-to-leaf query path; 0 for a bare leaf.
  unsigned depth() const;
  /// The q-value this tree witnesses: max(1, depth).
  unsigned witnessed_q() const { return std::max(1u, depth()); }

  nlohmann::json to_json() const;
  static QueryStrategy from_json(const nlohmann::json& j);
};

struct ReplayResult {
  bool valid = false;
  std::string error;
  std::map<Rat, std::vector<long>> vectors;  ///< observed valuations per element
};

/// Runs the tree on A: every element must reach a leaf along existing
/// branches, no leaf may receive two elements, and the observed vectors are
/// then pairwise distinct.
ReplayResult replay(const QueryStrategy& st, const GroundSet& A);

struct QcResult {
  unsigned t = 1;
  QueryStrategy strategy;
};

/// Minimal q(A) by memoised search over subsets; A integral, nonzero, |A| <= limit.
QcResult query_complexity_exact(const GroundSet& A, std::size_t limit = 10);
/// Upper bound by choosing at each node the prime with most fibers.
QcResult query_complexity_greedy(const GroundSet& A);

struct LowQcSubset {
  GroundSet subset;
  QueryStrategy strategy;
};

/// A largest B in A with a separating tree of depth <= tau (tau >= 0).
/// Ties prefer smaller primes, then subsets with smaller elements.
LowQcSubset max_subset_with_qc(const GroundSet& A, unsigned tau, std::size_t limit = 20);

/// Primes dividing some element (numerator or denominator).
std::vector<Int> prime_support_of(const GroundSet& A);

}  // namespace spl
