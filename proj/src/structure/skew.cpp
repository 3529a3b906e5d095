#include "spl/structure/skew.hpp"

#include "spl/core/factor.hpp"
#include "spl/padic/valuation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spl {

ValuationVectors ValuationVectors::of(const GroundSet& A, const GroundSet& extra) {
  ValuationVectors v;
  v.primes = prime_support(A.unite(extra).elements());
  for (const auto& a : A) {
    IntVec row;
    for (const auto& p : v.primes) row.push_back(valuation(p, a));
    v.elements.push_back(a);
    v.vectors.push_back(std::move(row));
  }
  return v;
}

std::vector<IntVec> ValuationVectors::distinct() const {
  std::set<IntVec> s(vectors.begin(), vectors.end());
  return {s.begin(), s.end()};
}

namespace {

std::size_t dim_of(const std::vector<IntVec>& X) {
  const std::size_t r = X.front().size();
  for (const auto& x : X)
    if (x.size() != r) throw Error("vectors of different lengths");
  return r;
}

unsigned skew_rec(const std::vector<IntVec>& X) {
  if (X.size() <= 1) return 0;
  for (std::size_t i = X.front().size(); i-- > 0;) {
    std::map<long, std::vector<IntVec>> fibers;
    for (const auto& x : X) fibers[x[i]].push_back(x);
    if (fibers.size() < 2) continue;
    unsigned worst = 0;
    for (const auto& [v, f] : fibers) worst = std::max(worst, skew_rec(f));
    return 1 + worst;
  }
  throw Error("repeated vector in a skew-dimension computation");
}

bool binary_rec(const std::vector<IntVec>& X, std::size_t r) {
  if (X.size() <= 1) return true;
  if (r == 1) return X.size() <= 2;
  std::map<long, std::vector<IntVec>> slices;
  for (const auto& x : X) slices[x[r - 1]].push_back(x);
  if (slices.size() > 2) return false;
  for (const auto& [v, s] : slices)
    if (!binary_rec(s, r - 1)) return false;
  return true;
}

std::vector<IntVec> largest_rec(const std::vector<IntVec>& X, std::size_t r) {
  if (X.size() <= 1) return X;
  if (r == 0) return {X.front()};
  if (r == 1) return {X.begin(), X.begin() + static_cast<long>(std::min<std::size_t>(2, X.size()))};
  std::map<long, std::vector<IntVec>> slices;
  for (const auto& x : X) slices[x[r - 1]].push_back(x);
  std::vector<std::vector<IntVec>> best;
  for (const auto& [v, s] : slices) best.push_back(largest_rec(s, r - 1));
  // Keep the two biggest slices; stable sort keeps smaller values first on ties.
  std::stable_sort(best.begin(), best.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < best.size() && i < 2; ++i) out.insert(out.end(), best[i].begin(), best[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

unsigned skew_dimension(const std::vector<IntVec>& X) {
  if (X.empty()) throw Error("empty set");
  dim_of(X);
  std::set<IntVec> s(X.begin(), X.end());
  return skew_rec({s.begin(), s.end()});
}

bool is_binary(const std::vector<IntVec>& X) {
  if (X.empty()) return true;
  const std::size_t r = dim_of(X);
  std::set<IntVec> s(X.begin(), X.end());
  if (r == 0) return s.size() <= 1;
  return binary_rec({s.begin(), s.end()}, r);
}

std::vector<IntVec> largest_binary_subset(const std::vector<IntVec>& X, std::size_t limit) {
  if (X.size() > limit)
    throw Error("size over limit: " + std::to_string(X.size()) + " > " + std::to_string(limit));
  if (X.empty()) return {};
  const std::size_t r = dim_of(X);
  std::set<IntVec> s(X.begin(), X.end());
  return largest_rec({s.begin(), s.end()}, r);
}

}  // namespace spl
