#include "spl/core/ground_set.hpp"

#include <algorithm>

namespace spl {

GroundSet::GroundSet(std::vector<Rat> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

GroundSet::GroundSet(std::initializer_list<long> ints) {
  for (long v : ints) elems_.emplace_back(v);
  *this = GroundSet(std::move(elems_));
}

GroundSet GroundSet::from_ints(const std::vector<long>& xs) {
  std::vector<Rat> v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return GroundSet(std::move(v));
}

GroundSet GroundSet::from_ints(const std::vector<Int>& xs) {
  std::vector<Rat> v;
  v.reserve(xs.size());
  for (const auto& x : xs) v.emplace_back(x);
  return GroundSet(std::move(v));
}

bool GroundSet::contains(const Rat& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::size_t GroundSet::index_of(const Rat& x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) throw Error("element not in set: " + to_string(x));
  return static_cast<std::size_t>(it - elems_.begin());
}

bool GroundSet::is_subset_of(const GroundSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

bool GroundSet::all_integers() const {
  return std::all_of(elems_.begin(), elems_.end(), [](const Rat& x) { return is_integer(x); });
}

GroundSet GroundSet::unite(const GroundSet& other) const {
  std::vector<Rat> out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out));
  GroundSet g;
  g.elems_ = std::move(out);
  return g;
}

GroundSet GroundSet::minus(const GroundSet& other) const {
  std::vector<Rat> out;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                      std::back_inserter(out));
  GroundSet g;
  g.elems_ = std::move(out);
  return g;
}

GroundSet GroundSet::intersect(const GroundSet& other) const {
  std::vector<Rat> out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out));
  GroundSet g;
  g.elems_ = std::move(out);
  return g;
}

GroundSet GroundSet::select(const std::vector<std::size_t>& idx) const {
  std::vector<Rat> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(elems_.at(i));
  return GroundSet(std::move(out));
}

GroundSet GroundSet::negated() const {
  std::vector<Rat> out;
  out.reserve(elems_.size());
  for (const auto& x : elems_) out.push_back(-x);
  return GroundSet(std::move(out));
}

GroundSet GroundSet::scaled(const Rat& lambda) const {
  std::vector<Rat> out;
  out.reserve(elems_.size());
  for (const auto& x : elems_) out.push_back(lambda * x);
  return GroundSet(std::move(out));
}

std::string GroundSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ", ";
    s += to_string(elems_[i]);
  }
  return s + "}";
}

}  // namespace spl
