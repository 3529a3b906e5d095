#pragma once

#include "spl/core/rational.hpp"

#include <initializer_list>
#include <vector>

namespace spl {

/// Finite set of rationals kept strictly increasing.
class GroundSet {
public:
  GroundSet() = default;
  explicit GroundSet(std::vector<Rat> elements);
  GroundSet(std::initializer_list<long> ints);

  static GroundSet from_ints(const std::vector<long>& xs);
  static GroundSet from_ints(const std::vector<Int>& xs);

  const std::vector<Rat>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Rat& operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(const Rat& x) const;
  std::size_t index_of(const Rat& x) const;  ///< throws when absent
  bool is_subset_of(const GroundSet& other) const;
  bool all_integers() const;
  bool contains_zero() const { return contains(Rat(0)); }

  GroundSet unite(const GroundSet& other) const;
  GroundSet minus(const GroundSet& other) const;
  GroundSet intersect(const GroundSet& other) const;
  /// Elements at the given positions.
  GroundSet select(const std::vector<std::size_t>& idx) const;
  GroundSet negated() const;
  GroundSet scaled(const Rat& lambda) const;

  /// "{1, 2, 5/3}"
  std::string str() const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.elems_ == b.elems_; }

private:
  std::vector<Rat> elems_;
};

}  // namespace spl
