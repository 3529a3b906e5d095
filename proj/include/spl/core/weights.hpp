#pragma once

#include "spl/core/ground_set.hpp"

#include <map>

namespace spl {

/// Nonnegative weight on the rationals; zero off the table unless unit().
class WeightFn {
public:
  /// Weight 1 everywhere.
  static WeightFn unit();
  WeightFn() : unit_(true) {}
  explicit WeightFn(std::map<Rat, Rat> table);

  Rat operator()(const Rat& x) const;
  bool is_unit() const { return unit_; }
  bool is_integral() const;
  const std::map<Rat, Rat>& table() const { return table_; }

  /// Sum of squared weights over A.
  Rat sum_squares(const GroundSet& A) const;
  /// Throws unless every tabulated point with positive weight lies in A.
  void check_support(const GroundSet& A) const;
  /// The weight transported along x -> lambda x.
  WeightFn scaled(const Rat& lambda) const;
  WeightFn negated() const { return scaled(Rat(-1)); }

  std::string str() const;

private:
  bool unit_ = true;
  std::map<Rat, Rat> table_;
};

}  // namespace spl
