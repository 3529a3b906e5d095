#pragma once

#include "spl/core/ground_set.hpp"

#include <map>

namespace spl {

/// nu_p(x) = nu_p(num) - nu_p(den); throws "valuation of zero".
long valuation(const Int& p, const Rat& x);

struct Fibering {
  GroundSet base;
  Int prime;
  std::map<long, GroundSet> fibers;  ///< n -> A_{p,n}

  std::vector<long> valuation_set() const;
};

/// Partition of A by p-adic valuation; 0 must not be in A.
Fibering fiber(const GroundSet& A, const Int& p);

}  // namespace spl
