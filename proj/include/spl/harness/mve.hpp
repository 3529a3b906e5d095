#pragma once

#include "spl/energy/energy.hpp"

namespace spl {

struct MveCheck {
  Rat energy;          ///< E_{s,a,phi}(A)
  Rat K;               ///< |A^(2)| / |A|
  Rat weight_moment;   ///< (sum a^2)^s
  Rat ratio_energy;    ///< energy / weight_moment
  double C = 0;        ///< 8 + 12 log2(d^2+2) + 6 log2(2s)
  double log2_bound = 0;  ///< log2 of K^{Cs} (log2|A|)^{2s} (sum a^2)^s
  double log2_ratio = 0;  ///< log2(energy / bound)
  bool holds_with_C1 = false;
};

/// The moment bound with implied constant 1. Logs are base 2; the bound is
/// irrational in general, so it is compared on the log scale.
MveCheck check_mve(const GroundSet& A, const WeightFn& w, const PolyQ& phi, unsigned s,
                   Method method = Method::automatic);

}  // namespace spl
