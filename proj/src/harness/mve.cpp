#include "spl/harness/mve.hpp"

#include "spl/energy/set_algebra.hpp"

#include <cmath>

namespace spl {

MveCheck check_mve(const GroundSet& A, const WeightFn& w, const PolyQ& phi, unsigned s, Method method) {
  if (A.size() < 2) throw Error("need |A| >= 2");
  if (s < 1) throw Error("s must be positive");
  w.check_support(A);
  MveCheck c;
  c.energy = energy_E(A, w, PolyVec::uniform(phi, s), s, method).value;
  c.K = Rat(static_cast<long>(fold_productset(A, 2).size()), static_cast<long>(A.size()));
  c.K.canonicalize();
  c.weight_moment = ipow(w.sum_squares(A), s);
  const double d = std::max(0, phi.degree());
  c.C = 8 + 12 * std::log2(d * d + 2) + 6 * std::log2(2.0 * s);
  if (c.weight_moment == 0) {
    c.ratio_energy = 0;
    c.holds_with_C1 = true;
    c.log2_bound = -HUGE_VAL;
    c.log2_ratio = -HUGE_VAL;
    return c;
  }
  c.ratio_energy = c.energy / c.weight_moment;
  const double n = static_cast<double>(A.size());
  c.log2_bound = c.C * s * log2_approx(c.K) + 2.0 * s * std::log2(std::log2(n)) + log2_approx(c.weight_moment);
  c.log2_ratio = (c.energy == 0 ? -HUGE_VAL : log2_approx(c.energy)) - c.log2_bound;
  c.holds_with_C1 = c.log2_ratio <= 0;
  return c;
}

}  // namespace spl
