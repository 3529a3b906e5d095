#pragma once

#include "spl/core/polynomial.hpp"
#include "spl/core/weights.hpp"
#include "spl/energy/energy.hpp"
#include "spl/padic/valuation.hpp"
#include "spl/structure/query.hpp"

namespace spl {

struct DecouplingCheck {
  Rat lhs_energy;
  Rat constant_used;
  /// holds <=> lhs <= (constant * sum_n E_n^(1/s))^s, decided with root brackets.
  std::vector<std::pair<long, Rat>> fiber_energies;
  Decision decision = Decision::undecided;
  bool holds = false;
  /// Lower bracket of (constant * sum_n E_n^(1/s))^s, for display.
  Rat rhs_bound;
  std::string note;
  /// Multiplicative kind only: A sits in one sign interval of phi.
  bool hypotheses_met = true;
};

/// E^(1/s) <= (d^2+2)^4 (2s)^2 sum_n E_{A_{p,n}}^(1/s). A of positive integers, deg phi >= 1.
DecouplingCheck check_chang_additive(const GroundSet& A, const WeightFn& w, const PolyQ& phi,
                                     const Int& p, unsigned s, Method method = Method::automatic);

/// J^(1/s) <= (d+3)^16 (2s)^2 sum_n J_{A_{p,n}}^(1/s). phi(0) != 0, A free of 0 and roots.
/// With interval_certified the sign-interval hypothesis is enforced (error if
/// it fails); otherwise it is only reported in hypotheses_met.
DecouplingCheck check_chang_multiplicative(const GroundSet& A, const WeightFn& w, const PolyQ& phi,
                                           const Int& p, unsigned s, bool interval_certified,
                                           Method method = Method::automatic);

/// Valuation classes used in the decoupling argument: breakpoints
/// X = {(nu(b_j) - nu(b_i)) / (i - j)} over the nonzero coefficients b_i of
/// phi (its constant term dropped when `drop_constant`), and for every
/// element the open gap of X containing nu_p(a) (-1 when nu_p(a) is in X).
struct ValuationClasses {
  std::vector<Rat> breakpoints;
  std::map<long, GroundSet> classes;  ///< gap index -> elements
  GroundSet on_breakpoints;
};
ValuationClasses valuation_classes(const GroundSet& A, const PolyQ& phi, const Int& p,
                                   bool drop_constant);

struct RepeatedValuationCheck {
  bool holds = true;
  bool dominance_holds = true;     ///< one term of phi carries nu_p(phi(a)) across each class
  std::size_t tuples_examined = 0; ///< tuples with pairwise distinct valuations
  std::string counterexample;
};

/// Inside every class, no solution of the additive (multiplicative = false)
/// or coupled (multiplicative = true) equation has pairwise distinct
/// valuations among its 2s coordinates.
RepeatedValuationCheck check_repeated_valuation(const GroundSet& A, const PolyQ& phi, const Int& p,
                                                unsigned s, bool multiplicative);

struct QcEnergyBound {
  Rat energy;
  Rat bound;       ///< ((d^2+2)^{4t} (2s)^{2t} sum a^2)^s
  unsigned t = 1;
  bool holds = false;
};

/// Energy bound from a validated query tree of depth t. A of positive integers.
QcEnergyBound bound_E_via_qc(const GroundSet& A, const WeightFn& w, const PolyQ& phi, unsigned s,
                             const QueryStrategy& strategy, Method method = Method::automatic);

struct QcMultBound {
  Rat energy;          ///< M_{s,a,phi}(A)
  Int quotient_size;   ///< |A^(s)/A^(s)|
  Rat bound_part;      ///< |A^(s)/A^(s)| (d+3)^{16ts} (2s)^{2ts} (sum a^2)^s
  Rat ratio;           ///< energy / bound_part
  unsigned t = 1;
};

QcMultBound bound_M_via_qc(const GroundSet& A, const WeightFn& w, const PolyQ& phi, unsigned s,
                           const QueryStrategy& strategy, Method method = Method::automatic);

}  // namespace spl
