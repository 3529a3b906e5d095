#pragma once

#include "spl/energy/energy.hpp"

namespace spl {

struct CauchySchwarzCheck {
  Int set_size;  ///< |sA| or |A^(s)|
  Rat energy;
  Rat lhs;       ///< set_size * energy
  Rat rhs;       ///< |A|^2s
  bool holds = false;
};

/// |sA| E_s(A) >= |A|^2s (additive) or |A^(s)| M_s(A) >= |A|^2s.
CauchySchwarzCheck check_cauchy_schwarz(const GroundSet& A, unsigned s, bool multiplicative,
                                        Method method = Method::automatic);

enum class HolderKind {
  e_sets,         ///< E(A_1..A_2s)^2s <= prod_j E_{phi_j}(A_j)
  j_sets,         ///< J(A_1..A_2s)^2s <= (d+2)^{4s^2} prod_j J_{phi_j}(A_j)
  j_sets_signed,  ///< same without the factor when each A_j sits in one sign interval of phi_j
  j_union,        ///< J(A_1 u .. u A_r) <= (d+2)^2s r^2s max_{i,j} J_{phi_j}(A_i)
  e_union,        ///< E(A_1 u .. u A_r) <= r^2s max_{i,j} E_{phi_j}(A_i)
  e_drop,         ///< E_s(A) <= |A|^{2s-2l} E_l(A), unit weights
  j_drop,         ///< J_s(A) <= (d+2)^2s |A|^{2s-2l} J_l(A), unit weights
};

std::string to_string(HolderKind k);
HolderKind parse_holder_kind(const std::string& s);

/// lhs <= factor * product^(1/root), decided exactly.
struct HolderCheck {
  HolderKind kind = HolderKind::e_sets;
  Rat lhs;
  Rat factor;
  Rat product;
  unsigned root = 1;
  bool holds = false;
  /// rhs when product^(1/root) is rational, else a lower rational bracket.
  Rat rhs_display;
};

struct HolderInput {
  std::vector<GroundSet> sets;  ///< 2s sets for *_sets kinds, r pieces for unions, one set for drops
  WeightFn weights;
  PolyVec phis;                 ///< length 2s
  unsigned l = 1;               ///< lower moment for the drop kinds
};

HolderCheck check_holder_split(HolderKind kind, const HolderInput& in,
                               Method method = Method::automatic);

struct CurveIncidence {
  Int count;        ///< #{(a1, a2) in A^2 : a1 = phi(a2)}
  Rat K;            ///< |A.A| / |A|
  bool bound_context = false;  ///< phi(0) != 0
};

CurveIncidence count_curve_incidences(const GroundSet& A, const PolyQ& phi);

}  // namespace spl
