#pragma once

#include "spl/energy/energy.hpp"
#include "spl/structure/query.hpp"
#include "spl/structure/skew.hpp"

namespace spl {

struct LowQcExtraction {
  GroundSet B;
  QueryStrategy witness;
  unsigned tau = 0;            ///< largest integer t with 2^t <= 2K
  Rat product_ratio;           ///< |A.X.X| / |X|
  std::size_t binary_size = 0; ///< largest binary subset of psi(A)
  bool size_ok = false;        ///< |B| >= |A| / K
  bool depth_ok = false;       ///< witness depth <= tau and replay valid
  bool binary_ok = false;      ///< binary_size <= K
};

/// B in A with |B| >= |A|/K and a query tree of depth <= log2(2K), under
/// |A.X.X| <= K|X|. A, X of positive integers. Throws with the exact ratio
/// when the product-set hypothesis fails.
LowQcExtraction extract_low_qc_subset(const GroundSet& A, const GroundSet& X, const Rat& K);

struct CoverResult {
  GroundSet S;
  Rat C;           ///< |A.B| / |B|
  Int size_bound;  ///< ceil(C (ln|A| + 1))
  bool covers = false;       ///< A in S.B and S in A.B^-1, replayed
  Decision within_bound = Decision::undecided;
};

/// Greedy choice of quotients covering A by translates S.B.
CoverResult greedy_cover(const GroundSet& A, const GroundSet& B);

struct PlunneckeCheck {
  Rat K;
  Int lhs;  ///< |mA - nA|
  Rat rhs;  ///< K^{m+n} |A|
  bool holds = false;
};
PlunneckeCheck check_plunnecke(const GroundSet& A, unsigned m, unsigned n);

struct AveragingCheck {
  Rat lhs;     ///< E_{s,a}(A; g)
  Int factor;  ///< |sf(A) - sf(A)|
  Rat rhs;     ///< E_{s,a}(A; f, g)
  bool holds = false;
};
AveragingCheck check_averaging(const GroundSet& A, const WeightFn& w, const VectorMap& f,
                               const VectorMap& g, unsigned s, Method method = Method::automatic);

struct SumsetTerm {
  unsigned m = 0, n = 0;
  Int size;     ///< |mU' - nU'|
  Rat ratio;    ///< size / |U'|
};

/// Every quantity in the structured-subset conclusion, computed exactly.
struct Th46Report {
  std::size_t A_size = 0;
  std::size_t U_size = 0;
  Rat energy;               ///< E_s(A)
  Rat K;                    ///< |A|^{2s-1} / E_s(A)
  Rat size_ratio;           ///< |U'| / (K |A|)
  std::size_t max_overlap = 0;  ///< max over x in U' - A of |(A + x) n U'|
  Rat overlap_ratio;        ///< max_overlap / |A|
  std::vector<unsigned> folds_containing;  ///< s' in [2, s] with U' in s'A
  std::vector<SumsetTerm> sumsets;
  double nu = 0;            ///< E_s(A) = |A|^{2s - nu}, informational
  double log_ratio_size = 0;///< log|U'| / log|A|, informational
};

Th46Report verify_th46_conclusion(const GroundSet& A, unsigned s, const GroundSet& U,
                                  const std::vector<std::pair<unsigned, unsigned>>& mn);

}  // namespace spl
