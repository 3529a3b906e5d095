#pragma once

#include "spl/core/ground_set.hpp"
#include "spl/core/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spl {

enum class Family { AP, GP, odd_times_powers, prime_products, dilate, union_of, random };
std::string to_string(Family f);
Family parse_family(const std::string& s);

struct FamilySpec {
  Family family = Family::AP;
  long m = 0, n = 0;            ///< odd-times-powers: 1 <= i <= m, 1 <= j <= n; AP/GP/random: n terms
  Int start = 1, step = 1;      ///< AP
  Int base = 2;                 ///< GP: start * base^j, 0 <= j < n
  long P = 0, Q = 0;            ///< prime-products block sizes
  long N = 0;                   ///< prime-products: sizes from N and s when P, Q are 0
  unsigned s = 2;
  long lo = 1, hi = 100;        ///< random: n distinct integers in [lo, hi]
  std::uint64_t seed = 0;
  Rat lambda = 1;               ///< dilate
  std::vector<GroundSet> parts; ///< dilate (first part) and union
  Int cap = Int(1) << 64;       ///< largest allowed |element|
};

GroundSet gen(const FamilySpec& spec);

/// ceil(N^{p/q}) exactly.
Int ceil_rational_power(long N, unsigned long p, unsigned long q);

struct FiberReport {
  long j = 0;
  GroundSet Bj;
  Rat energy;           ///< E_{s,phi}(B_j)
  Int sum_image;        ///< |s phi(B_j)|
  Int T_bound;          ///< prod over a_i != 0, i >= 1, of s |a_i| (2m+1)^i
  bool T_holds = false; ///< sum_image <= T_bound
  Rat cs_lower;         ///< |B_j|^{2s} / |s phi(B_j)|
  bool cs_holds = false;
};

struct BwexReport {
  long m = 0, n = 0;
  unsigned s = 2;
  std::size_t B_size = 0;
  Int product_size;  ///< |B^(s)|
  Rat cs_lower;      ///< |B|^{2s} / |B^(s)|
  Rat M;             ///< M_s(B)
  bool cs_holds = false;
  std::vector<FiberReport> fibers;  ///< nonempty B n S_j only
};

BwexReport bwex_report(long m, long n, unsigned s, const PolyQ& phi, const GroundSet& B);

}  // namespace spl
