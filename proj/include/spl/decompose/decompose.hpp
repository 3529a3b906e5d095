#pragma once

#include "spl/energy/energy.hpp"
#include "spl/structure/query.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spl {

enum class Finder { exact_qc, greedy_fiber };
std::string to_string(Finder f);
Finder parse_finder(const std::string& s);

struct DecomposeConfig {
  std::optional<unsigned> k;                  ///< default from s and D
  std::optional<Rat> threshold_exponent;      ///< default 2s - k
  unsigned tau = 2;                           ///< witness depth allowed per piece
  Finder finder = Finder::exact_qc;
  Rat D = 4;
  std::size_t exact_limit = 24;               ///< largest remainder for exact-qc
};

/// k = max(1, ceil(log2 s / (D log2 log2 s))); 1 when log2 log2 s <= 0.
unsigned default_k(unsigned s, const Rat& D);

struct Piece {
  GroundSet set;
  QueryStrategy witness;  ///< on the dilated piece
  unsigned t = 1;         ///< witnessed q
};

struct DecompositionResult {
  GroundSet A, B, C;
  std::vector<Piece> pieces;
  unsigned s = 2;
  unsigned k = 1;
  Rat threshold_exponent;
  unsigned tau = 1;
  Finder finder = Finder::exact_qc;
  Int dilation = 1;       ///< witnesses refer to dilation * B_i
  std::size_t rounds = 0; ///< threshold tests performed
};

DecompositionResult decompose(const GroundSet& A, unsigned s, const PolyVec& phis,
                              const DecomposeConfig& cfg = {});

struct Certificates {
  Rat E_B;                       ///< E_{s,phi}(B)
  Rat M_C;                       ///< M_s(C)
  std::optional<Rat> M_phi_B;    ///< M_{s,phi}(B) when every phi_j(0) != 0
  bool C_threshold_holds = false;///< M_s(C) <= |C|^{threshold}
  Rat union_bound;               ///< r^{2s} max_i ((d^2+2)^{4t_i} (2s)^{2t_i} |B_i|)^s
  bool union_bound_holds = false;
  bool partition_ok = false;     ///< disjoint pieces covering A
  bool witnesses_ok = false;     ///< every witness replays with depth <= tau
  std::optional<double> exponent_E_B, exponent_M_C, exponent_M_phi_B;  ///< log value / log size
};

Certificates certify(const DecompositionResult& r, const PolyVec& phis, bool want_M_phi = true);

struct NegativeReduction {
  GroundSet A1;         ///< positive, off the roots
  GroundSet A2;         ///< negative, off the roots
  GroundSet A2_reflected;  ///< -A2, to be used with phis_reflected
  GroundSet A3;         ///< nonzero roots of phi_j or phi_j(-x)
  GroundSet A4;         ///< A n {0}
  PolyVec phis_reflected;
};

NegativeReduction negative_reduction(const GroundSet& A, const PolyVec& phis);

}  // namespace spl
