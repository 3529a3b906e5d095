#pragma once

#include "spl/energy/energy.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spl {

enum class SidonKind { additive, multiplicative };
std::string to_string(SidonKind k);
SidonKind parse_sidon_kind(const std::string& s);

enum class ScanOrder { ascending, descending, shuffled };
std::string to_string(ScanOrder o);
ScanOrder parse_scan_order(const std::string& s);

struct SidonCertificate {
  GroundSet subset;
  SidonKind kind = SidonKind::additive;
  unsigned s = 2;
  PolyQ phi = PolyQ::identity();
  bool verified = false;
  /// Two distinct sorted s-multisets with the same phi-sum (or phi-product).
  std::optional<std::pair<std::vector<Rat>, std::vector<Rat>>> collision;
  /// E_{s,phi}(A) or M_{s,phi}(A) of the set the subset was drawn from, when computed.
  std::optional<Rat> context_energy;
};

/// Value of a multiset under the kind: sum or product of phi over it.
Rat multiset_value(const std::vector<Rat>& xs, const PolyQ& phi, SidonKind kind);

/// All s-multisets of X mapped through phi; verified iff no two share a value.
/// Multiplicative kind rejects roots of phi in X.
SidonCertificate is_sidon(const GroundSet& X, unsigned s, const PolyQ& phi, SidonKind kind);

struct GreedyOptions {
  ScanOrder order = ScanOrder::ascending;
  std::uint64_t seed = 0;
  bool with_context = true;
};

/// Scans A once in the given order and keeps each element that creates no
/// collision. The output is maximal in A.
SidonCertificate greedy_sidon_extract(const GroundSet& A, unsigned s, const PolyQ& phi,
                                      SidonKind kind, const GreedyOptions& opt = {});

/// A largest Sidon subset; among those of largest size, the lexicographically
/// first by element index.
SidonCertificate max_sidon_exact(const GroundSet& A, unsigned s, const PolyQ& phi, SidonKind kind,
                                 std::size_t limit = 16);

struct Rev4Result {
  std::vector<SidonCertificate> pieces;  ///< in extraction order
  GroundSet B;                           ///< union of additive pieces
  GroundSet C;                           ///< union of multiplicative pieces
  std::size_t rounds = 0;
  std::size_t r1 = 0, r2 = 0;
  Rat E_B;                               ///< E_{s,phi}(B)
  std::optional<Rat> M_phi_B;            ///< M_{s,phi}(B), when phi(0) != 0
  Rat M_C;                               ///< M_s(C)
  Rat E_union_bound;                     ///< r1^{2s} max_i E_{s,phi}(X_i)
  Rat M_union_bound;                     ///< 2^{2s} r2^{2s} max_j M_s(Y_j)
  bool E_union_holds = false;
  bool M_union_holds = false;
  double round_budget = 0;               ///< from the observed extraction rate
  bool budget_holds = false;
};

/// Peels Sidon pieces off A until it is exhausted. Each round takes the
/// larger of a greedy additive piece (phi-sums) and a greedy multiplicative
/// piece (plain products, zero never chosen); ties go to the additive one.
Rev4Result rev4_partition(const GroundSet& A, unsigned s, const PolyQ& phi,
                          const GreedyOptions& opt = {});

/// The iteration bound 2(log2 n + 2) + n^c / (C (2^c - 1)) for pieces of size
/// at least C m^{1-c} taken from a remainder of size m.
double peeling_round_budget(std::size_t n, double c, double C);

}  // namespace spl
