#pragma once

#include "spl/core/ground_set.hpp"
#include "spl/core/polynomial.hpp"
#include "spl/core/weights.hpp"

#include <map>
#include <string>
#include <vector>

namespace spl {

enum class EnergyKind { E, M, J, E_fg };
enum class Method { automatic, oracle, split };
/// How split-count keys multiplicative values: exponent vectors over a
/// coprime basis, or the canonical rational itself.
enum class KeyMode { factored, rational };

std::string to_string(EnergyKind k);
std::string to_string(Method m);
EnergyKind parse_energy_kind(const std::string& s);
Method parse_method(const std::string& s);

struct EnergyReport {
  EnergyKind kind = EnergyKind::E;
  unsigned s = 1;
  Rat value;
  Method method = Method::oracle;  ///< the method actually used
  std::string weights;
  std::string polys;
  double elapsed_ms = 0;
};

/// One candidate value at one position of a 2s-tuple: additive components
/// must balance as sums, multiplicative ones as products.
struct EnergyItem {
  std::vector<Rat> add;
  std::vector<Rat> mul;
  Rat weight;
};

/// Weighted number of (x_1..x_2s), x_j from positions[j], with
/// sum_{j<s} add = sum_{j>=s} add and prod_{j<s} mul = prod_{j>=s} mul
/// componentwise, each tuple counted with the product of its weights.
struct EnergySystem {
  unsigned s = 1;
  std::vector<std::vector<EnergyItem>> positions;
};

Rat count_oracle(const EnergySystem& sys);
Rat count_split(const EnergySystem& sys, KeyMode mode = KeyMode::factored);
/// `automatic` picks the oracle when the tuple space has at most 10^7 points.
Rat count_solutions(const EnergySystem& sys, Method method, Method* used = nullptr,
                    KeyMode mode = KeyMode::factored);

/// E_{s,a,phi}(A_1..A_2s): sets.size() == 2s == phis.size().
EnergyReport energy_E_sets(const std::vector<GroundSet>& sets, const WeightFn& w,
                           const PolyVec& phis, Method method = Method::automatic);
EnergyReport energy_M_sets(const std::vector<GroundSet>& sets, const WeightFn& w,
                           const PolyVec& phis, Method method = Method::automatic);
/// Coupled system; throws "excluded element" for 0 or a root of some phi_j.
EnergyReport energy_J_sets(const std::vector<GroundSet>& sets, const WeightFn& w,
                           const PolyVec& phis, Method method = Method::automatic);

EnergyReport energy_E(const GroundSet& A, const WeightFn& w, const PolyVec& phis,
                      unsigned s, Method method = Method::automatic);
EnergyReport energy_M(const GroundSet& A, const WeightFn& w, const PolyVec& phis,
                      unsigned s, Method method = Method::automatic);
EnergyReport energy_J(const GroundSet& A, const WeightFn& w, const PolyVec& phis,
                      unsigned s, Method method = Method::automatic);

/// Plain E_s(A) and M_s(A) with unit weights and phi = x.
Rat E_s(const GroundSet& A, unsigned s, Method method = Method::automatic);
Rat M_s(const GroundSet& A, unsigned s, Method method = Method::automatic);

/// Vector-valued map on a finite set. Linear coordinates balance as sums.
/// Log coordinates stand for log|x| together with the sign of x: they
/// balance when the products of the underlying nonzero values agree, which is
/// the same as equality of valuation vectors over the prime support plus a
/// sign bit mod 2.
class VectorMap {
public:
  VectorMap() = default;
  /// Coordinates given by polynomials: linear ones, then log ones.
  static VectorMap from_polys(const GroundSet& A, const std::vector<PolyQ>& linear,
                              const std::vector<PolyQ>& logs = {});
  /// Explicit table; every row needs the same dimensions.
  void set(const Rat& x, std::vector<Rat> linear, std::vector<Rat> logs = {});

  bool defined_on(const Rat& x) const { return table_.count(x) > 0; }
  const std::vector<Rat>& linear(const Rat& x) const;
  const std::vector<Rat>& logs(const Rat& x) const;
  std::size_t linear_dim() const { return lin_dim_; }
  std::size_t log_dim() const { return log_dim_; }

private:
  std::map<Rat, std::pair<std::vector<Rat>, std::vector<Rat>>> table_;
  std::size_t lin_dim_ = 0;
  std::size_t log_dim_ = 0;
  bool dims_set_ = false;
};

/// E_{s,a}(A; f, g): both f and g balance.
EnergyReport energy_E_fg(const GroundSet& A, const WeightFn& w, const VectorMap& f,
                         const VectorMap& g, unsigned s, Method method = Method::automatic);
/// E_{s,a}(A; g).
EnergyReport energy_E_g(const GroundSet& A, const WeightFn& w, const VectorMap& g, unsigned s,
                        Method method = Method::automatic);
/// |s f(A) - s f(A)|, differences taken in the group of the coordinates.
Int fold_difference_count(const GroundSet& A, const VectorMap& f, unsigned s);

}  // namespace spl
