#pragma once

#include "spl/core/ground_set.hpp"
#include "spl/core/rational.hpp"

#include <optional>
#include <vector>

namespace spl {

/// Univariate polynomial over Q, coefficients lowest degree first.
class PolyQ {
public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rat> coeffs);

  static PolyQ constant(const Rat& c);
  static PolyQ identity();                        ///< x
  static PolyQ monomial(const Rat& c, unsigned k);  ///< c x^k
  static PolyQ from_ints(const std::vector<long>& coeffs);

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat operator()(const Rat& x) const { return eval(x); }
  Rat eval(const Rat& x) const;        ///< Horner
  Rat eval_naive(const Rat& x) const;  ///< sum of c_k x^k

  PolyQ operator+(const PolyQ& o) const;
  PolyQ operator-(const PolyQ& o) const;
  PolyQ operator*(const PolyQ& o) const;
  PolyQ operator*(const Rat& c) const;
  PolyQ operator-() const;
  /// Euclidean division; divisor must be nonzero.
  std::pair<PolyQ, PolyQ> divmod(const PolyQ& d) const;
  PolyQ derivative() const;
  PolyQ monic() const;

  /// p(c x)
  PolyQ scale_argument(const Rat& c) const;
  /// p(-x)
  PolyQ reflected() const { return scale_argument(Rat(-1)); }

  /// "[1, 0, -2]"
  std::string str() const;

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

private:
  void trim();
  std::vector<Rat> c_;
};

PolyQ poly_gcd(PolyQ a, PolyQ b);

/// All rational x with p(x) = 0. Throws "identically zero" for p = 0.
GroundSet rational_roots(const PolyQ& p);

/// Sturm sequence p, p', -rem(...), ...
std::vector<PolyQ> sturm_sequence(const PolyQ& p);
/// Number of sign changes of the Sturm sequence evaluated at x.
int sturm_variations(const std::vector<PolyQ>& seq, const Rat& x);

/// Point of the real line that splits sign intervals: either an exact
/// rational or an irrational root of `poly` isolated in the open bracket (lo, hi).
struct Breakpoint {
  bool exact = true;
  Rat value;      ///< when exact
  Rat lo, hi;     ///< when not exact; poly has exactly one root inside, none at lo, hi
  PolyQ poly;     ///< squarefree, nonzero at every rational

  /// -1, 0, +1 as x is below, at, or above the point. Refines a copy of the bracket.
  int compare(const Rat& x) const;
};

/// Maximal open interval on which x and p(x) both keep a constant nonzero sign.
struct SignInterval {
  std::optional<Breakpoint> left;   ///< empty = -infinity
  std::optional<Breakpoint> right;  ///< empty = +infinity
  int sign_x = 0;
  int sign_p = 0;
  Rat sample;  ///< a rational point inside

  bool contains(const Rat& x) const;
  std::string str() const;
};

/// Partition of R minus ({0} and the real roots of p) into sign intervals.
/// p must not be identically zero.
std::vector<SignInterval> sign_intervals(const PolyQ& p);

/// Index of the sign interval of p holding every element of S, if there is one.
std::optional<std::size_t> common_sign_interval(const GroundSet& S, const PolyQ& p);

/// The phi_1..phi_2s of a mixed energy.
class PolyVec {
public:
  PolyVec() = default;
  explicit PolyVec(std::vector<PolyQ> polys);
  /// The same polynomial in all 2s positions.
  static PolyVec uniform(const PolyQ& p, unsigned s);

  unsigned s() const { return static_cast<unsigned>(polys_.size() / 2); }
  std::size_t size() const { return polys_.size(); }
  const PolyQ& operator[](std::size_t i) const { return polys_[i]; }
  const std::vector<PolyQ>& polys() const { return polys_; }
  int max_degree() const;
  bool all_equal() const;
  /// Each phi_j replaced by phi_j(-x).
  PolyVec reflected() const;
  /// Every real x at which some phi_j vanishes, rational ones only.
  GroundSet rational_root_union() const;

private:
  std::vector<PolyQ> polys_;
};

}  // namespace spl
