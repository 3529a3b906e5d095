#pragma once

#include "spl/core/rational.hpp"

#include <map>
#include <vector>

namespace spl {

/// The first `count` primes, by sieve.
std::vector<Int> first_primes(std::size_t count);
/// All primes <= bound.
std::vector<long> primes_up_to(long bound);

bool is_prime(const Int& n);

/// Prime factorisation of |n| (n != 0) as prime -> exponent, ascending.
std::map<Int, unsigned long> factorize(const Int& n);

/// Primes dividing the numerator or denominator of some x (x != 0 for all x).
std::vector<Int> prime_support(const std::vector<Rat>& xs);

/// A set of pairwise coprime integers > 1 such that every input factors
/// uniquely into powers of its members. Cheaper than factorisation: only gcds.
class CoprimeBasis {
public:
  explicit CoprimeBasis(std::vector<Int> numbers);

  const std::vector<Int>& elements() const { return basis_; }

  /// Exponent vector of |n| over the basis; n must be a nonzero integer whose
  /// absolute value was among (or is a product of) the construction inputs.
  std::vector<long> exponents(const Int& n) const;

private:
  std::vector<Int> basis_;
};

}  // namespace spl
