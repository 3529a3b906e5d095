#pragma once

// Exact scalars. Every quantity in the library (set elements, polynomial
// coefficients, weights, energies, bounds) is an Int or a Rat; nothing is
// ever rounded.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spl {

using Int = mpz_class;
using Rat = mpq_class;

/// Library-wide error type; messages name the violated precondition.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses "7", "-3", "5/3", "10/4" (normalised to 5/2). Throws Error on junk
/// or a zero denominator.
Rat parse_rat(std::string_view text);
Int parse_int(std::string_view text);

/// Canonical decimal form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

/// Always "n/d", even for integers (the report serialisation form).
std::string to_fraction_string(const Rat& x);

inline Rat make_rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }
inline int sign(const Rat& x) { return sgn(x); }
inline int sign(const Int& x) { return sgn(x); }

Int ipow(const Int& base, unsigned long exp);
Rat ipow(const Rat& base, unsigned long exp);
/// Integer power with possibly negative exponent (base must be nonzero then).
Rat ipow_signed(const Rat& base, long exp);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// floor(x^(1/k)) for x >= 0.
Int iroot_floor(const Int& x, unsigned long k);

/// Rational brackets lo <= y^(1/k) <= hi with hi - lo <= 10^-digits.
struct RootBracket {
  Rat lo;
  Rat hi;
  bool exact = false;  ///< lo == hi == y^(1/k)
};
RootBracket root_bracket(const Rat& y, unsigned long k, unsigned digits);

/// Rational lo <= ln(x) <= hi for x > 0, with hi - lo below 2^-bits.
RootBracket ln_bracket(const Rat& x, unsigned bits = 64);

/// Three-valued answer of a certified comparison.
enum class Decision { holds, fails, undecided };

/// Decides x <= factor * (sum_i y_i^(1/k))^k using rational root brackets of
/// increasing precision. All inputs must be nonnegative.
Decision compare_power_of_root_sum(const Rat& x, const Rat& factor,
                                   const std::vector<Rat>& ys, unsigned long k,
                                   unsigned max_digits = 400);

struct RatHash {
  std::size_t operator()(const Rat& x) const noexcept;
};
struct IntHash {
  std::size_t operator()(const Int& x) const noexcept;
};

/// Checked conversions; throw Error when the value does not fit.
long to_long(const Int& x);
unsigned long to_ulong(const Int& x);

/// Approximate log2 of a positive rational, for informational reports only.
double log2_approx(const Rat& x);
double to_double(const Rat& x);

}  // namespace spl
