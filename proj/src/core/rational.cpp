#include "spl/core/rational.hpp"

#include <cctype>
#include <cmath>

namespace spl {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

Int parse_int(std::string_view text) {
  auto s = trim(text);
  if (!is_integer_literal(s)) throw Error("not an integer: '" + std::string(text) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

Rat parse_rat(std::string_view text) {
  auto s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw Error("zero denominator: '" + std::string(text) + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& x) { return x.get_str(10); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

std::string to_fraction_string(const Rat& x) {
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat ipow(const Rat& base, unsigned long exp) {
  Rat r(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
  r.canonicalize();
  return r;
}

Rat ipow_signed(const Rat& base, long exp) {
  if (exp >= 0) return ipow(base, static_cast<unsigned long>(exp));
  if (base == 0) throw Error("negative power of zero");
  return Rat(1) / ipow(base, static_cast<unsigned long>(-exp));
}

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int iroot_floor(const Int& x, unsigned long k) {
  if (x < 0) throw Error("root of a negative number");
  if (k == 0) throw Error("zeroth root");
  Int r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

RootBracket root_bracket(const Rat& y, unsigned long k, unsigned digits) {
  if (y < 0) throw Error("root of a negative number");
  const Int& n = y.get_num();
  const Int& d = y.get_den();
  const Int scale = ipow(Int(10), digits);
  const Int m = n * ipow(d, k - 1) * ipow(scale, k);
  const Int r = iroot_floor(m, k);
  RootBracket b;
  b.lo = Rat(r, d * scale);
  b.lo.canonicalize();
  if (ipow(r, k) == m) {
    b.hi = b.lo;
    b.exact = true;
  } else {
    b.hi = Rat(r + 1, d * scale);
    b.hi.canonicalize();
  }
  return b;
}

namespace {

// 2 atanh(z) = ln((1+z)/(1-z)) for 0 <= z < 1, bracketed by partial sums
// plus a geometric tail bound.
RootBracket atanh2_bracket(const Rat& z, unsigned bits) {
  const Rat eps = Rat(1) / Rat(ipow(Int(2), bits + 4));
  const Rat z2 = z * z;
  Rat term = z;  // z^(2k+1)
  Rat sum = 0;
  for (unsigned long k = 0;; ++k) {
    sum += term / Rat(static_cast<long>(2 * k + 1));
    term *= z2;
    const Rat tail = term / (Rat(static_cast<long>(2 * k + 3)) * (1 - z2));
    if (tail < eps || z == 0) {
      RootBracket b;
      b.lo = 2 * sum;
      b.hi = 2 * (sum + tail);
      return b;
    }
  }
}

}  // namespace

RootBracket ln_bracket(const Rat& x, unsigned bits) {
  if (x <= 0) throw Error("log of a nonpositive number");
  // x = 2^m y with y in [1, 2).
  long m = 0;
  Rat y = x;
  while (y >= 2) {
    y /= 2;
    ++m;
  }
  while (y < 1) {
    y *= 2;
    --m;
  }
  const auto ln2 = atanh2_bracket(Rat(1, 3), bits + 16);
  const auto lny = atanh2_bracket((y - 1) / (y + 1), bits + 4);
  RootBracket b;
  const Rat mm(m);
  b.lo = lny.lo + (m >= 0 ? mm * ln2.lo : mm * ln2.hi);
  b.hi = lny.hi + (m >= 0 ? mm * ln2.hi : mm * ln2.lo);
  b.exact = x == 1;
  return b;
}

Decision compare_power_of_root_sum(const Rat& x, const Rat& factor, const std::vector<Rat>& ys,
                                   unsigned long k, unsigned max_digits) {
  if (x < 0 || factor < 0) throw Error("certified comparison needs nonnegative operands");
  // When every y is r^k times a common y0, the sum is (sum r) y0^(1/k) and
  // the right side is exact. This settles the equality cases.
  const Rat* y0 = nullptr;
  for (const auto& y : ys)
    if (y != 0) {
      y0 = &y;
      break;
    }
  if (y0 == nullptr) return x <= 0 ? Decision::holds : Decision::fails;
  Rat rsum = 0;
  bool common = true;
  for (const auto& y : ys) {
    const auto b = root_bracket(y / *y0, k, 0);
    if (!b.exact) {
      common = false;
      break;
    }
    rsum += b.lo;
  }
  if (common) return x <= factor * ipow(rsum, k) * *y0 ? Decision::holds : Decision::fails;
  for (unsigned digits = 8;; digits *= 2) {
    Rat lower = 0;
    Rat upper = 0;
    bool all_exact = true;
    for (const auto& y : ys) {
      auto b = root_bracket(y, k, digits);
      lower += b.lo;
      upper += b.hi;
      all_exact = all_exact && b.exact;
    }
    if (x <= factor * ipow(lower, k)) return Decision::holds;
    if (x > factor * ipow(upper, k)) return Decision::fails;
    if (all_exact || digits >= max_digits) return Decision::undecided;
  }
}

std::size_t RatHash::operator()(const Rat& x) const noexcept {
  const std::size_t a = hash_mpz(x.get_num_mpz_t());
  const std::size_t b = hash_mpz(x.get_den_mpz_t());
  return a ^ (b * 0x100000001b3ULL + (a << 7));
}

std::size_t IntHash::operator()(const Int& x) const noexcept { return hash_mpz(x.get_mpz_t()); }

long to_long(const Int& x) {
  if (!x.fits_slong_p()) throw Error("integer out of range: " + to_string(x));
  return x.get_si();
}

unsigned long to_ulong(const Int& x) {
  if (!x.fits_ulong_p()) throw Error("integer out of range: " + to_string(x));
  return x.get_ui();
}

double log2_approx(const Rat& x) {
  if (x <= 0) throw Error("log of a nonpositive number");
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, x.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, x.get_den_mpz_t());
  return std::log2(mn) - std::log2(md) + static_cast<double>(en - ed);
}

double to_double(const Rat& x) { return x.get_d(); }

}  // namespace spl
