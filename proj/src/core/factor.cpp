#include "spl/core/factor.hpp"

#include <algorithm>
#include <set>

namespace spl {

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (long i = 2; i <= bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

std::vector<Int> first_primes(std::size_t count) {
  long bound = 32;
  while (true) {
    auto ps = primes_up_to(bound);
    if (ps.size() >= count) {
      std::vector<Int> out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) out.emplace_back(ps[i]);
      return out;
    }
    bound *= 2;
  }
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return Int(2);
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto f = [&](const Int& v) {
      Int r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Int diff = x - y;
      d = gcd(abs(diff), n);
    }
    if (d != n) return d;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(Int(n / d), out);
}

}  // namespace

std::map<Int, unsigned long> factorize(const Int& n) {
  if (n == 0) throw Error("factorisation of zero");
  std::map<Int, unsigned long> out;
  Int m = abs(n);
  for (unsigned long p = 2; p < 1000 && m > 1; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[Int(p)];
      m /= p;
    }
  }
  factor_into(m, out);
  return out;
}

std::vector<Int> prime_support(const std::vector<Rat>& xs) {
  std::set<Int> ps;
  for (const auto& x : xs) {
    if (x == 0) throw Error("prime support of zero");
    for (const auto& [p, e] : factorize(x.get_num())) ps.insert(p);
    for (const auto& [p, e] : factorize(x.get_den())) ps.insert(p);
  }
  return {ps.begin(), ps.end()};
}

CoprimeBasis::CoprimeBasis(std::vector<Int> numbers) {
  std::vector<Int> work;
  for (auto& n : numbers) {
    Int a = abs(n);
    if (a > 1) work.push_back(a);
  }
  // Refine until pairwise coprime: replace a, b sharing g by a/g, b/g, g.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        Int g = gcd(work[i], work[j]);
        if (g == 1) continue;
        Int a = work[i] / g;
        Int b = work[j] / g;
        work.erase(work.begin() + static_cast<long>(j));
        work.erase(work.begin() + static_cast<long>(i));
        for (Int* v : {&a, &b, &g})
          if (*v > 1) work.push_back(*v);
        changed = true;
      }
    }
  }
  basis_ = std::move(work);
}

std::vector<long> CoprimeBasis::exponents(const Int& n) const {
  if (n == 0) throw Error("coprime-basis exponents of zero");
  std::vector<long> e(basis_.size(), 0);
  Int m = abs(n);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    while (mpz_divisible_p(m.get_mpz_t(), basis_[i].get_mpz_t())) {
      m /= basis_[i];
      ++e[i];
    }
  }
  if (m != 1) throw Error("value does not factor over the coprime basis: " + to_string(n));
  return e;
}

}  // namespace spl
