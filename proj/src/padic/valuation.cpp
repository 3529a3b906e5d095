#include "spl/padic/valuation.hpp"

namespace spl {

namespace {

long int_valuation(const Int& p, const Int& n) {
  if (n == 0) throw Error("valuation of zero");
  long v = 0;
  Int m = abs(n);
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace

long valuation(const Int& p, const Rat& x) {
  if (x == 0) throw Error("valuation of zero");
  if (p < 2) throw Error("not a prime: " + to_string(p));
  return int_valuation(p, x.get_num()) - int_valuation(p, x.get_den());
}

std::vector<long> Fibering::valuation_set() const {
  std::vector<long> v;
  for (const auto& [n, f] : fibers) v.push_back(n);
  return v;
}

Fibering fiber(const GroundSet& A, const Int& p) {
  if (A.contains_zero()) throw Error("zero element");
  std::map<long, std::vector<Rat>> parts;
  for (const auto& a : A) parts[valuation(p, a)].push_back(a);
  Fibering f;
  f.base = A;
  f.prime = p;
  for (auto& [n, v] : parts) f.fibers.emplace(n, GroundSet(std::move(v)));
  return f;
}

}  // namespace spl
