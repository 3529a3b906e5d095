#include "spl/energy/set_algebra.hpp"

#include <unordered_set>

namespace spl {

namespace {

template <class Op>
GroundSet combine(const GroundSet& A, const GroundSet& B, Op op) {
  std::unordered_set<Rat, RatHash> seen;
  seen.reserve(A.size() * B.size());
  for (const auto& a : A)
    for (const auto& b : B) seen.insert(op(a, b));
  return GroundSet(std::vector<Rat>(seen.begin(), seen.end()));
}

}  // namespace

GroundSet sumset(const GroundSet& A, const GroundSet& B) {
  return combine(A, B, [](const Rat& a, const Rat& b) { return Rat(a + b); });
}

GroundSet productset(const GroundSet& A, const GroundSet& B) {
  return combine(A, B, [](const Rat& a, const Rat& b) { return Rat(a * b); });
}

GroundSet difference_set(const GroundSet& A, const GroundSet& B) {
  return combine(A, B, [](const Rat& a, const Rat& b) { return Rat(a - b); });
}

GroundSet inverse_set(const GroundSet& B) {
  std::vector<Rat> v;
  for (const auto& b : B) {
    if (b == 0) throw Error("zero divisor");
    v.push_back(1 / b);
  }
  return GroundSet(std::move(v));
}

GroundSet fold_sumset(const GroundSet& A, unsigned s) {
  if (s == 0) throw Error("s must be at least 1");
  GroundSet acc = A;
  for (unsigned i = 1; i < s; ++i) acc = sumset(acc, A);
  return acc;
}

GroundSet fold_productset(const GroundSet& A, unsigned s) {
  if (s == 0) throw Error("s must be at least 1");
  GroundSet acc = A;
  for (unsigned i = 1; i < s; ++i) acc = productset(acc, A);
  return acc;
}

GroundSet quotient_set(const GroundSet& A, unsigned s) {
  if (A.contains_zero()) throw Error("zero divisor");
  const GroundSet P = fold_productset(A, s);
  return productset(P, inverse_set(P));
}

GroundSet mA_minus_nA(const GroundSet& A, unsigned m, unsigned n) {
  GroundSet pos = m == 0 ? GroundSet{0} : fold_sumset(A, m);
  GroundSet neg = n == 0 ? GroundSet{0} : fold_sumset(A, n);
  return difference_set(pos, neg);
}

}  // namespace spl
