#include "spl/decompose/decompose.hpp"

#include "spl/core/factor.hpp"
#include "spl/padic/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace spl {

std::string to_string(Finder f) { return f == Finder::exact_qc ? "exact-qc" : "greedy-fiber"; }

Finder parse_finder(const std::string& s) {
  if (s == "exact-qc") return Finder::exact_qc;
  if (s == "greedy-fiber") return Finder::greedy_fiber;
  throw Error("unknown finder: " + s);
}

unsigned default_k(unsigned s, const Rat& D) {
  if (s < 3) return 1;
  const double ls = std::log2(static_cast<double>(s));
  const double lls = std::log2(ls);
  if (lls <= 0) return 1;
  const double v = std::ceil(ls / (to_double(D) * lls));
  return std::max(1u, static_cast<unsigned>(v));
}

namespace {

// n^e <= M decided exactly for rational e = p/q, n >= 1: M^q vs n^p.
bool energy_below(const Rat& M, std::size_t n, const Rat& e) {
  if (n == 0) return M == 0;
  if (e < 0) throw Error("negative threshold exponent");
  const unsigned long q = to_ulong(e.get_den());
  const unsigned long p = to_ulong(e.get_num());
  return ipow(M, q) <= Rat(ipow(Int(static_cast<unsigned long>(n)), p));
}

// Fibers on the prime with most fibers (ties: smaller largest fiber, then
// smaller prime); at depth 0 keep the smallest element.
QueryStrategy greedy_fiber(const GroundSet& S, unsigned t, std::vector<Rat>& kept) {
  if (S.empty()) return QueryStrategy::leaf();
  if (S.size() == 1 || t == 0) {
    kept.push_back(S[0]);
    return QueryStrategy::leaf(S[0]);
  }
  std::optional<Fibering> best;
  for (const auto& p : prime_support_of(S)) {
    auto f = fiber(S, p);
    if (!best) {
      best = std::move(f);
      continue;
    }
    auto largest = [](const Fibering& g) {
      std::size_t m = 0;
      for (const auto& [n, F] : g.fibers) m = std::max(m, F.size());
      return m;
    };
    if (f.fibers.size() > best->fibers.size() ||
        (f.fibers.size() == best->fibers.size() && largest(f) < largest(*best)))
      best = std::move(f);
  }
  if (!best || best->fibers.size() < 2) {
    kept.push_back(S[0]);
    return QueryStrategy::leaf(S[0]);
  }
  QueryStrategy q;
  q.prime = best->prime;
  for (const auto& [n, F] : best->fibers)
    q.children[n] = std::make_shared<const QueryStrategy>(greedy_fiber(F, t - 1, kept));
  return q;
}

}  // namespace

DecompositionResult decompose(const GroundSet& A, unsigned s, const PolyVec& phis,
                              const DecomposeConfig& cfg) {
  if (A.empty()) throw Error("empty set");
  if (cfg.tau < 1) throw Error("tau must be at least 1");
  if (s < 1) throw Error("s must be positive");
  if (phis.size() != 2 * s) throw Error("need 2s polynomials");
  DecompositionResult r;
  r.A = A;
  r.s = s;
  r.k = cfg.k.value_or(default_k(s, cfg.D));
  r.threshold_exponent = cfg.threshold_exponent.value_or(Rat(2 * static_cast<long>(s) - static_cast<long>(r.k)));
  r.tau = cfg.tau;
  r.finder = cfg.finder;
  for (const auto& a : A) r.dilation = lcm(r.dilation, a.get_den());

  GroundSet rest = A.minus(GroundSet{0});
  while (true) {
    ++r.rounds;
    if (rest.empty() || energy_below(M_s(rest, s), rest.size(), r.threshold_exponent)) break;
    const GroundSet dil = rest.scaled(Rat(r.dilation));
    Piece piece;
    std::vector<Rat> kept;
    if (cfg.finder == Finder::exact_qc) {
      auto found = max_subset_with_qc(dil, r.tau, cfg.exact_limit);
      piece.witness = found.strategy;
      kept = found.subset.elements();
    } else {
      piece.witness = greedy_fiber(dil, r.tau, kept);
    }
    piece.set = GroundSet(std::move(kept)).scaled(Rat(1) / Rat(r.dilation));
    piece.t = piece.witness.witnessed_q();
    rest = rest.minus(piece.set);
    r.pieces.push_back(std::move(piece));
  }
  r.C = rest;
  // Zero cannot be fibered; it joins B as its own one-element piece.
  if (A.contains_zero()) {
    Piece z;
    z.set = GroundSet{0};
    z.witness = QueryStrategy::leaf(Rat(0));
    z.t = 1;
    r.pieces.push_back(std::move(z));
  }
  for (const auto& p : r.pieces) r.B = r.B.unite(p.set);
  return r;
}

Certificates certify(const DecompositionResult& r, const PolyVec& phis, bool want_M_phi) {
  const unsigned s = r.s;
  if (phis.size() != 2 * s) throw Error("need 2s polynomials");
  Certificates c;
  std::size_t total = 0;
  GroundSet seen;
  for (const auto& p : r.pieces) {
    total += p.set.size();
    seen = seen.unite(p.set);
  }
  c.partition_ok = total == seen.size() && seen == r.B && r.B.intersect(r.C).empty() &&
                   r.B.unite(r.C) == r.A;
  c.witnesses_ok = true;
  for (const auto& p : r.pieces) {
    if (p.set == GroundSet{0}) continue;
    const auto rep = replay(p.witness, p.set.scaled(Rat(r.dilation)));
    if (!rep.valid || p.witness.witnessed_q() > r.tau) c.witnesses_ok = false;
  }
  const WeightFn unit;
  c.E_B = r.B.empty() ? Rat(0) : energy_E(r.B, unit, phis, s).value;
  c.M_C = r.C.empty() ? Rat(0) : M_s(r.C, s);
  c.C_threshold_holds = energy_below(c.M_C, r.C.size(), r.threshold_exponent);
  bool phi0 = true;
  for (const auto& p : phis.polys()) phi0 = phi0 && p(0) != 0;
  if (want_M_phi && phi0) c.M_phi_B = r.B.empty() ? Rat(0) : energy_M(r.B, unit, phis, s).value;

  const Int d = phis.max_degree() < 0 ? Int(0) : Int(phis.max_degree());
  const Int Cq = ipow(Int(d * d + 2), 4) * ipow(Int(2 * s), 2);
  Rat worst = 0;
  for (const auto& p : r.pieces)
    worst = std::max(worst, Rat(ipow(Int(ipow(Cq, p.t) * static_cast<unsigned long>(p.set.size())), s)));
  c.union_bound = Rat(ipow(Int(static_cast<unsigned long>(r.pieces.size())), 2 * s)) * worst;
  c.union_bound_holds = c.E_B <= c.union_bound;

  auto expo = [](const Rat& v, std::size_t n) -> std::optional<double> {
    if (n < 2 || v <= 0) return std::nullopt;
    return log2_approx(v) / std::log2(static_cast<double>(n));
  };
  c.exponent_E_B = expo(c.E_B, r.B.size());
  c.exponent_M_C = expo(c.M_C, r.C.size());
  if (c.M_phi_B) c.exponent_M_phi_B = expo(*c.M_phi_B, r.B.size());
  return c;
}

NegativeReduction negative_reduction(const GroundSet& A, const PolyVec& phis) {
  NegativeReduction n;
  n.phis_reflected = phis.reflected();
  const GroundSet Z = phis.rational_root_union().unite(n.phis_reflected.rational_root_union()).minus(GroundSet{0});
  std::vector<Rat> a1, a2, a3, a4;
  for (const auto& a : A) {
    if (a == 0) a4.push_back(a);
    else if (Z.contains(a)) a3.push_back(a);
    else if (a > 0) a1.push_back(a);
    else a2.push_back(a);
  }
  n.A1 = GroundSet(a1);
  n.A2 = GroundSet(a2);
  n.A2_reflected = n.A2.negated();
  n.A3 = GroundSet(a3);
  n.A4 = GroundSet(a4);
  return n;
}

}  // namespace spl
