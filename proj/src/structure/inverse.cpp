#include "spl/structure/inverse.hpp"

#include "spl/energy/set_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace spl {

namespace {

void require_positive_integers(const GroundSet& A, const char* name) {
  if (A.empty()) throw Error(std::string(name) + " is empty");
  for (const auto& a : A)
    if (!is_integer(a) || a <= 0) throw Error(std::string(name) + " must hold positive integers, got " + to_string(a));
}

Rat size_ratio(std::size_t a, std::size_t b) {
  Rat r(static_cast<long>(a), static_cast<long>(b));
  r.canonicalize();
  return r;
}

}  // namespace

LowQcExtraction extract_low_qc_subset(const GroundSet& A, const GroundSet& X, const Rat& K) {
  require_positive_integers(A, "A");
  require_positive_integers(X, "X");
  LowQcExtraction r;
  const GroundSet AXX = productset(productset(A, X), X);
  r.product_ratio = size_ratio(AXX.size(), X.size());
  if (r.product_ratio > K)
    throw Error("hypothesis fails: |A.X.X| / |X| = " + to_string(r.product_ratio) + " exceeds K = " + to_string(K));
  if (K < 1) throw Error("K must be at least 1");
  while (Rat(ipow(Int(2), r.tau + 1)) <= 2 * K) ++r.tau;
  const auto best = max_subset_with_qc(A, r.tau, 63);
  r.B = best.subset;
  r.witness = best.strategy;
  const auto rep = replay(r.witness, r.B);
  r.depth_ok = rep.valid && r.witness.witnessed_q() <= std::max(1u, r.tau);
  r.size_ok = Rat(static_cast<long>(r.B.size())) * K >= Rat(static_cast<long>(A.size()));
  const auto psi = ValuationVectors::of(A, X);
  r.binary_size = largest_binary_subset(psi.distinct(), psi.vectors.size()).size();
  r.binary_ok = Rat(static_cast<long>(r.binary_size)) <= K;
  return r;
}

CoverResult greedy_cover(const GroundSet& A, const GroundSet& B) {
  if (A.contains_zero() || B.contains_zero()) throw Error("zero elements");
  if (A.empty()) throw Error("A is empty");
  if (B.empty()) throw Error("B is empty");
  CoverResult r;
  const GroundSet Binv = inverse_set(B);
  const GroundSet cands = productset(A, Binv);
  r.C = size_ratio(productset(A, B).size(), B.size());
  std::map<Rat, bool> covered;
  for (const auto& a : A) covered[a] = false;
  std::size_t left = A.size();
  std::vector<Rat> chosen;
  while (left > 0) {
    const Rat* best = nullptr;
    std::size_t best_gain = 0;
    for (const auto& c : cands) {
      std::size_t gain = 0;
      for (const auto& b : B) {
        auto it = covered.find(c * b);
        if (it != covered.end() && !it->second) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = &c;
      }
    }
    chosen.push_back(*best);
    for (const auto& b : B) {
      auto it = covered.find(*best * b);
      if (it != covered.end() && !it->second) {
        it->second = true;
        --left;
      }
    }
  }
  r.S = GroundSet(std::move(chosen));
  r.covers = A.is_subset_of(productset(r.S, B)) && r.S.is_subset_of(cands);
  const auto ln = ln_bracket(Rat(static_cast<long>(A.size())));
  auto ceil_of = [](const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
  };
  const Int lo = ceil_of(r.C * (ln.lo + 1));
  const Int hi = ceil_of(r.C * (ln.hi + 1));
  r.size_bound = hi;
  const Int size(static_cast<unsigned long>(r.S.size()));
  if (size <= lo) r.within_bound = Decision::holds;
  else if (size > hi) r.within_bound = Decision::fails;
  else r.within_bound = Decision::undecided;
  if (lo == hi) r.size_bound = lo;
  return r;
}

PlunneckeCheck check_plunnecke(const GroundSet& A, unsigned m, unsigned n) {
  if (A.empty()) throw Error("empty set");
  PlunneckeCheck c;
  c.K = size_ratio(sumset(A, A).size(), A.size());
  c.lhs = Int(static_cast<unsigned long>(mA_minus_nA(A, m, n).size()));
  c.rhs = ipow(c.K, m + n) * Rat(static_cast<long>(A.size()));
  c.holds = Rat(c.lhs) <= c.rhs;
  return c;
}

AveragingCheck check_averaging(const GroundSet& A, const WeightFn& w, const VectorMap& f,
                               const VectorMap& g, unsigned s, Method method) {
  AveragingCheck c;
  c.lhs = energy_E_g(A, w, g, s, method).value;
  c.factor = fold_difference_count(A, f, s);
  c.rhs = energy_E_fg(A, w, f, g, s, method).value;
  c.holds = c.lhs <= Rat(c.factor) * c.rhs;
  return c;
}

Th46Report verify_th46_conclusion(const GroundSet& A, unsigned s, const GroundSet& U,
                                  const std::vector<std::pair<unsigned, unsigned>>& mn) {
  if (U.empty()) throw Error("empty U'");
  if (A.empty()) throw Error("empty set");
  if (s < 2) throw Error("need s >= 2");
  Th46Report r;
  r.A_size = A.size();
  r.U_size = U.size();
  r.energy = E_s(A, s);
  r.K = Rat(ipow(Int(static_cast<unsigned long>(A.size())), 2 * s - 1)) / r.energy;
  r.size_ratio = Rat(static_cast<long>(U.size())) / (r.K * Rat(static_cast<long>(A.size())));
  for (const auto& x : difference_set(U, A)) {
    std::size_t overlap = 0;
    for (const auto& a : A)
      if (U.contains(a + x)) ++overlap;
    r.max_overlap = std::max(r.max_overlap, overlap);
  }
  r.overlap_ratio = size_ratio(r.max_overlap, A.size());
  for (unsigned sp = 2; sp <= s; ++sp)
    if (U.is_subset_of(fold_sumset(A, sp))) r.folds_containing.push_back(sp);
  for (const auto& [m, n] : mn) {
    SumsetTerm t;
    t.m = m;
    t.n = n;
    t.size = Int(static_cast<unsigned long>(mA_minus_nA(U, m, n).size()));
    t.ratio = Rat(t.size) / Rat(static_cast<long>(U.size()));
    r.sumsets.push_back(t);
  }
  if (A.size() > 1) {
    const double la = std::log2(static_cast<double>(A.size()));
    r.nu = 2.0 * s - log2_approx(r.energy) / la;
    r.log_ratio_size = std::log2(static_cast<double>(U.size())) / la;
  }
  return r;
}

}  // namespace spl
