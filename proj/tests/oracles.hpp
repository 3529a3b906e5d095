#pragma once

// Naive reference implementations used only by the tests. Nothing here calls
// into the counting engine: tuples are enumerated one by one.

#include "spl/core/rational.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using spl::Int;
using spl::Rat;
using Fn = std::function<Rat(const Rat&)>;

inline Rat poly(const std::vector<long>& c, const Rat& x) {
  Rat r = 0, p = 1;
  for (long a : c) {
    r += Rat(a) * p;
    p *= x;
  }
  return r;
}

inline Fn as_fn(std::vector<long> c) {
  return [c](const Rat& x) { return poly(c, x); };
}

inline Fn identity() {
  return [](const Rat& x) { return x; };
}

// Calls f on every tuple in A^k.
inline void tuples(const std::vector<Rat>& A, unsigned k,
                   const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k, 0);
  if (A.empty()) return;
  while (true) {
    f(idx);
    std::size_t j = 0;
    while (j < k && ++idx[j] == A.size()) idx[j++] = 0;
    if (j == k) return;
  }
}

inline Rat weight_of(const std::vector<Rat>& w, const std::vector<std::size_t>& idx) {
  Rat r = 1;
  for (auto i : idx) r *= w.empty() ? Rat(1) : w[i];
  return r;
}

// Weighted count of 2s-tuples with phi-sums balancing (kind 'E'), phi-products
// balancing ('M'), or both plain products and phi-products balancing ('J').
inline Rat energy(char kind, const std::vector<Rat>& A, unsigned s, const std::vector<Fn>& phis,
                  const std::vector<Rat>& w = {}) {
  Rat total = 0;
  tuples(A, 2 * s, [&](const std::vector<std::size_t>& idx) {
    Rat l = kind == 'E' ? 0 : 1, r = l, lp = 1, rp = 1;
    for (unsigned j = 0; j < 2 * s; ++j) {
      const Rat v = phis[j](A[idx[j]]);
      Rat& side = j < s ? l : r;
      if (kind == 'E')
        side += v;
      else
        side *= v;
      (j < s ? lp : rp) *= A[idx[j]];
    }
    if (l == r && (kind != 'J' || lp == rp)) total += weight_of(w, idx);
  });
  return total;
}

inline Rat energy_uniform(char kind, const std::vector<Rat>& A, unsigned s, const Fn& phi,
                          const std::vector<Rat>& w = {}) {
  return energy(kind, A, s, std::vector<Fn>(2 * s, phi), w);
}

inline std::vector<Rat> ints(std::initializer_list<long> xs) {
  std::vector<Rat> r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

inline std::vector<Rat> range(long lo, long hi) {
  std::vector<Rat> r;
  for (long x = lo; x <= hi; ++x) r.emplace_back(x);
  return r;
}

inline std::set<Rat> fold(const std::vector<Rat>& A, unsigned s, bool mult) {
  std::set<Rat> out;
  tuples(A, s, [&](const std::vector<std::size_t>& idx) {
    Rat v = mult ? 1 : 0;
    for (auto i : idx) {
      if (mult)
        v *= A[i];
      else
        v += A[i];
    }
    out.insert(v);
  });
  return out;
}

// {a_1 + .. + a_m - b_1 - .. - b_n}
inline std::set<Rat> m_minus_n(const std::vector<Rat>& A, unsigned m, unsigned n) {
  std::set<Rat> out;
  if (m + n == 0) return {Rat(0)};
  tuples(A, m + n, [&](const std::vector<std::size_t>& idx) {
    Rat v = 0;
    for (unsigned j = 0; j < m + n; ++j) v += j < m ? A[idx[j]] : -A[idx[j]];
    out.insert(v);
  });
  return out;
}

// nu_p by repeated division.
inline long nu(long p, Int x) {
  long k = 0;
  if (x < 0) x = -x;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

// Sidon check by comparing every pair of sorted s-multisets.
inline bool sidon(const std::vector<Rat>& X, unsigned s, const Fn& phi, bool mult) {
  std::vector<std::vector<std::size_t>> ms;
  tuples(X, s, [&](const std::vector<std::size_t>& idx) {
    if (std::is_sorted(idx.begin(), idx.end())) ms.push_back(idx);
  });
  std::vector<Rat> vals;
  for (const auto& m : ms) {
    Rat v = mult ? 1 : 0;
    for (auto i : m) {
      if (mult)
        v *= phi(X[i]);
      else
        v += phi(X[i]);
    }
    vals.push_back(v);
  }
  std::sort(vals.begin(), vals.end());
  return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

// Size of a largest Sidon subset, by trying every subset.
inline std::size_t max_sidon(const std::vector<Rat>& A, unsigned s, const Fn& phi, bool mult) {
  std::size_t best = 0;
  for (std::size_t mask = 1; mask < (std::size_t(1) << A.size()); ++mask) {
    const auto c = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (c <= best) continue;
    std::vector<Rat> X;
    for (std::size_t i = 0; i < A.size(); ++i)
      if (mask >> i & 1) X.push_back(A[i]);
    if (sidon(X, s, phi, mult)) best = c;
  }
  return best;
}

}  // namespace oracle
