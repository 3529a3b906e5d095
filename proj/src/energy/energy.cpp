#include "spl/energy/energy.hpp"

#include "spl/core/factor.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <set>
#include <unordered_map>

namespace spl {

std::string to_string(EnergyKind k) {
  switch (k) {
    case EnergyKind::E: return "E";
    case EnergyKind::M: return "M";
    case EnergyKind::J: return "J";
    case EnergyKind::E_fg: return "E_fg";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::oracle: return "oracle";
    case Method::split: return "split-count";
  }
  return "?";
}

EnergyKind parse_energy_kind(const std::string& s) {
  if (s == "E") return EnergyKind::E;
  if (s == "M") return EnergyKind::M;
  if (s == "J") return EnergyKind::J;
  if (s == "E_fg") return EnergyKind::E_fg;
  throw Error("unknown energy kind: " + s);
}

Method parse_method(const std::string& s) {
  if (s == "auto" || s == "automatic") return Method::automatic;
  if (s == "oracle") return Method::oracle;
  if (s == "split" || s == "split-count") return Method::split;
  throw Error("unknown method: " + s);
}

namespace {

struct Overflow {};

// Checked 128-bit arithmetic; any overflow aborts the attempt and the caller
// reruns the count with GMP integers.
struct Wide {
  using T = __int128;
  static T from(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    if (mpz_sizeinbase(x.get_mpz_t(), 2) > 125) throw Overflow{};
    const Int a = abs(x);
    const Int hi = a >> 64;
    const Int lo = a - (hi << 64);
    const auto u = (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
    const T r = static_cast<T>(u);
    return x < 0 ? -r : r;
  }
  static Int to_int(T v) {
    if (v >= INT64_MIN && v <= INT64_MAX) return Int(static_cast<long>(v));
    const bool neg = v < 0;
    const auto u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Int r = Int(static_cast<unsigned long>(u >> 64));
    r <<= 64;
    r += Int(static_cast<unsigned long>(u & ~0ULL));
    return neg ? Int(-r) : r;
  }
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static void key(std::string& k, T v) {
    char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    k.append(buf, sizeof(T));
  }
};

struct Big {
  using T = Int;
  static T from(const Int& x) { return x; }
  static Int to_int(const T& v) { return v; }
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T mul(const T& a, const T& b) { return a * b; }
  static void key(std::string& k, const T& v) {
    k += v.get_str(16);
    k += ';';
  }
};

struct PItem {
  std::vector<Int> add;
  std::vector<Int> mul;
  Int w;
};

struct Prepared {
  unsigned s = 1;
  std::size_t na = 0;
  std::size_t nm = 0;
  std::vector<std::vector<PItem>> pos;
  Int wscale = 1;  // common weight denominator W; the count is divided by W^2s
};

// Clears denominators: additive coordinates by a common multiplier (sums
// balance iff scaled sums balance), multiplicative ones likewise (both sides
// pick up the same factor D^s), weights by W.
Prepared prepare(const EnergySystem& sys) {
  if (sys.s == 0) throw Error("s must be positive");
  if (sys.positions.size() != 2 * sys.s)
    throw Error("length mismatch: need " + std::to_string(2 * sys.s) + " positions, got " +
                std::to_string(sys.positions.size()));
  Prepared p;
  p.s = sys.s;
  bool dims = false;
  for (const auto& pos : sys.positions)
    for (const auto& it : pos) {
      if (!dims) {
        p.na = it.add.size();
        p.nm = it.mul.size();
        dims = true;
      } else if (it.add.size() != p.na || it.mul.size() != p.nm) {
        throw Error("inconsistent component dimensions");
      }
      if (it.weight < 0) throw Error("negative weight");
    }
  std::vector<Int> da(p.na, Int(1)), dm(p.nm, Int(1));
  Int W = 1;
  for (const auto& pos : sys.positions)
    for (const auto& it : pos) {
      for (std::size_t c = 0; c < p.na; ++c) da[c] = lcm(da[c], it.add[c].get_den());
      for (std::size_t c = 0; c < p.nm; ++c) dm[c] = lcm(dm[c], it.mul[c].get_den());
      W = lcm(W, it.weight.get_den());
    }
  p.wscale = W;
  for (const auto& pos : sys.positions) {
    std::vector<PItem> out;
    for (const auto& it : pos) {
      if (it.weight == 0) continue;
      PItem q;
      for (std::size_t c = 0; c < p.na; ++c) q.add.push_back(Int(it.add[c] * da[c]));
      for (std::size_t c = 0; c < p.nm; ++c) q.mul.push_back(Int(it.mul[c] * dm[c]));
      q.w = Int(it.weight * W);
      out.push_back(std::move(q));
    }
    p.pos.push_back(std::move(out));
  }
  return p;
}

template <class N>
struct TItem {
  std::vector<typename N::T> add, mul;
  typename N::T w;
};

template <class N>
std::vector<std::vector<TItem<N>>> convert(const Prepared& p) {
  std::vector<std::vector<TItem<N>>> out;
  for (const auto& pos : p.pos) {
    std::vector<TItem<N>> v;
    for (const auto& it : pos) {
      TItem<N> t;
      for (const auto& x : it.add) t.add.push_back(N::from(x));
      for (const auto& x : it.mul) t.mul.push_back(N::from(x));
      t.w = N::from(it.w);
      v.push_back(std::move(t));
    }
    out.push_back(std::move(v));
  }
  return out;
}

template <class N>
Int oracle_impl(const Prepared& p) {
  using T = typename N::T;
  const auto items = convert<N>(p);
  const std::size_t L = 2 * p.s;
  std::vector<std::vector<T>> add(L + 1, std::vector<T>(p.na, T(0)));
  std::vector<std::vector<T>> lm(L + 1, std::vector<T>(p.nm, T(1)));
  std::vector<std::vector<T>> rm(L + 1, std::vector<T>(p.nm, T(1)));
  std::vector<T> w(L + 1, T(1));
  T total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t d) {
    const bool left = d < p.s;
    for (const auto& it : items[d]) {
      for (std::size_t c = 0; c < p.na; ++c)
        add[d + 1][c] = left ? N::add(add[d][c], it.add[c]) : N::sub(add[d][c], it.add[c]);
      for (std::size_t c = 0; c < p.nm; ++c) {
        lm[d + 1][c] = left ? N::mul(lm[d][c], it.mul[c]) : lm[d][c];
        rm[d + 1][c] = left ? rm[d][c] : N::mul(rm[d][c], it.mul[c]);
      }
      w[d + 1] = N::mul(w[d], it.w);
      if (d + 1 == L) {
        bool ok = true;
        for (std::size_t c = 0; c < p.na && ok; ++c) ok = add[L][c] == 0;
        for (std::size_t c = 0; c < p.nm && ok; ++c) ok = lm[L][c] == rm[L][c];
        if (ok) total = N::add(total, w[L]);
      } else {
        rec(d + 1);
      }
    }
  };
  rec(0);
  return N::to_int(total);
}

struct Factored {
  bool zero = false;
  int sign = 1;
  std::vector<long> exps;
};

template <class N>
std::unordered_map<std::string, typename N::T> half_table(
    const Prepared& p, const std::vector<std::vector<TItem<N>>>& items,
    const std::vector<std::vector<std::vector<Factored>>>* fact, std::size_t nb, std::size_t first) {
  using T = typename N::T;
  std::unordered_map<std::string, T> table;
  const std::size_t S = p.s;
  std::vector<std::vector<T>> add(S + 1, std::vector<T>(p.na, T(0)));
  std::vector<std::vector<T>> mul(S + 1, std::vector<T>(p.nm, T(1)));
  std::vector<std::vector<Factored>> fm(S + 1, std::vector<Factored>(p.nm));
  for (auto& f : fm[0]) f.exps.assign(nb, 0);
  std::vector<T> w(S + 1, T(1));
  std::string key;
  std::function<void(std::size_t)> rec = [&](std::size_t d) {
    const auto& pos = items[first + d];
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const auto& it = pos[i];
      for (std::size_t c = 0; c < p.na; ++c) add[d + 1][c] = N::add(add[d][c], it.add[c]);
      for (std::size_t c = 0; c < p.nm; ++c) {
        if (fact) {
          const Factored& f = (*fact)[first + d][i][c];
          Factored& dst = fm[d + 1][c];
          const Factored& src = fm[d][c];
          dst.zero = src.zero || f.zero;
          dst.sign = src.sign * f.sign;
          dst.exps.resize(nb);
          if (!dst.zero)
            for (std::size_t b = 0; b < nb; ++b) dst.exps[b] = src.exps[b] + f.exps[b];
        } else {
          mul[d + 1][c] = N::mul(mul[d][c], it.mul[c]);
        }
      }
      w[d + 1] = N::mul(w[d], it.w);
      if (d + 1 == S) {
        key.clear();
        for (std::size_t c = 0; c < p.na; ++c) N::key(key, add[S][c]);
        for (std::size_t c = 0; c < p.nm; ++c) {
          if (fact) {
            const Factored& f = fm[S][c];
            if (f.zero) {
              key += 'Z';
              continue;
            }
            key += f.sign < 0 ? '-' : '+';
            for (long e : f.exps) {
              const auto e32 = static_cast<std::int32_t>(e);
              if (e32 != e) throw Overflow{};
              char buf[4];
              std::memcpy(buf, &e32, 4);
              key.append(buf, 4);
            }
          } else {
            N::key(key, mul[S][c]);
          }
        }
        auto [iter, fresh] = table.try_emplace(key, w[S]);
        if (!fresh) iter->second = N::add(iter->second, w[S]);
      } else {
        rec(d + 1);
      }
    }
  };
  rec(0);
  return table;
}

template <class N>
Int split_impl(const Prepared& p, KeyMode mode) {
  const auto items = convert<N>(p);
  std::vector<std::vector<std::vector<Factored>>> fact;
  std::size_t nb = 0;
  const bool use_fact = mode == KeyMode::factored && p.nm > 0;
  if (use_fact) {
    std::vector<Int> values;
    for (const auto& pos : p.pos)
      for (const auto& it : pos)
        for (const auto& x : it.mul)
          if (x != 0) values.push_back(x);
    const CoprimeBasis basis(values);
    nb = basis.elements().size();
    for (const auto& pos : p.pos) {
      std::vector<std::vector<Factored>> pf;
      for (const auto& it : pos) {
        std::vector<Factored> fs;
        for (const auto& x : it.mul) {
          Factored f;
          if (x == 0) {
            f.zero = true;
            f.exps.assign(basis.elements().size(), 0);
          } else {
            f.sign = sgn(x);
            f.exps = basis.exponents(x);
          }
          fs.push_back(std::move(f));
        }
        pf.push_back(std::move(fs));
      }
      fact.push_back(std::move(pf));
    }
  }
  const auto* fp = use_fact ? &fact : nullptr;
  const auto left = half_table<N>(p, items, fp, nb, 0);
  const auto right = half_table<N>(p, items, fp, nb, p.s);
  Int total = 0;
  for (const auto& [k, v] : left) {
    auto it = right.find(k);
    if (it != right.end()) total += N::to_int(v) * N::to_int(it->second);
  }
  return total;
}

Rat finish(const Int& total, const Prepared& p) {
  Rat r(total, ipow(p.wscale, 2 * p.s));
  r.canonicalize();
  return r;
}

bool any_empty(const Prepared& p) {
  for (const auto& pos : p.pos)
    if (pos.empty()) return true;
  return false;
}

}  // namespace

Rat count_oracle(const EnergySystem& sys) {
  const Prepared p = prepare(sys);
  if (any_empty(p)) return Rat(0);
  try {
    return finish(oracle_impl<Wide>(p), p);
  } catch (const Overflow&) {
    return finish(oracle_impl<Big>(p), p);
  }
}

Rat count_split(const EnergySystem& sys, KeyMode mode) {
  const Prepared p = prepare(sys);
  if (any_empty(p)) return Rat(0);
  try {
    return finish(split_impl<Wide>(p, mode), p);
  } catch (const Overflow&) {
    return finish(split_impl<Big>(p, mode), p);
  }
}

Rat count_solutions(const EnergySystem& sys, Method method, Method* used, KeyMode mode) {
  if (method == Method::automatic) {
    double space = 1;
    for (const auto& pos : sys.positions) space *= static_cast<double>(pos.size());
    method = space <= 1e7 ? Method::oracle : Method::split;
  }
  if (used) *used = method;
  return method == Method::oracle ? count_oracle(sys) : count_split(sys, mode);
}

namespace {

std::string polys_desc(const PolyVec& phis) {
  std::string s;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (i) s += ";";
    s += phis[i].str();
  }
  return s;
}

void check_shape(const std::vector<GroundSet>& sets, const PolyVec& phis) {
  if (sets.size() != phis.size())
    throw Error("length mismatch: " + std::to_string(sets.size()) + " sets for " +
                std::to_string(phis.size()) + " polynomials");
}

template <class Build>
EnergyReport run(EnergyKind kind, const std::vector<GroundSet>& sets, const WeightFn& w,
                 const PolyVec& phis, Method method, Build build) {
  check_shape(sets, phis);
  const auto t0 = std::chrono::steady_clock::now();
  EnergySystem sys;
  sys.s = phis.s();
  for (std::size_t j = 0; j < sets.size(); ++j) {
    std::vector<EnergyItem> items;
    for (const auto& a : sets[j]) {
      EnergyItem it;
      it.weight = w(a);
      build(it, a, phis[j]);
      items.push_back(std::move(it));
    }
    sys.positions.push_back(std::move(items));
  }
  EnergyReport r;
  r.kind = kind;
  r.s = sys.s;
  r.value = count_solutions(sys, method, &r.method);
  r.weights = w.str();
  r.polys = polys_desc(phis);
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<GroundSet> replicate(const GroundSet& A, unsigned s, const PolyVec& phis) {
  if (phis.size() != 2 * s)
    throw Error("length mismatch: " + std::to_string(phis.size()) + " polynomials for s = " +
                std::to_string(s));
  return std::vector<GroundSet>(2 * s, A);
}

}  // namespace

EnergyReport energy_E_sets(const std::vector<GroundSet>& sets, const WeightFn& w,
                           const PolyVec& phis, Method method) {
  return run(EnergyKind::E, sets, w, phis, method,
             [](EnergyItem& it, const Rat& a, const PolyQ& phi) { it.add = {phi(a)}; });
}

EnergyReport energy_M_sets(const std::vector<GroundSet>& sets, const WeightFn& w,
                           const PolyVec& phis, Method method) {
  return run(EnergyKind::M, sets, w, phis, method,
             [](EnergyItem& it, const Rat& a, const PolyQ& phi) { it.mul = {phi(a)}; });
}

EnergyReport energy_J_sets(const std::vector<GroundSet>& sets, const WeightFn& w,
                           const PolyVec& phis, Method method) {
  for (const auto& S : sets)
    for (const auto& a : S) {
      if (a == 0) throw Error("excluded element: 0");
      for (const auto& phi : phis.polys())
        if (phi(a) == 0) throw Error("excluded element: " + to_string(a) + " is a root of " + phi.str());
    }
  return run(EnergyKind::J, sets, w, phis, method,
             [](EnergyItem& it, const Rat& a, const PolyQ& phi) { it.mul = {a, phi(a)}; });
}

EnergyReport energy_E(const GroundSet& A, const WeightFn& w, const PolyVec& phis, unsigned s,
                      Method method) {
  return energy_E_sets(replicate(A, s, phis), w, phis, method);
}

EnergyReport energy_M(const GroundSet& A, const WeightFn& w, const PolyVec& phis, unsigned s,
                      Method method) {
  return energy_M_sets(replicate(A, s, phis), w, phis, method);
}

EnergyReport energy_J(const GroundSet& A, const WeightFn& w, const PolyVec& phis, unsigned s,
                      Method method) {
  return energy_J_sets(replicate(A, s, phis), w, phis, method);
}

Rat E_s(const GroundSet& A, unsigned s, Method method) {
  return energy_E(A, WeightFn::unit(), PolyVec::uniform(PolyQ::identity(), s), s, method).value;
}

Rat M_s(const GroundSet& A, unsigned s, Method method) {
  return energy_M(A, WeightFn::unit(), PolyVec::uniform(PolyQ::identity(), s), s, method).value;
}

VectorMap VectorMap::from_polys(const GroundSet& A, const std::vector<PolyQ>& linear,
                                const std::vector<PolyQ>& logs) {
  VectorMap m;
  for (const auto& a : A) {
    std::vector<Rat> l, g;
    for (const auto& p : linear) l.push_back(p(a));
    for (const auto& p : logs) g.push_back(p(a));
    m.set(a, std::move(l), std::move(g));
  }
  return m;
}

void VectorMap::set(const Rat& x, std::vector<Rat> linear, std::vector<Rat> logs) {
  if (!dims_set_) {
    lin_dim_ = linear.size();
    log_dim_ = logs.size();
    dims_set_ = true;
  } else if (linear.size() != lin_dim_ || logs.size() != log_dim_) {
    throw Error("vector map dimension mismatch at " + to_string(x));
  }
  for (const auto& v : logs)
    if (v == 0) throw Error("undefined map value: log coordinate of 0 at " + to_string(x));
  table_[x] = {std::move(linear), std::move(logs)};
}

const std::vector<Rat>& VectorMap::linear(const Rat& x) const {
  auto it = table_.find(x);
  if (it == table_.end()) throw Error("undefined map value at " + to_string(x));
  return it->second.first;
}

const std::vector<Rat>& VectorMap::logs(const Rat& x) const {
  auto it = table_.find(x);
  if (it == table_.end()) throw Error("undefined map value at " + to_string(x));
  return it->second.second;
}

namespace {

EnergyReport run_maps(const GroundSet& A, const WeightFn& w, const std::vector<const VectorMap*>& maps,
                      unsigned s, Method method) {
  const auto t0 = std::chrono::steady_clock::now();
  EnergySystem sys;
  sys.s = s;
  std::vector<EnergyItem> items;
  for (const auto& a : A) {
    EnergyItem it;
    it.weight = w(a);
    for (const auto* m : maps) {
      const auto& l = m->linear(a);
      const auto& g = m->logs(a);
      it.add.insert(it.add.end(), l.begin(), l.end());
      it.mul.insert(it.mul.end(), g.begin(), g.end());
    }
    items.push_back(std::move(it));
  }
  sys.positions.assign(2 * s, items);
  EnergyReport r;
  r.kind = EnergyKind::E_fg;
  r.s = s;
  r.value = count_solutions(sys, method, &r.method);
  r.weights = w.str();
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

EnergyReport energy_E_fg(const GroundSet& A, const WeightFn& w, const VectorMap& f,
                         const VectorMap& g, unsigned s, Method method) {
  return run_maps(A, w, {&f, &g}, s, method);
}

EnergyReport energy_E_g(const GroundSet& A, const WeightFn& w, const VectorMap& g, unsigned s,
                        Method method) {
  return run_maps(A, w, {&g}, s, method);
}

Int fold_difference_count(const GroundSet& A, const VectorMap& f, unsigned s) {
  if (s == 0) throw Error("s must be positive");
  using Value = std::pair<std::vector<Rat>, std::vector<Rat>>;
  std::set<Value> folds;
  const std::size_t n = A.size();
  if (n == 0) return Int(0);
  std::vector<std::size_t> idx(s, 0);
  // Nondecreasing index tuples enumerate the s-multisets.
  while (true) {
    Value v{std::vector<Rat>(f.linear_dim(), Rat(0)), std::vector<Rat>(f.log_dim(), Rat(1))};
    for (auto i : idx) {
      const auto& l = f.linear(A[i]);
      const auto& g = f.logs(A[i]);
      for (std::size_t c = 0; c < l.size(); ++c) v.first[c] += l[c];
      for (std::size_t c = 0; c < g.size(); ++c) v.second[c] *= g[c];
    }
    folds.insert(std::move(v));
    std::size_t k = s;
    while (k > 0 && idx[k - 1] == n - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < s; ++j) idx[j] = idx[k - 1];
  }
  std::set<Value> diffs;
  for (const auto& x : folds)
    for (const auto& y : folds) {
      Value d{x.first, x.second};
      for (std::size_t c = 0; c < d.first.size(); ++c) d.first[c] -= y.first[c];
      for (std::size_t c = 0; c < d.second.size(); ++c) d.second[c] /= y.second[c];
      diffs.insert(std::move(d));
    }
  return Int(static_cast<unsigned long>(diffs.size()));
}

}  // namespace spl
