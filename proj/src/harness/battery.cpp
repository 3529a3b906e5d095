#include "spl/harness/battery.hpp"

#include "spl/constructions/families.hpp"
#include "spl/core/factor.hpp"
#include "spl/core/rng.hpp"
#include "spl/decompose/decompose.hpp"
#include "spl/energy/inequalities.hpp"
#include "spl/energy/set_algebra.hpp"
#include "spl/harness/mve.hpp"
#include "spl/padic/decoupling.hpp"
#include "spl/sidon/sidon.hpp"
#include "spl/structure/inverse.hpp"
#include "spl/structure/skew.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace spl {

bool BatteryReport::failed() const {
  for (const auto& c : criteria)
    if (!c.passed) return true;
  return false;
}

void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& f) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex mu;
  std::vector<std::thread> pool;
  const unsigned k = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  for (unsigned t = 0; t < k; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::uint64_t instance_seed(std::uint64_t seed, int criterion, std::size_t index) {
  SplitMix64 a(seed);
  SplitMix64 b(a.next() ^ (static_cast<std::uint64_t>(criterion) * 0xd1b54a32d192ed03ULL));
  SplitMix64 c(b.next() ^ (static_cast<std::uint64_t>(index) * 0x8cb92ba72f3d8dd7ULL));
  return c.next();
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string num(const Rat& x) { return to_fraction_string(x); }
std::string num(const Int& x) { return to_fraction_string(Rat(x)); }

std::string fmt_double(double x) {
  std::ostringstream o;
  o.precision(6);
  o << x;
  return o.str();
}

// ---- random instances ----------------------------------------------------

GroundSet random_set(SplitMix64& rng, std::size_t size, long lo, long hi, bool allow_zero = true) {
  std::set<long> picked;
  const long room = hi - lo + 1 - ((!allow_zero && lo <= 0 && hi >= 0) ? 1 : 0);
  size = std::min<std::size_t>(size, static_cast<std::size_t>(std::max(0L, room)));
  while (picked.size() < size) {
    const long v = rng.between(lo, hi);
    if (!allow_zero && v == 0) continue;
    picked.insert(v);
  }
  return GroundSet::from_ints(std::vector<long>(picked.begin(), picked.end()));
}

std::size_t random_size(SplitMix64& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.between(static_cast<long>(lo), static_cast<long>(hi)));
}

PolyQ random_poly(SplitMix64& rng, int dmin, int dmax, long coeff = 3) {
  const int d = static_cast<int>(rng.between(dmin, dmax));
  std::vector<long> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = rng.between(-coeff, coeff);
  while (d >= 1 && c.back() == 0) c.back() = rng.between(-coeff, coeff);
  return PolyQ::from_ints(c);
}

PolyQ random_poly_nonzero_constant(SplitMix64& rng, int dmin, int dmax) {
  PolyQ p = random_poly(rng, dmin, dmax);
  if (p(0) == 0) p = p + PolyQ::constant(Rat(1 + static_cast<long>(rng.below(3))));
  return p;
}

WeightFn random_weights(SplitMix64& rng, const GroundSet& A, long max_w) {
  std::map<Rat, Rat> t;
  for (const auto& a : A) t[a] = Rat(rng.between(0, max_w));
  return WeightFn(t);
}

GroundSet without_roots(const GroundSet& A, const std::vector<PolyQ>& phis) {
  std::vector<Rat> keep;
  for (const auto& a : A) {
    bool ok = a != 0;
    for (const auto& p : phis) ok = ok && p(a) != 0;
    if (ok) keep.push_back(a);
  }
  return GroundSet(std::move(keep));
}

// The part of A inside the sign interval of phi holding most of A.
GroundSet in_one_sign_interval(const GroundSet& A, const PolyQ& phi) {
  const auto ivs = sign_intervals(phi);
  GroundSet best;
  for (const auto& iv : ivs) {
    std::vector<Rat> in;
    for (const auto& a : A)
      if (iv.contains(a)) in.push_back(a);
    if (in.size() > best.size()) best = GroundSet(std::move(in));
  }
  return best;
}

std::string desc(const GroundSet& A, unsigned s, const PolyQ& phi) {
  return "A=" + A.str() + " s=" + std::to_string(s) + " phi=" + phi.str();
}

// ---- per-criterion plumbing ---------------------------------------------

struct Outcome {
  std::vector<Record> records;
  std::size_t violations = 0;
  std::vector<std::string> notes;

  void theorem(const std::string& check, const std::string& inst, const std::string& lhs,
               const std::string& rhs, bool holds, double ms = 0) {
    Record r;
    r.check = check;
    r.instance = inst;
    r.lhs = lhs;
    r.rhs = rhs;
    r.holds = holds;
    r.elapsed_ms = ms;
    records.push_back(std::move(r));
    if (!holds) {
      ++violations;
      if (notes.size() < 3) notes.push_back(check + " failed on " + inst);
    }
  }

  void ratio(const std::string& check, const std::string& inst, const std::string& lhs,
             const std::string& rhs, const std::string& value, double ms = 0) {
    Record r;
    r.check = check;
    r.instance = inst;
    r.lhs = lhs;
    r.rhs = rhs;
    r.is_ratio = true;
    r.ratio = value;
    r.elapsed_ms = ms;
    records.push_back(std::move(r));
  }

  void error(const std::string& check, const std::string& inst, const std::string& what) {
    theorem(check, inst, "error", what, false);
  }
};

// Runs `n` seeded instances and merges their outcomes in index order.
Outcome sweep(const ExperimentConfig& cfg, int id, std::size_t n,
              const std::function<void(SplitMix64&, Outcome&, std::size_t)>& body) {
  std::vector<Outcome> parts(n);
  parallel_for(n, cfg.workers(), [&](std::size_t i) {
    SplitMix64 rng(instance_seed(cfg.seed(), id, i));
    try {
      body(rng, parts[i], i);
    } catch (const std::exception& e) {
      parts[i].error(ExperimentConfig::check_names()[static_cast<std::size_t>(id - 1)],
                     "instance " + std::to_string(i), e.what());
    }
  });
  Outcome all;
  for (auto& p : parts) {
    for (auto& r : p.records) all.records.push_back(std::move(r));
    all.violations += p.violations;
    for (auto& nt : p.notes)
      if (all.notes.size() < 3) all.notes.push_back(std::move(nt));
  }
  return all;
}

std::size_t count(const ExperimentConfig& cfg, const std::string& key) {
  return static_cast<std::size_t>(cfg.get_long(key));
}

// 1. split-count against the oracle for E, M and J.
Outcome c_oracle(const ExperimentConfig& cfg) {
  const auto max_size = count(cfg, "oracle.max_size");
  const long max_w = cfg.get_long("oracle.max_weight");
  const int max_d = static_cast<int>(cfg.get_long("oracle.max_degree"));
  const long range = cfg.get_long("oracle.range");
  return sweep(cfg, 1, count(cfg, "oracle.instances"), [&](SplitMix64& rng, Outcome& out, std::size_t i) {
    const unsigned s = 2 + static_cast<unsigned>(rng.below(2));
    GroundSet A = random_set(rng, random_size(rng, 1, max_size), -range, range);
    std::vector<PolyQ> ps;
    for (unsigned j = 0; j < 2 * s; ++j) ps.push_back(random_poly(rng, 0, max_d));
    const PolyVec phis(ps);
    const WeightFn w = random_weights(rng, A, max_w);
    const std::string inst = "#" + std::to_string(i) + " A=" + A.str() + " s=" + std::to_string(s);
    auto t0 = Clock::now();
    const Rat eo = energy_E(A, w, phis, s, Method::oracle).value;
    const Rat es = energy_E(A, w, phis, s, Method::split).value;
    out.theorem("oracle-E", inst, num(es), num(eo), es == eo, ms_since(t0));
    t0 = Clock::now();
    const Rat mo = energy_M(A, w, phis, s, Method::oracle).value;
    const Rat ms = energy_M(A, w, phis, s, Method::split).value;
    out.theorem("oracle-M", inst, num(ms), num(mo), ms == mo, ms_since(t0));
    const GroundSet AJ = without_roots(A, ps);
    if (AJ.empty()) return;
    WeightFn wj = random_weights(rng, AJ, max_w);
    t0 = Clock::now();
    const Rat jo = energy_J(AJ, wj, phis, s, Method::oracle).value;
    const Rat js = energy_J(AJ, wj, phis, s, Method::split).value;
    out.theorem("oracle-J", inst, num(js), num(jo), js == jo, ms_since(t0));
  });
}

// 2. frozen small values.
Outcome c_known(const ExperimentConfig&) {
  Outcome out;
  const PolyQ sq = PolyQ::from_ints({0, 0, 1});
  struct Case {
    std::string name;
    Rat value;
    long expected;
  };
  const std::vector<Case> cases = {
      {"E_2({1,2,3})", E_s(GroundSet{1, 2, 3}, 2), 19},
      {"M_2({1,2,3})", M_s(GroundSet{1, 2, 3}, 2), 15},
      {"M_2({1,2,4})", M_s(GroundSet{1, 2, 4}, 2), 19},
      {"E_2({1,2,3}; x^2)", energy_E(GroundSet{1, 2, 3}, WeightFn(), PolyVec::uniform(sq, 2), 2).value, 15},
  };
  for (const auto& c : cases) out.theorem("known-values", c.name, num(c.value), num(Rat(c.expected)), c.value == c.expected);
  return out;
}

// 3. |sA| E_s(A) >= |A|^2s and |A^(s)| M_s(A) >= |A|^2s.
Outcome c_cs(const ExperimentConfig& cfg) {
  const auto max_size = count(cfg, "cs.max_size");
  const long range = cfg.get_long("cs.range");
  return sweep(cfg, 3, count(cfg, "cs.instances"), [&](SplitMix64& rng, Outcome& out, std::size_t i) {
    const unsigned s = 2 + static_cast<unsigned>(rng.below(2));
    const GroundSet A = random_set(rng, random_size(rng, 1, max_size), -range, range);
    const std::string inst = "#" + std::to_string(i) + " A=" + A.str() + " s=" + std::to_string(s);
    for (bool mult : {false, true}) {
      const auto t0 = Clock::now();
      const auto c = check_cauchy_schwarz(A, s, mult);
      out.theorem(mult ? "cs-multiplicative" : "cs-additive", inst, num(c.lhs), num(c.rhs), c.holds, ms_since(t0));
    }
  });
}

// 4. Hoelder-type inequalities, every kind on its own instance stream.
Outcome c_holder(const ExperimentConfig& cfg) {
  const auto max_size = count(cfg, "holder.max_size");
  const long range = cfg.get_long("holder.range");
  const std::size_t per = count(cfg, "holder.instances");
  const std::vector<HolderKind> kinds = {HolderKind::e_sets,  HolderKind::j_sets, HolderKind::j_sets_signed,
                                         HolderKind::j_union, HolderKind::e_union, HolderKind::e_drop,
                                         HolderKind::j_drop};
  return sweep(cfg, 4, per * kinds.size(), [&](SplitMix64& rng, Outcome& out, std::size_t i) {
    const HolderKind kind = kinds[i / per];
    const bool isJ = kind == HolderKind::j_sets || kind == HolderKind::j_sets_signed ||
                     kind == HolderKind::j_union || kind == HolderKind::j_drop;
    const bool drop = kind == HolderKind::e_drop || kind == HolderKind::j_drop;
    const unsigned s = 2 + static_cast<unsigned>(rng.below(2));
    const std::size_t cap = s == 2 ? max_size : std::max<std::size_t>(2, max_size - 1);
    std::vector<PolyQ> ps;
    if (drop) ps.assign(2 * s, random_poly(rng, 0, 2));
    else
      for (unsigned j = 0; j < 2 * s; ++j) ps.push_back(random_poly(rng, 0, 2));
    HolderInput in;
    in.phis = PolyVec(ps);
    std::size_t nsets = 2 * s;
    if (kind == HolderKind::j_union || kind == HolderKind::e_union) nsets = 2 + rng.below(2);
    if (drop) nsets = 1;
    GroundSet all;
    for (std::size_t j = 0; j < nsets; ++j) {
      GroundSet S = random_set(rng, random_size(rng, 1, drop ? cap + 2 : cap), -range, range);
      if (isJ) S = without_roots(S, ps);
      if (kind == HolderKind::j_sets_signed && !S.empty()) S = in_one_sign_interval(S, ps[j]);
      if (S.empty()) return;  // not a valid instance; the stream simply skips it
      in.sets.push_back(S);
      all = all.unite(S);
    }
    if (drop) in.l = 1 + static_cast<unsigned>(rng.below(s - 1));
    else in.weights = random_weights(rng, all, 3);
    std::string inst = "#" + std::to_string(i) + " s=" + std::to_string(s);
    for (const auto& S : in.sets) inst += " " + S.str();
    const auto t0 = Clock::now();
    const auto c = check_holder_split(kind, in);
    out.theorem("holder-" + to_string(kind), inst, num(c.lhs), num(c.rhs_display), c.holds, ms_since(t0));
  });
}

// 5. decoupling across p-adic fibers, and the repeated-valuation step.
Outcome c_chang(const ExperimentConfig& cfg) {
  const auto max_size = count(cfg, "chang.max_size");
  const long range = cfg.get_long("chang.range");
  const std::size_t per = count(cfg, "chang.instances");
  const std::vector<long> primes = {2, 3, 5};
  return sweep(cfg, 5, 2 * per, [&](SplitMix64& rng, Outcome& out, std::size_t i) {
    const bool mult = i >= per;
    const unsigned s = 2 + static_cast<unsigned>(rng.below(2));
    const std::size_t cap = s == 2 ? max_size : std::max<std::size_t>(2, max_size - 2);
    const Int p(primes[rng.below(primes.size())]);
    GroundSet A = random_set(rng, random_size(rng, 1, cap), 1, range, false);
    const PolyQ phi = mult ? random_poly_nonzero_constant(rng, 1, 3) : random_poly(rng, 1, 3);
    if (mult) {
      A = in_one_sign_interval(without_roots(A, {phi}), phi);
      if (A.empty()) return;
    }
    const WeightFn w = random_weights(rng, A, 3);
    const std::string inst = "#" + std::to_string(i) + " " + desc(A, s, phi) + " p=" + to_string(p);
    auto t0 = Clock::now();
    const auto c = mult ? check_chang_multiplicative(A, w, phi, p, s, true) : check_chang_additive(A, w, phi, p, s);
    out.theorem(mult ? "chang-multiplicative" : "chang-additive", inst, num(c.lhs_energy), num(c.rhs_bound),
                c.holds && c.decision == Decision::holds, ms_since(t0));
    t0 = Clock::now();
    const auto rv = check_repeated_valuation(A, phi, p, s, mult);
    out.theorem(mult ? "repeated-valuation-multiplicative" : "repeated-valuation-additive", inst,
                std::to_string(rv.tuples_examined), rv.counterexample.empty() ? "0" : rv.counterexample,
                rv.holds, ms_since(t0));
  });
}

// 6. energy bound from an exact query-complexity witness.
Outcome c_qc_energy(const ExperimentConfig& cfg) {
  const auto max_size = count(cfg, "ayay.max_size");
  const long range = cfg.get_long("ayay.range");
  return sweep(cfg, 6, count(cfg, "ayay.instances"), [&](SplitMix64& rng, Outcome& out, std::size_t i) {
    const unsigned s = 2 + static_cast<unsigned>(rng.below(2));
    const GroundSet A = random_set(rng, random_size(rng, 1, max_size), 1, range, false);
    const PolyQ phi = random_poly(rng, 1, 3);
    const WeightFn w = random_weights(rng, A, 3);
    const auto t0 = Clock::now();
    const auto q = query_complexity_exact(A, max_size);
    const auto b = bound_E_via_qc(A, w, phi, s, q.strategy);
    out.theorem("qc-energy-bound", "#" + std::to_string(i) + " " + desc(A, s, phi) + " t=" + std::to_string(b.t),
                num(b.energy), num(b.bound), b.holds, ms_since(t0));
  });
}

// 7. query complexity fixtures, greedy vs exact, skew-dimension bound.
Outcome c_qc(const ExperimentConfig& cfg) {
  Outcome fixtures;
  const std::vector<std::pair<GroundSet, unsigned>> fx = {
      {GroundSet{2, 4, 8}, 1}, {GroundSet{6, 10, 15}, 2}, {GroundSet{7}, 1}};
  for (const auto& [A, t] : fx) {
    const auto q = query_complexity_exact(A);
    fixtures.theorem("qc-fixture", "q(" + A.str() + ")", std::to_string(q.t), std::to_string(t),
                     q.t == t && replay(q.strategy, A).valid);
  }
  const auto max_size = count(cfg, "qc.max_size");
  const long range = cfg.get_long("qc.range");
  Outcome rnd = sweep(cfg, 7, count(cfg, "qc.instances"), [&](SplitMix64& rng, Outcome& out, std::size_t i) {
    const GroundSet A = random_set(rng, random_size(rng, 1, max_size), 1, range, false);
    const std::string inst = "#" + std::to_string(i) + " A=" + A.str();
    const auto t0 = Clock::now();
    const auto ex = query_complexity_exact(A, max_size);
    const auto gr = query_complexity_greedy(A);
    const bool valid = replay(ex.strategy, A).valid && replay(gr.strategy, A).valid &&
                       ex.strategy.witnessed_q() == ex.t && gr.strategy.witnessed_q() == gr.t;
    out.theorem("qc-greedy-vs-exact", inst, std::to_string(gr.t), std::to_string(ex.t), valid && gr.t >= ex.t,
                ms_since(t0));
    const auto psi = ValuationVectors::of(A);
    const unsigned dstar = skew_dimension(psi.distinct());
    out.theorem("qc-skew-bound", inst, std::to_string(ex.t), std::to_string(dstar + 1), ex.t <= dstar + 1);
  });
  for (auto& r : rnd.records) fixtures.records.push_back(std::move(r));
  fixtures.violations += rnd.violations;
  for (auto& n : rnd.notes) fixtures.notes.push_back(std::move(n));
  return fixtures;
}

// 8. averaging over f: E(A; g) <= |sf(A) - sf(A)| E(A; f, g).
Outcome c_averaging(const ExperimentConfig& cfg) {
  Outcome ex;
  {
    const GroundSet A{1, 2};
    const auto g = VectorMap::from_polys(A, {PolyQ::from_ints({0, 0, 1})});
    const auto f_lin = VectorMap::from_polys(A, {PolyQ::identity()});
    const auto f_log = VectorMap::from_polys(A, {}, {PolyQ::identity()});
    for (const auto* f : {&f_lin, &f_log}) {
      const auto c = check_averaging(A, WeightFn(), *f, g, 1);
      const bool frozen = c.lhs == 2 && c.factor == 3 && c.rhs == 2;
      ex.theorem("averaging-example", std::string(f == &f_log ? "f=log" : "f=x") + " A={1, 2} g=x^2 s=1",
                 num(c.lhs), num(Rat(c.factor) * c.rhs), c.holds && frozen);
    }
  }
  const auto max_size = count(cfg, "trut.max_size");
  const long range = cfg.get_long("trut.range");
  Outcome rnd = sweep(cfg, 8, count(cfg, "trut.instances"), [&](SplitMix64& rng, Outcome& out, std::size_t i) {
    const unsigned s = 1 + static_cast<unsigned>(rng.below(2));
    const GroundSet A = random_set(rng, random_size(rng, 1, max_size), 1, range, false);
    const WeightFn w = random_weights(rng, A, 3);
    const PolyQ gp = random_poly(rng, 1, 3);
    VectorMap f, g;
    const int fmode = static_cast<int>(rng.below(3));
    std::string fname;
    if (fmode == 0) {
      // psi(a): valuation vectors as additive coordinates
      const auto psi = ValuationVectors::of(A);
      for (std::size_t k = 0; k < psi.elements.size(); ++k) {
        std::vector<Rat> v;
        for (long e : psi.vectors[k]) v.emplace_back(e);
        f.set(psi.elements[k], v);
      }
      fname = "psi";
    } else if (fmode == 1) {
      f = VectorMap::from_polys(A, {}, {PolyQ::identity()});
      fname = "log";
    } else {
      f = VectorMap::from_polys(A, {random_poly(rng, 1, 2)});
      fname = "poly";
    }
    if (rng.below(2) == 0) g = VectorMap::from_polys(A, {gp});
    else g = VectorMap::from_polys(A, {gp}, {PolyQ::identity()});
    const auto t0 = Clock::now();
    const auto c = check_averaging(A, w, f, g, s);
    out.theorem("averaging", "#" + std::to_string(i) + " A=" + A.str() + " f=" + fname + " s=" + std::to_string(s),
                num(c.lhs), num(Rat(c.factor) * c.rhs), c.holds, ms_since(t0));
  });
  for (auto& r : rnd.records) ex.records.push_back(std::move(r));
  ex.violations += rnd.violations;
  for (auto& n : rnd.notes) ex.notes.push_back(std::move(n));
  return ex;
}

// 9. |mA - nA| <= K^{m+n} |A| for every (m, n) in {0..3}^2.
Outcome c_plunnecke(const ExperimentConfig& cfg) {
  const auto max_size = count(cfg, "pr21.max_size");
  const long range = cfg.get_long("pr21.range");
  return sweep(cfg, 9, count(cfg, "pr21.instances"), [&](SplitMix64& rng, Outcome& out, std::size_t i) {
    const GroundSet A = random_set(rng, random_size(rng, 1, max_size), -range, range);
    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned n = 0; n <= 3; ++n) {
        const auto t0 = Clock::now();
        const auto c = check_plunnecke(A, m, n);
        out.theorem("plunnecke", "#" + std::to_string(i) + " A=" + A.str() + " m=" + std::to_string(m) +
                                     " n=" + std::to_string(n),
                    num(c.lhs), num(c.rhs), c.holds, ms_since(t0));
      }
  });
}

// 10. Sidon extraction, exact maximum and the peeling partition.
Outcome c_sidon(const ExperimentConfig& cfg) {
  Outcome fixed;
  {
    GroundSet A;
    for (long v = 1; v <= 10; ++v) A = A.unite(GroundSet{v});
    const auto c = max_sidon_exact(A, 2, PolyQ::identity(), SidonKind::additive);
    fixed.theorem("sidon-exact-fixture", "max Sidon in {1..10}, s=2", std::to_string(c.subset.size()), "4",
                  c.subset.size() == 4 && is_sidon(c.subset, 2, PolyQ::identity(), SidonKind::additive).verified);
  }
  const auto max_size = count(cfg, "sidon.max_size");
  const long range = cfg.get_long("sidon.range");
  Outcome rnd = sweep(cfg, 10, count(cfg, "sidon.instances"), [&](SplitMix64& rng, Outcome& out, std::size_t i) {
    const unsigned s = 2 + static_cast<unsigned>(rng.below(2));
    const bool mult = rng.below(2) == 1;
    const SidonKind kind = mult ? SidonKind::multiplicative : SidonKind::additive;
    const PolyQ phi = random_poly_nonzero_constant(rng, 1, 2);
    GroundSet A = random_set(rng, random_size(rng, 1, max_size), -range, range);
    const std::string inst = "#" + std::to_string(i) + " " + desc(A, s, phi) + " kind=" + to_string(kind);
    auto t0 = Clock::now();
    GroundSet Ak = mult ? without_roots(A, {phi}) : A;
    if (!Ak.empty()) {
      GreedyOptions opt;
      opt.order = static_cast<ScanOrder>(rng.below(3));
      opt.seed = rng.next();
      opt.with_context = false;
      const auto g = greedy_sidon_extract(Ak, s, phi, kind, opt);
      bool maximal = true;
      for (const auto& a : Ak.minus(g.subset))
        if (is_sidon(g.subset.unite(GroundSet(std::vector<Rat>{a})), s, phi, kind).verified) maximal = false;
      const bool verified = is_sidon(g.subset, s, phi, kind).verified;
      const auto e = max_sidon_exact(Ak, s, phi, kind, std::max<std::size_t>(16, max_size));
      out.theorem("sidon-greedy", inst, std::to_string(g.subset.size()), std::to_string(e.subset.size()),
                  verified && maximal && g.subset.size() <= e.subset.size() &&
                      is_sidon(e.subset, s, phi, kind).verified,
                  ms_since(t0));
    }
    t0 = Clock::now();
    const auto r = rev4_partition(A, s, phi);
    GroundSet covered;
    std::size_t total = 0;
    bool pieces_ok = true;
    for (const auto& p : r.pieces) {
      total += p.subset.size();
      covered = covered.unite(p.subset);
      pieces_ok = pieces_ok && p.subset.size() > 0 && is_sidon(p.subset, s, p.phi, p.kind).verified;
    }
    const bool partition = covered == A && total == A.size() && r.B.intersect(r.C).empty();
    out.theorem("rev4-partition", inst, std::to_string(r.rounds), std::to_string(A.size()), partition && pieces_ok,
                ms_since(t0));
    out.theorem("rev4-union-E", inst, num(r.E_B), num(r.E_union_bound), r.E_union_holds);
    out.theorem("rev4-union-M", inst, num(r.M_C), num(r.M_union_bound), r.M_union_holds);
    out.theorem("rev4-round-budget", inst, std::to_string(r.rounds), fmt_double(r.round_budget), r.budget_holds);
  });
  for (auto& r : rnd.records) fixed.records.push_back(std::move(r));
  fixed.violations += rnd.violations;
  for (auto& n : rnd.notes) fixed.notes.push_back(std::move(n));
  return fixed;
}

// 11. decomposition of a geometric progression plus scattered primes.
Outcome c_decompose(const ExperimentConfig& cfg) {
  const Finder finder = parse_finder(cfg.get("decompose.finder"));
  std::vector<long> odd_primes = primes_up_to(200);
  odd_primes.erase(odd_primes.begin());
  return sweep(cfg, 11, count(cfg, "decompose.runs"), [&](SplitMix64& rng, Outcome& out, std::size_t i) {
    FamilySpec gp;
    gp.family = Family::GP;
    gp.n = 8;
    const GroundSet G = gen(gp);
    std::set<long> ps;
    while (ps.size() < 7) ps.insert(odd_primes[rng.below(odd_primes.size())]);
    const GroundSet A = G.unite(GroundSet::from_ints(std::vector<long>(ps.begin(), ps.end())));
    const PolyVec phis = PolyVec::uniform(PolyQ::identity(), 2);
    DecomposeConfig dc;
    dc.tau = 1;
    dc.threshold_exponent = Rat(7, 3);
    dc.finder = finder;
    const std::string inst = "#" + std::to_string(i) + " A=" + A.str();
    const auto t0 = Clock::now();
    const auto r = decompose(A, 2, phis, dc);
    const auto c = certify(r, phis);
    const std::size_t gp_in_B = r.B.intersect(G).size();
    out.theorem("decompose-gp-coverage", inst, std::to_string(gp_in_B), "6", 4 * gp_in_B >= 3 * G.size(),
                ms_since(t0));
    out.theorem("decompose-partition", inst, std::to_string(r.pieces.size()), std::to_string(r.rounds),
                c.partition_ok && c.witnesses_ok);
    out.theorem("decompose-threshold", inst, num(c.M_C), "|C|^(7/3), |C|=" + std::to_string(r.C.size()),
                c.C_threshold_holds);
    out.theorem("decompose-union-bound", inst, num(c.E_B), num(c.union_bound), c.union_bound_holds);
  });
}

// 12. moment bound ratios on geometric progressions (informational).
Outcome c_mve(const ExperimentConfig& cfg) {
  Outcome out;
  std::size_t exceed = 0;
  for (long base : {2L, 3L})
    for (long n = cfg.get_long("mve.min_length"); n <= cfg.get_long("mve.max_length"); ++n) {
      FamilySpec f;
      f.family = Family::GP;
      f.base = base;
      f.n = n;
      const GroundSet A = gen(f);
      const auto t0 = Clock::now();
      const auto m = check_mve(A, WeightFn(), PolyQ::identity(), 2);
      if (!m.holds_with_C1) ++exceed;
      out.ratio("mve", "GP base " + std::to_string(base) + " length " + std::to_string(n) + " K=" + to_string(m.K),
                num(m.ratio_energy), "2^" + fmt_double(m.log2_bound), fmt_double(m.log2_ratio), ms_since(t0));
      if (!std::isfinite(m.log2_ratio)) out.error("mve", "GP length " + std::to_string(n), "non-finite ratio");
    }
  out.notes.push_back(std::to_string(out.records.size()) + " ratios logged, " + std::to_string(exceed) +
                      " exceedances of the constant-1 bound");
  return out;
}

// 13. sizes of the constructions and the product-set lower bound on M_s.
Outcome c_constructions(const ExperimentConfig& cfg) {
  Outcome out;
  const long max_mn = cfg.get_long("constructions.max_mn");
  for (long m = 1; m <= max_mn; ++m)
    for (long n = 1; n <= max_mn; ++n) {
      FamilySpec f;
      f.family = Family::odd_times_powers;
      f.m = m;
      f.n = n;
      const auto A = gen(f);
      out.theorem("odd-times-powers-size", "m=" + std::to_string(m) + " n=" + std::to_string(n),
                  std::to_string(A.size()), std::to_string(m * n), static_cast<long>(A.size()) == m * n);
    }
  const long bmax = cfg.get_long("constructions.bwex_max");
  SplitMix64 rng(instance_seed(cfg.seed(), 13, 0));
  for (long m = 1; m <= bmax; ++m)
    for (long n = 1; n <= bmax; ++n) {
      FamilySpec f;
      f.family = Family::odd_times_powers;
      f.m = m;
      f.n = n;
      const auto A = gen(f);
      const PolyQ phi = random_poly(rng, 1, 2);
      // B = A, then a random half
      std::vector<Rat> half;
      for (const auto& a : A)
        if (rng.below(2) == 0) half.push_back(a);
      if (half.size() * 2 < A.size()) half = A.elements();
      for (const GroundSet& B : {A, GroundSet(half)}) {
        const auto t0 = Clock::now();
        const auto r = bwex_report(m, n, 2, phi, B);
        bool fibers_ok = true;
        for (const auto& fr : r.fibers) fibers_ok = fibers_ok && fr.T_holds && fr.cs_holds;
        out.theorem("bwex-cs", "m=" + std::to_string(m) + " n=" + std::to_string(n) + " B=" + B.str(), num(r.M),
                    num(r.cs_lower), r.cs_holds && fibers_ok, ms_since(t0));
      }
    }
  return out;
}

using CriterionFn = Outcome (*)(const ExperimentConfig&);

const std::vector<CriterionFn>& criterion_fns() {
  static const std::vector<CriterionFn> fns = {c_oracle, c_known, c_cs,   c_holder, c_chang,     c_qc_energy, c_qc,
                                               c_averaging,   c_plunnecke,  c_sidon, c_decompose, c_mve, c_constructions};
  return fns;
}

}  // namespace

CriterionResult run_criterion(int id, const ExperimentConfig& cfg, std::vector<Record>& records) {
  const auto& names = ExperimentConfig::check_names();
  if (id < 1 || id > static_cast<int>(names.size())) throw Error("no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.name = names[static_cast<std::size_t>(id - 1)];
  const auto t0 = Clock::now();
  Outcome out;
  try {
    out = criterion_fns()[static_cast<std::size_t>(id - 1)](cfg);
  } catch (const std::exception& e) {
    out.error(r.name, "setup", e.what());
  }
  r.elapsed_ms = ms_since(t0);
  for (const auto& rec : out.records)
    if (!rec.is_ratio) ++r.instances;
  r.violations = out.violations;
  r.passed = out.violations == 0;
  std::string detail = std::to_string(r.instances) + " checks, " + std::to_string(r.violations) + " violations";
  for (const auto& n : out.notes) detail += "; " + n;
  r.detail = detail;
  for (auto& rec : out.records) records.push_back(std::move(rec));
  return r;
}

BatteryReport run_battery(const ExperimentConfig& cfg) {
  BatteryReport rep;
  rep.seed = cfg.seed();
  for (int id : cfg.selected_checks()) rep.criteria.push_back(run_criterion(id, cfg, rep.records));
  return rep;
}

}  // namespace spl
