#include "spl/sidon/sidon.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace spl {

std::string to_string(SidonKind k) { return k == SidonKind::additive ? "add" : "mult"; }

SidonKind parse_sidon_kind(const std::string& s) {
  if (s == "add" || s == "additive") return SidonKind::additive;
  if (s == "mult" || s == "multiplicative") return SidonKind::multiplicative;
  throw Error("unknown Sidon kind: " + s);
}

std::string to_string(ScanOrder o) {
  switch (o) {
    case ScanOrder::ascending: return "ascending";
    case ScanOrder::descending: return "descending";
    case ScanOrder::shuffled: return "shuffle";
  }
  return "?";
}

ScanOrder parse_scan_order(const std::string& s) {
  if (s == "ascending") return ScanOrder::ascending;
  if (s == "descending") return ScanOrder::descending;
  if (s == "shuffle" || s == "shuffled") return ScanOrder::shuffled;
  throw Error("unknown scan order: " + s);
}

Rat multiset_value(const std::vector<Rat>& xs, const PolyQ& phi, SidonKind kind) {
  Rat v = kind == SidonKind::additive ? Rat(0) : Rat(1);
  for (const auto& x : xs) {
    if (kind == SidonKind::additive) v += phi(x);
    else v *= phi(x);
  }
  return v;
}

namespace {

void check_roots(const GroundSet& X, const PolyQ& phi, SidonKind kind) {
  if (kind != SidonKind::multiplicative) return;
  for (const auto& x : X)
    if (phi(x) == 0) throw Error("root of phi in X: " + to_string(x));
}

// Visits every multiset of size k drawn from indices [from, n) as
// nondecreasing index lists appended to `cur`.
void for_multisets(std::size_t n, unsigned k, std::size_t from, std::vector<std::size_t>& cur,
                   const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k == 0) {
    f(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    for_multisets(n, k - 1, i, cur, f);
    cur.pop_back();
  }
}

// Incrementally maintained Sidon set: the values of all its s-multisets.
class SidonState {
public:
  SidonState(unsigned s, const PolyQ& phi, SidonKind kind) : s_(s), phi_(phi), kind_(kind) {}

  // Values of the multisets that use x at least once; empty when adding x
  // would create a collision.
  std::optional<std::vector<Rat>> values_with(const Rat& x) const {
    const Rat fx = phi_(x);
    std::vector<Rat> fresh;
    std::unordered_set<Rat, RatHash> seen;
    std::vector<std::size_t> cur;
    bool ok = true;
    for (unsigned k = 1; k <= s_ && ok; ++k) {
      Rat base = kind_ == SidonKind::additive ? Rat(fx * k) : ipow(fx, k);
      for_multisets(img_.size(), s_ - k, 0, cur, [&](const std::vector<std::size_t>& idx) {
        if (!ok) return;
        Rat v = base;
        for (auto i : idx) {
          if (kind_ == SidonKind::additive) v += img_[i];
          else v *= img_[i];
        }
        if (values_.count(v) || !seen.insert(v).second) ok = false;
        else fresh.push_back(v);
      });
    }
    if (!ok) return std::nullopt;
    return fresh;
  }

  void add(const Rat& x, std::vector<Rat> fresh) {
    elems_.push_back(x);
    img_.push_back(phi_(x));
    for (const auto& v : fresh) values_.insert(v);
    added_.push_back(std::move(fresh));
  }

  void pop() {
    for (const auto& v : added_.back()) values_.erase(v);
    added_.pop_back();
    elems_.pop_back();
    img_.pop_back();
  }

  const std::vector<Rat>& elements() const { return elems_; }

private:
  unsigned s_;
  PolyQ phi_;
  SidonKind kind_;
  std::vector<Rat> elems_;
  std::vector<Rat> img_;
  std::unordered_set<Rat, RatHash> values_;
  std::vector<std::vector<Rat>> added_;
};

SidonCertificate make_cert(const GroundSet& X, unsigned s, const PolyQ& phi, SidonKind kind) {
  SidonCertificate c;
  c.subset = X;
  c.s = s;
  c.phi = phi;
  c.kind = kind;
  return c;
}

Rat context_energy(const GroundSet& A, unsigned s, const PolyQ& phi, SidonKind kind) {
  const PolyVec phis = PolyVec::uniform(phi, s);
  if (kind == SidonKind::additive) return energy_E(A, WeightFn(), phis, s).value;
  return energy_M(A, WeightFn(), phis, s).value;
}

}  // namespace

SidonCertificate is_sidon(const GroundSet& X, unsigned s, const PolyQ& phi, SidonKind kind) {
  if (s == 0) throw Error("s must be positive");
  check_roots(X, phi, kind);
  auto c = make_cert(X, s, phi, kind);
  std::unordered_map<Rat, std::vector<std::size_t>, RatHash> seen;
  std::vector<std::size_t> cur;
  for_multisets(X.size(), s, 0, cur, [&](const std::vector<std::size_t>& idx) {
    if (c.collision) return;
    std::vector<Rat> xs;
    for (auto i : idx) xs.push_back(X[i]);
    const Rat v = multiset_value(xs, phi, kind);
    auto [it, fresh] = seen.emplace(v, idx);
    if (!fresh) {
      std::vector<Rat> ys;
      for (auto i : it->second) ys.push_back(X[i]);
      c.collision = std::make_pair(std::move(ys), std::move(xs));
    }
  });
  c.verified = !c.collision.has_value();
  return c;
}

SidonCertificate greedy_sidon_extract(const GroundSet& A, unsigned s, const PolyQ& phi,
                                      SidonKind kind, const GreedyOptions& opt) {
  if (s == 0) throw Error("s must be positive");
  check_roots(A, phi, kind);
  std::vector<Rat> order = A.elements();
  if (opt.order == ScanOrder::descending) std::reverse(order.begin(), order.end());
  if (opt.order == ScanOrder::shuffled) {
    std::mt19937_64 rng(opt.seed);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  }
  SidonState st(s, phi, kind);
  for (const auto& x : order)
    if (auto fresh = st.values_with(x)) st.add(x, std::move(*fresh));
  auto c = make_cert(GroundSet(st.elements()), s, phi, kind);
  c.verified = true;
  if (opt.with_context && !A.empty()) c.context_energy = context_energy(A, s, phi, kind);
  return c;
}

SidonCertificate max_sidon_exact(const GroundSet& A, unsigned s, const PolyQ& phi, SidonKind kind,
                                 std::size_t limit) {
  if (s == 0) throw Error("s must be positive");
  if (A.size() > limit)
    throw Error("size over limit: |A| = " + std::to_string(A.size()) + " > " + std::to_string(limit));
  check_roots(A, phi, kind);
  SidonState st(s, phi, kind);
  std::vector<Rat> best;
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    const std::size_t have = st.elements().size();
    if (have > best.size()) best = st.elements();
    if (i == A.size() || have + (A.size() - i) <= best.size()) return;
    if (auto fresh = st.values_with(A[i])) {
      st.add(A[i], std::move(*fresh));
      dfs(i + 1);
      st.pop();
    }
    dfs(i + 1);
  };
  dfs(0);
  auto c = make_cert(GroundSet(best), s, phi, kind);
  c.verified = true;
  return c;
}

double peeling_round_budget(std::size_t n, double c, double C) {
  if (n <= 1) return 0;
  const long double m = static_cast<long double>(n);
  return static_cast<double>(2.0L * (std::log2(m) + 2.0L) +
                             std::pow(m, static_cast<long double>(c)) /
                                 (static_cast<long double>(C) * (std::pow(2.0L, c) - 1.0L)));
}

Rev4Result rev4_partition(const GroundSet& A, unsigned s, const PolyQ& phi, const GreedyOptions& opt) {
  if (s < 2) throw Error("need s >= 2");
  if (A.empty()) throw Error("empty set");
  if (!A.all_integers()) throw Error("A must consist of integers");
  Rev4Result r;
  GreedyOptions g = opt;
  g.with_context = false;
  const PolyQ id = PolyQ::identity();
  GroundSet rest = A;
  // c = 1 - 1/s: pieces are measured against |A_{i-1}|^{1/s}.
  const double c = 1.0 - 1.0 / s;
  double rate = HUGE_VAL;
  while (!rest.empty()) {
    auto add = greedy_sidon_extract(rest, s, phi, SidonKind::additive, g);
    const GroundSet nonzero = rest.minus(GroundSet{0});
    SidonCertificate mul;
    if (!nonzero.empty()) mul = greedy_sidon_extract(nonzero, s, id, SidonKind::multiplicative, g);
    SidonCertificate& piece = mul.subset.size() > add.subset.size() ? mul : add;
    rate = std::min(rate, static_cast<double>(piece.subset.size()) /
                              std::pow(static_cast<double>(rest.size()), 1.0 - c));
    rest = rest.minus(piece.subset);
    if (piece.kind == SidonKind::additive) {
      r.B = r.B.unite(piece.subset);
      ++r.r1;
    } else {
      r.C = r.C.unite(piece.subset);
      ++r.r2;
    }
    r.pieces.push_back(std::move(piece));
  }
  r.rounds = r.pieces.size();
  const PolyVec phis = PolyVec::uniform(phi, s);
  r.E_B = r.B.empty() ? Rat(0) : energy_E(r.B, WeightFn(), phis, s).value;
  if (phi(0) != 0 && !r.B.empty()) r.M_phi_B = energy_M(r.B, WeightFn(), phis, s).value;
  r.M_C = r.C.empty() ? Rat(0) : M_s(r.C, s);
  Rat maxE = 0, maxM = 0;
  for (const auto& p : r.pieces) {
    if (p.kind == SidonKind::additive) maxE = std::max(maxE, energy_E(p.subset, WeightFn(), phis, s).value);
    else maxM = std::max(maxM, M_s(p.subset, s));
  }
  r.E_union_bound = Rat(ipow(Int(static_cast<unsigned long>(r.r1)), 2 * s)) * maxE;
  r.M_union_bound = Rat(ipow(Int(2 * static_cast<unsigned long>(r.r2)), 2 * s)) * maxM;
  r.E_union_holds = r.E_B <= r.E_union_bound;
  r.M_union_holds = r.M_C <= r.M_union_bound;
  r.round_budget = peeling_round_budget(A.size(), c, rate);
  // |A_r| <= 1 is reached within the budget; our loop runs until empty, which
  // takes at most one round more.
  r.budget_holds = A.size() <= 1 ? r.rounds <= 1 : static_cast<double>(r.rounds) <= r.round_budget + 1;
  return r;
}

}  // namespace spl
