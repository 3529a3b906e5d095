#include "spl/structure/query.hpp"

#include "spl/core/factor.hpp"
#include "spl/padic/valuation.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

namespace spl {

QueryStrategy QueryStrategy::leaf(std::optional<Rat> element) {
  QueryStrategy q;
  q.element = std::move(element);
  return q;
}

unsigned QueryStrategy::depth() const {
  if (is_leaf()) return 0;
  unsigned d = 0;
  for (const auto& [n, c] : children) d = std::max(d, c->depth());
  return 1 + d;
}

nlohmann::json QueryStrategy::to_json() const {
  nlohmann::json j;
  if (is_leaf()) {
    j["leaf"] = true;
    if (element) j["element"] = to_string(*element);
    return j;
  }
  j["prime"] = to_string(*prime);
  nlohmann::json ch = nlohmann::json::object();
  for (const auto& [n, c] : children) ch[std::to_string(n)] = c->to_json();
  j["children"] = ch;
  return j;
}

QueryStrategy QueryStrategy::from_json(const nlohmann::json& j) {
  if (j.contains("leaf")) {
    if (j.contains("element")) return leaf(parse_rat(j["element"].get<std::string>()));
    return leaf();
  }
  if (!j.contains("prime")) throw Error("strategy node needs 'prime' or 'leaf'");
  QueryStrategy q;
  q.prime = parse_int(j["prime"].get<std::string>());
  for (const auto& [k, v] : j.at("children").items())
    q.children[std::stol(k)] = std::make_shared<const QueryStrategy>(from_json(v));
  return q;
}

namespace {

bool replay_rec(const QueryStrategy& st, const GroundSet& A, ReplayResult& out) {
  if (st.is_leaf()) {
    if (A.size() > 1) {
      out.error = "leaf reached by " + std::to_string(A.size()) + " elements: " + A.str();
      return false;
    }
    return true;
  }
  const Fibering f = fiber(A, *st.prime);
  for (const auto& [n, part] : f.fibers) {
    auto it = st.children.find(n);
    if (it == st.children.end()) {
      out.error = "no branch for valuation " + std::to_string(n) + " at prime " + to_string(*st.prime);
      return false;
    }
    for (const auto& a : part) out.vectors[a].push_back(n);
    if (!replay_rec(*it->second, part, out)) return false;
  }
  return true;
}

}  // namespace

ReplayResult replay(const QueryStrategy& st, const GroundSet& A) {
  ReplayResult r;
  if (A.contains_zero()) {
    r.error = "zero element";
    return r;
  }
  for (const auto& a : A) r.vectors[a];
  r.valid = replay_rec(st, A, r);
  return r;
}

std::vector<Int> prime_support_of(const GroundSet& A) { return prime_support(A.elements()); }

namespace {

using Mask = std::uint64_t;

// Valuation table of A over its prime support.
struct Table {
  std::vector<Int> primes;
  std::vector<std::vector<long>> val;  // val[i][k] = nu_{p_k}(a_i)
  std::size_t n = 0;

  explicit Table(const GroundSet& A) : primes(prime_support_of(A)), n(A.size()) {
    for (const auto& a : A) {
      std::vector<long> row;
      for (const auto& p : primes) row.push_back(valuation(p, a));
      val.push_back(std::move(row));
    }
  }

  std::map<long, Mask> groups(Mask m, std::size_t k) const {
    std::map<long, Mask> g;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) g[val[i][k]] |= Mask(1) << i;
    return g;
  }
};

void check_input(const GroundSet& A, std::size_t limit) {
  if (A.contains_zero()) throw Error("zero element");
  if (A.size() > limit)
    throw Error("size over limit: |A| = " + std::to_string(A.size()) + " > " + std::to_string(limit));
  if (A.size() > 63) throw Error("size over limit: at most 63 elements");
}

std::optional<Rat> lone(const GroundSet& A, Mask m) {
  if (m == 0) return std::nullopt;
  return A[static_cast<std::size_t>(std::countr_zero(m))];
}

}  // namespace

QcResult query_complexity_exact(const GroundSet& A, std::size_t limit) {
  check_input(A, limit);
  const Table tab(A);
  std::unordered_map<Mask, std::pair<unsigned, long>> memo;
  std::function<unsigned(Mask)> depth = [&](Mask m) -> unsigned {
    if (std::popcount(m) <= 1) return 0;
    if (auto it = memo.find(m); it != memo.end()) return it->second.first;
    unsigned best = ~0u;
    long choice = -1;
    for (std::size_t k = 0; k < tab.primes.size() && best > 1; ++k) {
      const auto g = tab.groups(m, k);
      if (g.size() < 2) continue;
      unsigned worst = 0;
      for (const auto& [n, sub] : g) {
        worst = std::max(worst, depth(sub));
        if (1 + worst >= best) break;
      }
      if (1 + worst < best) {
        best = 1 + worst;
        choice = static_cast<long>(k);
      }
    }
    if (choice < 0) throw Error("not separable: elements share every valuation");
    memo[m] = {best, choice};
    return best;
  };
  const Mask all = A.size() == 64 ? ~Mask(0) : (Mask(1) << A.size()) - 1;
  depth(all);
  std::function<QueryStrategy(Mask)> build = [&](Mask m) {
    if (std::popcount(m) <= 1) return QueryStrategy::leaf(lone(A, m));
    const auto k = static_cast<std::size_t>(memo.at(m).second);
    QueryStrategy q;
    q.prime = tab.primes[k];
    for (const auto& [n, sub] : tab.groups(m, k)) q.children[n] = std::make_shared<const QueryStrategy>(build(sub));
    return q;
  };
  QcResult r;
  r.strategy = build(all);
  r.t = r.strategy.witnessed_q();
  return r;
}

QcResult query_complexity_greedy(const GroundSet& A) {
  if (A.contains_zero()) throw Error("zero element");
  const auto primes = prime_support_of(A);
  std::function<QueryStrategy(const GroundSet&)> build = [&](const GroundSet& S) {
    if (S.size() <= 1) return QueryStrategy::leaf(S.empty() ? std::nullopt : std::optional<Rat>(S[0]));
    long best = -1;
    std::size_t best_count = 1, best_max = 0;
    for (std::size_t k = 0; k < primes.size(); ++k) {
      const Fibering f = fiber(S, primes[k]);
      if (f.fibers.size() < 2) continue;
      std::size_t mx = 0;
      for (const auto& [n, part] : f.fibers) mx = std::max(mx, part.size());
      if (f.fibers.size() > best_count || (f.fibers.size() == best_count && mx < best_max)) {
        best = static_cast<long>(k);
        best_count = f.fibers.size();
        best_max = mx;
      }
    }
    if (best < 0) throw Error("not separable: elements share every valuation");
    QueryStrategy q;
    q.prime = primes[static_cast<std::size_t>(best)];
    for (const auto& [n, part] : fiber(S, *q.prime).fibers)
      q.children[n] = std::make_shared<const QueryStrategy>(build(part));
    return q;
  };
  QcResult r;
  r.strategy = build(A);
  r.t = r.strategy.witnessed_q();
  return r;
}

LowQcSubset max_subset_with_qc(const GroundSet& A, unsigned tau, std::size_t limit) {
  check_input(A, limit);
  const Table tab(A);
  struct Entry {
    std::size_t size;
    long choice;  // -1: keep one element
  };
  std::vector<std::unordered_map<Mask, Entry>> memo(tau + 1);
  std::function<std::size_t(Mask, unsigned)> best = [&](Mask m, unsigned t) -> std::size_t {
    const auto pc = static_cast<std::size_t>(std::popcount(m));
    if (pc <= 1) return pc;
    if (t == 0) return 1;
    if (auto it = memo[t].find(m); it != memo[t].end()) return it->second.size;
    Entry e{1, -1};
    for (std::size_t k = 0; k < tab.primes.size() && e.size < pc; ++k) {
      std::size_t sum = 0;
      for (const auto& [n, sub] : tab.groups(m, k)) sum += best(sub, t - 1);
      if (sum > e.size) e = {sum, static_cast<long>(k)};
    }
    memo[t][m] = e;
    return e.size;
  };
  const Mask all = A.size() == 64 ? ~Mask(0) : (Mask(1) << A.size()) - 1;
  best(all, tau);
  std::vector<Rat> chosen;
  std::function<QueryStrategy(Mask, unsigned)> build = [&](Mask m, unsigned t) {
    const auto pc = std::popcount(m);
    if (pc == 0) return QueryStrategy::leaf();
    if (pc == 1 || t == 0 || memo[t].at(m).choice < 0) {
      const Rat a = *lone(A, m);
      chosen.push_back(a);
      return QueryStrategy::leaf(a);
    }
    const auto k = static_cast<std::size_t>(memo[t].at(m).choice);
    QueryStrategy q;
    q.prime = tab.primes[k];
    for (const auto& [n, sub] : tab.groups(m, k))
      q.children[n] = std::make_shared<const QueryStrategy>(build(sub, t - 1));
    return q;
  };
  LowQcSubset r;
  r.strategy = build(all, tau);
  r.subset = GroundSet(std::move(chosen));
  return r;
}

}  // namespace spl
