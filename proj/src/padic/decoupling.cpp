#include "spl/padic/decoupling.hpp"

#include "spl/energy/set_algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace spl {

namespace {

void require_positive_integers(const GroundSet& A) {
  for (const auto& a : A)
    if (!is_integer(a) || a <= 0) throw Error("nonpositive element: " + to_string(a) + " (need positive integers)");
}

Rat lower_rhs(const Rat& C, const std::vector<Rat>& ys, unsigned s) {
  Rat sum = 0;
  for (const auto& y : ys) sum += root_bracket(y, s, 8).lo;
  return ipow(C * sum, s);
}

DecouplingCheck decide(const Rat& lhs, const Rat& C, const Fibering& f,
                       const std::function<Rat(const GroundSet&)>& energy, unsigned s) {
  DecouplingCheck c;
  c.lhs_energy = lhs;
  c.constant_used = C;
  std::vector<Rat> ys;
  for (const auto& [n, part] : f.fibers) {
    const Rat e = energy(part);
    c.fiber_energies.emplace_back(n, e);
    ys.push_back(e);
  }
  c.decision = compare_power_of_root_sum(lhs, ipow(C, s), ys, s);
  c.holds = c.decision == Decision::holds;
  c.rhs_bound = lower_rhs(C, ys, s);
  return c;
}

void require_excluded(const GroundSet& A, const PolyQ& phi) {
  for (const auto& a : A) {
    if (a == 0) throw Error("hypothesis violation: 0 in the set");
    if (phi(a) == 0) throw Error("hypothesis violation: " + to_string(a) + " is a root of phi");
  }
}

}  // namespace

DecouplingCheck check_chang_additive(const GroundSet& A, const WeightFn& w, const PolyQ& phi,
                                     const Int& p, unsigned s, Method method) {
  require_positive_integers(A);
  if (phi.degree() < 1) throw Error("zero-degree phi");
  w.check_support(A);
  const Rat shift = phi(Rat(0));
  const PolyQ psi = phi - PolyQ::constant(shift);
  const PolyVec v = PolyVec::uniform(psi, s);
  const Int d = phi.degree();
  const Rat C = Rat(ipow(Int(d * d + 2), 4) * ipow(Int(2 * s), 2));
  const Rat E = energy_E(A, w, v, s, method).value;
  auto c = decide(E, C, fiber(A, p), [&](const GroundSet& B) { return energy_E(B, w, v, s, method).value; }, s);
  if (shift != 0) c.note = "phi shifted by " + to_string(-shift) + " so that phi(0) = 0";
  return c;
}

DecouplingCheck check_chang_multiplicative(const GroundSet& A, const WeightFn& w, const PolyQ& phi,
                                           const Int& p, unsigned s, bool interval_certified,
                                           Method method) {
  if (phi.is_zero() || phi(Rat(0)) == 0) throw Error("hypothesis violation: phi(0) = 0");
  require_excluded(A, phi);
  const bool one_interval = common_sign_interval(A, phi).has_value();
  if (interval_certified && !one_interval)
    throw Error("hypothesis violation: set is not inside one sign interval of phi");
  const PolyVec v = PolyVec::uniform(phi, s);
  const Int d = std::max(0, phi.degree());
  const Rat C = Rat(ipow(Int(d + 3), 16) * ipow(Int(2 * s), 2));
  const Rat J = energy_J(A, w, v, s, method).value;
  auto c = decide(J, C, fiber(A, p), [&](const GroundSet& B) { return energy_J(B, w, v, s, method).value; }, s);
  c.hypotheses_met = one_interval;
  return c;
}

ValuationClasses valuation_classes(const GroundSet& A, const PolyQ& phi, const Int& p,
                                   bool drop_constant) {
  std::vector<std::pair<long, long>> terms;  // (i, nu_p(b_i))
  for (std::size_t i = drop_constant ? 1 : 0; i < phi.coeffs().size(); ++i)
    if (phi.coeffs()[i] != 0) terms.emplace_back(static_cast<long>(i), valuation(p, phi.coeffs()[i]));
  std::set<Rat> X;
  for (const auto& [i, vi] : terms)
    for (const auto& [j, vj] : terms)
      if (i != j) X.insert(make_rat(vj - vi, i - j));
  ValuationClasses vc;
  vc.breakpoints.assign(X.begin(), X.end());
  std::map<long, std::vector<Rat>> parts;
  std::vector<Rat> on;
  for (const auto& a : A) {
    const Rat m(valuation(p, a));
    if (X.count(m)) {
      on.push_back(a);
      continue;
    }
    const long gap = static_cast<long>(std::lower_bound(vc.breakpoints.begin(), vc.breakpoints.end(), m) -
                                       vc.breakpoints.begin());
    parts[gap].push_back(a);
  }
  for (auto& [g, v] : parts) vc.classes.emplace(g, GroundSet(std::move(v)));
  vc.on_breakpoints = GroundSet(std::move(on));
  return vc;
}

RepeatedValuationCheck check_repeated_valuation(const GroundSet& A, const PolyQ& phi, const Int& p,
                                                unsigned s, bool multiplicative) {
  if (A.contains_zero()) throw Error("zero element");
  const PolyQ psi = multiplicative ? phi : phi - PolyQ::constant(phi(Rat(0)));
  if (psi.is_zero()) throw Error("phi is constant");
  const auto vc = valuation_classes(A, psi, p, !multiplicative);
  RepeatedValuationCheck r;
  for (const auto& [gap, S] : vc.classes) {
    // Dominant term: one index j with nu(psi(a)) = nu(b_j) + j nu(a) on the whole class.
    bool dom = false;
    for (std::size_t j = 0; j < psi.coeffs().size() && !dom; ++j) {
      if (psi.coeffs()[j] == 0) continue;
      bool all = true;
      for (const auto& a : S) {
        const Rat y = psi(a);
        if (y == 0 || valuation(p, y) != valuation(p, psi.coeffs()[j]) + static_cast<long>(j) * valuation(p, a)) {
          all = false;
          break;
        }
      }
      dom = all;
    }
    r.dominance_holds = r.dominance_holds && dom;

    std::vector<Rat> xs(S.begin(), S.end());
    std::vector<long> nu;
    std::vector<Rat> img;
    for (const auto& a : xs) {
      nu.push_back(valuation(p, a));
      img.push_back(psi(a));
    }
    const std::size_t L = 2 * s;
    std::vector<std::size_t> pick(L);
    std::set<long> used;
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
      if (k == L) {
        ++r.tuples_examined;
        bool sol;
        if (multiplicative) {
          Rat la = 1, ra = 1, lf = 1, rf = 1;
          for (std::size_t i = 0; i < s; ++i) {
            la *= xs[pick[i]];
            lf *= img[pick[i]];
            ra *= xs[pick[s + i]];
            rf *= img[pick[s + i]];
          }
          sol = la == ra && lf == rf;
        } else {
          Rat bal = 0;
          for (std::size_t i = 0; i < s; ++i) bal += img[pick[i]] - img[pick[s + i]];
          sol = bal == 0;
        }
        if (sol) {
          std::string t = "(";
          for (std::size_t i = 0; i < L; ++i) t += (i ? ", " : "") + to_string(xs[pick[i]]);
          r.counterexample = t + ")";
          return false;
        }
        return true;
      }
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (used.count(nu[i])) continue;
        used.insert(nu[i]);
        pick[k] = i;
        const bool ok = rec(k + 1);
        used.erase(nu[i]);
        if (!ok) return false;
      }
      return true;
    };
    if (!rec(0)) {
      r.holds = false;
      return r;
    }
  }
  return r;
}

namespace {

unsigned validated_depth(const GroundSet& A, const QueryStrategy& st) {
  const auto rep = replay(st, A);
  if (!rep.valid) throw Error("invalid witness: " + rep.error);
  return st.witnessed_q();
}

}  // namespace

QcEnergyBound bound_E_via_qc(const GroundSet& A, const WeightFn& w, const PolyQ& phi, unsigned s,
                             const QueryStrategy& strategy, Method method) {
  require_positive_integers(A);
  if (phi.degree() < 1) throw Error("zero-degree phi");
  QcEnergyBound b;
  b.t = validated_depth(A, strategy);
  const Int d = phi.degree();
  const Rat C = Rat(ipow(Int(d * d + 2), 4) * ipow(Int(2 * s), 2));
  b.energy = energy_E(A, w, PolyVec::uniform(phi, s), s, method).value;
  b.bound = ipow(ipow(C, b.t) * w.sum_squares(A), s);
  b.holds = b.energy <= b.bound;
  return b;
}

QcMultBound bound_M_via_qc(const GroundSet& A, const WeightFn& w, const PolyQ& phi, unsigned s,
                           const QueryStrategy& strategy, Method method) {
  require_excluded(A, phi);
  QcMultBound b;
  b.t = validated_depth(A, strategy);
  const Int d = std::max(0, phi.degree());
  b.energy = energy_M(A, w, PolyVec::uniform(phi, s), s, method).value;
  b.quotient_size = Int(static_cast<unsigned long>(quotient_set(A, s).size()));
  b.bound_part = Rat(b.quotient_size) * Rat(ipow(Int(d + 3), 16 * b.t * s)) *
                 Rat(ipow(Int(2 * s), 2 * b.t * s)) * ipow(w.sum_squares(A), s);
  b.ratio = b.bound_part == 0 ? Rat(0) : b.energy / b.bound_part;
  return b;
}

}  // namespace spl
