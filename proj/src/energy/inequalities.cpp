#include "spl/energy/inequalities.hpp"

#include "spl/energy/set_algebra.hpp"

#include <algorithm>

namespace spl {

CauchySchwarzCheck check_cauchy_schwarz(const GroundSet& A, unsigned s, bool multiplicative,
                                        Method method) {
  if (A.empty()) throw Error("empty set");
  CauchySchwarzCheck c;
  if (multiplicative) {
    c.set_size = Int(static_cast<unsigned long>(fold_productset(A, s).size()));
    c.energy = M_s(A, s, method);
  } else {
    c.set_size = Int(static_cast<unsigned long>(fold_sumset(A, s).size()));
    c.energy = E_s(A, s, method);
  }
  c.lhs = Rat(c.set_size) * c.energy;
  c.rhs = Rat(ipow(Int(static_cast<unsigned long>(A.size())), 2 * s));
  c.holds = c.lhs >= c.rhs;
  return c;
}

std::string to_string(HolderKind k) {
  switch (k) {
    case HolderKind::e_sets: return "e-sets";
    case HolderKind::j_sets: return "j-sets";
    case HolderKind::j_sets_signed: return "j-sets-signed";
    case HolderKind::j_union: return "j-union";
    case HolderKind::e_union: return "e-union";
    case HolderKind::e_drop: return "e-drop";
    case HolderKind::j_drop: return "j-drop";
  }
  return "?";
}

HolderKind parse_holder_kind(const std::string& s) {
  for (auto k : {HolderKind::e_sets, HolderKind::j_sets, HolderKind::j_sets_signed, HolderKind::j_union,
                 HolderKind::e_union, HolderKind::e_drop, HolderKind::j_drop})
    if (to_string(k) == s) return k;
  throw Error("unknown inequality kind: " + s);
}

namespace {

GroundSet union_of(const std::vector<GroundSet>& sets) {
  GroundSet u;
  for (const auto& S : sets) u = u.unite(S);
  return u;
}

Rat single(EnergyKind kind, const GroundSet& A, const WeightFn& w, const PolyQ& phi, unsigned s,
           Method method) {
  const PolyVec v = PolyVec::uniform(phi, s);
  return kind == EnergyKind::E ? energy_E(A, w, v, s, method).value : energy_J(A, w, v, s, method).value;
}

}  // namespace

HolderCheck check_holder_split(HolderKind kind, const HolderInput& in, Method method) {
  const PolyVec& phis = in.phis;
  const unsigned s = phis.s();
  const Int d2 = Int(std::max(0, phis.max_degree()) + 2);
  const Rat d2_pow = Rat(ipow(d2, 2 * s));
  HolderCheck c;
  c.kind = kind;
  c.factor = 1;
  c.root = 1;
  switch (kind) {
    case HolderKind::e_sets:
    case HolderKind::j_sets:
    case HolderKind::j_sets_signed: {
      if (in.sets.size() != 2 * s) throw Error("need 2s sets");
      const bool isE = kind == HolderKind::e_sets;
      if (kind == HolderKind::j_sets_signed)
        for (std::size_t j = 0; j < in.sets.size(); ++j)
          if (!common_sign_interval(in.sets[j], phis[j]))
            throw Error("hypothesis violation: set " + std::to_string(j + 1) +
                        " is not inside one sign interval of its polynomial");
      c.lhs = isE ? energy_E_sets(in.sets, in.weights, phis, method).value
                  : energy_J_sets(in.sets, in.weights, phis, method).value;
      c.product = 1;
      for (std::size_t j = 0; j < in.sets.size(); ++j)
        c.product *= single(isE ? EnergyKind::E : EnergyKind::J, in.sets[j], in.weights, phis[j], s, method);
      c.root = 2 * s;
      if (kind == HolderKind::j_sets) c.factor = d2_pow;
      break;
    }
    case HolderKind::j_union:
    case HolderKind::e_union: {
      if (in.sets.empty()) throw Error("need at least one piece");
      const bool isE = kind == HolderKind::e_union;
      const GroundSet U = union_of(in.sets);
      const std::vector<GroundSet> reps(2 * s, U);
      c.lhs = isE ? energy_E_sets(reps, in.weights, phis, method).value
                  : energy_J_sets(reps, in.weights, phis, method).value;
      Rat best = 0;
      for (const auto& piece : in.sets)
        for (const auto& phi : phis.polys())
          best = std::max(best, single(isE ? EnergyKind::E : EnergyKind::J, piece, in.weights, phi, s, method));
      c.product = best;
      const Rat r_pow = Rat(ipow(Int(static_cast<unsigned long>(in.sets.size())), 2 * s));
      c.factor = isE ? r_pow : d2_pow * r_pow;
      break;
    }
    case HolderKind::e_drop:
    case HolderKind::j_drop: {
      if (in.sets.size() != 1) throw Error("need exactly one set");
      if (!in.weights.is_unit()) throw Error("hypothesis violation: unit weights required");
      if (in.l < 1 || in.l >= s) throw Error("need 1 <= l < s");
      const bool isE = kind == HolderKind::e_drop;
      const GroundSet& A = in.sets[0];
      const EnergyKind ek = isE ? EnergyKind::E : EnergyKind::J;
      c.lhs = single(ek, A, in.weights, phis[0], s, method);
      c.product = single(ek, A, in.weights, phis[0], in.l, method);
      c.factor = Rat(ipow(Int(static_cast<unsigned long>(A.size())), 2 * (s - in.l)));
      if (!isE) c.factor *= Rat(ipow(Int(std::max(0, phis[0].degree()) + 2), 2 * s));
      break;
    }
  }
  c.holds = ipow(c.lhs, c.root) <= ipow(c.factor, c.root) * c.product;
  if (c.root == 1) {
    c.rhs_display = c.factor * c.product;
  } else {
    const auto b = root_bracket(c.product, c.root, 8);
    c.rhs_display = c.factor * b.lo;
  }
  return c;
}

CurveIncidence count_curve_incidences(const GroundSet& A, const PolyQ& phi) {
  CurveIncidence r;
  r.count = 0;
  for (const auto& a2 : A)
    if (A.contains(phi(a2))) ++r.count;
  if (!A.empty()) {
    r.K = Rat(static_cast<long>(productset(A, A).size()), static_cast<long>(A.size()));
    r.K.canonicalize();
  }
  r.bound_context = phi(Rat(0)) != 0;
  return r;
}

}  // namespace spl
