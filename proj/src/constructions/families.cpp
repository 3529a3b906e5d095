#include "spl/constructions/families.hpp"

#include "spl/core/factor.hpp"
#include "spl/core/rng.hpp"
#include "spl/energy/energy.hpp"
#include "spl/energy/set_algebra.hpp"

#include <set>

namespace spl {

std::string to_string(Family f) {
  switch (f) {
    case Family::AP: return "AP";
    case Family::GP: return "GP";
    case Family::odd_times_powers: return "odd-times-powers";
    case Family::prime_products: return "prime-products";
    case Family::dilate: return "dilate";
    case Family::union_of: return "union";
    case Family::random: return "random";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::AP, Family::GP, Family::odd_times_powers, Family::prime_products,
                   Family::dilate, Family::union_of, Family::random})
    if (s == to_string(f)) return f;
  throw Error("unknown family: " + s);
}

Int ceil_rational_power(long N, unsigned long p, unsigned long q) {
  if (N < 1 || q == 0) throw Error("bad power arguments");
  const Int target = ipow(Int(N), p);
  Int c = iroot_floor(target, q);
  if (ipow(c, q) < target) ++c;
  return c;
}

namespace {

void require_positive(long v, const char* name) {
  if (v < 1) throw Error(std::string(name) + " must be positive");
}

GroundSet capped(std::vector<Rat> xs, const Int& cap) {
  for (const auto& x : xs)
    if (abs(x) > Rat(cap)) throw Error("element " + to_string(x) + " exceeds the cap " + to_string(cap));
  return GroundSet(std::move(xs));
}

}  // namespace

GroundSet gen(const FamilySpec& f) {
  std::vector<Rat> xs;
  switch (f.family) {
    case Family::AP:
      require_positive(f.n, "n");
      for (long i = 0; i < f.n; ++i) xs.emplace_back(f.start + f.step * i);
      if (f.step == 0 && f.n > 1) throw Error("step must be nonzero");
      break;
    case Family::GP: {
      require_positive(f.n, "n");
      if (f.base == 0 || abs(f.base) == 1) throw Error("base must have absolute value at least 2");
      if (f.start == 0) throw Error("start must be nonzero");
      Int v = f.start;
      for (long i = 0; i < f.n; ++i) {
        if (abs(v) > f.cap) throw Error("element " + to_string(v) + " exceeds the cap " + to_string(f.cap));
        xs.emplace_back(v);
        v *= f.base;
      }
      break;
    }
    case Family::odd_times_powers:
      require_positive(f.m, "m");
      require_positive(f.n, "n");
      for (long i = 1; i <= f.m; ++i)
        for (long j = 1; j <= f.n; ++j) {
          if (j >= 4096) throw Error("n too large");
          xs.emplace_back(Int(2 * i + 1) << static_cast<unsigned long>(j));
        }
      break;
    case Family::prime_products: {
      long P = f.P, Q = f.Q;
      if (P == 0 && Q == 0) {
        require_positive(f.N, "N");
        const unsigned long den = 2 * f.s + 2;
        P = to_long(ceil_rational_power(f.N, f.s, den));
        Q = to_long(ceil_rational_power(f.N, f.s + 2, den));
      }
      require_positive(P, "|P|");
      require_positive(Q, "|Q|");
      const auto primes = first_primes(static_cast<std::size_t>(P + Q));
      for (long i = 0; i < P; ++i)
        for (long j = P; j < P + Q; ++j) xs.emplace_back(primes[i] * primes[j]);
      break;
    }
    case Family::dilate:
      if (f.parts.size() != 1) throw Error("dilate takes one set");
      if (f.lambda == 0) throw Error("dilation by zero");
      return capped(f.parts[0].scaled(f.lambda).elements(), f.cap);
    case Family::union_of: {
      GroundSet u;
      for (const auto& p : f.parts) u = u.unite(p);
      return capped(u.elements(), f.cap);
    }
    case Family::random: {
      require_positive(f.n, "n");
      if (f.hi < f.lo || f.hi - f.lo + 1 < f.n) throw Error("range too small for n distinct elements");
      SplitMix64 rng(f.seed);
      std::set<long> picked;
      while (static_cast<long>(picked.size()) < f.n) picked.insert(rng.between(f.lo, f.hi));
      for (long v : picked) xs.emplace_back(v);
      break;
    }
  }
  return capped(std::move(xs), f.cap);
}

BwexReport bwex_report(long m, long n, unsigned s, const PolyQ& phi, const GroundSet& B) {
  FamilySpec spec;
  spec.family = Family::odd_times_powers;
  spec.m = m;
  spec.n = n;
  const GroundSet A = gen(spec);
  if (!B.is_subset_of(A)) throw Error("B is not a subset of A_{m,n}");
  if (B.empty()) throw Error("empty B");
  BwexReport r;
  r.m = m;
  r.n = n;
  r.s = s;
  r.B_size = B.size();
  r.product_size = Int(static_cast<unsigned long>(fold_productset(B, s).size()));
  const Int total = ipow(Int(static_cast<unsigned long>(B.size())), 2 * s);
  r.cs_lower = Rat(total) / Rat(r.product_size);
  r.M = M_s(B, s);
  r.cs_holds = r.M >= r.cs_lower;

  Int T = 1;
  for (std::size_t i = 1; i < phi.coeffs().size(); ++i) {
    const Rat& a = phi.coeffs()[i];
    if (a == 0) continue;
    if (!is_integer(a)) throw Error("phi must have integer coefficients");
    T *= Int(s) * abs(a.get_num()) * ipow(Int(2 * m + 1), i);
  }
  const PolyVec phis = PolyVec::uniform(phi, s);
  for (long j = 1; j <= n; ++j) {
    std::vector<Rat> bj;
    for (const auto& b : B) {
      const Int odd = b.get_num() >> static_cast<unsigned long>(j);
      if ((odd << static_cast<unsigned long>(j)) == b.get_num() && odd % 2 != 0) bj.push_back(b);
    }
    if (bj.empty()) continue;
    FiberReport fr;
    fr.j = j;
    fr.Bj = GroundSet(std::move(bj));
    fr.energy = energy_E(fr.Bj, WeightFn(), phis, s).value;
    std::vector<Rat> img;
    for (const auto& b : fr.Bj) img.push_back(phi(b));
    // s phi(B_j) as a set of values; repeated images collapse.
    fr.sum_image = Int(static_cast<unsigned long>(fold_sumset(GroundSet(std::move(img)), s).size()));
    fr.T_bound = T;
    fr.T_holds = fr.sum_image <= fr.T_bound;
    fr.cs_lower = Rat(ipow(Int(static_cast<unsigned long>(fr.Bj.size())), 2 * s)) / Rat(fr.sum_image);
    fr.cs_holds = fr.energy >= fr.cs_lower;
    r.fibers.push_back(std::move(fr));
  }
  return r;
}

}  // namespace spl
