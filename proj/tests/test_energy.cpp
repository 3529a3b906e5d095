#include "oracles.hpp"

#include "spl/core/rng.hpp"
#include "spl/energy/energy.hpp"
#include "spl/energy/inequalities.hpp"
#include "spl/energy/set_algebra.hpp"

#include <doctest.h>

using namespace spl;

namespace {

GroundSet random_set(SplitMix64& rng, std::size_t n, long lo, long hi, bool no_zero = false) {
  std::vector<long> xs;
  while (xs.size() < n) {
    const long x = rng.between(lo, hi);
    if (no_zero && x == 0) continue;
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  return GroundSet::from_ints(xs);
}

std::vector<long> random_coeffs(SplitMix64& rng, int d) {
  std::vector<long> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = rng.between(-3, 3);
  if (c.back() == 0) c.back() = 1;
  return c;
}

WeightFn random_weights(SplitMix64& rng, const GroundSet& A, std::vector<Rat>& plain) {
  std::map<Rat, Rat> t;
  plain.clear();
  for (const auto& a : A) {
    plain.emplace_back(rng.between(0, 3));
    t[a] = plain.back();
  }
  return WeightFn(t);
}

std::vector<oracle::Fn> fns(const std::vector<std::vector<long>>& cs) {
  std::vector<oracle::Fn> r;
  for (const auto& c : cs) r.push_back(oracle::as_fn(c));
  return r;
}

PolyVec pvec(const std::vector<std::vector<long>>& cs) {
  std::vector<PolyQ> r;
  for (const auto& c : cs) r.push_back(PolyQ::from_ints(c));
  return PolyVec(r);
}

const PolyVec id2 = PolyVec::uniform(PolyQ::identity(), 2);

}  // namespace

TEST_CASE("fold sets") {
  CHECK(fold_sumset(GroundSet{1, 2, 3}, 2) == GroundSet{2, 3, 4, 5, 6});
  CHECK(fold_productset(GroundSet{1, 2, 4}, 2) == GroundSet{1, 2, 4, 8, 16});
  CHECK(quotient_set(GroundSet{1, 2}, 1) == GroundSet(std::vector<Rat>{make_rat(1, 2), Rat(1), Rat(2)}));
  CHECK_THROWS_WITH_AS(quotient_set(GroundSet{0, 1}, 1), doctest::Contains("zero divisor"), Error);
  CHECK_THROWS_AS(fold_sumset(GroundSet{1}, 0), Error);
  CHECK(mA_minus_nA(GroundSet{1, 2, 4}, 2, 1).size() == 10);
  CHECK(mA_minus_nA(GroundSet{1, 2}, 0, 0) == GroundSet{0});
}

TEST_CASE("fold sets against enumeration") {
  SplitMix64 rng(5);
  for (int it = 0; it < 60; ++it) {
    const auto A = random_set(rng, static_cast<std::size_t>(rng.between(1, 6)), -8, 8, true);
    const unsigned s = static_cast<unsigned>(rng.between(1, 3));
    const auto& v = A.elements();
    CHECK(fold_sumset(A, s).size() == oracle::fold(v, s, false).size());
    CHECK(fold_productset(A, s).size() == oracle::fold(v, s, true).size());
    const unsigned m = static_cast<unsigned>(rng.between(0, 2)), n = static_cast<unsigned>(rng.between(0, 2));
    CHECK(mA_minus_nA(A, m, n).size() == oracle::m_minus_n(v, m, n).size());
  }
}

TEST_CASE("energy known values") {
  const GroundSet A{1, 2, 3};
  CHECK(energy_E(A, WeightFn(), id2, 2).value == 19);
  CHECK(energy_E(A, WeightFn(), PolyVec::uniform(PolyQ::from_ints({0, 0, 1}), 2), 2).value == 15);
  CHECK(energy_E(GroundSet{5}, WeightFn(), PolyVec::uniform(PolyQ::from_ints({1, 0, 3}), 2), 2).value == 1);
  CHECK(energy_M(A, WeightFn(), id2, 2).value == 15);
  CHECK(energy_M(GroundSet{1, 2, 4}, WeightFn(), id2, 2).value == 19);
  CHECK(energy_M(GroundSet{7}, WeightFn(), PolyVec::uniform(PolyQ::identity(), 3), 3).value == 1);
  CHECK(energy_J(A, WeightFn(), id2, 2).value == 15);
  CHECK(energy_J(GroundSet{2, 3}, WeightFn(), PolyVec::uniform(PolyQ::from_ints({1, 1}), 2), 2).value == 6);
  CHECK(energy_J(GroundSet{4}, WeightFn(), PolyVec::uniform(PolyQ::from_ints({1, 1}), 2), 2).value == 1);
  CHECK(E_s(A, 2) == 19);
  CHECK(M_s(A, 2) == 15);
}

TEST_CASE("energy known values agree with the naive count") {
  using namespace oracle;
  CHECK(energy_uniform('E', ints({1, 2, 3}), 2, identity()) == 19);
  CHECK(energy_uniform('E', ints({1, 2, 3}), 2, as_fn({0, 0, 1})) == 15);
  CHECK(energy_uniform('M', ints({1, 2, 3}), 2, identity()) == 15);
  CHECK(energy_uniform('M', ints({1, 2, 4}), 2, identity()) == 19);
  CHECK(energy_uniform('E', ints({0, 1, 2}), 2, identity()) == 19);
  CHECK(energy_uniform('J', ints({2, 3}), 2, as_fn({1, 1})) == 6);
}

TEST_CASE("errors") {
  CHECK_THROWS_WITH_AS(energy_E(GroundSet{1}, WeightFn(), id2, 3), doctest::Contains("length mismatch"), Error);
  CHECK_THROWS_WITH_AS(energy_J(GroundSet{0, 1}, WeightFn(), id2, 2), doctest::Contains("excluded element"), Error);
  CHECK_THROWS_WITH_AS(energy_J(GroundSet{-1, 2}, WeightFn(), PolyVec::uniform(PolyQ::from_ints({1, 1}), 2), 2),
                       doctest::Contains("excluded element"), Error);
  VectorMap f;
  f.set(Rat(1), {Rat(1)});
  CHECK_THROWS_WITH_AS(energy_E_g(GroundSet{1, 2}, WeightFn(), f, 1), doctest::Contains("undefined map value"),
                       Error);
}

TEST_CASE("oracle and split count agree") {
  SplitMix64 rng(2024);
  for (int it = 0; it < 150; ++it) {
    const unsigned s = static_cast<unsigned>(rng.between(1, 3));
    const std::size_t n = static_cast<std::size_t>(rng.between(1, s == 3 ? 5 : 7));
    const auto A = random_set(rng, n, -12, 12, true);
    std::vector<Rat> w;
    const auto W = random_weights(rng, A, w);
    std::vector<std::vector<long>> cs;
    for (unsigned j = 0; j < 2 * s; ++j) cs.push_back(random_coeffs(rng, static_cast<int>(rng.between(1, 3))));
    const auto phis = pvec(cs);
    const auto E_or = energy_E(A, W, phis, s, Method::oracle).value;
    CHECK(E_or == energy_E(A, W, phis, s, Method::split).value);
    CHECK(E_or == oracle::energy('E', A.elements(), s, fns(cs), w));
    const auto M_or = energy_M(A, W, phis, s, Method::oracle).value;
    CHECK(M_or == energy_M(A, W, phis, s, Method::split).value);
    CHECK(M_or == oracle::energy('M', A.elements(), s, fns(cs), w));
    // J needs a set off the roots
    std::vector<Rat> keep;
    for (const auto& a : A) {
      bool ok = true;
      for (unsigned j = 0; j < 2 * s; ++j) ok = ok && phis[j](a) != 0;
      if (ok) keep.push_back(a);
    }
    if (keep.empty()) continue;
    const GroundSet B(keep);
    std::vector<Rat> wb;
    for (const auto& b : B) wb.push_back(W(b));
    const auto J_or = energy_J(B, W, phis, s, Method::oracle).value;
    CHECK(J_or == energy_J(B, W, phis, s, Method::split).value);
    CHECK(J_or == oracle::energy('J', B.elements(), s, fns(cs), wb));
  }
}

TEST_CASE("rational and factored keys agree") {
  SplitMix64 rng(9);
  for (int it = 0; it < 40; ++it) {
    const unsigned s = static_cast<unsigned>(rng.between(2, 3));
    const auto A = random_set(rng, static_cast<std::size_t>(rng.between(2, 6)), 1, 40);
    EnergySystem sys;
    sys.s = s;
    for (unsigned j = 0; j < 2 * s; ++j) {
      std::vector<EnergyItem> pos;
      for (const auto& a : A) pos.push_back(EnergyItem{{}, {a}, Rat(1)});
      sys.positions.push_back(pos);
    }
    CHECK(count_split(sys, KeyMode::factored) == count_split(sys, KeyMode::rational));
    CHECK(count_split(sys, KeyMode::rational) == count_oracle(sys));
  }
}

TEST_CASE("diagonal lower bound") {
  SplitMix64 rng(17);
  for (int it = 0; it < 120; ++it) {
    const unsigned s = static_cast<unsigned>(rng.between(1, 3));
    const auto A = random_set(rng, static_cast<std::size_t>(rng.between(1, 6)), -10, 10);
    std::vector<Rat> w;
    const auto W = random_weights(rng, A, w);
    const auto phi = PolyVec::uniform(PolyQ::from_ints(random_coeffs(rng, 2)), s);
    const Rat diag = ipow(W.sum_squares(A), s);
    CHECK(energy_E(A, W, phi, s).value >= diag);
    CHECK(energy_M(A, W, phi, s).value >= diag);
  }
}

TEST_CASE("geometric progressions turn products into sums") {
  SplitMix64 rng(23);
  for (int it = 0; it < 40; ++it) {
    const auto S = random_set(rng, static_cast<std::size_t>(rng.between(1, 8)), 0, 12);
    const unsigned s = static_cast<unsigned>(rng.between(1, 3));
    const long g = rng.between(2, 5);
    std::vector<Int> gp;
    for (const auto& e : S) gp.push_back(ipow(Int(g), to_ulong(e.get_num())));
    CHECK(M_s(GroundSet::from_ints(gp), s, Method::split) == E_s(S, s, Method::split));
  }
}

TEST_CASE("energies are symmetric in the positions") {
  SplitMix64 rng(31);
  for (int it = 0; it < 40; ++it) {
    const auto A = random_set(rng, 4, 1, 9);
    std::vector<std::vector<long>> cs;
    for (int j = 0; j < 4; ++j) cs.push_back(random_coeffs(rng, 2));
    const auto base = energy_E(A, WeightFn(), pvec(cs), 2).value;
    CHECK(base == energy_E(A, WeightFn(), pvec({cs[1], cs[0], cs[2], cs[3]}), 2).value);
    CHECK(base == energy_E(A, WeightFn(), pvec({cs[2], cs[3], cs[0], cs[1]}), 2).value);
    const auto mb = energy_M(A, WeightFn(), pvec(cs), 2).value;
    CHECK(mb == energy_M(A, WeightFn(), pvec({cs[3], cs[2], cs[1], cs[0]}), 2).value);
  }
}

TEST_CASE("coupled energy is invariant under dilation") {
  SplitMix64 rng(41);
  int done = 0;
  for (int it = 0; it < 200 && done < 30; ++it) {
    const unsigned s = 2;
    const auto A = random_set(rng, 4, 1, 12);
    const auto phi = PolyQ::from_ints(random_coeffs(rng, static_cast<int>(rng.between(1, 2))));
    bool ok = true;
    for (const auto& a : A) ok = ok && phi(a) != 0;
    if (!ok) continue;
    ++done;
    std::vector<Rat> w;
    const auto W = random_weights(rng, A, w);
    const long lambda = rng.between(2, 4);
    const Rat L(lambda);
    const PolyQ scaled = phi.scale_argument(1 / L) * ipow(L, static_cast<unsigned long>(phi.degree() + 1));
    const auto lhs = energy_J(A, W, PolyVec::uniform(phi, s), s).value;
    const auto rhs = energy_J(A.scaled(L), W.scaled(L), PolyVec::uniform(scaled, s), s).value;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("energy with two maps") {
  const GroundSet A{1, 2};
  const auto f = VectorMap::from_polys(A, {PolyQ::identity()});
  const auto g = VectorMap::from_polys(A, {PolyQ::from_ints({0, 0, 1})});
  CHECK(energy_E_fg(A, WeightFn(), f, g, 1).value == 2);
  const GroundSet B{1, 2, 3};
  const auto zero = VectorMap::from_polys(B, {PolyQ()});
  CHECK(energy_E_fg(B, WeightFn(), zero, VectorMap::from_polys(B, {PolyQ::identity()}), 2).value == 19);
  const GroundSet one{1};
  CHECK(energy_E_fg(one, WeightFn(), VectorMap::from_polys(one, {PolyQ::identity()}),
                    VectorMap::from_polys(one, {}, {PolyQ::from_ints({2, 1})}), 3)
            .value == 1);
  // log coordinates balance exactly when products do
  const GroundSet C{1, 2, 3, 4, 6};
  CHECK(energy_E_g(C, WeightFn(), VectorMap::from_polys(C, {}, {PolyQ::identity()}), 2).value == M_s(C, 2));
  CHECK(fold_difference_count(A, f, 1) == 3);
}

TEST_CASE("Cauchy-Schwarz lower bounds") {
  auto c = check_cauchy_schwarz(GroundSet{1, 2, 3}, 2, false);
  CHECK(c.lhs == 95);
  CHECK(c.rhs == 81);
  CHECK(c.holds);
  auto m = check_cauchy_schwarz(GroundSet{1, 2, 4}, 2, true);
  CHECK(m.lhs == 95);
  CHECK(m.holds);
  auto one = check_cauchy_schwarz(GroundSet{1}, 5, false);
  CHECK(one.lhs == 1);
  CHECK(one.rhs == 1);
  CHECK(one.holds);
  SplitMix64 rng(8);
  for (int it = 0; it < 100; ++it) {
    const auto A = random_set(rng, static_cast<std::size_t>(rng.between(1, 7)), -15, 15, true);
    const unsigned s = static_cast<unsigned>(rng.between(1, 3));
    CHECK(check_cauchy_schwarz(A, s, false).holds);
    CHECK(check_cauchy_schwarz(A, s, true).holds);
  }
}

TEST_CASE("Hoelder splits") {
  HolderInput eq;
  eq.sets = {GroundSet{1, 2, 3}, GroundSet{1, 2, 3}, GroundSet{1, 2, 3}, GroundSet{1, 2, 3}};
  eq.phis = id2;
  auto e = check_holder_split(HolderKind::e_sets, eq);
  CHECK(e.lhs == 19);
  CHECK(e.product == ipow(Rat(19), 4));
  CHECK(e.holds);

  HolderInput mixed;
  mixed.sets = {GroundSet{1, 2}, GroundSet{2, 3}, GroundSet{1, 3}, GroundSet{1, 2, 3}};
  mixed.phis = id2;
  auto m = check_holder_split(HolderKind::e_sets, mixed);
  CHECK(m.holds);
  // naive E(A_1..A_4): a1 + a2 = a3 + a4
  Rat naive = 0;
  for (long a : {1, 2})
    for (long b : {2, 3})
      for (long c : {1, 3})
        for (long d : {1, 2, 3}) naive += a + b == c + d;
  CHECK(m.lhs == naive);

  HolderInput uni;
  uni.sets = {GroundSet{2, 3}, GroundSet{5, 7}};
  uni.phis = PolyVec::uniform(PolyQ::from_ints({1, 1}), 2);
  auto u = check_holder_split(HolderKind::j_union, uni);
  CHECK(u.holds);
  CHECK(u.lhs == energy_J(GroundSet{2, 3, 5, 7}, WeightFn(), uni.phis, 2).value);
  CHECK(u.factor == ipow(Rat(3), 4) * ipow(Rat(2), 4));

  HolderInput bad;
  bad.sets = {GroundSet{0, 1}, GroundSet{1}, GroundSet{1}, GroundSet{1}};
  bad.phis = id2;
  CHECK_THROWS_AS(check_holder_split(HolderKind::j_sets, bad), Error);
}

TEST_CASE("Hoelder splits hold on random instances") {
  SplitMix64 rng(77);
  for (int it = 0; it < 40; ++it) {
    const unsigned s = 2;
    HolderInput in;
    for (unsigned j = 0; j < 2 * s; ++j) in.sets.push_back(random_set(rng, static_cast<std::size_t>(rng.between(1, 4)), 1, 9));
    std::vector<std::vector<long>> cs;
    for (unsigned j = 0; j < 2 * s; ++j) cs.push_back({rng.between(1, 3), rng.between(1, 2)});
    in.phis = pvec(cs);
    CHECK(check_holder_split(HolderKind::e_sets, in).holds);
    CHECK(check_holder_split(HolderKind::j_sets, in).holds);
    HolderInput un;
    un.sets = {random_set(rng, 3, 1, 9), random_set(rng, 2, 10, 20)};
    un.phis = in.phis;
    CHECK(check_holder_split(HolderKind::e_union, un).holds);
    CHECK(check_holder_split(HolderKind::j_union, un).holds);
    HolderInput drop;
    drop.sets = {random_set(rng, 5, 1, 20)};
    drop.phis = PolyVec::uniform(PolyQ::from_ints({1, 1}), 3);
    drop.l = static_cast<unsigned>(rng.between(1, 2));
    CHECK(check_holder_split(HolderKind::e_drop, drop).holds);
    CHECK(check_holder_split(HolderKind::j_drop, drop).holds);
  }
}

TEST_CASE("curve incidences") {
  CHECK(count_curve_incidences(GroundSet{1, 2, 3, 4}, PolyQ::from_ints({1, 1})).count == 3);
  CHECK(count_curve_incidences(GroundSet{1, 2, 3}, PolyQ::from_ints({0, 0, 1})).count == 1);
  auto f = count_curve_incidences(GroundSet{5}, PolyQ::identity());
  CHECK(f.count == 1);
  CHECK(f.K == 1);
  CHECK_FALSE(f.bound_context);
  auto k = count_curve_incidences(GroundSet{1, 2, 3, 4}, PolyQ::from_ints({1, 1}));
  CHECK(k.K == make_rat(9, 4));
  CHECK(k.bound_context);
}
