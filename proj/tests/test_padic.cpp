#include "oracles.hpp"

#include "spl/core/factor.hpp"
#include "spl/core/rng.hpp"
#include "spl/padic/decoupling.hpp"
#include "spl/padic/valuation.hpp"
#include "spl/structure/query.hpp"

#include <doctest.h>

#include <cmath>

using namespace spl;

namespace {

GroundSet random_positive(SplitMix64& rng, std::size_t n, long hi) {
  std::set<long> xs;
  while (xs.size() < n) xs.insert(rng.between(1, hi));
  return GroundSet::from_ints(std::vector<long>(xs.begin(), xs.end()));
}

// Fiber energies and the decoupling inequality in doubles, far from equality
// on the instances used here.
bool decoupling_holds_approx(const GroundSet& A, long p, unsigned s, const oracle::Fn& phi, char kind, double C) {
  std::map<long, std::vector<Rat>> fib;
  for (const auto& a : A) fib[oracle::nu(p, a.get_num())].push_back(a);
  const double lhs = oracle::energy_uniform(kind, A.elements(), s, phi).get_d();
  double sum = 0;
  for (const auto& [n, B] : fib) sum += std::pow(oracle::energy_uniform(kind, B, s, phi).get_d(), 1.0 / s);
  return lhs <= std::pow(C * sum, static_cast<double>(s)) * (1 + 1e-12);
}

}  // namespace

TEST_CASE("valuations") {
  CHECK(valuation(Int(2), Rat(12)) == 2);
  CHECK(valuation(Int(3), Rat(12)) == 1);
  CHECK(valuation(Int(2), make_rat(3, 8)) == -3);
  CHECK(valuation(Int(5), Rat(-50)) == 2);
  CHECK_THROWS_WITH_AS(valuation(Int(2), Rat(0)), doctest::Contains("valuation of zero"), Error);
}

TEST_CASE("fibers") {
  auto f = fiber(GroundSet{2, 3, 4, 6, 8}, Int(2));
  REQUIRE(f.fibers.size() == 4);
  CHECK(f.fibers.at(0) == GroundSet{3});
  CHECK(f.fibers.at(1) == GroundSet{2, 6});
  CHECK(f.fibers.at(2) == GroundSet{4});
  CHECK(f.fibers.at(3) == GroundSet{8});
  CHECK(f.valuation_set() == std::vector<long>{0, 1, 2, 3});
  auto one = fiber(GroundSet{1, 3, 5}, Int(2));
  CHECK(one.fibers.size() == 1);
  CHECK(one.fibers.at(0) == GroundSet{1, 3, 5});
  auto five = fiber(GroundSet{6, 10, 15}, Int(5));
  CHECK(five.fibers.at(0) == GroundSet{6});
  CHECK(five.fibers.at(1) == GroundSet{10, 15});
  CHECK_THROWS_AS(fiber(GroundSet{0, 1}, Int(2)), Error);
}

TEST_CASE("fibers partition the set") {
  SplitMix64 rng(1);
  const auto primes = primes_up_to(50);
  for (int it = 0; it < 100; ++it) {
    const auto A = random_positive(rng, static_cast<std::size_t>(rng.between(1, 64)), 5000);
    const long p = primes[rng.below(primes.size())];
    const auto f = fiber(A, Int(p));
    std::size_t total = 0;
    GroundSet U;
    for (const auto& [n, B] : f.fibers) {
      total += B.size();
      U = U.unite(B);
      for (const auto& b : B) CHECK(oracle::nu(p, b.get_num()) == n);
    }
    CHECK(total == A.size());
    CHECK(U == A);
  }
}

TEST_CASE("additive decoupling examples") {
  const auto phi = PolyQ::identity();
  auto a = check_chang_additive(GroundSet{1, 2}, WeightFn(), phi, Int(2), 2);
  CHECK(a.lhs_energy == 6);
  CHECK(a.constant_used == 1296);
  REQUIRE(a.fiber_energies.size() == 2);
  CHECK(a.fiber_energies[0].second == 1);
  CHECK(a.fiber_energies[1].second == 1);
  CHECK(a.holds);
  auto b = check_chang_additive(GroundSet{2, 4, 8}, WeightFn(), phi, Int(2), 2);
  CHECK(b.lhs_energy == 15);
  CHECK(b.holds);
  auto c = check_chang_additive(GroundSet{1, 3, 5}, WeightFn(), phi, Int(2), 2);
  CHECK(c.fiber_energies.size() == 1);
  CHECK(c.holds);
  CHECK_THROWS_AS(check_chang_additive(GroundSet{-1, 2}, WeightFn(), phi, Int(2), 2), Error);
  CHECK_THROWS_AS(check_chang_additive(GroundSet{1, 2}, WeightFn(), PolyQ::constant(Rat(3)), Int(2), 2), Error);
}

TEST_CASE("multiplicative decoupling examples") {
  const auto phi = PolyQ::from_ints({1, 1});
  auto a = check_chang_multiplicative(GroundSet{2, 6}, WeightFn(), phi, Int(3), 2, true);
  CHECK(a.constant_used == ipow(Rat(4), 16) * 16);
  CHECK(a.lhs_energy == oracle::energy_uniform('J', oracle::ints({2, 6}), 2, oracle::as_fn({1, 1})));
  CHECK(a.holds);
  auto b = check_chang_multiplicative(GroundSet{2, 4, 8}, WeightFn(), phi, Int(2), 2, true);
  CHECK(b.fiber_energies.size() == 3);
  CHECK(b.holds);
  auto c = check_chang_multiplicative(GroundSet{5}, WeightFn(), phi, Int(7), 3, true);
  CHECK(c.lhs_energy == 1);
  CHECK(c.holds);
  CHECK_THROWS_AS(check_chang_multiplicative(GroundSet{1, 2}, WeightFn(), PolyQ::identity(), Int(2), 2, true), Error);
  // -2 and 3 sit on opposite sides of 0
  CHECK_THROWS_AS(check_chang_multiplicative(GroundSet{-2, 3}, WeightFn(), phi, Int(2), 2, true), Error);
  CHECK_FALSE(check_chang_multiplicative(GroundSet{-2, 3}, WeightFn(), phi, Int(2), 2, false).hypotheses_met);
}

TEST_CASE("decoupling on random instances") {
  SplitMix64 rng(99);
  const long ps[] = {2, 3, 5, 7};
  for (int it = 0; it < 60; ++it) {
    const unsigned s = static_cast<unsigned>(rng.between(2, 3));
    const auto A = random_positive(rng, static_cast<std::size_t>(rng.between(1, s == 3 ? 5 : 7)), 60);
    const long p = ps[rng.below(4)];
    const int d = static_cast<int>(rng.between(1, 3));
    std::vector<long> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = rng.between(1, 3);
    const auto phi = PolyQ::from_ints(c);
    auto add = check_chang_additive(A, WeightFn(), phi, Int(p), s);
    CHECK(add.holds);
    const double Ca = std::pow(d * d + 2.0, 4) * 4.0 * s * s;
    CHECK(decoupling_holds_approx(A, p, s, oracle::as_fn(c), 'E', Ca));
    CHECK(add.lhs_energy == oracle::energy_uniform('E', A.elements(), s, oracle::as_fn(c)));
    auto mul = check_chang_multiplicative(A, WeightFn(), phi, Int(p), s, true);
    CHECK(mul.holds);
    CHECK(mul.lhs_energy == oracle::energy_uniform('J', A.elements(), s, oracle::as_fn(c)));
  }
}

TEST_CASE("solutions inside a valuation class repeat a valuation") {
  SplitMix64 rng(5);
  for (int it = 0; it < 60; ++it) {
    const unsigned s = 2;
    const auto A = random_positive(rng, static_cast<std::size_t>(rng.between(2, 7)), 64);
    const long p = rng.between(0, 1) ? 2 : 3;
    const auto phi = PolyQ::from_ints({rng.between(0, 2), rng.between(1, 3), rng.between(0, 2)});
    CHECK(check_repeated_valuation(A, phi, Int(p), s, false).holds);
    CHECK(check_repeated_valuation(A, phi, Int(p), s, true).holds);
    // phi = x by hand: a1 + a2 = a3 + a4 with four distinct valuations is impossible
    const auto& v = A.elements();
    oracle::tuples(v, 4, [&](const std::vector<std::size_t>& t) {
      if (v[t[0]] + v[t[1]] != v[t[2]] + v[t[3]]) return;
      std::set<long> nus;
      for (auto i : t) nus.insert(oracle::nu(p, v[i].get_num()));
      CHECK(nus.size() < 4);
    });
  }
}

TEST_CASE("valuation classes") {
  // phi = x + x^2 over p = 2: breakpoint at nu = 0
  const auto vc = valuation_classes(GroundSet{1, 2, 3, 4, 8}, PolyQ::from_ints({0, 1, 1}), Int(2), false);
  REQUIRE(vc.breakpoints.size() == 1);
  CHECK(vc.breakpoints[0] == 0);
  CHECK(vc.on_breakpoints == GroundSet{1, 3});
  std::size_t n = vc.on_breakpoints.size();
  for (const auto& [k, B] : vc.classes) n += B.size();
  CHECK(n == 5);
}

TEST_CASE("energy bounds from query trees") {
  const auto phi = PolyQ::identity();
  const auto q1 = query_complexity_exact(GroundSet{2, 4, 8});
  auto a = bound_E_via_qc(GroundSet{2, 4, 8}, WeightFn(), phi, 2, q1.strategy);
  CHECK(a.t == 1);
  CHECK(a.energy == 15);
  CHECK(a.bound == 15116544);
  CHECK(a.holds);
  auto b = bound_E_via_qc(GroundSet{5}, WeightFn(), phi, 3, query_complexity_exact(GroundSet{5}).strategy);
  CHECK(b.energy == 1);
  CHECK(b.holds);
  const auto q2 = query_complexity_exact(GroundSet{6, 10, 15});
  auto c = bound_E_via_qc(GroundSet{6, 10, 15}, WeightFn(), phi, 2, q2.strategy);
  CHECK(c.t == 2);
  CHECK(c.energy == oracle::energy_uniform('E', oracle::ints({6, 10, 15}), 2, oracle::identity()));
  CHECK(c.bound == ipow(Rat(ipow(Int(3), 8) * 256 * 3), 2));
  CHECK(c.holds);
  // a one-level tree cannot separate {6, 10, 15}
  CHECK_THROWS_WITH_AS(bound_E_via_qc(GroundSet{6, 10, 15}, WeightFn(), phi, 2, q1.strategy),
                       doctest::Contains("invalid witness"), Error);
}

TEST_CASE("energy bounds from exact trees on random sets") {
  SplitMix64 rng(12);
  for (int it = 0; it < 60; ++it) {
    const auto A = random_positive(rng, static_cast<std::size_t>(rng.between(1, 8)), 100);
    const auto q = query_complexity_exact(A);
    const auto phi = PolyQ::from_ints({rng.between(-2, 2), rng.between(1, 2)});
    for (unsigned s : {2u, 3u}) CHECK(bound_E_via_qc(A, WeightFn(), phi, s, q.strategy).holds);
  }
}

TEST_CASE("multiplicative bound parts") {
  const auto q = query_complexity_exact(GroundSet{2, 4, 8});
  auto a = bound_M_via_qc(GroundSet{2, 4, 8}, WeightFn(), PolyQ::from_ints({1, 1}), 2, q.strategy);
  CHECK(a.energy == oracle::energy_uniform('M', oracle::ints({2, 4, 8}), 2, oracle::as_fn({1, 1})));
  CHECK(a.quotient_size == 9);
  CHECK(a.bound_part == Rat(9) * ipow(Rat(4), 32) * ipow(Rat(4), 4) * 9);
  CHECK(a.ratio == a.energy / a.bound_part);
  auto b = bound_M_via_qc(GroundSet{3}, WeightFn(), PolyQ::from_ints({1, 1}), 2,
                          query_complexity_exact(GroundSet{3}).strategy);
  CHECK(b.energy == 1);
  CHECK(b.ratio <= 1);
  const GroundSet C{2, 3, 4, 6, 8};
  auto c = bound_M_via_qc(C, WeightFn(), PolyQ::from_ints({1, 2}), 2, query_complexity_exact(C).strategy);
  CHECK(c.energy == oracle::energy_uniform('M', C.elements(), 2, oracle::as_fn({1, 2})));
  const auto P = oracle::fold(C.elements(), 2, true);
  std::set<Rat> Q;
  for (const auto& x : P)
    for (const auto& y : P) Q.insert(x / y);
  CHECK(c.quotient_size == Q.size());
}
