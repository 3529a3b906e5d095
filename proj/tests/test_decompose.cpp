#include "oracles.hpp"

#include "spl/core/factor.hpp"
#include "spl/core/rng.hpp"
#include "spl/decompose/decompose.hpp"

#include <doctest.h>

using namespace spl;

namespace {

const PolyVec id2 = PolyVec::uniform(PolyQ::identity(), 2);

void check_invariants(const DecompositionResult& r, const PolyVec& phis) {
  CHECK(r.B.intersect(r.C).empty());
  CHECK(r.B.unite(r.C) == r.A);
  CHECK(r.rounds <= r.A.size() + 1);
  GroundSet U;
  std::size_t total = 0;
  for (const auto& p : r.pieces) {
    CHECK_FALSE(p.set.empty());
    total += p.set.size();
    U = U.unite(p.set);
    CHECK(p.t <= r.tau);
  }
  CHECK(total == U.size());
  CHECK(U == r.B);
  const auto c = certify(r, phis);
  CHECK(c.partition_ok);
  CHECK(c.witnesses_ok);
  CHECK(c.C_threshold_holds);
  CHECK(c.union_bound_holds);
  // stopping rule, recomputed by hand: M_s(C)^q <= |C|^p for threshold p/q
  if (!r.C.empty()) {
    const Rat M = oracle::energy_uniform('M', r.C.elements(), r.s, oracle::identity());
    CHECK(M == c.M_C);
    const Rat& e = r.threshold_exponent;
    CHECK(ipow(M, to_ulong(e.get_den())) <= ipow(Rat(static_cast<long>(r.C.size())), to_ulong(e.get_num())));
  }
}

}  // namespace

TEST_CASE("default k") {
  CHECK(default_k(2, Rat(4)) == 1);
  CHECK(default_k(3, Rat(4)) == 1);
  CHECK(default_k(1000, Rat(4)) >= 1);
  CHECK(default_k(1u << 16, Rat(1)) == 4);
}

TEST_CASE("geometric progression becomes one piece") {
  DecomposeConfig cfg;
  cfg.tau = 1;
  cfg.k = 2;
  const GroundSet A{1, 2, 4, 8, 16};
  const auto r = decompose(A, 2, id2, cfg);
  CHECK(r.B == A);
  CHECK(r.C.empty());
  REQUIRE(r.pieces.size() == 1);
  CHECK(r.pieces[0].t == 1);
  check_invariants(r, id2);
  const auto c = certify(r, id2);
  CHECK(c.E_B == oracle::energy_uniform('E', A.elements(), 2, oracle::identity()));
  CHECK(c.exponent_E_B.has_value());
  CHECK_FALSE(c.M_phi_B.has_value());
}

TEST_CASE("geometric progression already meets the default threshold") {
  // M_2 = 85 <= 5^3
  const GroundSet A{1, 2, 4, 8, 16};
  CHECK(oracle::energy_uniform('M', A.elements(), 2, oracle::identity()) == 85);
  DecomposeConfig cfg;
  cfg.tau = 1;
  const auto r = decompose(A, 2, id2, cfg);
  CHECK(r.C == A);
  CHECK(r.B.empty());
}

TEST_CASE("unstructured primes stay in C") {
  const GroundSet A{3, 5, 7, 11, 13};
  DecomposeConfig cfg;
  cfg.k = 1;
  const auto r = decompose(A, 2, id2, cfg);
  CHECK(r.C == A);
  CHECK(r.B.empty());
  const auto c = certify(r, id2);
  CHECK(c.M_C == 45);
  CHECK(c.M_C <= 125);
  CHECK(c.C_threshold_holds);
  CHECK(c.E_B == 0);
  CHECK(c.union_bound == 0);
  check_invariants(r, id2);
}

TEST_CASE("singletons") {
  const auto r = decompose(GroundSet{9}, 2, id2);
  CHECK(r.C == GroundSet{9});
  CHECK(certify(r, id2).M_C == 1);
  CHECK_THROWS_AS(decompose(GroundSet{}, 2, id2), Error);
  DecomposeConfig bad;
  bad.tau = 0;
  CHECK_THROWS_AS(decompose(GroundSet{1, 2}, 2, id2, bad), Error);
}

TEST_CASE("rational inputs are dilated") {
  const GroundSet A(std::vector<Rat>{make_rat(1, 2), Rat(1), make_rat(3, 2), Rat(2), Rat(4), Rat(8)});
  DecomposeConfig cfg;
  cfg.k = 2;
  cfg.tau = 1;
  const auto r = decompose(A, 2, id2, cfg);
  CHECK(r.dilation == 2);
  check_invariants(r, id2);
}

TEST_CASE("zero and negatives") {
  const GroundSet A{-8, -4, -2, 0, 1, 2, 4, 8};
  DecomposeConfig cfg;
  cfg.k = 2;
  const auto r = decompose(A, 2, id2, cfg);
  check_invariants(r, id2);
}

TEST_CASE("random decompositions keep their certificates") {
  SplitMix64 rng(51);
  const auto primes = first_primes(20);
  for (int it = 0; it < 12; ++it) {
    std::vector<Int> xs;
    for (long j = 0; j < 6; ++j) xs.push_back(ipow(Int(2), static_cast<unsigned long>(j)));
    for (int k = 0; k < 4; ++k) xs.push_back(primes[rng.below(primes.size())]);
    const auto A = GroundSet::from_ints(xs);
    DecomposeConfig cfg;
    cfg.tau = static_cast<unsigned>(rng.between(1, 2));
    cfg.threshold_exponent = make_rat(7, 3);
    cfg.finder = rng.below(2) ? Finder::exact_qc : Finder::greedy_fiber;
    const auto phis = PolyVec::uniform(PolyQ::from_ints({rng.between(1, 2), 1}), 2);
    const auto r = decompose(A, 2, phis, cfg);
    check_invariants(r, phis);
    const auto c = certify(r, phis);
    REQUIRE(c.M_phi_B.has_value());
  }
}

TEST_CASE("sign and root reduction") {
  const auto phis = PolyVec::uniform(PolyQ::from_ints({1, 1}), 2);
  const auto n = negative_reduction(GroundSet{-2, -1, 0, 1, 2}, phis);
  CHECK(n.A4 == GroundSet{0});
  CHECK(n.A3.contains(Rat(-1)));
  CHECK(n.A3.size() <= 2 * 2 * 1);
  CHECK(n.A1.unite(n.A2).unite(n.A3).unite(n.A4) == GroundSet{-2, -1, 0, 1, 2});
  for (const auto& a : n.A1) CHECK(a > 0);
  for (const auto& a : n.A2) CHECK(a < 0);
  CHECK(n.A2_reflected == n.A2.negated());
  CHECK(n.phis_reflected[0](Rat(3)) == -2);
  const auto plain = negative_reduction(GroundSet{3, 5, 9}, phis);
  CHECK(plain.A1 == GroundSet{3, 5, 9});
  CHECK(plain.A2.empty());
  CHECK(plain.A3.empty());
  CHECK(plain.A4.empty());
  CHECK(negative_reduction(GroundSet{0}, phis).A4 == GroundSet{0});
}
