#include "oracles.hpp"

#include "spl/core/factor.hpp"
#include "spl/core/ground_set.hpp"
#include "spl/core/polynomial.hpp"
#include "spl/core/rng.hpp"
#include "spl/core/text_io.hpp"
#include "spl/core/weights.hpp"

#include <doctest.h>

#include <cmath>

using namespace spl;

TEST_CASE("rationals parse to lowest terms") {
  CHECK(parse_rat("10/4") == make_rat(5, 2));
  CHECK(parse_rat(" -7 ") == Rat(-7));
  CHECK(to_string(parse_rat("6/3")) == "2");
  CHECK(to_fraction_string(Rat(3)) == "3/1");
  CHECK_THROWS_WITH_AS(parse_rat("1/0"), doctest::Contains("zero denominator"), Error);
  CHECK_THROWS_AS(parse_rat("x"), Error);
}

TEST_CASE("root brackets enclose the root") {
  auto b = root_bracket(Rat(2), 2, 10);
  CHECK(b.lo * b.lo <= 2);
  CHECK(b.hi * b.hi >= 2);
  CHECK_FALSE(b.exact);
  auto e = root_bracket(make_rat(27, 8), 3, 5);
  CHECK(e.exact);
  CHECK(e.lo == make_rat(3, 2));
}

TEST_CASE("log brackets") {
  for (long n : {1L, 2L, 3L, 10L, 1000L}) {
    auto b = ln_bracket(Rat(n), 40);
    CHECK(b.lo <= b.hi);
    CHECK(b.lo.get_d() <= std::log(double(n)) + 1e-9);
    CHECK(b.hi.get_d() >= std::log(double(n)) - 1e-9);
  }
  auto h = ln_bracket(make_rat(1, 8), 40);
  CHECK(h.hi.get_d() == doctest::Approx(-3 * std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("sum of roots comparison") {
  // (sqrt 2 + sqrt 8)^2 = 18
  CHECK(compare_power_of_root_sum(Rat(18), Rat(1), {Rat(2), Rat(8)}, 2) == Decision::holds);
  CHECK(compare_power_of_root_sum(make_rat(181, 10), Rat(1), {Rat(2), Rat(8)}, 2) == Decision::fails);
  CHECK(compare_power_of_root_sum(Rat(17), Rat(1), {Rat(2), Rat(8)}, 2) == Decision::holds);
}

TEST_CASE("polynomial evaluation") {
  const auto sq = PolyQ::from_ints({0, 0, 1});
  CHECK(sq(Rat(3)) == 9);
  CHECK(PolyQ()(Rat(7)) == 0);
  CHECK(PolyQ::from_ints({1, 2})(make_rat(1, 2)) == 2);
  CHECK(PolyQ::from_ints({0, 0, 0}).is_zero());
  CHECK(PolyQ::from_ints({1, 0, -2}).degree() == 2);
}

TEST_CASE("Horner agrees with the expanded sum") {
  SplitMix64 rng(7);
  for (int it = 0; it < 200; ++it) {
    std::vector<long> c(rng.between(1, 6));
    for (auto& x : c) x = rng.between(-9, 9);
    const auto p = PolyQ::from_ints(c);
    const Rat x = make_rat(rng.between(-20, 20), rng.between(1, 7));
    CHECK(p.eval(x) == p.eval_naive(x));
    CHECK(p.eval(x) == oracle::poly(c, x));
  }
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(PolyQ::from_ints({-1, 0, 1})) == GroundSet{-1, 1});
  CHECK(rational_roots(PolyQ::from_ints({1, 0, 1})).empty());
  CHECK(rational_roots(PolyQ::from_ints({0, -1, 2})) == GroundSet(std::vector<Rat>{Rat(0), make_rat(1, 2)}));
  CHECK_THROWS_WITH_AS(rational_roots(PolyQ()), doctest::Contains("identically zero"), Error);
}

TEST_CASE("rational roots are exact zeros and nothing is missed") {
  SplitMix64 rng(11);
  for (int it = 0; it < 100; ++it) {
    // a product of random linear factors times x^2 + 1
    PolyQ p = PolyQ::from_ints({1, 0, 1});
    std::set<Rat> want;
    for (long k = rng.between(0, 3); k > 0; --k) {
      const long a = rng.between(1, 4), b = rng.between(-6, 6);
      p = p * PolyQ::from_ints({b, a});
      want.insert(make_rat(-b, a));
    }
    const auto roots = rational_roots(p);
    CHECK(roots.size() == want.size());
    for (const auto& r : roots) {
      CHECK(p(r) == 0);
      CHECK(want.count(r) == 1);
    }
  }
}

TEST_CASE("sign intervals") {
  CHECK(sign_intervals(PolyQ::from_ints({-1, 0, 1})).size() == 4);
  CHECK(sign_intervals(PolyQ::identity()).size() == 2);
  CHECK(sign_intervals(PolyQ::from_ints({1, 0, 1})).size() == 2);
  CHECK_THROWS_AS(sign_intervals(PolyQ()), Error);
  // x^2 - 2 has irrational roots; 0 and the two roots split the line into 4
  const auto iv = sign_intervals(PolyQ::from_ints({-2, 0, 1}));
  REQUIRE(iv.size() == 4);
  CHECK(iv[0].right.has_value());
  CHECK_FALSE(iv[0].right->exact);
}

TEST_CASE("sampled points carry the declared signs") {
  SplitMix64 rng(3);
  const std::vector<std::vector<long>> polys = {{-1, 0, 1}, {-2, 0, 1}, {6, -5, 1}, {1, 0, 1}, {0, -1, 0, 1}, {3}};
  for (const auto& c : polys) {
    const auto p = PolyQ::from_ints(c);
    const auto iv = sign_intervals(p);
    for (const auto& I : iv) {
      CHECK(I.contains(I.sample));
      int hits = 0;
      for (int k = 0; k < 2000 && hits < 100; ++k) {
        const Rat x = make_rat(rng.between(-4000, 4000), rng.between(1, 400));
        if (!I.contains(x)) continue;
        ++hits;
        CHECK(sign(x) == I.sign_x);
        CHECK(sign(p(x)) == I.sign_p);
      }
    }
    // every nonzero non-root point falls in exactly one interval
    for (int k = 0; k < 200; ++k) {
      const Rat x = make_rat(rng.between(-300, 300), rng.between(1, 30));
      if (x == 0 || p(x) == 0) continue;
      int n = 0;
      for (const auto& I : iv) n += I.contains(x);
      CHECK(n == 1);
    }
  }
}

TEST_CASE("common sign interval") {
  const auto p = PolyQ::from_ints({-1, 0, 1});
  CHECK(common_sign_interval(GroundSet{2, 3, 7}, p).has_value());
  CHECK_FALSE(common_sign_interval(GroundSet{-2, 3}, p).has_value());
}

TEST_CASE("ground sets are sorted and duplicate free") {
  GroundSet A = GroundSet::from_ints(std::vector<long>{5, 1, 3, 1});
  CHECK(A.str() == "{1, 3, 5}");
  CHECK(A.contains(Rat(3)));
  CHECK(A.unite(GroundSet{2}).size() == 4);
  CHECK(A.minus(GroundSet{1}) == GroundSet{3, 5});
  CHECK(A.scaled(Rat(2)) == GroundSet{2, 6, 10});
  CHECK(A.negated() == GroundSet{-5, -3, -1});
  CHECK_THROWS_AS(A.index_of(Rat(4)), Error);
}

TEST_CASE("text forms round trip") {
  const auto A = parse_set("{1, 2, 5/3, 2}");
  CHECK(A.size() == 3);
  CHECK(parse_set(A.str()) == A);
  const auto p = parse_poly("[1, 0, -2]");
  CHECK(p(Rat(2)) == -7);
  CHECK(parse_poly(p.str()) == p);
  const auto v = parse_polys("[0, 1]\n", 2);
  CHECK(v.size() == 4);
  CHECK(v.all_equal());
  const auto w = parse_weights("{1: 2, 5/3: 1}");
  CHECK(w(Rat(1)) == 2);
  CHECK(w(Rat(4)) == 0);
  CHECK_THROWS_AS(parse_set("{1, x}"), Error);
}

TEST_CASE("weights") {
  CHECK(WeightFn::unit()(Rat(99)) == 1);
  WeightFn w({{Rat(1), Rat(2)}, {Rat(3), Rat(1)}});
  CHECK(w.sum_squares(GroundSet{1, 3}) == 5);
  CHECK_NOTHROW(w.check_support(GroundSet{1, 3, 4}));
  CHECK_THROWS_AS(w.check_support(GroundSet{1}), Error);
  CHECK(w.scaled(Rat(2))(Rat(6)) == 1);
  CHECK_THROWS_AS(WeightFn(std::map<Rat, Rat>{{Rat(1), Rat(-1)}}), Error);
}

TEST_CASE("factorisation and coprime bases") {
  CHECK(first_primes(5) == std::vector<Int>{2, 3, 5, 7, 11});
  CHECK(is_prime(Int(97)));
  CHECK_FALSE(is_prime(Int(91)));
  const auto f = factorize(Int(360));
  CHECK(f.at(2) == 3);
  CHECK(f.at(3) == 2);
  CHECK(f.at(5) == 1);
  CoprimeBasis B({Int(12), Int(18), Int(35)});
  for (const auto& b : B.elements())
    for (const auto& c : B.elements())
      if (b != c) CHECK(gcd(b, c) == 1);
  for (long n : {12L, 18L, 35L, 12L * 18, 35L * 35 * 12}) {
    const auto e = B.exponents(Int(n));
    Int back = 1;
    for (std::size_t i = 0; i < e.size(); ++i) back *= ipow(B.elements()[i], static_cast<unsigned long>(e[i]));
    CHECK(back == n);
  }
}

TEST_CASE("seeded generator is reproducible") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  SplitMix64 c(1);
  for (int i = 0; i < 1000; ++i) {
    const long x = c.between(-3, 3);
    CHECK(x >= -3);
    CHECK(x <= 3);
  }
}
