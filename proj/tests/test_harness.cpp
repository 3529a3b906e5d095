#include "oracles.hpp"

#include "spl/harness/battery.hpp"
#include "spl/harness/config.hpp"
#include "spl/harness/mve.hpp"
#include "spl/harness/report.hpp"

#include <doctest.h>

#include <atomic>
#include <set>

using namespace spl;

TEST_CASE("config parsing") {
  const auto cfg = ExperimentConfig::parse("seed = 7\n# comment\ncs.instances = 12  # trailing\n");
  CHECK(cfg.seed() == 7);
  CHECK(cfg.get_long("cs.instances") == 12);
  CHECK(cfg.get("checks") == "all");
  CHECK(cfg.selected_checks().size() == 13);
  CHECK_THROWS_AS(ExperimentConfig::parse("cs.instanses = 3"), Error);
  CHECK(ExperimentConfig::parse(cfg.str()).str() == cfg.str());

  CHECK(parse_check("cauchy-schwarz") == 3);
  CHECK(parse_check("13") == 13);
  CHECK_THROWS_AS(parse_check("14"), Error);
  CHECK_THROWS_AS(parse_check("nonsense"), Error);

  ExperimentConfig some;
  some.set("checks", "sidon, 1");
  CHECK(some.selected_checks() == std::set<int>{1, 10});
  some.set("checks", "");
  CHECK(some.selected_checks().empty());
  CHECK_THROWS_AS(some.set("checks", "holder,bogus"), Error);
}

TEST_CASE("empty selection gives an empty passing report") {
  ExperimentConfig cfg;
  cfg.set("checks", "");
  const auto r = run_battery(cfg);
  CHECK(r.criteria.empty());
  CHECK(r.records.empty());
  CHECK(r.exit_code() == 0);
  CHECK(report_csv(r, true) == "check,instance,lhs,rhs,holds_or_ratio,elapsed_ms\n");
}

TEST_CASE("Cauchy-Schwarz battery holds on every instance") {
  ExperimentConfig cfg;
  cfg.set("checks", "cauchy-schwarz");
  cfg.set("cs.instances", "1000");
  const auto r = run_battery(cfg);
  REQUIRE(r.criteria.size() == 1);
  CHECK(r.criteria[0].passed);
  CHECK(r.criteria[0].violations == 0);
  std::set<std::string> instances;
  for (const auto& rec : r.records) {
    CHECK_FALSE(rec.is_ratio);
    CHECK(rec.holds);
    instances.insert(rec.instance);
  }
  CHECK(instances.size() == 1000);
  CHECK(r.records.size() == 2000);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("reports are reproducible") {
  ExperimentConfig cfg;
  cfg.set("checks", "oracle,cauchy-schwarz,sidon");
  cfg.set("oracle.instances", "40");
  cfg.set("cs.instances", "60");
  cfg.set("sidon.instances", "10");
  cfg.set("seed", "9");
  const auto a = run_battery(cfg);
  const auto b = run_battery(cfg);
  cfg.set("workers", "3");
  const auto c = run_battery(cfg);
  CHECK(report_json(a, true) == report_json(b, true));
  CHECK(report_json(a, true) == report_json(c, true));
  CHECK(report_csv(a, true) == report_csv(c, true));
  cfg.set("seed", "10");
  CHECK(report_csv(run_battery(cfg), true) != report_csv(a, true));

  const auto csv = report_csv(a, true);
  CHECK(csv.rfind("check,instance,lhs,rhs,holds_or_ratio,elapsed_ms\n", 0) == 0);
  const auto summary = criteria_summary(a);
  CHECK(summary.find("cauchy-schwarz: PASS") != std::string::npos);
}

TEST_CASE("instance seeds and parallel loops") {
  std::set<std::uint64_t> seeds;
  for (int c = 1; c <= 13; ++c)
    for (std::size_t i = 0; i < 50; ++i) seeds.insert(instance_seed(42, c, i));
  CHECK(seeds.size() == 13 * 50);
  CHECK(instance_seed(42, 3, 5) == instance_seed(42, 3, 5));
  CHECK(instance_seed(42, 3, 5) != instance_seed(43, 3, 5));

  std::vector<int> hit(1000, 0);
  parallel_for(hit.size(), 4, [&](std::size_t i) { hit[i] += 1; });
  for (int h : hit) CHECK(h == 1);
  std::atomic<int> calls{0};
  parallel_for(0, 4, [&](std::size_t) { ++calls; });
  CHECK(calls == 0);
}

TEST_CASE("failed theorem records set the exit code") {
  BatteryReport r;
  CriterionResult c;
  c.id = 3;
  c.name = "cauchy-schwarz";
  c.passed = false;
  c.violations = 1;
  r.criteria.push_back(c);
  CHECK(r.failed());
  CHECK(r.exit_code() == 1);
  CHECK(criteria_summary(r).find("FAIL") != std::string::npos);
}

TEST_CASE("moment bound") {
  const GroundSet gp{1, 2, 4, 8};
  const auto m = check_mve(gp, WeightFn(), PolyQ::identity(), 2);
  CHECK(m.K == make_rat(7, 4));
  CHECK(m.energy == oracle::energy_uniform('E', gp.elements(), 2, oracle::identity()));
  CHECK(m.weight_moment == 16);
  CHECK(m.ratio_energy == m.energy / 16);
  CHECK(m.holds_with_C1 == (m.log2_ratio <= 0));

  const auto ap = GroundSet::from_ints(std::vector<long>{1, 2, 3, 4, 5, 6});
  const auto a = check_mve(ap, WeightFn(), PolyQ::identity(), 2);
  CHECK(a.K == make_rat(static_cast<long>(oracle::fold(ap.elements(), 2, true).size()), 6));
  CHECK(a.energy == oracle::energy_uniform('E', ap.elements(), 2, oracle::identity()));

  CHECK_THROWS_AS(check_mve(GroundSet{2}, WeightFn(), PolyQ::identity(), 2), Error);
}
