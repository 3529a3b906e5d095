#include "spl/constructions/families.hpp"
#include "spl/core/text_io.hpp"
#include "spl/decompose/decompose.hpp"
#include "spl/energy/energy.hpp"
#include "spl/harness/battery.hpp"
#include "spl/harness/mve.hpp"
#include "spl/harness/report.hpp"
#include "spl/padic/decoupling.hpp"
#include "spl/sidon/sidon.hpp"
#include "spl/structure/inverse.hpp"
#include "spl/structure/query.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace spl;
using json = nlohmann::ordered_json;

namespace {

struct Common {
  std::string config;
  std::uint64_t seed = 42;
  bool seed_set = false;
  std::string out;
  std::string format = "json";
};

std::string frac(const Rat& x) { return to_fraction_string(x); }

json set_json(const GroundSet& A) {
  json j = json::array();
  for (const auto& a : A) j.push_back(to_string(a));
  return j;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) std::cout << text;
  else write_file(c.out, text);
}

void emit(const Common& c, const json& j) { emit(c, j.dump(2) + "\n"); }

PolyQ poly_or_identity(const std::string& path) {
  return path.empty() ? PolyQ::identity() : parse_poly(read_file(path));
}

WeightFn weights_or_unit(const std::string& path) {
  return path.empty() ? WeightFn() : parse_weights(read_file(path));
}

json sidon_json(const SidonCertificate& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["s"] = c.s;
  j["phi"] = c.phi.str();
  j["subset"] = set_json(c.subset);
  j["size"] = c.subset.size();
  j["verified"] = c.verified;
  if (c.collision) {
    json a = json::array(), b = json::array();
    for (const auto& x : c.collision->first) a.push_back(to_string(x));
    for (const auto& x : c.collision->second) b.push_back(to_string(x));
    j["collision"] = {a, b};
  }
  if (c.context_energy) j["context_energy"] = frac(*c.context_energy);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact energies, decouplings and decompositions of finite sets"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--config", common.config, "key = value config file");
  app.add_option("--seed", common.seed, "random seed")->each([&](const std::string&) { common.seed_set = true; });
  app.add_option("--out", common.out, "output path (default stdout)");
  app.add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a set from a family");
  std::string family = "AP";
  FamilySpec spec;
  std::string start = "1", step = "1", base = "2", lambda = "1", cap;
  std::vector<std::string> part_files;
  gen_cmd->add_option("--family", family, "AP | GP | odd-times-powers | prime-products | dilate | union | random")
      ->required();
  gen_cmd->add_option("--m", spec.m);
  gen_cmd->add_option("--n", spec.n);
  gen_cmd->add_option("--N", spec.N);
  gen_cmd->add_option("--s", spec.s);
  gen_cmd->add_option("--P", spec.P);
  gen_cmd->add_option("--Q", spec.Q);
  gen_cmd->add_option("--start", start);
  gen_cmd->add_option("--step", step);
  gen_cmd->add_option("--base", base);
  gen_cmd->add_option("--lo", spec.lo);
  gen_cmd->add_option("--hi", spec.hi);
  gen_cmd->add_option("--lambda", lambda);
  gen_cmd->add_option("--cap", cap, "largest allowed |element|");
  gen_cmd->add_option("--sets", part_files, "input set files for dilate and union");

  // energy
  auto* energy_cmd = app.add_subcommand("energy", "exact E, M or J energy");
  std::string set_file, polys_file, poly_file, weights_file, kind_str = "E", method_str = "automatic";
  unsigned s = 2;
  energy_cmd->add_option("--set", set_file)->required();
  energy_cmd->add_option("--s", s);
  energy_cmd->add_option("--kind", kind_str)->check(CLI::IsMember({"E", "M", "J"}));
  energy_cmd->add_option("--polys", polys_file);
  energy_cmd->add_option("--weights", weights_file);
  energy_cmd->add_option("--method", method_str)->check(CLI::IsMember({"automatic", "oracle", "split"}));

  // chang
  auto* chang_cmd = app.add_subcommand("chang", "decoupling across p-adic fibers");
  std::string prime = "2", chang_kind = "add";
  bool certified = false;
  chang_cmd->add_option("--set", set_file)->required();
  chang_cmd->add_option("--s", s);
  chang_cmd->add_option("--poly", poly_file);
  chang_cmd->add_option("--p", prime);
  chang_cmd->add_option("--kind", chang_kind)->check(CLI::IsMember({"add", "mult"}));
  chang_cmd->add_option("--weights", weights_file);
  chang_cmd->add_flag("--interval-certified", certified, "reject sets outside one sign interval");

  // qc
  auto* qc_cmd = app.add_subcommand("qc", "query complexity");
  bool exact = false, greedy = false;
  std::size_t limit = 10;
  qc_cmd->add_option("--set", set_file)->required();
  qc_cmd->add_flag("--exact", exact);
  qc_cmd->add_flag("--greedy", greedy);
  qc_cmd->add_option("--limit", limit);

  // cover
  auto* cover_cmd = app.add_subcommand("cover", "greedy covering by dilates");
  std::string a_file, b_file;
  cover_cmd->add_option("--a", a_file)->required();
  cover_cmd->add_option("--b", b_file)->required();

  // sidon
  auto* sidon_cmd = app.add_subcommand("sidon", "Sidon subsets");
  std::string sidon_kind = "add", order = "ascending";
  bool sidon_exact = false, check_only = false;
  sidon_cmd->add_option("--set", set_file)->required();
  sidon_cmd->add_option("--s", s);
  sidon_cmd->add_option("--kind", sidon_kind)->check(CLI::IsMember({"add", "mult"}));
  sidon_cmd->add_option("--poly", poly_file);
  sidon_cmd->add_option("--order", order)->check(CLI::IsMember({"ascending", "descending", "shuffle"}));
  sidon_cmd->add_flag("--exact", sidon_exact, "largest Sidon subset by branch and bound");
  sidon_cmd->add_flag("--check", check_only, "test the whole set");

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "split A into B and C");
  std::string finder = "exact-qc", D = "4", threshold;
  unsigned tau = 2, k = 0;
  dec_cmd->add_option("--set", set_file)->required();
  dec_cmd->add_option("--s", s);
  dec_cmd->add_option("--polys", polys_file);
  dec_cmd->add_option("--finder", finder)->check(CLI::IsMember({"exact-qc", "greedy-fiber"}));
  dec_cmd->add_option("--D", D);
  dec_cmd->add_option("--tau", tau);
  dec_cmd->add_option("--k", k);
  dec_cmd->add_option("--threshold", threshold, "threshold exponent, default 2s - k");

  // moment bound
  auto* mve_cmd = app.add_subcommand("mve", "moment bound ratio");
  mve_cmd->add_option("--set", set_file)->required();
  mve_cmd->add_option("--s", s);
  mve_cmd->add_option("--poly", poly_file);
  mve_cmd->add_option("--weights", weights_file);

  // battery
  auto* bat_cmd = app.add_subcommand("battery", "run the verification battery");
  bool deterministic = false;
  unsigned workers = 0;
  bat_cmd->add_flag("--deterministic", deterministic, "zero elapsed times, drop timing");
  bat_cmd->add_option("--workers", workers);
  // accept the shared options after the subcommand too
  for (auto* sub : {gen_cmd, energy_cmd, chang_cmd, qc_cmd, cover_cmd, sidon_cmd, dec_cmd, mve_cmd, bat_cmd}) {
    sub->add_option("--out", common.out);
    sub->add_option("--format", common.format)->check(CLI::IsMember({"json", "csv"}));
  }
  bat_cmd->add_option("--config", common.config);
  bat_cmd->add_option("--seed", common.seed)->each([&](const std::string&) { common.seed_set = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*gen_cmd) {
      spec.family = parse_family(family);
      spec.start = parse_int(start);
      spec.step = parse_int(step);
      spec.base = parse_int(base);
      spec.lambda = parse_rat(lambda);
      spec.seed = common.seed;
      if (!cap.empty()) spec.cap = parse_int(cap);
      for (const auto& f : part_files) spec.parts.push_back(parse_set(read_file(f)));
      emit(common, gen(spec).str() + "\n");
      return 0;
    }
    if (*energy_cmd) {
      const GroundSet A = parse_set(read_file(set_file));
      const PolyVec phis = polys_file.empty() ? PolyVec::uniform(PolyQ::identity(), s)
                                              : parse_polys(read_file(polys_file), s);
      const WeightFn w = weights_or_unit(weights_file);
      const Method m = parse_method(method_str);
      EnergyReport r = kind_str == "E"   ? energy_E(A, w, phis, s, m)
                       : kind_str == "M" ? energy_M(A, w, phis, s, m)
                                         : energy_J(A, w, phis, s, m);
      json j;
      j["kind"] = to_string(r.kind);
      j["s"] = r.s;
      j["value"] = frac(r.value);
      j["method"] = to_string(r.method);
      j["weights"] = r.weights;
      j["polys"] = r.polys;
      j["elapsed_ms"] = r.elapsed_ms;
      emit(common, j);
      return 0;
    }
    if (*chang_cmd) {
      const GroundSet A = parse_set(read_file(set_file));
      const PolyQ phi = poly_or_identity(poly_file);
      const WeightFn w = weights_or_unit(weights_file);
      const Int p = parse_int(prime);
      const auto c = chang_kind == "add" ? check_chang_additive(A, w, phi, p, s)
                                         : check_chang_multiplicative(A, w, phi, p, s, certified);
      json j;
      j["lhs"] = frac(c.lhs_energy);
      j["constant"] = frac(c.constant_used);
      json fib = json::object();
      for (const auto& [n, e] : c.fiber_energies) fib[std::to_string(n)] = frac(e);
      j["fiber_energies"] = fib;
      j["rhs_lower_bracket"] = frac(c.rhs_bound);
      j["holds"] = c.holds;
      j["hypotheses_met"] = c.hypotheses_met;
      if (!c.note.empty()) j["note"] = c.note;
      emit(common, j);
      return c.holds ? 0 : 1;
    }
    if (*qc_cmd) {
      const GroundSet A = parse_set(read_file(set_file));
      const auto r = greedy && !exact ? query_complexity_greedy(A) : query_complexity_exact(A, limit);
      json j;
      j["method"] = greedy && !exact ? "greedy" : "exact";
      j["q"] = r.t;
      j["strategy"] = r.strategy.to_json();
      j["valid"] = replay(r.strategy, A).valid;
      emit(common, j);
      return 0;
    }
    if (*cover_cmd) {
      const GroundSet A = parse_set(read_file(a_file));
      const GroundSet B = parse_set(read_file(b_file));
      const auto r = greedy_cover(A, B);
      json j;
      j["S"] = set_json(r.S);
      j["C"] = frac(r.C);
      j["size_bound"] = to_string(r.size_bound);
      j["covers"] = r.covers;
      j["within_bound"] = r.within_bound == Decision::holds;
      emit(common, j);
      return r.covers && r.within_bound == Decision::holds ? 0 : 1;
    }
    if (*sidon_cmd) {
      const GroundSet A = parse_set(read_file(set_file));
      const PolyQ phi = poly_or_identity(poly_file);
      const SidonKind kind = parse_sidon_kind(sidon_kind);
      SidonCertificate c;
      if (check_only) c = is_sidon(A, s, phi, kind);
      else if (sidon_exact) c = max_sidon_exact(A, s, phi, kind);
      else {
        GreedyOptions opt;
        opt.order = parse_scan_order(order);
        opt.seed = common.seed;
        c = greedy_sidon_extract(A, s, phi, kind, opt);
      }
      emit(common, sidon_json(c));
      return 0;
    }
    if (*dec_cmd) {
      const GroundSet A = parse_set(read_file(set_file));
      const PolyVec phis = polys_file.empty() ? PolyVec::uniform(PolyQ::identity(), s)
                                              : parse_polys(read_file(polys_file), s);
      DecomposeConfig cfg;
      cfg.finder = parse_finder(finder);
      cfg.D = parse_rat(D);
      cfg.tau = tau;
      if (k > 0) cfg.k = k;
      if (!threshold.empty()) cfg.threshold_exponent = parse_rat(threshold);
      const auto r = decompose(A, s, phis, cfg);
      const auto c = certify(r, phis);
      json j;
      j["s"] = r.s;
      j["k"] = r.k;
      j["threshold_exponent"] = to_string(r.threshold_exponent);
      j["tau"] = r.tau;
      j["finder"] = to_string(r.finder);
      j["dilation"] = to_string(r.dilation);
      j["B"] = set_json(r.B);
      j["C"] = set_json(r.C);
      json pieces = json::array();
      for (const auto& p : r.pieces) pieces.push_back({{"set", set_json(p.set)}, {"t", p.t}, {"witness", p.witness.to_json()}});
      j["pieces"] = pieces;
      json cert;
      cert["E_B"] = frac(c.E_B);
      cert["M_C"] = frac(c.M_C);
      if (c.M_phi_B) cert["M_phi_B"] = frac(*c.M_phi_B);
      cert["C_threshold_holds"] = c.C_threshold_holds;
      cert["union_bound"] = frac(c.union_bound);
      cert["union_bound_holds"] = c.union_bound_holds;
      cert["partition_ok"] = c.partition_ok;
      cert["witnesses_ok"] = c.witnesses_ok;
      if (c.exponent_E_B) cert["exponent_E_B"] = *c.exponent_E_B;
      if (c.exponent_M_C) cert["exponent_M_C"] = *c.exponent_M_C;
      if (c.exponent_M_phi_B) cert["exponent_M_phi_B"] = *c.exponent_M_phi_B;
      j["certificates"] = cert;
      emit(common, j);
      const bool ok = c.C_threshold_holds && c.union_bound_holds && c.partition_ok && c.witnesses_ok;
      return ok ? 0 : 1;
    }
    if (*mve_cmd) {
      const GroundSet A = parse_set(read_file(set_file));
      const auto m = check_mve(A, weights_or_unit(weights_file), poly_or_identity(poly_file), s);
      json j;
      j["energy"] = frac(m.energy);
      j["K"] = frac(m.K);
      j["C"] = m.C;
      j["log2_bound"] = m.log2_bound;
      j["log2_ratio"] = m.log2_ratio;
      j["ratio_energy"] = frac(m.ratio_energy);
      j["holds_with_C1"] = m.holds_with_C1;
      emit(common, j);
      return 0;
    }
    if (*bat_cmd) {
      ExperimentConfig cfg = common.config.empty() ? ExperimentConfig() : ExperimentConfig::load(common.config);
      if (common.seed_set) cfg.set("seed", std::to_string(common.seed));
      if (workers > 0) cfg.set("workers", std::to_string(workers));
      if (deterministic) cfg.set("deterministic", "true");
      const std::string format = app.get_option("--format")->count() + bat_cmd->get_option("--format")->count() > 0
                                     ? common.format
                                     : cfg.get("format");
      if (common.out.empty()) common.out = cfg.get("out");
      const auto rep = run_battery(cfg);
      const std::string body = format == "csv" ? report_csv(rep, cfg.deterministic())
                                               : report_json(rep, cfg.deterministic());
      if (common.out.empty()) std::cout << body;
      else write_file(common.out, body);
      std::cerr << criteria_summary(rep);
      return rep.exit_code();
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
