#include "spl/harness/report.hpp"

#include <json.hpp>

#include <sstream>

namespace spl {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json record_json(const Record& r, bool deterministic) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["instance"] = r.instance;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  if (r.is_ratio) j["ratio"] = r.ratio;
  else j["holds"] = r.holds;
  j["elapsed_ms"] = deterministic ? 0.0 : r.elapsed_ms;
  return j;
}

}  // namespace

std::string report_json(const BatteryReport& r, bool deterministic) {
  nlohmann::ordered_json j;
  j["seed"] = r.seed;
  j["status"] = r.failed() ? "FAILED" : "OK";
  auto crit = nlohmann::ordered_json::array();
  std::size_t theorem = 0, violations = 0, ratios = 0;
  for (const auto& c : r.criteria) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["instances"] = c.instances;
    e["violations"] = c.violations;
    e["detail"] = c.detail;
    crit.push_back(e);
    violations += c.violations;
  }
  j["criteria"] = crit;
  auto tt = nlohmann::ordered_json::array();
  auto rs = nlohmann::ordered_json::array();
  for (const auto& rec : r.records) {
    if (rec.is_ratio) {
      rs.push_back(record_json(rec, deterministic));
      ++ratios;
    } else {
      tt.push_back(record_json(rec, deterministic));
      ++theorem;
    }
  }
  j["theorem_tests"] = tt;
  j["ratios"] = rs;
  j["summary"] = {{"theorem_tests", theorem}, {"violations", violations}, {"ratios", ratios}};
  if (!deterministic) {
    nlohmann::ordered_json timing;
    for (const auto& c : r.criteria) timing[c.name] = c.elapsed_ms;
    j["timing"] = timing;
  }
  return j.dump(2) + "\n";
}

std::string report_csv(const BatteryReport& r, bool deterministic) {
  std::ostringstream o;
  o << "check,instance,lhs,rhs,holds_or_ratio,elapsed_ms\n";
  for (const auto& rec : r.records) {
    o << csv_field(rec.check) << ',' << csv_field(rec.instance) << ',' << csv_field(rec.lhs) << ','
      << csv_field(rec.rhs) << ',' << csv_field(rec.holds_or_ratio()) << ',';
    if (deterministic) o << 0;
    else o << rec.elapsed_ms;
    o << '\n';
  }
  return o.str();
}

std::string criteria_summary(const BatteryReport& r) {
  std::ostringstream o;
  for (const auto& c : r.criteria)
    o << "criterion " << c.id << " " << c.name << ": " << (c.passed ? "PASS" : "FAIL") << " (" << c.detail << ")\n";
  return o.str();
}

}  // namespace spl
