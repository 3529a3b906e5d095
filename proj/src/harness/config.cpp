#include "spl/harness/config.hpp"

#include "spl/core/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace spl {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

const std::map<std::string, std::string>& defaults() {
  static const std::map<std::string, std::string> d = {
      {"seed", "42"},
      {"workers", "1"},
      {"deterministic", "false"},
      {"checks", "all"},
      {"format", "json"},
      {"out", ""},
      {"oracle.instances", "500"},
      {"oracle.max_size", "10"},
      {"oracle.max_weight", "3"},
      {"oracle.max_degree", "3"},
      {"oracle.range", "12"},
      {"cs.instances", "1000"},
      {"cs.max_size", "8"},
      {"cs.range", "30"},
      {"holder.instances", "500"},
      {"holder.max_size", "4"},
      {"holder.range", "9"},
      {"chang.instances", "500"},
      {"chang.max_size", "7"},
      {"chang.range", "64"},
      {"ayay.instances", "200"},
      {"ayay.max_size", "8"},
      {"ayay.range", "60"},
      {"qc.instances", "200"},
      {"qc.max_size", "8"},
      {"qc.range", "60"},
      {"trut.instances", "300"},
      {"trut.max_size", "5"},
      {"trut.range", "30"},
      {"pr21.instances", "200"},
      {"pr21.max_size", "6"},
      {"pr21.range", "30"},
      {"sidon.instances", "100"},
      {"sidon.max_size", "12"},
      {"sidon.range", "40"},
      {"decompose.runs", "5"},
      {"decompose.finder", "exact-qc"},
      {"mve.min_length", "4"},
      {"mve.max_length", "16"},
      {"constructions.max_mn", "10"},
      {"constructions.bwex_max", "4"},
  };
  return d;
}

}  // namespace

ExperimentConfig::ExperimentConfig() : values_(defaults()) {}

const std::vector<std::string>& ExperimentConfig::check_names() {
  static const std::vector<std::string> names = {
      "oracle", "known-values", "cauchy-schwarz", "holder", "chang", "qc-energy-bound", "query-complexity",
      "averaging", "plunnecke", "sidon", "decompose", "mve", "constructions"};
  return names;
}

int parse_check(const std::string& s) {
  const auto& names = ExperimentConfig::check_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == s) return static_cast<int>(i) + 1;
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size() && v >= 1 && v <= static_cast<int>(names.size())) return v;
  } catch (const std::exception&) {
  }
  throw Error("unknown check: " + s);
}

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("config line " + std::to_string(lineno) + ": expected key = value");
    c.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) { return parse(read_file(path)); }

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  if (!defaults().count(key)) throw Error("unknown config key: " + key);
  values_[key] = value;
  // Validate eagerly so errors name the key.
  if (key == "checks") selected_checks();
  else if (key == "deterministic") get_bool(key);
  else if (key == "format") {
    if (value != "json" && value != "csv") throw Error("format must be json or csv");
  } else if (key == "seed") get_u64(key);
  else if (key != "out" && key != "decompose.finder") {
    if (get_long(key) < 0) throw Error("config key " + key + " must be nonnegative");
  }
}

std::string ExperimentConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw Error("unknown config key: " + key);
  return it->second;
}

long ExperimentConfig::get_long(const std::string& key) const {
  const auto v = get(key);
  try {
    std::size_t used = 0;
    const long r = std::stol(v, &used);
    if (used == v.size()) return r;
  } catch (const std::exception&) {
  }
  throw Error("config key " + key + ": not an integer: " + v);
}

std::uint64_t ExperimentConfig::get_u64(const std::string& key) const {
  const auto v = get(key);
  try {
    std::size_t used = 0;
    const auto r = std::stoull(v, &used);
    if (used == v.size() && !v.empty() && v[0] != '-') return r;
  } catch (const std::exception&) {
  }
  throw Error("config key " + key + ": not an unsigned integer: " + v);
}

bool ExperimentConfig::get_bool(const std::string& key) const {
  const auto v = get(key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error("config key " + key + ": not a boolean: " + v);
}

std::vector<std::string> ExperimentConfig::get_list(const std::string& key) const {
  std::vector<std::string> out;
  std::istringstream in(get(key));
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::set<int> ExperimentConfig::selected_checks() const {
  std::set<int> out;
  for (const auto& item : get_list("checks")) {
    if (item == "all") {
      for (int i = 1; i <= static_cast<int>(check_names().size()); ++i) out.insert(i);
    } else {
      out.insert(parse_check(item));
    }
  }
  return out;
}

std::string ExperimentConfig::str() const {
  std::string out;
  for (const auto& [k, v] : values_) out += k + " = " + v + "\n";
  return out;
}

}  // namespace spl
