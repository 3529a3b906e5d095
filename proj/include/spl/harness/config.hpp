#pragma once

#include "spl/core/rational.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace spl {

/// key = value text; '#' starts a comment. Unknown keys are rejected so that
/// a typo cannot silently fall back to a default.
class ExperimentConfig {
public:
  ExperimentConfig();

  static ExperimentConfig parse(const std::string& text);
  static ExperimentConfig load(const std::string& path);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string get(const std::string& key) const;
  long get_long(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  bool get_bool(const std::string& key) const;
  std::vector<std::string> get_list(const std::string& key) const;

  std::uint64_t seed() const { return get_u64("seed"); }
  unsigned workers() const { return static_cast<unsigned>(get_long("workers")); }
  bool deterministic() const { return get_bool("deterministic"); }
  /// Criteria selected by `checks` (all of 1..13 for "all", none when empty).
  std::set<int> selected_checks() const;

  /// Canonical text form, sorted by key.
  std::string str() const;

  static const std::vector<std::string>& check_names();

private:
  std::map<std::string, std::string> values_;
};

/// Index 1..13 of a criterion name or number; throws on junk.
int parse_check(const std::string& s);

}  // namespace spl
