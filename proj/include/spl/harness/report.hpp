#pragma once

#include "spl/harness/battery.hpp"

#include <string>

namespace spl {

/// With `deterministic`, elapsed times are written as 0 and the timing block
/// is left out, so identical runs give identical bytes.
std::string report_json(const BatteryReport& r, bool deterministic);

/// Columns: check,instance,lhs,rhs,holds_or_ratio,elapsed_ms
std::string report_csv(const BatteryReport& r, bool deterministic);

/// One line per criterion: "criterion 3 cauchy-schwarz: PASS (...)".
std::string criteria_summary(const BatteryReport& r);

}  // namespace spl
