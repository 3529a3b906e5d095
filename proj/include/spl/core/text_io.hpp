#pragma once

#include "spl/core/ground_set.hpp"
#include "spl/core/polynomial.hpp"
#include "spl/core/weights.hpp"

#include <string>

namespace spl {

/// "{1, 2, 5/3}"; duplicates collapse.
GroundSet parse_set(std::string_view text);
/// "[1, 0, -2]" = 1 - 2x^2
PolyQ parse_poly(std::string_view text);
/// One "[...]" per nonblank line; a single line is repeated 2s times.
PolyVec parse_polys(std::string_view text, unsigned s);
/// "{1: 2, 5/3: 1}"
WeightFn parse_weights(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace spl
