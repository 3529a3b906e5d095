#include "spl/core/weights.hpp"

namespace spl {

WeightFn WeightFn::unit() { return WeightFn(); }

WeightFn::WeightFn(std::map<Rat, Rat> table) : unit_(false), table_(std::move(table)) {
  for (const auto& [x, w] : table_)
    if (w < 0) throw Error("negative weight at " + to_string(x));
}

Rat WeightFn::operator()(const Rat& x) const {
  if (unit_) return Rat(1);
  auto it = table_.find(x);
  return it == table_.end() ? Rat(0) : it->second;
}

bool WeightFn::is_integral() const {
  if (unit_) return true;
  for (const auto& [x, w] : table_)
    if (!is_integer(w)) return false;
  return true;
}

Rat WeightFn::sum_squares(const GroundSet& A) const {
  Rat s = 0;
  for (const auto& a : A) {
    const Rat w = (*this)(a);
    s += w * w;
  }
  return s;
}

void WeightFn::check_support(const GroundSet& A) const {
  if (unit_) return;
  for (const auto& [x, w] : table_)
    if (w > 0 && !A.contains(x)) throw Error("weight support not inside the set: " + to_string(x));
}

WeightFn WeightFn::scaled(const Rat& lambda) const {
  if (unit_) return *this;
  std::map<Rat, Rat> t;
  for (const auto& [x, w] : table_) t.emplace(lambda * x, w);
  return WeightFn(std::move(t));
}

std::string WeightFn::str() const {
  if (unit_) return "unit";
  std::string s = "{";
  bool first = true;
  for (const auto& [x, w] : table_) {
    if (!first) s += ", ";
    first = false;
    s += to_string(x) + ": " + to_string(w);
  }
  return s + "}";
}

}  // namespace spl
