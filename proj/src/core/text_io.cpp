#include "spl/core/text_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace spl {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view unwrap(std::string_view text, char open, char close) {
  auto s = strip(text);
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw Error(std::string("expected ") + open + "..." + close + ", got '" + std::string(text) + "'");
  return s.substr(1, s.size() - 2);
}

std::vector<std::string_view> split_commas(std::string_view body) {
  std::vector<std::string_view> out;
  if (strip(body).empty()) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      out.push_back(strip(body.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

GroundSet parse_set(std::string_view text) {
  std::vector<Rat> v;
  for (auto item : split_commas(unwrap(text, '{', '}'))) v.push_back(parse_rat(item));
  return GroundSet(std::move(v));
}

PolyQ parse_poly(std::string_view text) {
  std::vector<Rat> v;
  for (auto item : split_commas(unwrap(text, '[', ']'))) v.push_back(parse_rat(item));
  return PolyQ(std::move(v));
}

PolyVec parse_polys(std::string_view text, unsigned s) {
  std::vector<PolyQ> ps;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    ps.push_back(parse_poly(line));
  }
  if (ps.size() == 1) return PolyVec::uniform(ps[0], s);
  if (ps.size() != 2 * s)
    throw Error("expected 1 or " + std::to_string(2 * s) + " polynomials, got " + std::to_string(ps.size()));
  return PolyVec(std::move(ps));
}

WeightFn parse_weights(std::string_view text) {
  std::map<Rat, Rat> t;
  for (auto item : split_commas(unwrap(text, '{', '}'))) {
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw Error("weight entry needs 'x: w', got '" + std::string(item) + "'");
    t[parse_rat(item.substr(0, colon))] = parse_rat(item.substr(colon + 1));
  }
  return WeightFn(std::move(t));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace spl
