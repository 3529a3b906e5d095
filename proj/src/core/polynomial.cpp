#include "spl/core/polynomial.hpp"

#include "spl/core/factor.hpp"

#include <algorithm>

namespace spl {

PolyQ::PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::constant(const Rat& c) { return PolyQ(std::vector<Rat>{c}); }
PolyQ PolyQ::identity() { return PolyQ(std::vector<Rat>{Rat(0), Rat(1)}); }

PolyQ PolyQ::monomial(const Rat& c, unsigned k) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return PolyQ(std::move(v));
}

PolyQ PolyQ::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return PolyQ(std::move(v));
}

Rat PolyQ::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat PolyQ::eval_naive(const Rat& x) const {
  Rat acc = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) acc += c_[k] * ipow(x, k);
  return acc;
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return PolyQ(std::move(v));
}

PolyQ PolyQ::operator-() const {
  std::vector<Rat> v = c_;
  for (auto& c : v) c = -c;
  return PolyQ(std::move(v));
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator*(const PolyQ& o) const {
  if (is_zero() || o.is_zero()) return PolyQ();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return PolyQ(std::move(v));
}

PolyQ PolyQ::operator*(const Rat& c) const {
  std::vector<Rat> v = c_;
  for (auto& x : v) x *= c;
  return PolyQ(std::move(v));
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rat> r = c_;
  const int dd = d.degree();
  if (degree() < dd) return {PolyQ(), *this};
  std::vector<Rat> q(static_cast<std::size_t>(degree() - dd + 1), Rat(0));
  for (int k = degree(); k >= dd; --k) {
    const Rat f = r[static_cast<std::size_t>(k)] / d.leading();
    q[static_cast<std::size_t>(k - dd)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(dd));
  return {PolyQ(std::move(q)), PolyQ(std::move(r))};
}

PolyQ PolyQ::derivative() const {
  if (c_.size() <= 1) return PolyQ();
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Rat(static_cast<long>(k));
  return PolyQ(std::move(v));
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading());
}

PolyQ PolyQ::scale_argument(const Rat& c) const {
  std::vector<Rat> v = c_;
  Rat f = 1;
  for (auto& x : v) {
    x *= f;
    f *= c;
  }
  return PolyQ(std::move(v));
}

std::string PolyQ::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += to_string(c_[i]);
  }
  return s + "]";
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

int sgn_eval(const PolyQ& p, const Rat& x) { return sgn(p.eval(x)); }

}  // namespace

GroundSet rational_roots(const PolyQ& p) {
  if (p.is_zero()) throw Error("identically zero");
  Int den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  std::vector<Int> a;
  for (const auto& c : p.coeffs()) a.push_back(Int(c * den));
  std::vector<Rat> roots;
  std::size_t shift = 0;
  while (a[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  if (a.size() - shift >= 2) {
    const auto num_divs = divisors(a[shift]);
    const auto den_divs = divisors(a.back());
    for (const auto& u : num_divs)
      for (const auto& v : den_divs)
        for (int sg : {1, -1}) {
          Rat x(Int(sg * u), v);
          x.canonicalize();
          if (p.eval(x) == 0) roots.push_back(x);
        }
  }
  return GroundSet(std::move(roots));
}

std::vector<PolyQ> sturm_sequence(const PolyQ& p) {
  std::vector<PolyQ> seq{p};
  if (p.degree() < 1) return seq;
  seq.push_back(p.derivative());
  while (!seq.back().is_constant()) {
    auto r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sturm_variations(const std::vector<PolyQ>& seq, const Rat& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sgn_eval(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int Breakpoint::compare(const Rat& x) const {
  if (exact) return x < value ? -1 : (x > value ? 1 : 0);
  Rat a = lo, b = hi;
  const int sa = sgn_eval(poly, a);
  while (a <= x && x <= b) {
    Rat m = (a + b) / 2;
    if (sgn_eval(poly, m) == sa) a = m;
    else b = m;
  }
  return x < a ? -1 : 1;
}

bool SignInterval::contains(const Rat& x) const {
  if (left && left->compare(x) <= 0) return false;
  if (right && right->compare(x) >= 0) return false;
  return true;
}

namespace {

std::string bp_str(const Breakpoint& b) {
  if (b.exact) return to_string(b.value);
  return "root in (" + to_string(b.lo) + ", " + to_string(b.hi) + ")";
}

Rat lower_of(const Breakpoint& b) { return b.exact ? b.value : b.lo; }
Rat upper_of(const Breakpoint& b) { return b.exact ? b.value : b.hi; }

void isolate(const std::vector<PolyQ>& seq, const Rat& a, const Rat& b, int va, int vb,
             std::vector<Breakpoint>& out) {
  const int count = va - vb;
  if (count == 0) return;
  if (count == 1) {
    Breakpoint bp;
    bp.exact = false;
    bp.lo = a;
    bp.hi = b;
    bp.poly = seq.front();
    out.push_back(bp);
    return;
  }
  const Rat m = (a + b) / 2;
  const int vm = sturm_variations(seq, m);
  isolate(seq, a, m, va, vm, out);
  isolate(seq, m, b, vm, vb, out);
}

void bisect_once(Breakpoint& bp) {
  const Rat m = (bp.lo + bp.hi) / 2;
  if (sgn_eval(bp.poly, m) == sgn_eval(bp.poly, bp.lo)) bp.lo = m;
  else bp.hi = m;
}

}  // namespace

std::string SignInterval::str() const {
  std::string l = left ? bp_str(*left) : "-inf";
  std::string r = right ? bp_str(*right) : "+inf";
  return "(" + l + ", " + r + ")";
}

std::vector<SignInterval> sign_intervals(const PolyQ& p) {
  if (p.is_zero()) throw Error("identically zero");
  std::vector<Breakpoint> points;
  GroundSet rat = p.degree() >= 1 ? rational_roots(p) : GroundSet();
  std::vector<Rat> exact_pts = rat.elements();
  if (!rat.contains(Rat(0))) exact_pts.emplace_back(0);
  std::sort(exact_pts.begin(), exact_pts.end());

  if (p.degree() >= 1) {
    PolyQ q = p.divmod(poly_gcd(p, p.derivative())).first;
    for (const auto& r : rat) q = q.divmod(PolyQ(std::vector<Rat>{-r, Rat(1)})).first;
    if (q.degree() >= 1) {
      Rat bound = 0;
      for (int k = 0; k < q.degree(); ++k) bound = std::max(bound, Rat(abs(q.coeff(static_cast<std::size_t>(k)) / q.leading())));
      bound += 1;
      const auto seq = sturm_sequence(q);
      std::vector<Breakpoint> irr;
      isolate(seq, -bound, bound, sturm_variations(seq, -bound), sturm_variations(seq, bound), irr);
      // Shrink brackets until they avoid the exact points and each other.
      bool again = true;
      while (again) {
        again = false;
        for (std::size_t i = 0; i < irr.size(); ++i) {
          bool bad = i + 1 < irr.size() && irr[i].hi >= irr[i + 1].lo;
          for (const auto& e : exact_pts) bad = bad || (irr[i].lo <= e && e <= irr[i].hi);
          if (bad) {
            bisect_once(irr[i]);
            if (i + 1 < irr.size()) bisect_once(irr[i + 1]);
            again = true;
          }
        }
      }
      points = std::move(irr);
    }
  }
  for (const auto& e : exact_pts) {
    Breakpoint bp;
    bp.value = e;
    points.push_back(bp);
  }
  std::sort(points.begin(), points.end(),
            [](const Breakpoint& a, const Breakpoint& b) { return lower_of(a) < lower_of(b); });

  std::vector<SignInterval> out;
  for (std::size_t i = 0; i <= points.size(); ++i) {
    SignInterval iv;
    if (i > 0) iv.left = points[i - 1];
    if (i < points.size()) iv.right = points[i];
    if (!iv.left) iv.sample = lower_of(*iv.right) - 1;
    else if (!iv.right) iv.sample = upper_of(*iv.left) + 1;
    else iv.sample = (upper_of(*iv.left) + lower_of(*iv.right)) / 2;
    iv.sign_x = sgn(iv.sample);
    iv.sign_p = sgn_eval(p, iv.sample);
    out.push_back(std::move(iv));
  }
  return out;
}

std::optional<std::size_t> common_sign_interval(const GroundSet& S, const PolyQ& p) {
  const auto ivs = sign_intervals(p);
  std::optional<std::size_t> found;
  for (const auto& x : S) {
    std::optional<std::size_t> here;
    for (std::size_t i = 0; i < ivs.size() && !here; ++i)
      if (ivs[i].contains(x)) here = i;
    if (!here || (found && *found != *here)) return std::nullopt;
    found = here;
  }
  if (!found && !ivs.empty()) found = 0;
  return found;
}

PolyVec::PolyVec(std::vector<PolyQ> polys) : polys_(std::move(polys)) {
  if (polys_.empty() || polys_.size() % 2 != 0)
    throw Error("polynomial vector must have even positive length, got " + std::to_string(polys_.size()));
}

PolyVec PolyVec::uniform(const PolyQ& p, unsigned s) {
  if (s == 0) throw Error("s must be positive");
  return PolyVec(std::vector<PolyQ>(2 * s, p));
}

int PolyVec::max_degree() const {
  int d = 0;
  for (const auto& p : polys_) d = std::max(d, p.degree());
  return d;
}

bool PolyVec::all_equal() const {
  return std::all_of(polys_.begin(), polys_.end(), [&](const PolyQ& p) { return p == polys_[0]; });
}

PolyVec PolyVec::reflected() const {
  std::vector<PolyQ> v;
  for (const auto& p : polys_) v.push_back(p.reflected());
  return PolyVec(std::move(v));
}

GroundSet PolyVec::rational_root_union() const {
  GroundSet out;
  for (const auto& p : polys_)
    if (!p.is_zero()) out = out.unite(rational_roots(p));
  return out;
}

}  // namespace spl
