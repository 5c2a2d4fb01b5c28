#include "qda/ratpoly/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qda {

RealRoot::RealRoot(Polynomial squarefree, Rational lo, Rational hi)
    : poly_(std::move(squarefree)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("RealRoot: empty isolating interval");
  if (lo_ == hi_ && poly_(lo_) != 0) throw std::invalid_argument("RealRoot: point is not a root");
  if (lo_ != hi_ && (poly_(lo_) == 0 || poly_(hi_) == 0))
    throw std::invalid_argument("RealRoot: open isolating interval has a root at an endpoint");
}

RealRoot RealRoot::rational(const Rational& x) { return RealRoot(Polynomial{-x, Rational(1)}, x, x); }

Interval RealRoot::interval() const {
  if (is_rational()) return Interval::point(lo_);
  return Interval::open(lo_, hi_);
}

double RealRoot::approx() const { return to_double(midpoint()); }

RealRoot RealRoot::bisected() const {
  if (is_rational()) return *this;
  Rational mid = midpoint();
  if (poly_(mid) == 0) return RealRoot(poly_, mid, mid);
  // The root is simple, so the polynomial changes sign across it.
  if (sign(poly_(lo_)) != sign(poly_(mid))) return RealRoot(poly_, lo_, mid);
  return RealRoot(poly_, mid, hi_);
}

RealRoot RealRoot::refined(const Rational& width) const {
  RealRoot r = *this;
  while (r.hi_ - r.lo_ >= width && !r.is_rational()) r = r.bisected();
  return r;
}

int RealRoot::sign_of(const Polynomial& g) const {
  if (g.is_zero()) return 0;
  if (is_rational()) return sign(g(lo_));
  if (g.is_constant()) return sign(g[0]);
  Polynomial h = gcd(poly_, g);
  if (h.degree() > 0 && sign(h(lo_)) != sign(h(hi_))) return 0;
  RealRoot r = *this;
  SturmSequence sg(g);
  for (;;) {
    if (r.is_rational()) return sign(g(r.lo_));
    if (g(r.lo_) != 0 && g(r.hi_) != 0 && sg.count_open(r.lo_, r.hi_) == 0) return sign(g(r.lo_));
    r = r.bisected();
  }
}

int RealRoot::compare(const Rational& x) const {
  if (is_rational()) return lo_ < x ? -1 : (lo_ > x ? 1 : 0);
  if (x <= lo_) return 1;
  if (x >= hi_) return -1;
  Rational v = poly_(x);
  if (v == 0) return 0;
  return sign(v) == sign(poly_(lo_)) ? 1 : -1;
}

int compare(const RealRoot& x, const RealRoot& y) {
  if (x.is_rational()) return -y.compare(x.lower());
  if (y.is_rational()) return x.compare(y.lower());
  RealRoot a = x;
  RealRoot b = y;
  const bool may_be_equal = a.sign_of(b.polynomial()) == 0;
  for (int iter = 0; iter < 100000; ++iter) {
    if (a.upper() <= b.lower()) return -1;
    if (b.upper() <= a.lower()) return 1;
    if (a.is_rational()) return -b.compare(a.lower());
    if (b.is_rational()) return a.compare(b.lower());
    // a is a root of b's polynomial, which has a single root inside b's
    // interval; once a's interval sits inside b's, they coincide.
    if (may_be_equal && b.lower() <= a.lower() && a.upper() <= b.upper()) return 0;
    if (a.upper() - a.lower() >= b.upper() - b.lower())
      a = a.bisected();
    else
      b = b.bisected();
  }
  throw std::logic_error("compare(RealRoot): refinement did not terminate");
}

Range enclose(const Polynomial& g, const RealRoot& root, const Rational& width) {
  RealRoot r = root;
  for (int iter = 0; iter < 4000; ++iter) {
    Range out = eval(g, r.range());
    if (out.width() < width || r.is_rational()) return out;
    r = r.bisected();
  }
  throw std::logic_error("enclose: refinement did not converge");
}

Rational root_bound(const Polynomial& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m = 0;
  const Rational lc = p.leading();
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, qda::abs(Rational(p[k] / lc)));
  Rational bound = m + 1;
  Rational pw = 1;
  while (pw < bound) pw *= 2;
  return pw;
}

namespace {

void isolate_into(const Polynomial& f, const SturmSequence& s, const Rational& lo, const Rational& hi,
                  std::vector<RealRoot>& out) {
  std::size_t n = s.count_open(lo, hi);
  if (n == 0) return;
  if (n == 1 && f(lo) != 0 && f(hi) != 0) {
    out.emplace_back(f, lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  isolate_into(f, s, lo, mid, out);
  if (f(mid) == 0) out.emplace_back(f, mid, mid);
  isolate_into(f, s, mid, hi, out);
}

bool overlaps(const RealRoot& a, const RealRoot& b) {
  // a precedes b in the sort; open ends never contain their endpoints.
  if (a.is_rational() && b.is_rational()) return false;
  return b.lower() < a.upper() || (a.is_rational() && b.lower() < a.lower()) ||
         (b.is_rational() && b.lower() < a.upper() && b.lower() > a.lower());
}

}  // namespace

std::vector<RealRoot> isolate_squarefree(const Polynomial& squarefree) {
  std::vector<RealRoot> out;
  if (squarefree.degree() <= 0) return out;
  SturmSequence s(squarefree);
  Rational bound = root_bound(squarefree);
  isolate_into(squarefree, s, -bound, bound, out);
  return out;
}

MultiplicityVector isolate_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("isolate_roots of the zero polynomial");
  MultiplicityVector entries;
  for (const auto& [factor, mult] : squarefree_decomposition(p))
    for (auto& r : isolate_squarefree(factor)) entries.push_back({std::move(r), mult});

  auto by_lower = [](const RootEntry& x, const RootEntry& y) {
    if (x.root.lower() != y.root.lower()) return x.root.lower() < y.root.lower();
    return x.root.upper() < y.root.upper();
  };
  for (;;) {
    std::sort(entries.begin(), entries.end(), by_lower);
    bool changed = false;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      RealRoot& a = entries[i].root;
      RealRoot& b = entries[i + 1].root;
      if (!overlaps(a, b)) continue;
      if (a.upper() - a.lower() >= b.upper() - b.lower())
        a = a.bisected();
      else
        b = b.bisected();
      changed = true;
    }
    if (!changed) break;
  }
  return entries;
}

}  // namespace qda
