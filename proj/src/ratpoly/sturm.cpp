#include "qda/ratpoly/sturm.hpp"

#include <stdexcept>
#include <utility>

namespace qda {

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly to_primitive_ints(const Polynomial& p) {
  Polynomial prim = primitive_part(p);
  IntPoly out;
  out.reserve(prim.coefficients().size());
  for (const auto& c : prim.coefficients()) out.push_back(c.get_num());
  return out;
}

// Divides by the positive content so signs are preserved.
void make_primitive(IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

// Negated remainder of f by g, scaled by a positive factor: |lc(g)|^(df-dg+1).
IntPoly sturm_remainder(IntPoly f, const IntPoly& g) {
  const std::size_t dg = g.size() - 1;
  Integer lc = g.back();
  Integer abs_lc = ::abs(lc);
  while (f.size() >= g.size()) {
    Integer lead = f.back();
    const std::size_t shift = f.size() - g.size();
    // f := |lc| * f - sign(lc) * lead * x^shift * g
    for (auto& c : f) c *= abs_lc;
    Integer factor = sgn(lc) > 0 ? lead : Integer(-lead);
    for (std::size_t j = 0; j <= dg; ++j) f[shift + j] -= factor * g[j];
    f.pop_back();
    trim(f);
    if (f.empty()) break;
  }
  for (auto& c : f) c = -c;
  make_primitive(f);
  return f;
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  build(p);
  if (chain_.back().size() > 1) {
    had_multiple_roots_ = true;
    build(squarefree_part(p));
  }
}

void SturmSequence::build(const Polynomial& p) {
  chain_.clear();
  chain_.push_back(to_primitive_ints(p));
  if (chain_.back().size() <= 1) return;
  IntPoly d = derivative(chain_.back());
  make_primitive(d);
  chain_.push_back(std::move(d));
  while (chain_.back().size() > 1) {
    IntPoly r = sturm_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.empty()) break;
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::squarefree_degree() const { return static_cast<int>(chain_.front().size()) - 1; }

int SturmSequence::sign_of(const IntPoly& p, const Rational& x) {
  // Sign of den^deg * p(num/den) via integer Horner.
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = 0;
  Integer den_power = 1;
  // acc = sum p_k num^k den^(deg-k), built from the top.
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * num + p[i] * den_power;
    den_power *= den;
  }
  return sgn(acc);
}

int SturmSequence::variations_at(const Rational& x) const {
  int last = 0;
  int count = 0;
  for (const auto& p : chain_) {
    int s = sign_of(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_plus_infinity() const {
  int last = 0;
  int count = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.back());
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_minus_infinity() const {
  int last = 0;
  int count = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.back());
    if ((p.size() - 1) % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::sign_at(const Rational& x) const { return sign_of(chain_.front(), x); }

std::size_t SturmSequence::count_open(const std::optional<Rational>& lo,
                                      const std::optional<Rational>& hi) const {
  if (lo && hi && !(*lo < *hi)) return 0;
  // V(a) - V(b) counts the roots in (a, b].
  int va = lo ? variations_at(*lo) : variations_at_minus_infinity();
  int vb = hi ? variations_at(*hi) : variations_at_plus_infinity();
  int n = va - vb;
  if (hi && sign_at(*hi) == 0) --n;
  return static_cast<std::size_t>(n);
}

std::size_t count_real_roots(const Polynomial& p, const Interval& iv) {
  iv.validate();
  SturmSequence s(p);
  if (iv.is_point()) return p(*iv.lower) == 0 ? 1 : 0;
  std::size_t n = s.count_open(iv.lower, iv.upper);
  if (iv.lower && iv.lower_closed && p(*iv.lower) == 0) ++n;
  if (iv.upper && iv.upper_closed && p(*iv.upper) == 0) ++n;
  return n;
}

RootCounts pos_neg_counts(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("pos_neg_counts of the zero polynomial");
  RootCounts rc;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    SturmSequence s(factor);
    rc.pos += mult * static_cast<unsigned>(s.count_open(Rational(0), std::nullopt));
    rc.neg += mult * static_cast<unsigned>(s.count_open(std::nullopt, Rational(0)));
    if (factor[0] == 0) rc.zero_mult += mult;
  }
  return rc;
}

}  // namespace qda
