#include "qda/ratpoly/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qda {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("monomial: negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Rational> roots) {
  Polynomial p = constant(Rational(1));
  for (const Rational& r : roots) p *= Polynomial{-r, Rational(1)};
  return p;
}

void Polynomial::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator[](int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  Rational inv = 1 / leading();
  r *= inv;
  return r;
}

Polynomial Polynomial::scaled_argument(const Rational& lambda) const {
  std::vector<Rational> v = coeffs_;
  Rational power = 1;
  for (auto& c : v) {
    c *= power;
    power *= lambda;
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::reversed() const {
  std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& k) {
  for (auto& c : coeffs_) c *= k;
  normalize();
  return *this;
}

DivMod divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = num.coefficients();
  const int dn = den.degree();
  const int nn = num.degree();
  if (nn < dn) return {Polynomial(), num};
  std::vector<Rational> quo(static_cast<std::size_t>(nn - dn) + 1);
  const Rational inv_lead = 1 / den.leading();
  const auto& dc = den.coefficients();
  for (int k = nn - dn; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dn)] * inv_lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(k + j)] -= q * dc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dn));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Rational eval(const Polynomial& p, const Rational& x) { return p(x); }

Polynomial derivative(const Polynomial& p) {
  if (p.degree() <= 0) return Polynomial();
  std::vector<Rational> v(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) v[static_cast<std::size_t>(k - 1)] = p[k] * k;
  return Polynomial(std::move(v));
}

Polynomial pow(Polynomial base, unsigned exponent) {
  Polynomial result = Polynomial::constant(Rational(1));
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
  Polynomial acc;
  for (int k = p.degree(); k >= 0; --k) {
    acc *= q;
    acc += Polynomial::constant(p[k]);
  }
  return acc;
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Polynomial a = primitive_part(p);
  Polynomial b = primitive_part(q);
  while (!b.is_zero()) {
    Polynomial r = primitive_part(divmod(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
  DivMod qr = divmod(num, den);
  if (!qr.remainder.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return qr.quotient;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  Polynomial f = p.monic();
  Polynomial df = derivative(f);
  Polynomial a = gcd(f, df);
  Polynomial b = exact_div(f, a);
  Polynomial c = exact_div(df, a);
  Polynomial d = c - derivative(b);
  unsigned i = 1;
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - derivative(b);
    ++i;
  }
  return out;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Polynomial::constant(Rational(1));
  return exact_div(p.monic(), gcd(p, derivative(p)));
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  std::vector<Integer> ints;
  ints.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (sgn(ints.back()) < 0) content = -content;
  std::vector<Rational> v;
  v.reserve(ints.size());
  for (auto& i : ints) v.emplace_back(Integer(i / content));
  return Polynomial(std::move(v));
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = 1 / m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> sylvester_matrix(const Polynomial& p, const Polynomial& q) {
  const int m = p.degree();
  const int n = q.degree();
  if (m < 0 || n < 0) throw std::domain_error("sylvester_matrix of a zero polynomial");
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  // Coefficients are laid out from the leading one.
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = p[m - k];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + k)] = q[n - k];
  return s;
}

Rational resultant(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Rational(0);
  if (p.degree() == 0 && q.degree() == 0) return Rational(1);
  return determinant(sylvester_matrix(p, q));
}

std::string to_string(const Polynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational mag = abs(c);
    if (k == 0 || mag != 1) {
      os << mag.get_str();
      if (k > 0) os << "*";
    }
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace qda
