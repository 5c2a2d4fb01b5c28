#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qda/ratpoly/rational.hpp"

namespace qda {

/// Dense univariate polynomial over the rationals, coefficients stored
/// low-to-high. The leading coefficient is nonzero unless the polynomial is
/// zero, in which case the coefficient list is empty and degree() is -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int k);
  static Polynomial x() { return monomial(Rational(1), 1); }
  /// Monic polynomial with the given roots, repeated roots listed repeatedly.
  static Polynomial from_roots(std::span<const Rational> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^k; zero outside the stored range.
  Rational operator[](int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Leading coefficient (0 for the zero polynomial).
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  Polynomial monic() const;
  /// p(lambda * x).
  Polynomial scaled_argument(const Rational& lambda) const;
  /// p(-x).
  Polynomial negated_argument() const { return scaled_argument(Rational(-1)); }
  /// x^deg p(1/x).
  Polynomial reversed() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& k);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& k) { return lhs *= k; }
  friend Polynomial operator*(const Rational& k, Polynomial rhs) { return rhs *= k; }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws std::domain_error on division by zero.
DivMod divmod(const Polynomial& num, const Polynomial& den);

Rational eval(const Polynomial& p, const Rational& x);
Polynomial derivative(const Polynomial& p);
Polynomial pow(Polynomial base, unsigned exponent);
/// p(q(x)).
Polynomial compose(const Polynomial& p, const Polynomial& q);

/// Monic greatest common divisor. Not both arguments may be zero.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Exact quotient; throws std::domain_error if `den` does not divide `num`.
Polynomial exact_div(const Polynomial& num, const Polynomial& den);

struct SquarefreeFactor {
  Polynomial factor;  // monic, square-free
  unsigned multiplicity;
  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm: p = lc(p) * prod factor_i^mult_i with pairwise coprime
/// square-free monic factors, sorted by multiplicity. Empty for constants.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

/// Monic product of the distinct irreducible factors of p.
Polynomial squarefree_part(const Polynomial& p);

/// Integer multiple of p with coprime integer coefficients and a positive
/// leading coefficient (content stripped). Zero maps to zero.
Polynomial primitive_part(const Polynomial& p);

/// Determinant of a square matrix by exact Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Sylvester matrix of p and q (deg q rows of p, deg p rows of q).
std::vector<std::vector<Rational>> sylvester_matrix(const Polynomial& p, const Polynomial& q);

/// Res(p, q) as the determinant of the Sylvester matrix.
Rational resultant(const Polynomial& p, const Polynomial& q);

/// Human-readable form such as "x^5 + x^4 - 2/5*x^3".
std::string to_string(const Polynomial& p, char var = 'x');
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace qda
