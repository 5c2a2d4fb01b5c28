#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qda/ratpoly/polynomial.hpp"

namespace qda {

/// Signs of the coefficients of a monic-normalized polynomial, read from the
/// leading coefficient down to the constant term. Always begins with '+'.
class SignPattern {
 public:
  /// Accepts strings such as "++-+--"; throws std::invalid_argument.
  explicit SignPattern(std::string_view signs);

  int degree() const { return static_cast<int>(signs_.size()) - 1; }
  std::size_t size() const { return signs_.size(); }
  /// +1 or -1 for the sign at position i counted from the leading side.
  int operator[](std::size_t i) const { return signs_[i] == '+' ? 1 : -1; }
  const std::string& str() const { return signs_; }

  // '+' sorts before '-', so the order is lexicographic on the text.
  friend auto operator<=>(const SignPattern&, const SignPattern&) = default;

 private:
  std::string signs_;
};

struct DescartesPair {
  int c = 0;  // sign changes
  int p = 0;  // sign preservations
  friend auto operator<=>(const DescartesPair&, const DescartesPair&) = default;
};

struct AdmissiblePair {
  int pos = 0;
  int neg = 0;
  friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
};

DescartesPair descartes_pair(const SignPattern& sp);

bool is_admissible(const SignPattern& sp, const AdmissiblePair& ap);

/// All pairs allowed by the rule of signs, ordered by decreasing neg and then
/// decreasing pos.
std::vector<AdmissiblePair> admissible_pairs(const SignPattern& sp);

struct Couple {
  SignPattern sp;
  AdmissiblePair ap;

  /// Throws std::invalid_argument if ap is not admissible for sp.
  Couple(SignPattern sp, AdmissiblePair ap);

  friend auto operator<=>(const Couple&, const Couple&) = default;
};

std::string to_string(const Couple& cp);  // "++-+-- (3,0)"

/// (-1)^d P(-x): flips every second sign and swaps pos and neg.
Couple act_g1(const Couple& cp);
/// x^d P(1/x) / P(0): reverses the pattern, renormalizes, keeps the pair.
Couple act_g2(const Couple& cp);
SignPattern act_g1(const SignPattern& sp);
SignPattern act_g2(const SignPattern& sp);

/// A Z2 x Z2 orbit, members sorted; key() is the minimal member.
class Orbit {
 public:
  explicit Orbit(std::vector<Couple> members);
  const std::vector<Couple>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Couple& key() const { return members_.front(); }
  bool contains(const Couple& cp) const;

 private:
  std::vector<Couple> members_;
};

Orbit orbit_of(const Couple& cp);

/// Every sign pattern of degree d (leading '+'), in lexicographic order.
std::vector<SignPattern> all_sign_patterns(int d);

/// Every couple of degree d, sorted.
std::vector<Couple> all_couples(int d);

/// Partition of all couples of degree d into orbits, sorted by key.
std::vector<Orbit> all_orbits(int d);

class ZeroCoefficient : public std::domain_error {
 public:
  explicit ZeroCoefficient(int index);
  /// Degree of the vanishing coefficient.
  int index() const { return index_; }

 private:
  int index_;
};

/// Sign pattern of p, normalized to a leading '+'. Throws ZeroCoefficient
/// when a coefficient vanishes.
SignPattern sp_of_polynomial(const Polynomial& p);

class NotNormalized : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quadrant indices: I = (+,+), II = (-,+), III = (-,-), IV = (+,-).
struct SigmaLabel {
  int i = 1;  // signs of (a, b)
  int j = 1;  // signs of (c, d)
  friend auto operator<=>(const SigmaLabel&, const SigmaLabel&) = default;
};

std::string to_string(const SigmaLabel& s);  // "s2,3"

/// Quadrant index of a pair of nonzero signs.
int quadrant_of(int sign_x, int sign_y);

/// Requires a degree 5 pattern beginning (+,+); throws NotNormalized.
SigmaLabel sigma_label(const SignPattern& sp);

/// The degree 5 pattern (+,+,a,b,c,d) with the given quadrants.
SignPattern sign_pattern_of(const SigmaLabel& s);

}  // namespace qda
