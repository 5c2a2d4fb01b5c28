#include "qda/discr/strata.hpp"

#include <algorithm>
#include <array>

namespace qda {

namespace {

void check_m(int m) {
  if (m < 1 || m > 4) throw std::invalid_argument("stratum index must be in 1..4");
}

Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

// Second root x2 = (-1 - m x1) / (5 - m) as a polynomial in x1.
Polynomial other_root(int m) { return Polynomial{Rational(-1, 5 - m), Rational(-m, 5 - m)}; }

const Rational kCuspA(2, 5);
const Rational kCuspB(2, 25);

}  // namespace

Polynomial stratum_a(int m) {
  check_m(m);
  const Polynomial u = Polynomial::x();
  const Polynomial v = other_root(m);
  const int n = 5 - m;
  return binom(m, 2) * u * u + Rational(m * n) * u * v + binom(n, 2) * v * v;
}

Polynomial stratum_b(int m) {
  check_m(m);
  const Polynomial u = Polynomial::x();
  const Polynomial v = other_root(m);
  const int n = 5 - m;
  Polynomial e3 = binom(m, 3) * u * u * u + binom(m, 2) * Rational(n) * u * u * v + Rational(m) * binom(n, 2) * u * v * v +
                  binom(n, 3) * v * v * v;
  return -e3;
}

StratumCurvePoint stratum_projection(int m, const Rational& x1) {
  check_m(m);
  return {m, x1, stratum_a(m)(x1), stratum_b(m)(x1)};
}

Polynomial stratum_polynomial(int m, const Rational& x1) {
  check_m(m);
  const Rational x2 = other_root(m)(x1);
  return pow(Polynomial{-x1, Rational(1)}, static_cast<unsigned>(m)) *
         pow(Polynomial{-x2, Rational(1)}, static_cast<unsigned>(5 - m));
}

Rational m_value(const Rational& a, const Rational& b) {
  return 18 * a * b - 4 * b + a * a - 4 * a * a * a - 27 * b * b;
}

Polynomial m_value_on_stratum(int m) {
  const Polynomial a = stratum_a(m);
  const Polynomial b = stratum_b(m);
  return Rational(18) * a * b - Rational(4) * b + a * a - Rational(4) * a * a * a - Rational(27) * b * b;
}

std::string to_string(Zone z) {
  static constexpr std::array<const char*, 15> names = {"A", "B", "C", "D", "E", "F", "G", "H",
                                                         "I", "J", "K", "L", "M", "N", "P"};
  return names[static_cast<std::size_t>(z)];
}

Zone zone_from_string(const std::string& label) {
  for (int z = 0; z < 15; ++z)
    if (to_string(static_cast<Zone>(z)) == label) return static_cast<Zone>(z);
  throw std::invalid_argument("unknown zone label: " + label);
}

std::string to_string(Branch br) {
  switch (br) {
    case Branch::T41: return "T41";
    case Branch::T32: return "T32";
    case Branch::T23: return "T23";
    case Branch::T14: return "T14";
  }
  return "?";
}

std::vector<BranchCrossing> branches_at(const Rational& a) {
  std::vector<BranchCrossing> out;
  const Rational split(-1, 5);
  for (int m : {4, 3}) {
    for (const auto& entry : isolate_roots(stratum_a(m) - Polynomial::constant(a))) {
      if (entry.multiplicity > 1) continue;  // tangency at the common cusp
      const bool below = entry.root.compare(split) < 0;
      Branch br = m == 4 ? (below ? Branch::T41 : Branch::T14) : (below ? Branch::T32 : Branch::T23);
      out.push_back({br, entry.root, enclose(stratum_b(m), entry.root, pow2(-40))});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BranchCrossing& x, const BranchCrossing& y) { return x.branch < y.branch; });
  return out;
}

Zone zone_of(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw OnBoundary("point lies on a coordinate axis");
  if (a == kCuspA && b == kCuspB) throw OnBoundary("point is the common cusp of the stratum curves");
  int below = 0;
  const auto branches = branches_at(a);
  for (const auto& br : branches) {
    const int m = br.branch == Branch::T41 || br.branch == Branch::T14 ? 4 : 3;
    const int sg = br.x1.sign_of(stratum_b(m) - Polynomial::constant(b));
    if (sg == 0) throw OnBoundary("point lies on the projection of stratum " + to_string(br.branch));
    if (sg < 0) ++below;
  }
  const bool none = branches.empty();
  const int quadrant = a > 0 ? (b > 0 ? 1 : 4) : (b > 0 ? 2 : 3);
  switch (quadrant) {
    case 1:
      if (none || below == 0 || below == 4) return Zone::P;
      if (below == 3) return Zone::L;
      if (below == 2) return Zone::M;
      return Zone::N;
    case 2:
      if (below == 4) return Zone::A;
      if (below == 3) return Zone::B;
      if (below == 2) return Zone::C;
      break;
    case 3:
      if (below == 0) return Zone::G;
      if (below == 1) return Zone::F;
      if (below == 2) return Zone::E;
      if (below == 3) return Zone::D;
      break;
    default:
      if (none || below == 0) return Zone::H;
      if (below == 1) return Zone::I;
      if (below == 2) return Zone::J;
      if (below == 3) return Zone::K;
      break;
  }
  throw std::logic_error("unexpected branch configuration at (" + to_string(a) + ", " + to_string(b) + ")");
}

std::vector<MCrossing> m_curve_crossings(int m, const Rational& width) {
  check_m(m);
  std::vector<MCrossing> out;
  for (const auto& entry : isolate_roots(m_value_on_stratum(m)))
    out.push_back({m, entry.root, enclose(stratum_a(m), entry.root, width), enclose(stratum_b(m), entry.root, width)});
  return out;
}

}  // namespace qda
