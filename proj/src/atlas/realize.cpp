#include "qda/atlas/realize.hpp"

#include <algorithm>
#include <random>

#include "qda/atlas/scan.hpp"

namespace qda {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Positive dyadic-times-small-denominator rational, log-uniform over about
  // 2^-6 .. 2^6.
  Rational magnitude() {
    std::uniform_int_distribution<int> e(-6, 6), num(1, 64), den(1, 9);
    Rational r = Rational(num(rng_), den(rng_)) * pow2(e(rng_)) / 16;
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 rng_;
};

// Monic polynomial with the given roots and quadratic factors, rescaled by
// x -> lambda x so that the x^(d-1) coefficient is 1 (when it is nonzero).
std::optional<Polynomial> normalized(const Polynomial& q) {
  const int d = q.degree();
  const Rational lambda = q[d - 1];
  if (lambda == 0) return std::nullopt;
  Polynomial p = q.scaled_argument(lambda);
  return p * Rational(1 / p.leading());
}

bool matches(const Polynomial& p, const Couple& target) {
  for (int k = 0; k <= p.degree(); ++k)
    if (p[k] == 0) return false;
  if (sp_of_polynomial(p) != target.sp) return false;
  const SturmSequence chain(p);
  if (chain.had_multiple_roots()) return false;
  return static_cast<int>(chain.count_open(Rational(0), std::nullopt)) == target.ap.pos &&
         static_cast<int>(chain.count_open(std::nullopt, Rational(0))) == target.ap.neg;
}

}  // namespace

Certificate certify(const Polynomial& p) {
  if (p.degree() < 1 || p.leading() != 1) throw std::invalid_argument("certificate polynomial must be monic");
  for (int k = 0; k <= p.degree(); ++k)
    if (p[k] == 0) throw std::invalid_argument("certificate polynomial has a zero coefficient");
  const bool simple = gcd(p, derivative(p)).degree() == 0;
  if (!simple) throw std::invalid_argument("certificate polynomial has a multiple root");
  const RootCounts rc = pos_neg_counts(p);
  return {Couple(sp_of_polynomial(p), {static_cast<int>(rc.pos), static_cast<int>(rc.neg)}), p, rc, simple};
}

bool verify(const Certificate& cert) {
  try {
    const Certificate again = certify(cert.polynomial);
    return again.couple == cert.couple && again.counts == cert.counts && again.simple && cert.simple &&
           again.counts.zero_mult == 0;
  } catch (const std::exception&) {
    return false;
  }
}

NotFound::NotFound(const Couple& couple, std::size_t attempts)
    : std::runtime_error("no certificate found for " + to_string(couple) + " within " + std::to_string(attempts) +
                         " attempts"),
      attempts_(attempts) {}

Certificate realize(const Couple& couple, const RealizeBudget& budget) {
  const int d = couple.sp.degree();
  if (couple.sp[1] < 0) {
    // Search for the g1-image and map back with P(x) -> (-1)^d P(-x).
    const Certificate image = realize(act_g1(couple), budget);
    return certify(image.polynomial.negated_argument() * Rational(d % 2 ? -1 : 1));
  }
  for (const auto& w : budget.witnesses) {
    if (d != 5) break;
    const Polynomial p = w.polynomial();
    if (matches(p, couple)) return certify(p);
  }

  Sampler sample(budget.seed);
  std::mt19937_64 coin(budget.seed ^ 0x9e3779b97f4a7c15ull);
  const int pairs = (d - couple.ap.pos - couple.ap.neg) / 2;
  const std::size_t placement_attempts = budget.attempts / 2;
  for (std::size_t k = 0; k < placement_attempts; ++k) {
    Polynomial q = Polynomial::constant(1);
    for (int i = 0; i < couple.ap.pos; ++i) q *= Polynomial{-sample.magnitude(), Rational(1)};
    for (int i = 0; i < couple.ap.neg; ++i) q *= Polynomial{sample.magnitude(), Rational(1)};
    for (int i = 0; i < pairs; ++i) {
      // (x - u)^2 + v^2
      Rational u = sample.magnitude() * (coin() % 2 ? 1 : -1);
      Rational v = sample.magnitude();
      q *= Polynomial{u * u + v * v, -2 * u, Rational(1)};
    }
    auto p = normalized(q);
    if (p && matches(*p, couple)) return certify(*p);
  }

  for (std::size_t k = placement_attempts; k < budget.attempts; ++k) {
    std::vector<Rational> coeffs(d + 1);
    coeffs[d] = 1;
    coeffs[d - 1] = 1;
    for (int i = 0; i + 1 < d; ++i) coeffs[i] = sample.magnitude() * couple.sp[d - i];
    Polynomial p(coeffs);
    if (matches(p, couple)) return certify(p);
  }
  if (d == 5) {
    // Exact cell scans of random slices in the quadrant of (a, b) fixed by the pattern.
    const std::size_t slices = std::max<std::size_t>(1, budget.attempts / 250);
    for (std::size_t k = 0; k < slices; ++k) {
      const Rational a = sample.magnitude() * couple.sp[2], b = sample.magnitude() * couple.sp[3];
      for (const auto& col : slice_cells(a, b).columns)
        for (const auto& cell : col.cells)
          if (cell.couple() == couple) return certify(cell.params.polynomial());
    }
  }
  throw NotFound(couple, budget.attempts);
}

}  // namespace qda
