#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "qda/ratpoly/interval.hpp"
#include "qda/ratpoly/polynomial.hpp"
#include "qda/ratpoly/rational.hpp"
#include "qda/ratpoly/roots.hpp"
#include "qda/ratpoly/sturm.hpp"

using namespace qda;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Polynomial from_coeffs(const oracle::Coeffs& c) { return Polynomial(c); }

// (x + 1/5)^5 expanded by the oracle.
Polynomial t5() { return from_coeffs(oracle::expand_roots({q(-1, 5), q(-1, 5), q(-1, 5), q(-1, 5), q(-1, 5)})); }

Polynomial five_roots() { return from_coeffs(oracle::expand_roots({q(1), q(2), q(-1), q(-3), q(-4)})); }

// (x^2 - 1)^2 (x + 2)
Polynomial double_pm_one() { return from_coeffs(oracle::expand_roots({q(1), q(1), q(-1), q(-1), q(-2)})); }

}  // namespace

TEST_SUITE("ratpoly") {
  TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("0.01") == q(1, 100));
    CHECK(parse_rational("-0.014") == q(-14, 1000));
    CHECK(parse_rational("2/25") == q(2, 25));
    CHECK(parse_rational("-16") == q(-16));
    CHECK(parse_rational("2.5e-3") == q(1, 400));
    CHECK(parse_rational("1E2") == q(100));
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(to_string(q(3)) == "3/1");
    CHECK(to_string(q(-2, 4)) == "-1/2");
    CHECK(to_decimal(q(1, 3)) == "0.333333333");
  }

  TEST_CASE("simplest_between stays strictly inside") {
    CHECK(simplest_between(q(-1), q(1)) == 0);
    CHECK(simplest_between(q(1, 3), q(1, 2)) == q(3, 8));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      Rational a = oracle::random_rational(rng, 50, 97);
      Rational b = a + q(1, 1 + i * 1000);
      Rational m = simplest_between(a, b);
      CHECK(a < m);
      CHECK(m < b);
    }
  }

  TEST_CASE("eval examples") {
    CHECK(eval(t5(), q(-1, 5)) == 0);
    CHECK(eval(Polynomial::monomial(q(1), 5), q(1)) == 1);
    CHECK(eval(five_roots(), q(2)) == 0);
  }

  TEST_CASE("T5 coefficients") {
    // (x + 1/5)^5 = x^5 + x^4 + 2/5 x^3 + 2/25 x^2 + 1/125 x + 1/3125
    Polynomial expected{q(1, 3125), q(1, 125), q(2, 25), q(2, 5), q(1), q(1)};
    CHECK(t5() == expected);
    CHECK(pow(Polynomial{q(1, 5), q(1)}, 5) == expected);
  }

  TEST_CASE("derivative examples") {
    Rational a = q(-2), b = q(3), c = q(1, 7), d = q(-5, 3);
    Polynomial p{d, c, b, a, q(1), q(1)};
    CHECK(derivative(p) == Polynomial{c, 2 * b, 3 * a, q(4), q(5)});
    CHECK(derivative(Polynomial::constant(q(7))).is_zero());
    Polynomial four = from_coeffs(oracle::expand_roots({q(-1, 5), q(-1, 5), q(-1, 5), q(-1, 5)}));
    CHECK(derivative(t5()) == q(5) * four);
  }

  TEST_CASE("gcd examples") {
    Polynomial four = from_coeffs(oracle::expand_roots({q(-1, 5), q(-1, 5), q(-1, 5), q(-1, 5)}));
    CHECK(gcd(t5(), derivative(t5())) == four);
    CHECK(gcd(five_roots(), Polynomial::constant(q(1))) == Polynomial::constant(q(1)));
    CHECK(gcd(double_pm_one(), derivative(double_pm_one())) == Polynomial{q(-1), q(0), q(1)});
  }

  TEST_CASE("squarefree decomposition examples") {
    auto sf = squarefree_decomposition(t5());
    REQUIRE(sf.size() == 1);
    CHECK(sf[0].factor == Polynomial{q(1, 5), q(1)});
    CHECK(sf[0].multiplicity == 5);

    Polynomial p = q(3) * five_roots();
    auto one = squarefree_decomposition(p);
    REQUIRE(one.size() == 1);
    CHECK(one[0].factor == five_roots());
    CHECK(one[0].multiplicity == 1);

    auto two = squarefree_decomposition(double_pm_one());
    REQUIRE(two.size() == 2);
    CHECK(two[0].factor == Polynomial{q(2), q(1)});
    CHECK(two[0].multiplicity == 1);
    CHECK(two[1].factor == Polynomial{q(-1), q(0), q(1)});
    CHECK(two[1].multiplicity == 2);

    CHECK(squarefree_decomposition(Polynomial::constant(q(4))).empty());
  }

  TEST_CASE("count_real_roots examples") {
    CHECK(count_real_roots(Polynomial{q(1), q(0), q(1)}, Interval::whole()) == 0);
    CHECK(count_real_roots(t5(), Interval::negative()) == 1);
    CHECK(count_real_roots(five_roots(), Interval::positive()) == 2);
  }

  TEST_CASE("count_real_roots endpoint convention") {
    Polynomial p = five_roots();
    CHECK(count_real_roots(p, Interval::open(q(1), q(2))) == 0);
    CHECK(count_real_roots(p, Interval::closed(q(1), q(2))) == 2);
    CHECK(count_real_roots(p, Interval{q(1), q(2), true, false}) == 1);
    CHECK(count_real_roots(p, Interval::point(q(-3))) == 1);
    CHECK(count_real_roots(p, Interval::point(q(0))) == 0);
    CHECK_THROWS_AS(count_real_roots(p, Interval{q(1), q(1), false, false}), std::invalid_argument);
  }

  TEST_CASE("pos_neg_counts examples") {
    CHECK(pos_neg_counts(t5()) == RootCounts{0, 5, 0});
    CHECK(pos_neg_counts(Polynomial::monomial(q(1), 5)) == RootCounts{0, 0, 5});
    CHECK(pos_neg_counts(five_roots()) == RootCounts{2, 3, 0});
  }

  TEST_CASE("isolate_roots examples") {
    auto r2 = isolate_roots(Polynomial{q(-2), q(0), q(1)});
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].multiplicity == 1);
    CHECK(r2[1].multiplicity == 1);
    CHECK(r2[0].root.compare(q(-1)) < 0);
    CHECK(r2[0].root.compare(q(-2)) > 0);
    CHECK(r2[1].root.compare(q(1)) > 0);
    CHECK(r2[1].root.compare(q(2)) < 0);
    // Refinement converges on sqrt(2).
    RealRoot s2 = r2[1].root.refined(q(1, 1000000));
    CHECK(s2.lower() * s2.lower() < 2);
    CHECK(s2.upper() * s2.upper() > 2);

    auto r5 = isolate_roots(t5());
    REQUIRE(r5.size() == 1);
    CHECK(r5[0].multiplicity == 5);
    CHECK(r5[0].interval().contains(q(-1, 5)));

    auto r3 = isolate_roots(double_pm_one());
    REQUIRE(r3.size() == 3);
    CHECK(r3[0].interval().contains(q(-2)));
    CHECK(r3[1].interval().contains(q(-1)));
    CHECK(r3[2].interval().contains(q(1)));
    CHECK(r3[0].multiplicity == 1);
    CHECK(r3[1].multiplicity == 2);
    CHECK(r3[2].multiplicity == 2);
  }

  TEST_CASE("real algebraic comparisons and signs") {
    auto roots = isolate_roots(Polynomial{q(-2), q(0), q(1)});
    const RealRoot& sqrt2 = roots[1].root;
    CHECK(sqrt2.sign_of(Polynomial{q(-2), q(0), q(1)}) == 0);
    CHECK(sqrt2.sign_of(Polynomial{q(-3, 2), q(1)}) < 0);  // sqrt2 - 1.5
    CHECK(sqrt2.sign_of(Polynomial{q(-7, 5), q(1)}) > 0);  // sqrt2 - 1.4
    // x^4 - 4 shares the root sqrt2.
    CHECK(sqrt2.sign_of(Polynomial{q(-4), q(0), q(0), q(0), q(1)}) == 0);
    auto other = isolate_roots(Polynomial{q(-4), q(0), q(0), q(0), q(1)});
    REQUIRE(other.size() == 2);
    CHECK(compare(sqrt2, other[1].root) == 0);
    CHECK(compare(roots[0].root, other[1].root) < 0);
    auto cube = isolate_roots(Polynomial{q(-3), q(0), q(0), q(1)});
    CHECK(compare(cube[0].root, sqrt2) > 0);  // 3^(1/3) > 2^(1/2)
    Range e = enclose(Polynomial{q(0), q(0), q(1)}, sqrt2, q(1, 1 << 20));
    CHECK(e.contains(q(2)));
    CHECK(e.width() < q(1, 1 << 20));
  }

  TEST_CASE("resultant and Sylvester matrix") {
    Polynomial p = five_roots();
    CHECK(resultant(p, derivative(p)) != 0);
    CHECK(resultant(t5(), derivative(t5())) == 0);
    // Res(x - 2, x - 5) = (x - 5) evaluated at 2
    CHECK(resultant(Polynomial{q(-2), q(1)}, Polynomial{q(-5), q(1)}) == q(-3));
    CHECK(determinant({{q(1), q(2)}, {q(3), q(4)}}) == q(-2));
  }

  TEST_CASE("random root-placed polynomials: counts match construction") {
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<int> deg(2, 7);
    for (int iter = 0; iter < 1000; ++iter) {
      const int n = deg(rng);
      std::vector<Rational> real_roots;
      oracle::Coeffs coeffs{Rational(1)};
      unsigned pos = 0, neg = 0, zero = 0;
      int remaining = n;
      while (remaining > 0) {
        if (remaining >= 2 && rng() % 4 == 0) {
          // x^2 + beta x + gamma with beta^2 < 4 gamma
          Rational beta = oracle::random_rational(rng, 9, 5, false);
          Rational gamma = beta * beta / 4 + oracle::random_rational(rng, 9, 7) * oracle::random_rational(rng, 9, 7);
          if (gamma <= beta * beta / 4) gamma = beta * beta / 4 + 1;
          coeffs = oracle::multiply(coeffs, {gamma, beta, Rational(1)});
          remaining -= 2;
        } else {
          Rational r = rng() % 10 == 0 ? Rational(0) : oracle::random_rational(rng, 9, 4);
          (r > 0 ? pos : r < 0 ? neg : zero) += 1;
          coeffs = oracle::multiply(coeffs, {-r, Rational(1)});
          real_roots.push_back(r);
          remaining -= 1;
        }
      }
      Polynomial p(coeffs);
      REQUIRE(pos_neg_counts(p) == RootCounts{pos, neg, zero});

      // Sturm count vs isolation.
      auto iso = isolate_roots(p);
      CHECK(count_real_roots(p, Interval::whole()) == iso.size());
      unsigned total = 0;
      for (const auto& e : iso) total += e.multiplicity;
      CHECK(total == real_roots.size());
      for (std::size_t i = 0; i + 1 < iso.size(); ++i) CHECK(compare(iso[i].root, iso[i + 1].root) < 0);

      // gcd(p, p') has degree sum (mult - 1).
      int expected = 0;
      for (const auto& f : squarefree_decomposition(p)) expected += f.factor.degree() * (f.multiplicity - 1);
      CHECK(gcd(p, derivative(p)).degree() == expected);
    }
  }

  TEST_CASE("Descartes bounds hold for random polynomials with nonzero coefficients") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> deg(1, 9);
    for (int iter = 0; iter < 500; ++iter) {
      const int n = deg(rng);
      oracle::Coeffs c;
      for (int k = 0; k <= n; ++k) c.push_back(oracle::random_rational(rng, 20, 6));
      Polynomial p(c);
      unsigned changes = 0, keeps = 0;
      for (int k = 0; k < n; ++k) (sign(c[k]) != sign(c[k + 1]) ? changes : keeps) += 1;
      RootCounts rc = pos_neg_counts(p);
      CHECK(rc.zero_mult == 0);
      CHECK(rc.pos <= changes);
      CHECK(rc.neg <= keeps);
      CHECK((changes - rc.pos) % 2 == 0);
      CHECK((keeps - rc.neg) % 2 == 0);
    }
  }

  TEST_CASE("eval respects ring operations") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
      oracle::Coeffs a, b;
      for (int k = 0; k < 1 + iter % 6; ++k) a.push_back(oracle::random_rational(rng, 30, 8, false));
      for (int k = 0; k < 1 + iter % 4; ++k) b.push_back(oracle::random_rational(rng, 30, 8, false));
      Polynomial pa(a), pb(b);
      Rational x = oracle::random_rational(rng, 10, 9, false);
      CHECK(eval(pa * pb, x) == eval(pa, x) * eval(pb, x));
      CHECK(eval(pa + pb, x) == eval(pa, x) + eval(pb, x));
      CHECK(eval(pa, x) == oracle::eval_powers(a, x));
      if (!pb.is_zero()) {
        DivMod dm = divmod(pa, pb);
        CHECK(dm.quotient * pb + dm.remainder == pa);
        CHECK(dm.remainder.degree() < pb.degree());
      }
    }
  }

  TEST_CASE("interval Horner encloses exact values") {
    std::mt19937_64 rng(11);
    Polynomial p = five_roots();
    for (int iter = 0; iter < 100; ++iter) {
      Rational lo = oracle::random_rational(rng, 40, 9, false);
      Rational hi = lo + q(1, 1 + iter);
      Range r = eval(p, Range{lo, hi});
      CHECK(r.contains(p(lo)));
      CHECK(r.contains(p(hi)));
      CHECK(r.contains(p((lo + hi) / 2)));
    }
    Range s = sqrt_enclosure(Range{q(2), q(2)});
    CHECK(s.lo * s.lo <= 2);
    CHECK(s.hi * s.hi >= 2);
  }

  TEST_CASE("smallest_denominator_between matches a denominator search") {
    CHECK(smallest_denominator_between(q(-201, 1000), q(-199, 1000)) == q(-1, 5));
    CHECK(smallest_denominator_between(q(0), q(1)) == q(1, 2));
    CHECK(smallest_denominator_between(q(1), q(3)) == 2);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
      Rational lo = oracle::random_rational(rng, 50, 40), hi = oracle::random_rational(rng, 50, 40);
      if (lo == hi) continue;
      if (lo > hi) std::swap(lo, hi);
      Rational got = smallest_denominator_between(lo, hi);
      CHECK(lo < got);
      CHECK(got < hi);
      for (long den = 1; den < got.get_den().get_si(); ++den) {
        Integer n = qda::floor(Rational(lo * den)) + 1;
        CHECK_FALSE(Rational(n, den) < hi);
      }
    }
  }
}
