#include "qda/ratpoly/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace qda {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer pow10(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6)
      throw std::invalid_argument("bad exponent in number: " + std::string(text));
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty())
    throw std::invalid_argument("not a number: " + std::string(text));
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part)))
    throw std::invalid_argument("not a number: " + std::string(text));

  std::string digits = std::string(int_part) + std::string(frac_part);
  Integer mantissa(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  Rational r;
  if (exponent >= 0) {
    r = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
  } else {
    r = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    r.canonicalize();
  }
  if (negative) r = -r;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+'))
      num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den))
      throw std::invalid_argument("not a fraction: " + std::string(text));
    Integer n(std::string(num_digits), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    if (num.front() == '-') n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, to_double(value));
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

double to_double(const Rational& value) { return value.get_d(); }

int sign(const Rational& value) { return sgn(value); }

Rational abs(const Rational& value) { return Rational(::abs(value)); }

Integer floor(const Rational& value) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& value) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

Rational pow2(long k) {
  Integer p = 1;
  if (k >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  return Rational(Integer(1), p);
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  // Coarsest power-of-two grid first, including multiples of large powers of
  // two, so wide gaps get round numbers.
  Integer span = qda::ceil(qda::abs(hi) + qda::abs(lo));
  long k = -static_cast<long>(mpz_sizeinbase(span.get_mpz_t(), 2)) - 1;
  for (;; ++k) {
    Rational scale = pow2(k);
    Rational scaled = lo * scale;
    Integer n = qda::floor(scaled) + 1;
    Rational candidate = Rational(n) / scale;
    candidate.canonicalize();
    if (candidate < hi) return candidate;
  }
}

Rational smallest_denominator_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("smallest_denominator_between: empty interval");
  const Integer fl = qda::floor(lo);
  if (Rational(fl + 1) < hi) return Rational(fl + 1);
  const Rational l = lo - fl;
  const Rational h = hi - fl;
  Rational inner = l == 0 ? Rational(qda::floor(Rational(1 / h)) + 1) : smallest_denominator_between(1 / h, 1 / l);
  Rational out = Rational(fl) + 1 / inner;
  out.canonicalize();
  return out;
}

}  // namespace qda
