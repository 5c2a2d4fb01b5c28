#include "qda/atlas/classify.hpp"

#include "qda/ratpoly/sturm.hpp"

namespace qda {

std::string to_string(const CaseKey& k) {
  return to_string(k.sigma) + " " + letter(k.domain) + " (" + std::to_string(k.ap.pos) + "," +
         std::to_string(k.ap.neg) + ")";
}

Classification classify_point(const QuinticParams& q) {
  if (q.a == 0) throw OnCoordinateHyperplane("a");
  if (q.b == 0) throw OnCoordinateHyperplane("b");
  if (q.c == 0) throw OnCoordinateHyperplane("c");
  if (q.d == 0) throw OnCoordinateHyperplane("d");
  const Polynomial p = q.polynomial();
  const SturmSequence chain(p);
  if (chain.had_multiple_roots()) throw OnDiscriminant();
  const int pos = static_cast<int>(chain.count_open(Rational(0), std::nullopt));
  const int neg = static_cast<int>(chain.count_open(std::nullopt, Rational(0)));
  const Domain domain = pos + neg == 5 ? Domain::h : (pos + neg == 3 ? Domain::t : Domain::s);
  SignPattern sp = sp_of_polynomial(p);
  const SigmaLabel sigma = sigma_label(sp);
  return {q, std::move(sp), sigma, domain, pos, neg};
}

}  // namespace qda
