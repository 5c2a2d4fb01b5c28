#include "qda/discr/quintic.hpp"

#include "qda/ratpoly/sturm.hpp"

namespace qda {

Rational resultant(const QuinticParams& q) {
  Polynomial p = q.polynomial();
  return resultant(p, derivative(p));
}

DomainLabel domain_of(const QuinticParams& q) {
  Polynomial p = q.polynomial();
  SturmSequence sturm(p);
  DomainLabel label;
  if (sturm.had_multiple_roots()) {
    label.kind = Domain::boundary;
    label.roots = isolate_roots(p);
    for (const auto& e : label.roots)
      if (e.multiplicity > 1) label.real_multiple_root = true;
    return label;
  }
  switch (sturm.count_open(std::nullopt, std::nullopt)) {
    case 5: label.kind = Domain::h; break;
    case 3: label.kind = Domain::t; break;
    default: label.kind = Domain::s; break;
  }
  return label;
}

char letter(Domain d) {
  switch (d) {
    case Domain::h: return 'h';
    case Domain::t: return 't';
    case Domain::s: return 's';
    case Domain::boundary: break;
  }
  return 'b';
}

}  // namespace qda
