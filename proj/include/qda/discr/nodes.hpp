#pragma once

#include <vector>

#include "qda/ratpoly/interval.hpp"
#include "qda/ratpoly/roots.hpp"

namespace qda {

/// A pair of parameters t1 != t2 with the same slice point, described by
/// s = t1 + t2 (exact) and certified enclosures of everything else.
struct Node {
  RealRoot s;
  Range p;   // t1 * t2
  Range t1;  // real nodes: t1 < t2; complex points: enclosures of the real part
  Range t2;
  Range c;  // the common slice point
  Range d;
  bool at_origin = false;  // c = d = 0 exactly
};

/// Default enclosure width for node coordinates.
Rational default_node_width();

/// Real self-intersections of the slice at (a, b), ordered by min(t1, t2).
/// Enclosures of c and d are narrower than `width`.
std::vector<Node> self_intersections(const Rational& a, const Rational& b, const Rational& width = default_node_width());

/// Points of the (c, d)-plane where P has a pair of complex conjugate double
/// roots. They satisfy Res(P, P') = 0 without lying on the real-parameter
/// curve. t1 and t2 hold the real part; p the squared modulus.
std::vector<Node> complex_double_points(const Rational& a, const Rational& b,
                                        const Rational& width = default_node_width());

}  // namespace qda
