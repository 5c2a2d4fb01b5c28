#pragma once

#include <stdexcept>
#include <string>

#include "qda/discr/quintic.hpp"
#include "qda/signs/signs.hpp"

namespace qda {

class OnDiscriminant : public std::domain_error {
 public:
  OnDiscriminant() : std::domain_error("point lies on the discriminant set") {}
};

class OnCoordinateHyperplane : public std::domain_error {
 public:
  explicit OnCoordinateHyperplane(std::string name)
      : std::domain_error("coefficient " + name + " is zero"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// (sigma, domain, AP) triple that identifies a case of the atlas.
struct CaseKey {
  SigmaLabel sigma;
  Domain domain = Domain::s;
  AdmissiblePair ap;
  friend auto operator<=>(const CaseKey&, const CaseKey&) = default;
};

std::string to_string(const CaseKey& k);

struct Classification {
  QuinticParams params;
  SignPattern sp;
  SigmaLabel sigma;
  Domain domain;
  int pos = 0;
  int neg = 0;

  AdmissiblePair ap() const { return {pos, neg}; }
  Couple couple() const { return Couple(sp, ap()); }
  CaseKey key() const { return {sigma, domain, ap()}; }
};

/// Throws OnCoordinateHyperplane("a"|"b"|"c"|"d") first, then OnDiscriminant.
Classification classify_point(const QuinticParams& q);

}  // namespace qda
