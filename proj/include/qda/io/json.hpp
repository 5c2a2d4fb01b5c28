#pragma once

#include <json.hpp>

#include "qda/atlas/rules.hpp"
#include "qda/atlas/survey.hpp"
#include "qda/discr/slice.hpp"

namespace qda::io {

using json = nlohmann::json;

/// Rationals are written as "num/den" strings (integers as "num") so every
/// document round-trips exactly.
json encode(const Rational& x);
json encode(const Polynomial& p);  // coefficients, constant term first
json encode(const Range& r);
json encode(const RealRoot& r);
json encode(const RootEntry& e);
json encode(const QuinticParams& q);
json encode(const SignPattern& sp);
json encode(const AdmissiblePair& ap);
json encode(const Couple& c);
json encode(const SigmaLabel& s);
json encode(Domain d);
json encode(const CaseKey& k);
json encode(const Classification& c);
json encode(const CaseRecord& r);
json encode(const CaseTable& t);
json encode(const Certificate& c);
json encode(const EvidenceReport& e);
json encode(const OrbitRollup& r);
json encode(const RealizabilityReport& r);
json encode(const RuleResult& r);
json encode(const RuleReport& r);
json encode(const Node& n);
json encode(const SliceCurve& sc);
json encode(const Orbit& o);

template <class T>
json encode(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

/// Inverse of encode. Throws std::invalid_argument (or a json exception) on
/// malformed input.
template <class T>
T decode(const json& j);

template <>
Rational decode<Rational>(const json& j);
template <>
Polynomial decode<Polynomial>(const json& j);
template <>
Range decode<Range>(const json& j);
template <>
RealRoot decode<RealRoot>(const json& j);
template <>
RootEntry decode<RootEntry>(const json& j);
template <>
QuinticParams decode<QuinticParams>(const json& j);
template <>
SignPattern decode<SignPattern>(const json& j);
template <>
AdmissiblePair decode<AdmissiblePair>(const json& j);
template <>
Couple decode<Couple>(const json& j);
template <>
SigmaLabel decode<SigmaLabel>(const json& j);
template <>
Domain decode<Domain>(const json& j);
template <>
CaseKey decode<CaseKey>(const json& j);
template <>
Classification decode<Classification>(const json& j);
template <>
CaseRecord decode<CaseRecord>(const json& j);
template <>
CaseTable decode<CaseTable>(const json& j);
template <>
Certificate decode<Certificate>(const json& j);
template <>
EvidenceReport decode<EvidenceReport>(const json& j);
template <>
OrbitRollup decode<OrbitRollup>(const json& j);
template <>
RealizabilityReport decode<RealizabilityReport>(const json& j);
template <>
RuleResult decode<RuleResult>(const json& j);
template <>
RuleReport decode<RuleReport>(const json& j);
template <>
Node decode<Node>(const json& j);
template <>
SliceCurve decode<SliceCurve>(const json& j);
template <>
Orbit decode<Orbit>(const json& j);

}  // namespace qda::io
