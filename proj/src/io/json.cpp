#include "qda/io/json.hpp"

#include "qda/atlas/reference_tables.hpp"

namespace qda::io {

namespace {

template <class T>
std::vector<T> decode_vector(const json& j) {
  std::vector<T> out;
  for (const auto& x : j) out.push_back(decode<T>(x));
  return out;
}

template <class T>
json encode_optional(const std::optional<T>& x) {
  return x ? encode(*x) : json(nullptr);
}

template <class T>
std::optional<T> decode_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return decode<T>(j);
}

}  // namespace

json encode(const Rational& x) { return to_string(x); }
template <>
Rational decode<Rational>(const json& j) {
  return parse_rational(j.get<std::string>());
}

json encode(const Polynomial& p) {
  json out = json::array();
  for (int k = 0; k <= p.degree(); ++k) out.push_back(encode(p[k]));
  return out;
}
template <>
Polynomial decode<Polynomial>(const json& j) {
  return Polynomial(decode_vector<Rational>(j));
}

json encode(const Range& r) { return {{"lo", encode(r.lo)}, {"hi", encode(r.hi)}}; }
template <>
Range decode<Range>(const json& j) {
  return {decode<Rational>(j.at("lo")), decode<Rational>(j.at("hi"))};
}

json encode(const RealRoot& r) {
  return {{"polynomial", encode(r.polynomial())},
          {"lo", encode(r.lower())},
          {"hi", encode(r.upper())},
          {"approx", r.approx()}};
}
template <>
RealRoot decode<RealRoot>(const json& j) {
  return RealRoot(decode<Polynomial>(j.at("polynomial")), decode<Rational>(j.at("lo")), decode<Rational>(j.at("hi")));
}

json encode(const RootEntry& e) { return {{"root", encode(e.root)}, {"multiplicity", e.multiplicity}}; }
template <>
RootEntry decode<RootEntry>(const json& j) {
  return {decode<RealRoot>(j.at("root")), j.at("multiplicity").get<unsigned>()};
}

json encode(const QuinticParams& q) {
  return {{"a", encode(q.a)}, {"b", encode(q.b)}, {"c", encode(q.c)}, {"d", encode(q.d)}};
}
template <>
QuinticParams decode<QuinticParams>(const json& j) {
  return {decode<Rational>(j.at("a")), decode<Rational>(j.at("b")), decode<Rational>(j.at("c")),
          decode<Rational>(j.at("d"))};
}

json encode(const SignPattern& sp) { return sp.str(); }
template <>
SignPattern decode<SignPattern>(const json& j) {
  return SignPattern(j.get<std::string>());
}

json encode(const AdmissiblePair& ap) { return json::array({ap.pos, ap.neg}); }
template <>
AdmissiblePair decode<AdmissiblePair>(const json& j) {
  return {j.at(0).get<int>(), j.at(1).get<int>()};
}

json encode(const Couple& c) { return {{"sp", encode(c.sp)}, {"ap", encode(c.ap)}}; }
template <>
Couple decode<Couple>(const json& j) {
  return Couple(decode<SignPattern>(j.at("sp")), decode<AdmissiblePair>(j.at("ap")));
}

json encode(const SigmaLabel& s) { return json::array({s.i, s.j}); }
template <>
SigmaLabel decode<SigmaLabel>(const json& j) {
  return {j.at(0).get<int>(), j.at(1).get<int>()};
}

json encode(Domain d) { return std::string(1, letter(d)); }
template <>
Domain decode<Domain>(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "h") return Domain::h;
  if (s == "t") return Domain::t;
  if (s == "s") return Domain::s;
  if (s == "b") return Domain::boundary;
  throw std::invalid_argument("unknown domain letter: " + s);
}

json encode(const CaseKey& k) { return {{"sigma", encode(k.sigma)}, {"domain", encode(k.domain)}, {"ap", encode(k.ap)}}; }
template <>
CaseKey decode<CaseKey>(const json& j) {
  return {decode<SigmaLabel>(j.at("sigma")), decode<Domain>(j.at("domain")), decode<AdmissiblePair>(j.at("ap"))};
}

json encode(const Classification& c) {
  return {{"params", encode(c.params)}, {"sp", encode(c.sp)}, {"sigma", encode(c.sigma)},
          {"domain", encode(c.domain)}, {"pos", c.pos},          {"neg", c.neg}};
}
template <>
Classification decode<Classification>(const json& j) {
  return {decode<QuinticParams>(j.at("params")), decode<SignPattern>(j.at("sp")), decode<SigmaLabel>(j.at("sigma")),
          decode<Domain>(j.at("domain")),        j.at("pos").get<int>(),           j.at("neg").get<int>()};
}

json encode(const CaseRecord& r) {
  return {{"key", encode(r.key)},
          {"case_number", r.case_number ? json(*r.case_number) : json(nullptr)},
          {"witness", encode(r.witness)}};
}
template <>
CaseRecord decode<CaseRecord>(const json& j) {
  std::optional<int> n;
  if (!j.at("case_number").is_null()) n = j.at("case_number").get<int>();
  return {decode<CaseKey>(j.at("key")), n, decode<QuinticParams>(j.at("witness"))};
}

json encode(const CaseTable& t) {
  return {{"label", t.label}, {"a", encode(t.a)}, {"b", encode(t.b)}, {"records", encode(t.records)}};
}
template <>
CaseTable decode<CaseTable>(const json& j) {
  return {j.at("label").get<std::string>(), decode<Rational>(j.at("a")), decode<Rational>(j.at("b")),
          decode_vector<CaseRecord>(j.at("records"))};
}

json encode(const Certificate& c) {
  return {{"couple", encode(c.couple)},
          {"polynomial", encode(c.polynomial)},
          {"pos", c.counts.pos},
          {"neg", c.counts.neg},
          {"zero_mult", c.counts.zero_mult},
          {"simple", c.simple}};
}
template <>
Certificate decode<Certificate>(const json& j) {
  RootCounts rc{j.at("pos").get<unsigned>(), j.at("neg").get<unsigned>(), j.at("zero_mult").get<unsigned>()};
  return {decode<Couple>(j.at("couple")), decode<Polynomial>(j.at("polynomial")), rc, j.at("simple").get<bool>()};
}

json encode(const EvidenceReport& e) {
  json realized = json::array();
  for (const auto& [ap, n] : e.realized) realized.push_back({{"ap", encode(ap)}, {"count", n}});
  return {{"target", encode(e.target)},
          {"samples", e.samples},
          {"on_boundary", e.on_boundary},
          {"hits", e.hits},
          {"first_hit", encode_optional(e.first_hit)},
          {"realized", realized},
          {"nearest_misses", encode(e.nearest_misses)}};
}
template <>
EvidenceReport decode<EvidenceReport>(const json& j) {
  EvidenceReport e{decode<Couple>(j.at("target")),
                   j.at("samples").get<std::size_t>(),
                   j.at("on_boundary").get<std::size_t>(),
                   j.at("hits").get<std::size_t>(),
                   decode_optional<QuinticParams>(j.at("first_hit")),
                   {},
                   decode_vector<AdmissiblePair>(j.at("nearest_misses"))};
  for (const auto& r : j.at("realized")) e.realized[decode<AdmissiblePair>(r.at("ap"))] = r.at("count").get<std::size_t>();
  return e;
}

json encode(const OrbitRollup& r) {
  return {{"realizable_4", r.realizable_4},
          {"unresolved_4", r.unresolved_4},
          {"realizable_2", r.realizable_2},
          {"unresolved_2", r.unresolved_2}};
}
template <>
OrbitRollup decode<OrbitRollup>(const json& j) {
  return {j.at("realizable_4").get<int>(), j.at("unresolved_4").get<int>(), j.at("realizable_2").get<int>(),
          j.at("unresolved_2").get<int>()};
}

json encode(const RealizabilityReport& r) {
  json realizable = json::array();
  for (const auto& c : r.realizable) {
    json entry = encode(c);
    const auto n = case_number_of(case_key(c));
    entry["case_number"] = n ? json(*n) : json(nullptr);
    realizable.push_back(entry);
  }
  return {{"tables", encode(r.tables)},
          {"realizable", realizable},
          {"unresolved", encode(r.unresolved)},
          {"rollup", encode(r.rollup)}};
}
template <>
RealizabilityReport decode<RealizabilityReport>(const json& j) {
  return {decode_vector<CaseTable>(j.at("tables")), decode_vector<Certificate>(j.at("realizable")),
          decode_vector<EvidenceReport>(j.at("unresolved")), decode<OrbitRollup>(j.at("rollup"))};
}

json encode(const RuleResult& r) {
  return {{"rule", r.number}, {"description", r.description}, {"checked", r.checked}, {"failures", r.failures},
          {"passed", r.passed()}};
}
template <>
RuleResult decode<RuleResult>(const json& j) {
  return {j.at("rule").get<int>(), j.at("description").get<std::string>(), j.at("checked").get<std::size_t>(),
          j.at("failures").get<std::vector<std::string>>()};
}

json encode(const RuleReport& r) {
  json rules = json::array();
  for (const auto& x : r.rules) rules.push_back(encode(x));
  return {{"a", encode(r.a)}, {"b", encode(r.b)}, {"rules", rules}, {"passed", r.passed()}};
}
template <>
RuleReport decode<RuleReport>(const json& j) {
  RuleReport r{decode<Rational>(j.at("a")), decode<Rational>(j.at("b")), {}};
  const auto& rules = j.at("rules");
  if (rules.size() != r.rules.size()) throw std::invalid_argument("rule report needs six rules");
  for (std::size_t i = 0; i < r.rules.size(); ++i) r.rules[i] = decode<RuleResult>(rules[i]);
  return r;
}

json encode(const Node& n) {
  return {{"s", encode(n.s)},   {"p", encode(n.p)}, {"t1", encode(n.t1)}, {"t2", encode(n.t2)},
          {"c", encode(n.c)},   {"d", encode(n.d)}, {"at_origin", n.at_origin}};
}
template <>
Node decode<Node>(const json& j) {
  return {decode<RealRoot>(j.at("s")), decode<Range>(j.at("p")), decode<Range>(j.at("t1")),
          decode<Range>(j.at("t2")),   decode<Range>(j.at("c")), decode<Range>(j.at("d")),
          j.at("at_origin").get<bool>()};
}

json encode(const SliceCurve& sc) {
  json samples = json::array();
  for (const auto& s : sc.samples) samples.push_back(json::array({encode(s.t), encode(s.c), encode(s.d)}));
  return {{"a", encode(sc.a)},
          {"b", encode(sc.b)},
          {"t_lo", encode(sc.t_lo)},
          {"t_hi", encode(sc.t_hi)},
          {"cusps", encode(sc.cusps)},
          {"nodes", encode(sc.nodes)},
          {"c_crossings", encode(sc.c_crossings)},
          {"d_crossings", encode(sc.d_crossings)},
          {"samples", samples}};
}
template <>
SliceCurve decode<SliceCurve>(const json& j) {
  SliceCurve sc;
  sc.a = decode<Rational>(j.at("a"));
  sc.b = decode<Rational>(j.at("b"));
  sc.t_lo = decode<Rational>(j.at("t_lo"));
  sc.t_hi = decode<Rational>(j.at("t_hi"));
  sc.cusps = decode_vector<RootEntry>(j.at("cusps"));
  sc.nodes = decode_vector<Node>(j.at("nodes"));
  sc.c_crossings = decode_vector<RootEntry>(j.at("c_crossings"));
  sc.d_crossings = decode_vector<RootEntry>(j.at("d_crossings"));
  for (const auto& s : j.at("samples"))
    sc.samples.push_back({decode<Rational>(s.at(0)), decode<Rational>(s.at(1)), decode<Rational>(s.at(2))});
  return sc;
}

json encode(const Orbit& o) { return encode(o.members()); }
template <>
Orbit decode<Orbit>(const json& j) {
  return Orbit(decode_vector<Couple>(j));
}

}  // namespace qda::io
