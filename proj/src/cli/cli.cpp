#include "qda/cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qda/atlas/reference_tables.hpp"
#include "qda/atlas/rules.hpp"
#include "qda/atlas/survey.hpp"
#include "qda/cli/manifest.hpp"
#include "qda/discr/strata.hpp"
#include "qda/io/csv.hpp"
#include "qda/io/json.hpp"
#include "qda/render/ab_plane.hpp"
#include "qda/render/slice_plot.hpp"

#ifndef QDA_SOURCE_DIR
#define QDA_SOURCE_DIR "."
#endif

namespace qda::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "svg") return Format::svg;
  throw UsageError("unknown format: " + s);
}

const char* extension(Format f) {
  switch (f) {
    case Format::text: return "txt";
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::svg: return "svg";
  }
  return "txt";
}

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + ": not a rational number: " + text);
  }
}

Rational required(const std::optional<Rational>& v, const char* name) {
  if (!v) throw UsageError(std::string("--") + name + " is required");
  return *v;
}

// Comma separated x_lo,x_hi,y_lo,y_hi.
void apply_view(const std::string& text, PlotSpec& spec) {
  std::vector<Rational> v;
  std::istringstream in(text);
  for (std::string part; std::getline(in, part, ',');) v.push_back(rational_arg("view", part));
  if (v.size() != 4) throw UsageError("--view needs four comma separated values");
  spec.x_lo = v[0];
  spec.x_hi = v[1];
  spec.y_lo = v[2];
  spec.y_hi = v[3];
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--view: ") + e.what());
  }
}

// Writes artifacts into the --out directory, or the primary one to stdout.
class Sink {
 public:
  Sink(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {
    if (cfg.out_dir) fs::create_directories(*cfg.out_dir);
  }

  bool to_files() const { return cfg_.out_dir.has_value(); }

  void file(const std::string& name, const std::string& content) {
    std::ofstream f(fs::path(*cfg_.out_dir) / name, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + name);
    f << content;
  }

  // Without --out the artifact is printed; with --out it is saved and the
  // summary is printed.
  void emit(const std::string& stem, Format format, const std::string& content, const std::string& summary) {
    if (to_files()) {
      file(stem + "." + extension(format), content);
      out_ << summary;
    } else {
      out_ << content;
    }
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

std::string ap_text(const AdmissiblePair& ap) {
  return "(" + std::to_string(ap.pos) + "," + std::to_string(ap.neg) + ")";
}

void require_format(Format f, std::initializer_list<Format> allowed) {
  for (Format a : allowed)
    if (a == f) return;
  throw UsageError(std::string("format ") + extension(f) + " is not available for this command");
}

int cmd_orbits(const RunConfig& cfg, int degree, std::ostream& out) {
  const auto orbits = all_orbits(degree);
  int len4 = 0, len2 = 0, other = 0;
  for (const auto& o : orbits) (o.size() == 4 ? len4 : o.size() == 2 ? len2 : other)++;
  std::string summary = std::to_string(len4) + " orbits of length 4, " + std::to_string(len2) + " of length 2";
  if (other) summary += ", " + std::to_string(other) + " of length 1";
  summary += "\n";
  const Format f = cfg.format.value_or(Format::text);
  require_format(f, {Format::text, Format::json});
  Sink sink(cfg, out);
  if (f == Format::text)
    sink.emit("orbits", f, summary, summary);
  else
    sink.emit("orbits", f, dump(io::encode(orbits)), summary);
  return kOk;
}

int cmd_admissible(const RunConfig& cfg, std::ostream& out) {
  const SignPattern sp(cfg.sign_pattern);
  const DescartesPair dp = descartes_pair(sp);
  const auto aps = admissible_pairs(sp);
  std::string summary = sp.str() + " Descartes pair (" + std::to_string(dp.c) + "," + std::to_string(dp.p) + "):";
  for (const auto& ap : aps) summary += " " + ap_text(ap);
  summary += "\n";
  const Format f = cfg.format.value_or(Format::text);
  require_format(f, {Format::text, Format::json});
  io::json j{{"sp", io::encode(sp)}, {"descartes", {dp.c, dp.p}}, {"admissible", io::encode(aps)}};
  Sink(cfg, out).emit("admissible", f, f == Format::text ? summary : dump(j), summary);
  return kOk;
}

int cmd_realize(const RunConfig& cfg, const RealizeBudget& budget, std::ostream& out) {
  const Couple couple(SignPattern(cfg.sign_pattern), {cfg.pos, cfg.neg});
  const Format f = cfg.format.value_or(Format::json);
  require_format(f, {Format::text, Format::json});
  io::json j;
  std::string summary;
  try {
    const Certificate cert = realize(couple, budget);
    j = io::encode(cert);
    summary = to_string(couple) + " realized by " + to_string(cert.polynomial) + "\n";
  } catch (const NotFound& e) {
    j = {{"not_found", io::encode(couple)}, {"attempts", e.attempts()}};
    summary = to_string(couple) + " not found after " + std::to_string(e.attempts()) + " attempts\n";
  }
  Sink(cfg, out).emit("certificate", f, f == Format::text ? summary : dump(j), summary);
  return kOk;
}

std::vector<RegionLabel> region_labels(const Rational& a, const Rational& b) {
  std::vector<RegionLabel> out;
  try {
    for (const auto& r : scan_slice(a, b)) out.push_back({r.witness.c, r.witness.d, letter(r.key.domain)});
  } catch (const OnBoundary&) {
    // No atlas cases on a boundary: letters are omitted.
  }
  return out;
}

std::string slice_summary(const SliceCurve& sc) {
  std::ostringstream s;
  s << "slice a=" << to_string(sc.a) << " b=" << to_string(sc.b) << "\n";
  for (const auto& e : sc.cusps) {
    const SlicePoint p = slice_point(cusp_vertex(e.root), sc.a, sc.b);
    s << "cusp t~" << to_decimal(e.root.midpoint()) << " (c,d)~(" << to_decimal(p.c) << ", " << to_decimal(p.d)
      << ")\n";
  }
  for (const auto& n : sc.nodes)
    s << "node t1~" << to_decimal(n.t1.mid()) << " t2~" << to_decimal(n.t2.mid()) << " (c,d)~(" << to_decimal(n.c.mid())
      << ", " << to_decimal(n.d.mid()) << ")" << (n.at_origin ? " at origin" : "") << "\n";
  s << sc.c_crossings.size() << " crossings with the d-axis, " << sc.d_crossings.size()
    << " with the c-axis (counting the origin)\n";
  return s.str();
}

int cmd_slice(const RunConfig& cfg, int samples, const std::string& view, const std::string& detail,
              std::ostream& out) {
  const Rational a = required(cfg.a, "a");
  const Rational b = required(cfg.b, "b");
  const SliceCurve sc = build_slice(a, b, std::nullopt, samples);
  PlotSpec spec = default_slice_view(sc);
  if (!view.empty()) apply_view(view, spec);
  const Format f = cfg.format.value_or(cfg.svg && !cfg.out_dir ? Format::svg : Format::json);
  Sink sink(cfg, out);
  const bool want_svg = f == Format::svg || cfg.svg;
  std::string svg;
  if (want_svg) svg = render_slice(sc, spec, region_labels(a, b));
  const std::string summary = slice_summary(sc);
  switch (f) {
    case Format::text: sink.emit("slice", f, summary, summary); break;
    case Format::json: sink.emit("slice", f, dump(io::encode(sc)), summary); break;
    case Format::csv: sink.emit("slice", f, io::slice_csv(sc), summary); break;
    case Format::svg: sink.emit("slice", f, svg, summary); break;
  }
  if (sink.to_files() && cfg.svg && f != Format::svg) sink.file("slice.svg", svg);
  if (!detail.empty()) {
    if (!sink.to_files()) throw UsageError("--detail needs --out");
    const Rational k = rational_arg("detail", detail);
    if (k <= 0) throw UsageError("--detail must be positive");
    PlotSpec zoom = spec;
    zoom.x_lo *= k;
    zoom.x_hi *= k;
    zoom.y_lo *= k;
    zoom.y_hi *= k;
    sink.file("slice_detail.svg", render_slice(sc, zoom, region_labels(a, b)));
  }
  return kOk;
}

int cmd_zones(const RunConfig& cfg, std::ostream& out) {
  const Rational a = required(cfg.a, "a");
  const Rational b = required(cfg.b, "b");
  const std::string label = to_string(zone_of(a, b));
  const Format f = cfg.format.value_or(Format::text);
  require_format(f, {Format::text, Format::json});
  io::json j{{"a", io::encode(a)}, {"b", io::encode(b)}, {"zone", label}};
  Sink(cfg, out).emit("zone", f, f == Format::text ? label + "\n" : dump(j), label + "\n");
  return kOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const QuinticParams q{required(cfg.a, "a"), required(cfg.b, "b"), required(cfg.c, "c"), required(cfg.d, "d")};
  const Classification cl = classify_point(q);
  std::string summary = to_string(cl.key());
  if (auto n = case_number_of(cl.key())) summary += " case " + std::to_string(*n);
  summary += "\n";
  const Format f = cfg.format.value_or(Format::text);
  require_format(f, {Format::text, Format::json});
  Sink(cfg, out).emit("classification", f, f == Format::text ? summary : dump(io::encode(cl)), summary);
  return kOk;
}

int cmd_tables(const RunConfig& cfg, const std::string& zone, const std::string& strategy, std::ostream& out) {
  GridSpec grid;
  if (strategy == "geometric")
    grid.strategy = GridSpec::Strategy::geometric;
  else if (strategy != "cells")
    throw UsageError("unknown strategy: " + strategy);
  auto points = default_table_points();
  if (!zone.empty()) {
    std::erase_if(points, [&](const TablePoint& p) { return p.label != zone; });
    if (points.empty()) throw UsageError("unknown zone: " + zone);
  }
  const auto tables = figure_tables(points, grid);
  std::string text;
  for (const auto& t : tables) {
    text += format_table(t);
    const TableDiff diff = compare_with_reference(t);
    for (const auto& k : diff.missing) text += "  missing: " + to_string(k) + "\n";
    for (const auto& k : diff.extra) text += "  extra: " + to_string(k) + "\n";
    text += "\n";
  }
  std::string summary;
  for (const auto& t : tables) {
    const TableDiff diff = compare_with_reference(t);
    summary += t.label + ": " + std::to_string(t.records.size()) + " cases" +
               (diff.empty() ? "" : ", " + std::to_string(diff.missing.size()) + " missing, " +
                                        std::to_string(diff.extra.size()) + " extra") +
               "\n";
  }
  const Format f = cfg.format.value_or(Format::text);
  require_format(f, {Format::text, Format::json, Format::csv});
  Sink sink(cfg, out);
  switch (f) {
    case Format::json: sink.emit("tables", f, dump(io::encode(tables)), summary); break;
    case Format::csv: sink.emit("tables", f, io::tables_csv(tables), summary); break;
    default: sink.emit("tables", f, text, summary); break;
  }
  return kOk;
}

int cmd_survey(const RunConfig& cfg, std::size_t evidence, std::ostream& out) {
  SurveyOptions options;
  options.evidence.samples = evidence;
  const RealizabilityReport report = survey(options);
  std::string summary = std::to_string(report.realizable.size()) + " realizable, " +
                        std::to_string(report.unresolved.size()) + " unresolved";
  for (std::size_t i = 0; i < report.unresolved.size(); ++i)
    summary += (i ? ", " : ": ") + to_string(report.unresolved[i].target);
  summary += "\n";
  const Format f = cfg.format.value_or(Format::text);
  require_format(f, {Format::text, Format::json});
  Sink(cfg, out).emit("survey", f, f == Format::text ? summary : dump(io::encode(report)), summary);
  return kOk;
}

int cmd_rules(const RunConfig& cfg, std::ostream& out) {
  const RuleReport report = check_rules(required(cfg.a, "a"), required(cfg.b, "b"));
  std::string summary;
  for (const auto& r : report.rules) {
    summary += "rule " + std::to_string(r.number) + " " + (r.passed() ? "passed" : "FAILED") + " (" +
               std::to_string(r.checked) + " checks): " + r.description + "\n";
    for (const auto& msg : r.failures) summary += "  " + msg + "\n";
  }
  const Format f = cfg.format.value_or(Format::text);
  require_format(f, {Format::text, Format::json});
  Sink(cfg, out).emit("rules", f, f == Format::text ? summary : dump(io::encode(report)), summary);
  return kOk;
}

int cmd_render_ab(const RunConfig& cfg, const std::string& view, bool m_curve, std::ostream& out) {
  PlotSpec spec;
  spec.x_lo = -3;
  spec.x_hi = 2;
  spec.y_lo = -5;
  spec.y_hi = 4;
  if (!view.empty()) apply_view(view, spec);
  spec.draw_m_curve = m_curve;
  const Format f = cfg.format.value_or(Format::svg);
  require_format(f, {Format::svg});
  Sink(cfg, out).emit("ab_plane", f, render_ab_plane(spec), "(a,b)-plane written\n");
  return kOk;
}

int cmd_reproduce(const std::string& manifest_path, const std::string& out_dir, bool update, std::ostream& out,
                  std::ostream& err) {
  Manifest manifest;
  if (fs::exists(manifest_path))
    manifest = load_manifest(manifest_path);
  else if (update)
    manifest = default_manifest();
  else
    throw std::runtime_error("manifest not found: " + manifest_path);
  int mismatches = 0;
  for (auto& entry : manifest.entries) {
    const fs::path dir = fs::path(out_dir) / entry.id;
    fs::remove_all(dir);
    std::vector<std::string> args = entry.args;
    args.insert(args.end(), {"--out", dir.string()});
    std::ostringstream sink;
    const int code = run(args, sink, err);
    if (code != kOk) throw std::runtime_error(entry.id + " exited with code " + std::to_string(code));
    const std::string sum = directory_checksum(dir);
    const bool same = sum == entry.checksum;
    out << entry.id << " " << sum << " " << (same ? "OK" : update ? "UPDATED" : "MISMATCH") << "\n";
    if (!same) {
      if (update)
        entry.checksum = sum;
      else
        ++mismatches;
    }
  }
  if (update) save_manifest(manifest, manifest_path);
  if (mismatches) {
    err << mismatches << " manifest entries differ\n";
    return kManifestMismatch;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sign patterns and discriminant slices of x^5 + x^4 + a x^3 + b x^2 + c x + d"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format, out_dir;
  std::string a_text, b_text, c_text, d_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_dir, "Directory for output files");
    sub->add_option("--format", format, "text, json, csv or svg");
  };
  auto add_ab = [&](CLI::App* sub) {
    sub->add_option("--a", a_text, "Coefficient of x^3 (p/q or decimal)")->required();
    sub->add_option("--b", b_text, "Coefficient of x^2 (p/q or decimal)")->required();
  };

  int degree = 5;
  auto* orbits = app.add_subcommand("orbits", "Z2 x Z2 orbits of couples");
  orbits->add_option("--degree", degree)->check(CLI::Range(1, 12));
  add_common(orbits);

  auto* admissible = app.add_subcommand("admissible", "Admissible pairs of a sign pattern");
  admissible->add_option("sp", cfg.sign_pattern, "Sign pattern such as ++-+--")->required();
  add_common(admissible);

  RealizeBudget budget;
  auto* realize_cmd = app.add_subcommand("realize", "Find a certificate for a couple");
  realize_cmd->add_option("sp", cfg.sign_pattern)->required();
  realize_cmd->add_option("pos", cfg.pos)->required();
  realize_cmd->add_option("neg", cfg.neg)->required();
  realize_cmd->add_option("--attempts", budget.attempts);
  realize_cmd->add_option("--seed", budget.seed);
  add_common(realize_cmd);

  int samples = 512;
  std::string view, detail;
  auto* slice = app.add_subcommand("slice", "Discriminant slice at fixed (a, b)");
  add_ab(slice);
  slice->add_flag("--svg", cfg.svg, "Also render an SVG");
  slice->add_option("--samples", samples)->check(CLI::Range(2, 1 << 20));
  slice->add_option("--view", view, "x_lo,x_hi,y_lo,y_hi");
  slice->add_option("--detail", detail, "Extra view scaled toward the origin by this factor");
  add_common(slice);

  auto* zones = app.add_subcommand("zones", "Zone label of (a, b)");
  add_ab(zones);
  add_common(zones);

  auto* classify = app.add_subcommand("classify", "Classify (a, b, c, d)");
  add_ab(classify);
  classify->add_option("--c", c_text)->required();
  classify->add_option("--d", d_text)->required();
  add_common(classify);

  std::string zone, strategy = "cells";
  auto* tables = app.add_subcommand("tables", "Case tables at the sample points");
  tables->add_option("--zone", zone, "Only this sample point");
  tables->add_option("--strategy", strategy, "cells or geometric");
  add_common(tables);

  std::size_t evidence = 100'000;
  auto* survey_cmd = app.add_subcommand("survey", "Realizability of every degree 5 couple");
  survey_cmd->add_option("--evidence", evidence, "Samples for each unresolved couple");
  add_common(survey_cmd);

  auto* rules = app.add_subcommand("rules", "Check the local rules on a slice");
  add_ab(rules);
  add_common(rules);

  bool m_curve = false;
  auto* render_ab = app.add_subcommand("render-ab", "Render the (a, b)-plane");
  render_ab->add_option("--view", view, "x_lo,x_hi,y_lo,y_hi");
  render_ab->add_flag("--m-curve", m_curve, "Draw the M curve");
  add_common(render_ab);

  std::string manifest_path = std::string(QDA_SOURCE_DIR) + "/data/manifest.json";
  std::string reproduce_out = "reproduce_out";
  bool update = false;
  auto* reproduce = app.add_subcommand("reproduce", "Regenerate every figure and table and compare checksums");
  reproduce->add_option("--manifest", manifest_path);
  reproduce->add_option("--out", reproduce_out);
  reproduce->add_flag("--update", update, "Store the new checksums");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    if (!format.empty()) cfg.format = parse_format(format);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (!a_text.empty()) cfg.a = rational_arg("a", a_text);
    if (!b_text.empty()) cfg.b = rational_arg("b", b_text);
    if (!c_text.empty()) cfg.c = rational_arg("c", c_text);
    if (!d_text.empty()) cfg.d = rational_arg("d", d_text);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kParseError;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  try {
    if (sub == orbits) return cmd_orbits(cfg, degree, out);
    if (sub == admissible) return cmd_admissible(cfg, out);
    if (sub == realize_cmd) return cmd_realize(cfg, budget, out);
    if (sub == slice) return cmd_slice(cfg, samples, view, detail, out);
    if (sub == zones) return cmd_zones(cfg, out);
    if (sub == classify) return cmd_classify(cfg, out);
    if (sub == tables) return cmd_tables(cfg, zone, strategy, out);
    if (sub == survey_cmd) return cmd_survey(cfg, evidence, out);
    if (sub == rules) return cmd_rules(cfg, out);
    if (sub == render_ab) return cmd_render_ab(cfg, view, m_curve, out);
    return cmd_reproduce(manifest_path, reproduce_out, update, out, err);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kParseError;
  } catch (const OnBoundary& e) {
    err << e.what() << "\n";
    return kBoundary;
  } catch (const OnDiscriminant& e) {
    err << e.what() << "\n";
    return kBoundary;
  } catch (const OnCoordinateHyperplane& e) {
    err << e.what() << "\n";
    return kBoundary;
  } catch (const std::invalid_argument& e) {
    // Malformed sign patterns and pairs that are not admissible.
    err << e.what() << "\n";
    return kParseError;
  }
}

}  // namespace qda::cli
