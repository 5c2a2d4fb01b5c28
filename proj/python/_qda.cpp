#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qda/atlas/rules.hpp"
#include "qda/atlas/survey.hpp"
#include "qda/cli/cli.hpp"
#include "qda/discr/strata.hpp"
#include "qda/io/json.hpp"
#include "qda/render/ab_plane.hpp"
#include "qda/render/slice_plot.hpp"

namespace py = pybind11;
using namespace qda;

// Rationals cross the boundary as "p/q" or decimal strings; structured results
// as JSON text, decoded on the Python side.
namespace {

Rational rat(const std::string& s) { return parse_rational(s); }

std::string dump(const io::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_qda, m) {
  m.doc() = "Exact sign-pattern and discriminant-slice computations for degree 5";

  py::register_exception<OnBoundary>(m, "OnBoundary", PyExc_ValueError);
  py::register_exception<OnDiscriminant>(m, "OnDiscriminant", PyExc_ValueError);
  py::register_exception<OnCoordinateHyperplane>(m, "OnCoordinateHyperplane", PyExc_ValueError);
  py::register_exception<NotFound>(m, "NotFound", PyExc_RuntimeError);

  m.def("orbits", [](int degree) { return dump(io::encode(all_orbits(degree))); }, py::arg("degree") = 5);
  m.def("admissible_pairs", [](const std::string& sp) {
    std::vector<std::pair<int, int>> out;
    for (const auto& ap : admissible_pairs(SignPattern(sp))) out.emplace_back(ap.pos, ap.neg);
    return out;
  });
  m.def("descartes_pair", [](const std::string& sp) {
    const DescartesPair dp = descartes_pair(SignPattern(sp));
    return std::make_pair(dp.c, dp.p);
  });
  m.def(
      "realize",
      [](const std::string& sp, int pos, int neg, std::size_t attempts, std::uint64_t seed) {
        RealizeBudget budget;
        budget.attempts = attempts;
        budget.seed = seed;
        const Couple couple(SignPattern(sp), {pos, neg});
        py::gil_scoped_release release;
        return dump(io::encode(realize(couple, budget)));
      },
      py::arg("sp"), py::arg("pos"), py::arg("neg"), py::arg("attempts") = 20000, py::arg("seed") = 0x5eed);
  m.def("zone", [](const std::string& a, const std::string& b) { return to_string(zone_of(rat(a), rat(b))); });
  m.def("classify", [](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
    return dump(io::encode(classify_point({rat(a), rat(b), rat(c), rat(d)})));
  });
  m.def(
      "slice",
      [](const std::string& a, const std::string& b, int samples) {
        return dump(io::encode(build_slice(rat(a), rat(b), std::nullopt, samples)));
      },
      py::arg("a"), py::arg("b"), py::arg("samples") = 512);
  m.def("scan", [](const std::string& a, const std::string& b) {
    std::vector<CaseRecord> records;
    {
      py::gil_scoped_release release;
      records = scan_slice(rat(a), rat(b));
    }
    return dump(io::encode(records));
  });
  m.def("tables", [] {
    std::vector<CaseTable> tables;
    {
      py::gil_scoped_release release;
      tables = figure_tables();
    }
    return dump(io::encode(tables));
  });
  m.def(
      "survey",
      [](std::size_t evidence) {
        SurveyOptions options;
        options.evidence.samples = evidence;
        RealizabilityReport report;
        {
          py::gil_scoped_release release;
          report = survey(options);
        }
        return dump(io::encode(report));
      },
      py::arg("evidence") = 100000);
  m.def(
      "evidence_scan",
      [](const std::string& sp, int pos, int neg, std::size_t samples) {
        EvidenceBudget budget;
        budget.samples = samples;
        const Couple target(SignPattern(sp), {pos, neg});
        py::gil_scoped_release release;
        return dump(io::encode(evidence_scan(target, budget)));
      },
      py::arg("sp"), py::arg("pos"), py::arg("neg"), py::arg("samples") = 100000);
  m.def("rules", [](const std::string& a, const std::string& b) { return dump(io::encode(check_rules(rat(a), rat(b)))); });
  m.def("render_slice", [](const std::string& a, const std::string& b) {
    const SliceCurve sc = build_slice(rat(a), rat(b));
    return render_slice(sc, default_slice_view(sc));
  });
  m.def(
      "render_ab_plane",
      [](const std::string& x_lo, const std::string& x_hi, const std::string& y_lo, const std::string& y_hi,
         bool m_curve) {
        PlotSpec spec;
        spec.x_lo = rat(x_lo);
        spec.x_hi = rat(x_hi);
        spec.y_lo = rat(y_lo);
        spec.y_hi = rat(y_hi);
        spec.draw_m_curve = m_curve;
        return render_ab_plane(spec);
      },
      py::arg("x_lo") = "-3", py::arg("x_hi") = "2", py::arg("y_lo") = "-5", py::arg("y_hi") = "4",
      py::arg("m_curve") = false);
  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
