#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "paucity/asymptotics.hpp"
#include "paucity/cache.hpp"
#include "paucity/depress.hpp"
#include "paucity/enumerate.hpp"
#include "paucity/error.hpp"
#include "paucity/oracle.hpp"
#include "paucity/report.hpp"
#include "paucity/surface.hpp"

namespace py = pybind11;
using namespace paucity;

namespace {

// Polynomials cross the boundary as text ("x^3+3x^2", "0,0,3,1") or as a sequence of ints,
// constant term first. Big integers travel as decimal strings.
IntPolynomial to_poly(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_polynomial(obj.cast<std::string>()).poly;
  std::vector<BigInt> coeffs;
  for (auto item : obj) {
    if (!py::isinstance<py::int_>(item)) throw Error(ErrorKind::ParseError, "coefficients must be ints");
    coeffs.push_back(big_from_string(py::str(item).cast<std::string>()));
  }
  return IntPolynomial(std::move(coeffs));
}

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list coeff_list(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

std::string census(const py::object& g, int s, std::int64_t B, std::size_t sample) {
  const auto poly = to_poly(g);
  py::gil_scoped_release release;
  auto report = singular_census(poly, s, Progression::box(B), sample);
  return dump(census_json(report));
}

py::tuple enumerate_py(const py::object& f, int s, std::int64_t B, std::optional<std::uint64_t> memory_budget,
                       unsigned threads, bool emit, bool emit_trivial) {
  const auto poly = to_poly(f);
  EnumerateOptions opts;
  if (memory_budget) opts.memory_budget = *memory_budget;
  opts.threads = threads;
  opts.emit_trivial = emit_trivial;
  std::vector<SolutionRecord> records;
  SolutionSink sink;
  if (emit) sink = [&records](const SolutionRecord& r) { records.push_back(r); };
  CountSummary summary;
  {
    py::gil_scoped_release release;
    summary = enumerate(poly, s, B, opts, sink);
  }
  py::list rows;
  for (const auto& r : records) rows.append(py::make_tuple(py::tuple(py::cast(r.lhs)), py::tuple(py::cast(r.rhs)), class_name(r.cls)));
  return py::make_tuple(dump(counts_json(summary)), rows);
}

std::string ladder_py(const py::object& f, int s, const std::vector<std::int64_t>& B_list,
                      std::optional<std::string> cache_dir, bool compare, double tolerance) {
  const auto poly = to_poly(f);
  std::optional<ResultCache> cache;
  if (cache_dir) cache.emplace(*cache_dir);
  LadderReport report;
  {
    py::gil_scoped_release release;
    report = run_ladder(poly, s, B_list, cache ? &*cache : nullptr);
  }
  std::optional<BoundProfile> profile;
  std::optional<Verdict> verdict;
  if (compare) {
    profile = bound_profile(poly.degree(), s);
    verdict = compare_bounds(report.fit, *profile, tolerance);
  }
  return dump(ladder_json(report, profile, verdict));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact enumeration and surface algebra for equal sums of polynomial values";

  static py::exception<Error> error(m, "PaucityError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(error_kind_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.attr("SCHEMA") = kSchema;

  m.def("parse", [](const py::object& p) { return coeff_list(to_poly(p)); }, py::arg("poly"));
  m.def("format", [](const py::object& p, char var) { return format_polynomial(to_poly(p), var); }, py::arg("poly"),
        py::arg("var") = 'x');
  m.def("depress", [](const py::object& f) {
    const auto poly = to_poly(f);
    return dump(depressed_json(poly, depress(poly)));
  }, py::arg("f"));
  m.def("trivial_count", &trivial_count, py::arg("s"), py::arg("B"));
  m.def("classify", [](const std::vector<std::int64_t>& l, const std::vector<std::int64_t>& r) {
    return std::string(class_name(classify(l, r)));
  }, py::arg("lhs"), py::arg("rhs"));
  m.def("enumerate", &enumerate_py, py::arg("f"), py::arg("s"), py::arg("B"), py::arg("memory_budget") = py::none(),
        py::arg("threads") = 0, py::arg("emit") = false, py::arg("emit_trivial") = false);
  m.def("brute_counts", [](const py::object& f, int s, std::int64_t B) {
    return dump(counts_json(oracle::brute_counts(to_poly(f), s, B)));
  }, py::arg("f"), py::arg("s"), py::arg("B"));

  m.def("critical_values", [](const py::object& g) { return coeff_list(critical_value_polynomial(to_poly(g)).poly); },
        py::arg("g"));
  m.def("critical_sum_polynomial", [](const py::object& g, int s) {
    return coeff_list(CriticalSumTest(to_poly(g), s).polynomial().poly);
  }, py::arg("g"), py::arg("s"));
  m.def("singular_test", [](const py::object& g, int s, const std::vector<std::int64_t>& n) {
    return singular_test(SurfaceSpec(to_poly(g), s, n));
  }, py::arg("g"), py::arg("s"), py::arg("n"));
  m.def("numeric_singular_test", [](const py::object& g, int s, const std::vector<std::int64_t>& n) {
    return oracle::numeric_singular_test(SurfaceSpec(to_poly(g), s, n));
  }, py::arg("g"), py::arg("s"), py::arg("n"));
  m.def("census", &census, py::arg("g"), py::arg("s"), py::arg("B"), py::arg("sample") = 20);
  m.def("points_on_surface", [](const py::object& g, int s, const std::vector<std::int64_t>& n, std::int64_t B,
                                bool disjoint_only) {
    const auto pts = points_on_surface(SurfaceSpec(to_poly(g), s, n), Progression::box(B),
                                       disjoint_only ? PointFilter::DisjointOnly : PointFilter::SurfaceConstraint);
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
    for (const auto& p : pts) out.emplace_back(p.y1, p.y2, p.y3);
    return out;
  }, py::arg("g"), py::arg("s"), py::arg("n"), py::arg("B"), py::arg("disjoint_only") = false);
  m.def("family_audit", [](const py::object& g, int s, const std::vector<std::int64_t>& n) {
    Json out = Json::array();
    for (const auto& c : family_audit(SurfaceSpec(to_poly(g), s, n))) out.push_back(curve_json(c));
    return out.dump();
  }, py::arg("g"), py::arg("s"), py::arg("n"));

  m.def("ladder", &ladder_py, py::arg("f"), py::arg("s"), py::arg("B_list"), py::arg("cache_dir") = py::none(),
        py::arg("compare") = false, py::arg("tolerance") = 0.15);
  m.def("fit_power_law", [](const std::vector<std::pair<double, double>>& samples) {
    const auto fit = fit_power_law(samples);
    py::dict d;
    d["sufficient"] = fit.sufficient;
    d["slope"] = fit.slope;
    d["slope_stderr"] = fit.slope_stderr;
    d["points"] = fit.points;
    return d;
  }, py::arg("samples"));
}
