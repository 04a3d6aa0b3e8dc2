#include "paucity/report.hpp"

#include <cmath>

#include "paucity/error.hpp"

namespace paucity {

Json counts_json(const CountSummary& summary, std::optional<double> elapsed_ms) {
  Json j;
  j["schema"] = kSchema;
  j["poly"] = format_polynomial(summary.polynomial, 'x');
  j["poly_coeffs"] = format_coefficients(summary.polynomial);
  j["d"] = summary.polynomial.degree();
  j["s"] = summary.s;
  j["B"] = summary.B;
  j["counts"] = {{"total", summary.total},
                 {"trivial", summary.trivial},
                 {"shared", summary.shared},
                 {"disjoint", summary.disjoint}};
  if (elapsed_ms) j["elapsed_ms"] = std::round(*elapsed_ms * 1000.0) / 1000.0;
  return j;
}

CountSummary counts_from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != kSchema) throw Error(ErrorKind::ParseError, "unknown schema");
  CountSummary s;
  s.polynomial = parse_polynomial(j.at("poly_coeffs").get<std::string>()).poly;
  s.s = j.at("s").get<int>();
  s.B = j.at("B").get<std::int64_t>();
  const auto& c = j.at("counts");
  s.total = c.at("total").get<std::uint64_t>();
  s.trivial = c.at("trivial").get<std::uint64_t>();
  s.shared = c.at("shared").get<std::uint64_t>();
  s.disjoint = c.at("disjoint").get<std::uint64_t>();
  if (s.total != s.trivial + s.shared + s.disjoint) throw Error(ErrorKind::ParseError, "counts do not partition total");
  return s;
}

Json depressed_json(const IntPolynomial& f, const DepressedForm& df) {
  Json j;
  j["schema"] = kSchema;
  j["f"] = format_polynomial(f, 'x');
  j["d"] = f.degree();
  j["g"] = format_polynomial(df.g, 'y');
  j["g_coeffs"] = format_coefficients(df.g);
  j["map"] = format_map(df);
  j["map_a"] = df.map_a.get_str();
  j["map_b"] = df.map_b.get_str();
  j["residual"] = df.residual.get_str();
  j["scale"] = df.scale.get_str();
  return j;
}

Json census_json(const CensusReport& report) {
  Json j;
  j["schema"] = kSchema;
  j["g"] = format_polynomial(report.g, 'y');
  j["s"] = report.s;
  j["B"] = report.B;
  j["domain"] = report.on_image ? "image" : "box";
  j["singular_count"] = report.singular_count;
  Json sample = Json::array();
  for (const auto& n : report.singular_n_sample) {
    if (n.size() == 1) {
      sample.push_back(n[0]);
    } else {
      sample.push_back(n);
    }
  }
  j["singular_n_sample"] = sample;
  if (report.s == 3) j["count_over_B2"] = report.normalized_count;
  j["critical_sum_poly"] = format_polynomial(report.critical_sum_poly, 'z');
  j["critical_sum_degree"] = report.critical_sum_poly.degree();
  return j;
}

Json curve_json(const ParametricCurve& curve) {
  Json j;
  j["family"] = curve.family;
  j["degree"] = curve.degree;
  Json comps = Json::array();
  for (const auto& comp : curve.components) {
    Json coeffs = Json::array();
    for (const auto& c : comp) {
      BigRational r = c;
      r.canonicalize();
      coeffs.push_back(Json::array({r.get_num().get_str(), r.get_den().get_str()}));
    }
    comps.push_back(coeffs);
  }
  j["components"] = comps;
  j["text"] = Json::array({format_curve_component(curve.components[0]), format_curve_component(curve.components[1]),
                           format_curve_component(curve.components[2])});
  j["can_carry_positive"] = curve.can_carry_positive;
  return j;
}

Json ladder_json(const LadderReport& report, const std::optional<BoundProfile>& profile,
                 const std::optional<Verdict>& verdict) {
  Json j;
  j["schema"] = kSchema;
  j["poly"] = format_polynomial(report.f, 'x');
  j["d"] = report.f.degree();
  j["s"] = report.s;
  Json rungs = Json::array();
  for (const auto& r : report.rungs) {
    Json rung;
    rung["B"] = r.B;
    rung["status"] = r.status == RungStatus::Ok ? "OK" : "FAILED";
    if (r.status == RungStatus::Ok) {
      rung["counts"] = {{"total", r.summary.total},
                        {"trivial", r.summary.trivial},
                        {"shared", r.summary.shared},
                        {"disjoint", r.summary.disjoint}};
    } else {
      rung["error"] = r.error;
    }
    rungs.push_back(rung);
  }
  j["rungs"] = rungs;
  Json fit;
  fit["status"] = report.fit.sufficient ? "OK" : "INSUFFICIENT";
  fit["points"] = report.fit.points;
  if (report.fit.sufficient) {
    fit["slope"] = report.fit.slope;
    fit["slope_stderr"] = report.fit.slope_stderr;
  }
  j["fit"] = fit;
  if (profile) {
    Json p;
    p["surface_exponent"] = profile->surface_exponent;
    p["theorem_exponent"] = profile->theorem_exponent;
    p["hua_exponent"] = profile->hua_exponent ? Json(*profile->hua_exponent) : Json(nullptr);
    p["paucity_threshold"] = profile->paucity_threshold;
    j["profile"] = p;
  }
  if (verdict) {
    Json v;
    v["applicable"] = verdict->applicable;
    v["tolerance"] = verdict->tolerance;
    if (verdict->applicable) {
      v["consistent_with_theorem"] = verdict->consistent_with_theorem;
      v["margin"] = verdict->margin;
      if (verdict->consistent_with_hua) {
        v["consistent_with_hua"] = *verdict->consistent_with_hua;
        v["hua_margin"] = *verdict->hua_margin;
      }
    }
    j["verdict"] = v;
  }
  return j;
}

void write_ladder_tsv(std::ostream& out, const LadderReport& report) {
  out << "B\ttotal\ttrivial\tshared\tdisjoint\n";
  for (const auto& r : report.rungs) {
    if (r.status != RungStatus::Ok) continue;
    out << r.B << '\t' << r.summary.total << '\t' << r.summary.trivial << '\t' << r.summary.shared << '\t'
        << r.summary.disjoint << '\n';
  }
}

void write_solutions_csv_header(std::ostream& out, int s) {
  for (int i = 1; i <= 2 * s; ++i) out << 'x' << i << ',';
  out << "class\n";
}

void write_solution_csv_row(std::ostream& out, const SolutionRecord& record) {
  for (auto v : record.lhs) out << v << ',';
  for (auto v : record.rhs) out << v << ',';
  out << class_name(record.cls) << '\n';
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace paucity
