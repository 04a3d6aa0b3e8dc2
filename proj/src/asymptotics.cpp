#include "paucity/asymptotics.hpp"

#include <cmath>
#include <future>

#include "paucity/cache.hpp"
#include "paucity/error.hpp"

namespace paucity {

BoundProfile bound_profile(int d, int s) {
  if (d < 2) throw Error(ErrorKind::DegreeTooLow, "bound profile needs d >= 2");
  if (s != 2 && s != 3) throw Error(ErrorKind::UnsupportedS, "only s = 2 and s = 3 are supported");
  BoundProfile p;
  p.d = d;
  p.s = s;
  p.surface_exponent = 2.0 / std::sqrt(static_cast<double>(d)) + 1.0 / (d - 1);
  p.theorem_exponent = 2 * s - 3 + std::max(1.0 / 3.0, p.surface_exponent);
  if (s == 3) p.hua_exponent = 3.5;
  p.paucity_threshold = s;
  return p;
}

namespace {

Rung run_rung(const IntPolynomial& f, int s, std::int64_t B, const ResultCache* cache, const EnumerateOptions& options) {
  Rung rung;
  rung.B = B;
  const RunKey key = RunKey::make(f, s, B);
  if (cache) {
    if (auto hit = cache->load(key)) {
      rung.summary = *hit;
      rung.from_cache = true;
      return rung;
    }
  }
  try {
    rung.summary = enumerate(f, s, B, options);
    if (cache) cache->store(key, rung.summary);
  } catch (const Error& e) {
    rung.status = RungStatus::Failed;
    rung.error = std::string(error_kind_name(e.kind())) + ": " + e.what();
  }
  return rung;
}

}  // namespace

LadderReport run_ladder(const IntPolynomial& f, int s, const std::vector<std::int64_t>& B_list, const ResultCache* cache,
                        const LadderOptions& options) {
  if (B_list.size() < 2) throw Error(ErrorKind::InvalidArgument, "a ladder needs at least two rungs");
  for (std::size_t i = 0; i < B_list.size(); ++i) {
    if (B_list[i] < 1 || (i > 0 && B_list[i] <= B_list[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "ladder bounds must be positive and strictly increasing");
    }
  }
  LadderReport report;
  report.f = f;
  report.s = s;
  if (options.parallel_rungs) {
    std::vector<std::future<Rung>> pending;
    for (auto B : B_list) {
      pending.push_back(std::async(std::launch::async, run_rung, std::cref(f), s, B, cache, options.enumerate));
    }
    for (auto& p : pending) report.rungs.push_back(p.get());
  } else {
    for (auto B : B_list) report.rungs.push_back(run_rung(f, s, B, cache, options.enumerate));
  }
  report.fit = fit_exponent(report);
  return report;
}

FitResult fit_power_law(std::span<const std::pair<double, double>> samples) {
  std::vector<std::pair<double, double>> logs;
  for (const auto& [b, count] : samples) {
    if (b > 0 && count > 0) logs.emplace_back(std::log(b), std::log(count));
  }
  FitResult fit;
  fit.points = logs.size();
  if (logs.size() < 3) return fit;
  const double n = static_cast<double>(logs.size());
  double mx = 0;
  double my = 0;
  for (const auto& [x, y] : logs) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0;
  double sxy = 0;
  for (const auto& [x, y] : logs) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx <= 0) return fit;
  fit.sufficient = true;
  fit.slope = sxy / sxx;
  const double intercept = my - fit.slope * mx;
  double ssr = 0;
  for (const auto& [x, y] : logs) {
    const double r = y - (intercept + fit.slope * x);
    ssr += r * r;
  }
  fit.slope_stderr = std::sqrt(ssr / (n - 2) / sxx);
  return fit;
}

FitResult fit_exponent(const LadderReport& report) {
  std::vector<std::pair<double, double>> samples;
  for (const auto& r : report.rungs) {
    if (r.status == RungStatus::Ok) samples.emplace_back(static_cast<double>(r.B), static_cast<double>(r.summary.disjoint));
  }
  return fit_power_law(samples);
}

Verdict compare_bounds(const FitResult& fit, const BoundProfile& profile, double tolerance) {
  Verdict v;
  v.tolerance = tolerance;
  if (!fit.sufficient) return v;
  v.applicable = true;
  v.margin = profile.theorem_exponent - fit.slope;
  v.consistent_with_theorem = fit.slope <= profile.theorem_exponent + tolerance;
  if (profile.hua_exponent) {
    v.hua_margin = *profile.hua_exponent - fit.slope;
    v.consistent_with_hua = fit.slope <= *profile.hua_exponent + tolerance;
  }
  return v;
}

}  // namespace paucity
