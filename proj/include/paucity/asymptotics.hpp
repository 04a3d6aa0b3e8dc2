#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paucity/enumerate.hpp"

namespace paucity {

class ResultCache;

enum class RungStatus { Ok, Failed };

struct Rung {
  std::int64_t B = 0;
  RungStatus status = RungStatus::Ok;
  CountSummary summary;
  std::string error;
  bool from_cache = false;
};

/// Least-squares slope of log(disjoint count) against log B. Only rungs with a positive
/// disjoint count take part; fewer than three such rungs leave the fit insufficient.
struct FitResult {
  bool sufficient = false;
  double slope = 0.0;
  double slope_stderr = 0.0;
  std::size_t points = 0;
};

struct LadderReport {
  IntPolynomial f;
  int s = 0;
  std::vector<Rung> rungs;
  FitResult fit;
};

/// Growth exponents the measured slope is compared against.
struct BoundProfile {
  int d = 0;
  int s = 0;
  /// 2/sqrt(d) + 1/(d-1), the surface-count exponent.
  double surface_exponent = 0.0;
  /// 2s - 3 + max(1/3, surface_exponent).
  double theorem_exponent = 0.0;
  /// 7/2, only for s = 3.
  std::optional<double> hua_exponent;
  /// s: the exponent of the trivial solutions.
  double paucity_threshold = 0.0;
};

BoundProfile bound_profile(int d, int s);

struct Verdict {
  bool applicable = false;
  bool consistent_with_theorem = true;
  /// theorem_exponent - slope.
  double margin = 0.0;
  std::optional<bool> consistent_with_hua;
  std::optional<double> hua_margin;
  double tolerance = 0.15;
};

struct LadderOptions {
  EnumerateOptions enumerate;
  bool parallel_rungs = false;
};

/// Runs one enumeration per B, reusing cached rungs and storing fresh ones as they finish,
/// so an interrupted ladder resumes where it stopped. A failing rung is marked and skipped.
LadderReport run_ladder(const IntPolynomial& f, int s, const std::vector<std::int64_t>& B_list, const ResultCache* cache,
                        const LadderOptions& options = {});

FitResult fit_exponent(const LadderReport& report);

/// Same fit on raw (B, count) pairs; nonpositive counts are excluded.
FitResult fit_power_law(std::span<const std::pair<double, double>> samples);

/// Consistent iff slope <= theorem_exponent + tolerance. Never a confirmation of an
/// asymptotic statement, only the absence of a contradiction at this scale.
Verdict compare_bounds(const FitResult& fit, const BoundProfile& profile, double tolerance = 0.15);

}  // namespace paucity
