#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "paucity/enumerate.hpp"
#include "paucity/surface.hpp"

namespace paucity::oracle {

/// Reference implementations for revalidating the fast paths. Single-threaded.
struct OracleConfig {
  std::int64_t max_B_s2 = 30;
  std::int64_t max_B_s3 = 12;
  double numeric_precision = 1e-10;
  /// Scaled by max(1, |c_n|).
  double membership_tolerance = 1e-6;
};

/// Direct 2s-nested loop over [1,B]^(2s). Throws Error{BudgetExceeded} past the configured maxima.
CountSummary brute_counts(const IntPolynomial& f, int s, std::int64_t B, const OracleConfig& config = {});

/// Census of multiset-equal (trivial) 2s-tuples by nested loops.
std::uint64_t brute_trivial_count(int s, std::int64_t B);

/// All complex roots of p (Aberth-Ehrlich iteration, then Newton polishing).
/// Throws Error{ConvergenceFailure}.
std::vector<std::complex<double>> numeric_roots(const IntPolynomial& p, double precision = 1e-10);

/// Forms every signed sum g(xi1) + g(xi2) - eps3 g(xi3) over numeric critical points and tests
/// c_n against them at the membership tolerance.
bool numeric_singular_test(const SurfaceSpec& spec, const OracleConfig& config = {});

}  // namespace paucity::oracle
