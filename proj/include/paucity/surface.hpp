#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "paucity/depress.hpp"
#include "paucity/poly.hpp"

namespace paucity {

/// The surface g(y1) + g(y2) - eps3 g(y3) = c_n obtained by fixing the last 2s-3
/// coordinates of the 2s-variable equation at n = (n4, ..., n_2s). Signs follow
/// eps_i = -1 for i <= s and +1 for i > s.
class SurfaceSpec {
 public:
  SurfaceSpec(IntPolynomial g, int s, std::vector<std::int64_t> n);

  const IntPolynomial& g() const { return g_; }
  int s() const { return s_; }
  const std::vector<std::int64_t>& n() const { return n_; }
  int eps3() const { return eps(3); }
  const BigInt& c_n() const { return c_n_; }

  /// eps_i for 1 <= i <= 2s.
  int eps(int i) const { return i <= s_ ? -1 : 1; }

  /// Recomputes c_n from n and g.
  bool consistent() const;

 private:
  IntPolynomial g_;
  int s_;
  std::vector<std::int64_t> n_;
  BigInt c_n_;
};

/// Squarefree integer polynomial in z whose roots are a family of signed sums of
/// critical values, with a note of how it was built.
struct CriticalSumPolynomial {
  IntPolynomial poly;
  std::string provenance;
};

/// Squarefree part of Res_x(g'(x), z - g(x)); roots are the critical values of g.
CriticalSumPolynomial critical_value_polynomial(const IntPolynomial& g);

/// Squarefree part of Res_u(P(u), Q(sign (z - u))); roots are {p + sign q}.
IntPolynomial compose_sums(const IntPolynomial& P, const IntPolynomial& Q, int sign);

/// The polynomial S whose roots are g(xi1) + g(xi2) - eps3 g(xi3) over critical points.
/// Built once per (g, s); membership queries are exact with a modular prefilter.
class CriticalSumTest {
 public:
  CriticalSumTest(const IntPolynomial& g, int s);

  const CriticalSumPolynomial& polynomial() const { return sums_; }
  const CriticalSumPolynomial& critical_values() const { return values_; }
  int s() const { return s_; }

  /// Exactly S(c) == 0.
  bool is_critical_sum(const BigInt& c) const;

 private:
  int s_;
  CriticalSumPolynomial values_;
  CriticalSumPolynomial sums_;
  BigInt bound_;
  std::vector<std::uint64_t> mod_coeffs_;
};

/// True iff the surface is singular, i.e. c_n is a signed critical sum.
bool singular_test(const SurfaceSpec& spec);
bool singular_test(const SurfaceSpec& spec, const CriticalSumTest& test);

struct CensusReport {
  IntPolynomial g;
  int s = 0;
  std::int64_t B = 0;
  bool on_image = false;
  /// Ordered n in the box (or image progression) with a singular surface.
  std::uint64_t singular_count = 0;
  /// First singular n in lexicographic order, at most `sample_limit` of them.
  std::vector<std::vector<std::int64_t>> singular_n_sample;
  IntPolynomial critical_sum_poly;
  /// singular_count / B^(2s-4).
  double normalized_count = 0.0;
};

/// Census of singular surfaces over n in domain^(2s-3).
CensusReport singular_census(const IntPolynomial& g, int s, const Progression& domain, std::size_t sample_limit = 20);

enum class PointFilter {
  /// Only the s = 2 rule y3 not in {y1, y2}.
  SurfaceConstraint,
  /// Additionally require the full 2s-tuple to have disjoint sides.
  DisjointOnly,
};

enum class InversionMethod { ValueTable, MonotoneInversion };

struct SurfacePoint {
  std::int64_t y1, y2, y3;
  auto operator<=>(const SurfacePoint&) const = default;
};

/// Points (y1, y2, y3) with coordinates in `domain` on the surface, in lexicographic order.
std::vector<SurfacePoint> points_on_surface(const SurfaceSpec& spec, const Progression& domain,
                                            PointFilter filter = PointFilter::SurfaceConstraint,
                                            InversionMethod method = InversionMethod::ValueTable);

/// Curve (kappa_i t^2 + lambda_i t + mu_i)_{i=1..3} with rational coefficients.
struct ParametricCurve {
  int degree = 1;
  /// components[i] = {mu, lambda, kappa}, constant term first.
  std::array<std::array<BigRational, 3>, 3> components;
  std::string family;
  /// False when every point of the curve violates positivity or the s = 2 rule.
  bool can_carry_positive = false;

  bool operator==(const ParametricCurve&) const = default;
};

/// Lines and conics of the closed low-degree catalogue contained in the surface.
std::vector<ParametricCurve> family_audit(const SurfaceSpec& spec);

/// Substitutes the curve into g(y1) + g(y2) - eps3 g(y3) - c_n; true iff that vanishes identically.
bool curve_on_surface(const SurfaceSpec& spec, const ParametricCurve& curve);

/// Sign analysis: whether any point of the curve can be counted (all coordinates positive,
/// and y3 outside {y1, y2} for s = 2).
bool curve_can_carry_positive(const ParametricCurve& curve, int s);

std::string format_curve_component(const std::array<BigRational, 3>& component);

}  // namespace paucity
