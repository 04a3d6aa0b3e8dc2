#include "paucity/surface.hpp"

#include <algorithm>

#include "paucity/algebra.hpp"
#include "paucity/error.hpp"

namespace paucity {

namespace {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mod_prime(const BigInt& v) { return mpz_fdiv_ui(v.get_mpz_t(), kPrime); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

void check_s(int s) {
  if (s != 2 && s != 3) {
    throw Error(ErrorKind::UnsupportedS, "only s = 2 and s = 3 are supported, got s = " + std::to_string(s));
  }
}

}  // namespace

SurfaceSpec::SurfaceSpec(IntPolynomial g, int s, std::vector<std::int64_t> n) : g_(std::move(g)), s_(s), n_(std::move(n)) {
  check_s(s_);
  if (n_.size() != static_cast<std::size_t>(2 * s_ - 3)) {
    throw Error(ErrorKind::LengthMismatch, "surface needs 2s-3 = " + std::to_string(2 * s_ - 3) +
                                               " fixed coordinates, got " + std::to_string(n_.size()));
  }
  c_n_ = 0;
  for (std::size_t k = 0; k < n_.size(); ++k) c_n_ += eps(static_cast<int>(k) + 4) * eval(g_, n_[k]);
}

bool SurfaceSpec::consistent() const {
  BigInt c = 0;
  for (std::size_t k = 0; k < n_.size(); ++k) c += eps(static_cast<int>(k) + 4) * eval(g_, n_[k]);
  return c == c_n_;
}

CriticalSumPolynomial critical_value_polynomial(const IntPolynomial& g) {
  if (g.degree() < 2) throw Error(ErrorKind::InvalidArgument, "critical values need deg g >= 2");
  const IntPolynomial gp = derivative(g);
  const int nodes = gp.degree() + 1;
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(nodes));
  for (int z = 0; z < nodes; ++z) values.push_back(resultant(gp, IntPolynomial::constant(z) - g));
  CriticalSumPolynomial out;
  out.poly = squarefree_part(interpolate_integer_nodes(values));
  out.provenance = "sqfree(Res_x(g'(x), z-g(x))), interpolated at z=0.." + std::to_string(nodes - 1);
  return out;
}

IntPolynomial compose_sums(const IntPolynomial& P, const IntPolynomial& Q, int sign) {
  if (P.is_zero() || Q.is_zero()) throw Error(ErrorKind::InvalidArgument, "compose_sums needs nonzero polynomials");
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "compose_sums sign must be +1 or -1");
  if (P.degree() == 0 || Q.degree() == 0) return IntPolynomial::constant(1);
  const int nodes = P.degree() * Q.degree() + 1;
  std::vector<BigInt> values;
  values.reserve(static_cast<std::size_t>(nodes));
  for (int z = 0; z < nodes; ++z) {
    // Q(sign (z - u)) as a polynomial in u.
    const IntPolynomial shifted = compose(Q, IntPolynomial{static_cast<long>(sign * z), static_cast<long>(-sign)});
    values.push_back(resultant(P, shifted));
  }
  return squarefree_part(interpolate_integer_nodes(values));
}

CriticalSumTest::CriticalSumTest(const IntPolynomial& g, int s) : s_(s) {
  check_s(s);
  values_ = critical_value_polynomial(g);
  const IntPolynomial pairs = compose_sums(values_.poly, values_.poly, 1);
  const int eps3 = 3 <= s ? -1 : 1;
  sums_.poly = compose_sums(pairs, values_.poly, -eps3);
  sums_.provenance = "C=" + values_.provenance + "; C2=sqfree(C (+) C); S=sqfree(C2 " + (eps3 == 1 ? "(-)" : "(+)") + " C)";
  bound_ = root_bound(sums_.poly);
  for (const auto& c : sums_.poly.coeffs()) mod_coeffs_.push_back(mod_prime(c));
}

bool CriticalSumTest::is_critical_sum(const BigInt& c) const {
  if (sums_.poly.degree() < 1) return false;
  if (abs(c) > bound_) return false;
  const std::uint64_t x = mod_prime(c);
  std::uint64_t acc = 0;
  for (auto it = mod_coeffs_.rbegin(); it != mod_coeffs_.rend(); ++it) acc = (mulmod(acc, x) + *it) % kPrime;
  if (acc != 0) return false;
  return sgn(eval(sums_.poly, c)) == 0;
}

bool singular_test(const SurfaceSpec& spec, const CriticalSumTest& test) {
  if (test.s() != spec.s()) throw Error(ErrorKind::InvalidArgument, "critical-sum test built for a different s");
  return test.is_critical_sum(spec.c_n());
}

bool singular_test(const SurfaceSpec& spec) { return singular_test(spec, CriticalSumTest(spec.g(), spec.s())); }

CensusReport singular_census(const IntPolynomial& g, int s, const Progression& domain, std::size_t sample_limit) {
  check_s(s);
  const CriticalSumTest test(g, s);
  const auto points = domain.points();
  std::vector<BigInt> values;
  values.reserve(points.size());
  for (auto y : points) values.push_back(eval(g, y));

  CensusReport report;
  report.g = g;
  report.s = s;
  report.B = static_cast<std::int64_t>(domain.count);
  report.critical_sum_poly = test.polynomial().poly;

  std::vector<std::vector<std::int64_t>> singular;
  const std::size_t n = points.size();
  if (s == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      if (test.is_critical_sum(values[i])) {
        ++report.singular_count;
        singular.push_back({points[i]});
      }
    }
  } else {
    BigInt c;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
          c = values[i] + values[j] + values[k];
          if (!test.is_critical_sum(c)) continue;
          std::vector<std::int64_t> m{points[i], points[j], points[k]};
          std::sort(m.begin(), m.end());
          do {
            singular.push_back(m);
            ++report.singular_count;
          } while (std::next_permutation(m.begin(), m.end()));
        }
      }
    }
  }
  std::sort(singular.begin(), singular.end());
  if (singular.size() > sample_limit) singular.resize(sample_limit);
  report.singular_n_sample = std::move(singular);
  const double scale = s == 2 ? 1.0 : static_cast<double>(domain.count) * static_cast<double>(domain.count);
  report.normalized_count = static_cast<double>(report.singular_count) / scale;
  return report;
}

namespace {

bool keep_point(const SurfaceSpec& spec, std::int64_t y1, std::int64_t y2, std::int64_t y3, PointFilter filter) {
  if (spec.s() == 2 && (y3 == y1 || y3 == y2)) return false;
  if (filter == PointFilter::SurfaceConstraint) return true;
  std::vector<std::int64_t> lhs{y1, y2};
  std::vector<std::int64_t> rhs(spec.n());
  (spec.eps3() == 1 ? rhs : lhs).push_back(y3);
  for (auto a : lhs) {
    if (std::find(rhs.begin(), rhs.end(), a) != rhs.end()) return false;
  }
  return true;
}

// Indices k with g(points[k]) == target, found by bisection on the strictly increasing tail
// and a direct scan of the head.
std::vector<std::size_t> invert(const IntPolynomial& g, const std::vector<std::int64_t>& points, std::size_t tail_start,
                                const BigInt& target) {
  std::vector<std::size_t> hits;
  for (std::size_t k = 0; k < tail_start; ++k) {
    if (eval(g, points[k]) == target) hits.push_back(k);
  }
  std::size_t lo = tail_start;
  std::size_t hi = points.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (eval(g, points[mid]) < target) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < points.size() && eval(g, points[lo]) == target) hits.push_back(lo);
  return hits;
}

}  // namespace

std::vector<SurfacePoint> points_on_surface(const SurfaceSpec& spec, const Progression& domain, PointFilter filter,
                                            InversionMethod method) {
  const auto points = domain.points();
  const IntPolynomial& g = spec.g();
  std::vector<BigInt> values;
  values.reserve(points.size());
  for (auto y : points) values.push_back(eval(g, y));

  std::vector<std::pair<BigInt, std::size_t>> table;
  std::size_t tail_start = 0;
  if (method == InversionMethod::ValueTable) {
    for (std::size_t k = 0; k < points.size(); ++k) table.emplace_back(values[k], k);
    std::sort(table.begin(), table.end());
  } else {
    tail_start = points.empty() ? 0 : points.size() - 1;
    while (tail_start > 0 && values[tail_start - 1] < values[tail_start]) --tail_start;
  }

  std::vector<SurfacePoint> out;
  const int eps3 = spec.eps3();
  BigInt target;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      // g(y3) = eps3 (g(y1) + g(y2) - c_n)
      target = values[i] + values[j] - spec.c_n();
      if (eps3 < 0) target = -target;
      std::vector<std::size_t> hits;
      if (method == InversionMethod::ValueTable) {
        auto lo = std::lower_bound(table.begin(), table.end(), target,
                                   [](const auto& e, const BigInt& t) { return e.first < t; });
        for (auto it = lo; it != table.end() && it->first == target; ++it) hits.push_back(it->second);
      } else {
        hits = invert(g, points, tail_start, target);
      }
      for (auto k : hits) {
        if (keep_point(spec, points[i], points[j], points[k], filter)) out.push_back({points[i], points[j], points[k]});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Low-degree family audit.

namespace {

using RationalPoly = std::vector<BigRational>;

RationalPoly rp_mul(const RationalPoly& a, const RationalPoly& b) {
  if (a.empty() || b.empty()) return {};
  RationalPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void rp_add_scaled(RationalPoly& acc, const RationalPoly& p, const BigRational& c) {
  if (acc.size() < p.size()) acc.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += c * p[i];
}

RationalPoly component_poly(const std::array<BigRational, 3>& comp) { return {comp[0], comp[1], comp[2]}; }

// g evaluated at a rational polynomial in t.
RationalPoly substitute(const IntPolynomial& g, const RationalPoly& arg) {
  RationalPoly acc;
  const auto& c = g.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = rp_mul(acc, arg);
    if (acc.empty()) acc.resize(1);
    acc[0] += BigRational(*it);
  }
  return acc;
}

bool rp_is_zero(const RationalPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const BigRational& c) { return sgn(c) == 0; });
}

bool rp_is_constant(const RationalPoly& p) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (sgn(p[i]) != 0) return false;
  }
  return true;
}

int coordinate_sign(const SurfaceSpec& spec, int coord) { return coord == 2 ? -spec.eps3() : 1; }

bool same_component(const std::array<BigRational, 3>& a, const std::array<BigRational, 3>& b) { return a == b; }

bool opposite_component(const std::array<BigRational, 3>& a, const std::array<BigRational, 3>& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] != -b[i]) return false;
  }
  return true;
}

std::string family_name(int degree, int free_coord, int sigma) {
  const std::string t = degree == 1 ? "t" : "t^2";
  std::array<std::string, 3> names;
  bool first = true;
  for (int i = 0; i < 3; ++i) {
    if (i == free_coord) {
      names[static_cast<std::size_t>(i)] = "mu";
    } else {
      names[static_cast<std::size_t>(i)] = first ? t : (sigma > 0 ? t : "-" + t);
      first = false;
    }
  }
  return std::string(degree == 1 ? "line" : "conic") + "(" + names[0] + "," + names[1] + "," + names[2] + ")";
}

}  // namespace

bool curve_on_surface(const SurfaceSpec& spec, const ParametricCurve& curve) {
  RationalPoly total;
  for (int i = 0; i < 3; ++i) {
    rp_add_scaled(total, substitute(spec.g(), component_poly(curve.components[static_cast<std::size_t>(i)])),
                  BigRational(coordinate_sign(spec, i)));
  }
  if (total.empty()) total.resize(1);
  total[0] -= BigRational(spec.c_n());
  return rp_is_zero(total);
}

bool curve_can_carry_positive(const ParametricCurve& curve, int s) {
  const auto& c = curve.components;
  for (std::size_t i = 0; i < 3; ++i) {
    const bool constant = sgn(c[i][1]) == 0 && sgn(c[i][2]) == 0;
    if (constant && (sgn(c[i][0]) <= 0 || c[i][0].get_den() != 1)) return false;
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (opposite_component(c[i], c[j])) return false;
    }
  }
  if (s == 2 && (same_component(c[2], c[0]) || same_component(c[2], c[1]))) return false;
  return true;
}

std::vector<ParametricCurve> family_audit(const SurfaceSpec& spec) {
  std::vector<ParametricCurve> found;
  const IntPolynomial& g = spec.g();
  // The two moving coordinates are t-multiples (t or t^2) with ratio sigma in {+1,-1}; the
  // third coordinate is the constant mu. Leading-coefficient matching restricts the ratios
  // to {0, +1, -1}, so this catalogue is closed.
  for (int degree = 1; degree <= 2; ++degree) {
    for (int free_coord = 0; free_coord < 3; ++free_coord) {
      for (int sigma : {1, -1}) {
        ParametricCurve curve;
        curve.degree = degree;
        curve.family = family_name(degree, free_coord, sigma);
        bool first = true;
        for (int i = 0; i < 3; ++i) {
          if (i == free_coord) continue;
          curve.components[static_cast<std::size_t>(i)][static_cast<std::size_t>(degree)] = first ? 1 : sigma;
          first = false;
        }
        // t-dependent part must collapse to a constant K.
        RationalPoly moving;
        for (int i = 0; i < 3; ++i) {
          if (i == free_coord) continue;
          rp_add_scaled(moving, substitute(g, component_poly(curve.components[static_cast<std::size_t>(i)])),
                        BigRational(coordinate_sign(spec, i)));
        }
        if (!rp_is_constant(moving)) continue;
        const BigRational K = moving.empty() ? BigRational(0) : moving[0];
        // sign_free * g(mu) = c_n - K; K is an integer because g has integer coefficients.
        const int sign_free = coordinate_sign(spec, free_coord);
        BigInt rhs = spec.c_n() - K.get_num();
        if (sign_free < 0) rhs = -rhs;
        for (const auto& mu : rational_roots(g - IntPolynomial::constant(rhs))) {
          ParametricCurve c = curve;
          c.components[static_cast<std::size_t>(free_coord)][0] = mu;
          if (!curve_on_surface(spec, c)) continue;
          c.can_carry_positive = curve_can_carry_positive(c, spec.s());
          found.push_back(std::move(c));
        }
      }
    }
  }
  return found;
}

std::string format_curve_component(const std::array<BigRational, 3>& component) {
  std::string out;
  auto term = [&out](const BigRational& c, const std::string& var) {
    if (sgn(c) == 0) return;
    BigRational mag = abs(c);
    if (sgn(c) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (var.empty() || mag != 1) out += mag.get_str();
    out += var;
  };
  term(component[2], "t^2");
  term(component[1], "t");
  term(component[0], "");
  return out.empty() ? "0" : out;
}

}  // namespace paucity
