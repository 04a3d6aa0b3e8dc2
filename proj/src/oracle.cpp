#include "paucity/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "paucity/algebra.hpp"
#include "paucity/error.hpp"

namespace paucity::oracle {

namespace {

using Complex = std::complex<long double>;

// All ordered s-tuples over [1,B] in lexicographic order.
std::vector<std::vector<std::int64_t>> ordered_tuples(int s, std::int64_t B) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> t(static_cast<std::size_t>(s), 1);
  for (;;) {
    out.push_back(t);
    int k = s - 1;
    while (k >= 0 && t[static_cast<std::size_t>(k)] == B) t[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++t[static_cast<std::size_t>(k)];
  }
  return out;
}

Complex horner(const std::vector<long double>& c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

CountSummary brute_counts(const IntPolynomial& f, int s, std::int64_t B, const OracleConfig& config) {
  if (s != 2 && s != 3) throw Error(ErrorKind::UnsupportedS, "brute force supports s = 2 and s = 3 only");
  if (B < 1) throw Error(ErrorKind::InvalidArgument, "box bound B must be >= 1");
  const std::int64_t max_b = s == 2 ? config.max_B_s2 : config.max_B_s3;
  if (B > max_b) {
    throw Error(ErrorKind::BudgetExceeded, "brute force for s = " + std::to_string(s) + " is limited to B <= " +
                                               std::to_string(max_b) + ", got B = " + std::to_string(B));
  }
  std::vector<BigInt> value(static_cast<std::size_t>(B) + 1);
  for (std::int64_t x = 1; x <= B; ++x) value[static_cast<std::size_t>(x)] = eval(f, x);

  const auto tuples = ordered_tuples(s, B);
  std::vector<BigInt> sums;
  sums.reserve(tuples.size());
  for (const auto& t : tuples) {
    BigInt acc = 0;
    for (auto x : t) acc += value[static_cast<std::size_t>(x)];
    sums.push_back(acc);
  }

  CountSummary out;
  out.s = s;
  out.B = B;
  out.polynomial = f;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (std::size_t j = 0; j < tuples.size(); ++j) {
      if (cmp(sums[i], sums[j]) != 0) continue;
      ++out.total;
      switch (classify(tuples[i], tuples[j])) {
        case SolutionClass::Trivial:
          ++out.trivial;
          break;
        case SolutionClass::Shared:
          ++out.shared;
          break;
        case SolutionClass::Disjoint:
          ++out.disjoint;
          break;
      }
    }
  }
  return out;
}

std::uint64_t brute_trivial_count(int s, std::int64_t B) {
  const auto tuples = ordered_tuples(s, B);
  std::vector<std::vector<std::int64_t>> sorted = tuples;
  for (auto& t : sorted) std::sort(t.begin(), t.end());
  std::uint64_t count = 0;
  for (const auto& a : sorted) {
    for (const auto& b : sorted) count += a == b ? 1 : 0;
  }
  return count;
}

std::vector<std::complex<double>> numeric_roots(const IntPolynomial& p, double precision) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  const long double lead = p.leading().get_d();
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)].get_d() / lead;
  std::vector<long double> dc(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) dc[static_cast<std::size_t>(i - 1)] = c[static_cast<std::size_t>(i)] * i;

  // Fujiwara radius for the starting circle.
  long double radius = 0;
  for (int k = 1; k <= n; ++k) {
    radius = std::max(radius, std::pow(std::fabs(c[static_cast<std::size_t>(n - k)]), 1.0L / k));
  }
  radius = std::max(radius, 1.0L);

  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }

  bool converged = false;
  for (int iter = 0; iter < 2000 && !converged; ++iter) {
    converged = true;
    for (int k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      const Complex pv = horner(c, zk);
      if (std::abs(pv) == 0) continue;
      const Complex ratio = pv / horner(dc, zk);
      Complex repulsion = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0L / (zk - z[static_cast<std::size_t>(j)]);
      }
      const Complex step = ratio / (1.0L - ratio * repulsion);
      zk -= step;
      if (std::abs(step) > precision * std::max<long double>(1, std::abs(zk))) converged = false;
    }
  }
  if (!converged) throw Error(ErrorKind::ConvergenceFailure, "Aberth iteration did not converge");

  std::vector<std::complex<double>> out;
  out.reserve(z.size());
  for (auto zk : z) {
    // Newton polishing.
    for (int k = 0; k < 3; ++k) {
      const Complex d = horner(dc, zk);
      if (std::abs(d) == 0) break;
      zk -= horner(c, zk) / d;
    }
    out.emplace_back(static_cast<double>(zk.real()), static_cast<double>(zk.imag()));
  }
  return out;
}

bool numeric_singular_test(const SurfaceSpec& spec, const OracleConfig& config) {
  const IntPolynomial& g = spec.g();
  // Distinct critical points: roots of the squarefree part of g'.
  const auto xi = numeric_roots(squarefree_part(derivative(g)), config.numeric_precision);
  std::vector<long double> gc(g.coeffs().size());
  for (std::size_t i = 0; i < gc.size(); ++i) gc[i] = g.coeffs()[i].get_d();
  std::vector<Complex> values;
  for (const auto& x : xi) values.push_back(horner(gc, Complex(x.real(), x.imag())));

  const long double c = spec.c_n().get_d();
  const long double tol = config.membership_tolerance * std::max<long double>(1, std::fabs(c));
  const long double eps3 = spec.eps3();
  for (const auto& a : values) {
    for (const auto& b : values) {
      for (const auto& v : values) {
        if (std::abs(a + b - eps3 * v - Complex(c, 0)) <= tol) return true;
      }
    }
  }
  return false;
}

}  // namespace paucity::oracle
