#include "paucity/algebra.hpp"

#include <algorithm>

#include "paucity/error.hpp"

namespace paucity {

namespace {

// Largest |root| scan we accept in the integer root search.
constexpr unsigned long kMaxRootScan = 1UL << 26;

BigInt ceil_root(const BigInt& v, unsigned long k) {
  BigInt r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0) r += 1;
  return r;
}

BigInt divide_coefficients(const BigInt& c, const BigInt& d) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return q;
}

IntPolynomial divide_all(const IntPolynomial& p, const BigInt& d) {
  std::vector<BigInt> v(p.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = divide_coefficients(p.coeffs()[i], d);
  return IntPolynomial(std::move(v));
}

}  // namespace

BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  if (sgn(p.leading()) < 0) c = -c;
  return c == 1 ? p : divide_all(p, c);
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const BigInt& lb = bc.back();
  int e = a.degree() - b.degree() + 1;
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    const BigInt lr = r.back();
    for (auto& c : r) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) mpz_submul(r[shift + i].get_mpz_t(), lr.get_mpz_t(), bc[i].get_mpz_t());
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    --e;
  }
  if (e > 0) {
    const BigInt f = pow_big(lb, static_cast<unsigned long>(e));
    for (auto& c : r) c *= f;
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<BigInt> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = r[k + db];
    if (sgn(top) != 0) {
      if (!mpz_divisible_p(top.get_mpz_t(), bc.back().get_mpz_t())) {
        throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
      }
      q[k] = divide_coefficients(top, bc.back());
      for (std::size_t i = 0; i <= db; ++i) mpz_submul(r[k + i].get_mpz_t(), q[k].get_mpz_t(), bc[i].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (sgn(r[i]) != 0) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPolynomial A = primitive_part(a);
  IntPolynomial B = primitive_part(b);
  if (A.degree() < B.degree()) std::swap(A, B);
  while (B.degree() > 0) {
    IntPolynomial R = pseudo_remainder(A, B);
    A = std::move(B);
    B = primitive_part(R);
  }
  if (B.is_zero()) return primitive_part(A);
  return IntPolynomial::constant(1);
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return IntPolynomial::constant(1);
  IntPolynomial pp = primitive_part(p);
  IntPolynomial g = gcd(pp, derivative(pp));
  return primitive_part(divide_exact(pp, g));
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.degree() < 1) return !p.is_zero();
  return gcd(p, derivative(p)).degree() == 0;
}

BigInt resultant(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0) return pow_big(a.leading(), static_cast<unsigned long>(b.degree()));
  if (b.degree() == 0) return pow_big(b.leading(), static_cast<unsigned long>(a.degree()));

  const BigInt ca = content(a);
  const BigInt cb = content(b);
  IntPolynomial A = divide_all(a, ca);
  IntPolynomial B = divide_all(b, cb);
  const BigInt t = pow_big(ca, static_cast<unsigned long>(b.degree())) * pow_big(cb, static_cast<unsigned long>(a.degree()));

  int sign = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
  }
  BigInt g = 1;
  BigInt h = 1;
  for (;;) {
    const auto delta = static_cast<unsigned long>(A.degree() - B.degree());
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    IntPolynomial R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    B = divide_all(R, g * pow_big(h, delta));
    g = A.leading();
    if (delta > 0) h = divide_coefficients(pow_big(g, delta), pow_big(h, delta - 1));
    if (B.degree() == 0) {
      const auto da = static_cast<unsigned long>(A.degree());
      h = divide_coefficients(pow_big(B.leading(), da), pow_big(h, da - 1));
      return sign * t * h;
    }
  }
}

IntPolynomial interpolate_integer_nodes(const std::vector<BigInt>& values) {
  if (values.empty()) return {};
  const std::size_t n = values.size();
  std::vector<BigRational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = values[i];
  for (std::size_t k = 1; k < n; ++k) {
    const BigRational step(static_cast<unsigned long>(k));
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / step;
      if (i == k) break;
    }
  }
  // Horner on the Newton form: P = dd[n-1]; P = P (z - k) + dd[k].
  std::vector<BigRational> poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<BigRational> next(poly.size() + 1);
    const BigRational node(static_cast<unsigned long>(k));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= node * poly[i];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  std::vector<BigInt> out(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    poly[i].canonicalize();
    if (poly[i].get_den() != 1) throw Error(ErrorKind::InvalidArgument, "interpolant has non-integer coefficients");
    out[i] = poly[i].get_num();
  }
  return IntPolynomial(std::move(out));
}

BigInt root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return 0;
  const auto n = static_cast<unsigned long>(p.degree());
  const BigInt lead = abs(p.leading());
  BigInt best = 0;
  for (unsigned long k = 1; k <= n; ++k) {
    BigInt c = abs(p[n - k]);
    if (sgn(c) == 0) continue;
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    BigInt r = ceil_root(q, k);
    if (r > best) best = r;
  }
  return 2 * best;
}

std::vector<BigRational> rational_roots(const IntPolynomial& p) {
  std::vector<BigRational> roots;
  if (p.degree() < 1) return roots;
  // Strip the factor x^k.
  std::size_t low = 0;
  while (sgn(p.coeffs()[low]) == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  IntPolynomial q(std::vector<BigInt>(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end()));
  q = primitive_part(q);
  if (q.degree() < 1) return roots;

  // u = lead * x turns q into a monic integer polynomial m(u) = lead^(n-1) q(u / lead).
  const auto n = static_cast<unsigned long>(q.degree());
  const BigInt lead = q.leading();
  std::vector<BigInt> mc(n + 1);
  for (unsigned long i = 0; i <= n; ++i) mc[i] = q[i] * pow_big(lead, n - i) / lead;
  mc[n] = 1;
  IntPolynomial monic(std::move(mc));

  const BigInt bound = root_bound(monic);
  if (bound > BigInt(static_cast<unsigned long>(kMaxRootScan))) {
    throw Error(ErrorKind::RootSearchTooLarge, "integer root bound " + bound.get_str() + " is too large to scan");
  }
  const BigInt c0 = monic[0];
  const long limit = static_cast<long>(bound.get_si());
  BigInt u;
  for (long cand = -limit; cand <= limit; ++cand) {
    if (cand == 0) continue;
    if (!mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(cand < 0 ? -cand : cand))) continue;
    u = cand;
    if (sgn(eval(monic, u)) == 0) {
      BigRational r(u, lead);
      r.canonicalize();
      roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace paucity
