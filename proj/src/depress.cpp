#include "paucity/depress.hpp"

#include "paucity/error.hpp"

namespace paucity {

namespace {

// (u - shift)^k with exact binomials.
IntPolynomial shifted_power(const BigInt& shift, unsigned k) {
  std::vector<BigInt> v(k + 1);
  BigInt neg = -shift;
  for (unsigned j = 0; j <= k; ++j) v[j] = binomial(k, j) * pow_big(neg, k - j);
  return IntPolynomial(std::move(v));
}

}  // namespace

DepressedForm depress(const IntPolynomial& f) {
  const int d = f.degree();
  if (d < 3) {
    throw Error(ErrorKind::DegreeTooLow, "depression needs degree d >= 3, got degree " + std::to_string(d));
  }
  const BigInt& a0 = f.leading();
  if (sgn(a0) <= 0) {
    throw Error(ErrorKind::NonPositiveLeading, "depression needs leading coefficient a0 > 0, got " + a0.get_str());
  }
  const auto du = static_cast<unsigned>(d);
  const BigInt a1 = f[du - 1];
  const BigInt dd(static_cast<unsigned long>(d));

  // a0^(d-1) d^d f((u - a1)/(a0 d)) = sum_i a_i a0^(i-1) d^i (u - a1)^(d-i), with a_i the
  // coefficient of x^(d-i). The i = 0 term is (u - a1)^d, all others are integral.
  IntPolynomial G = shifted_power(a1, du);
  for (unsigned i = 1; i <= du; ++i) {
    const BigInt ai = f[du - i];
    if (sgn(ai) == 0) continue;
    BigInt weight = ai * pow_big(a0, i - 1) * pow_big(dd, i);
    G = G + weight * shifted_power(a1, du - i);
  }

  DepressedForm df;
  df.residual = G[0];
  df.g = G - IntPolynomial::constant(df.residual);
  df.scale = pow_big(a0, du - 1) * pow_big(dd, du);
  df.map_a = a0 * dd;
  df.map_b = a1;
  return df;
}

std::vector<std::int64_t> Progression::points() const {
  std::vector<std::int64_t> out;
  out.reserve(count);
  if (count == 0) return out;
  BigInt last = at(count - 1);
  if (!fits_i64(first) || !fits_i64(last)) {
    throw Error(ErrorKind::InvalidArgument, "progression leaves the 64-bit coordinate range");
  }
  const std::int64_t a = to_i64(first);
  const std::int64_t b = to_i64(step);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(a + b * static_cast<std::int64_t>(k));
  return out;
}

Progression image_domain(const DepressedForm& df, std::int64_t B) {
  if (B < 1) throw Error(ErrorKind::InvalidArgument, "box bound B must be >= 1");
  return {df.map_a + df.map_b, df.map_a, static_cast<std::uint64_t>(B)};
}

std::string format_map(const DepressedForm& df) {
  std::string out = "y=";
  if (df.map_a != 1) out += df.map_a.get_str();
  out += "x";
  if (sgn(df.map_b) > 0) out += "+" + df.map_b.get_str();
  if (sgn(df.map_b) < 0) out += df.map_b.get_str();
  return out;
}

}  // namespace paucity
