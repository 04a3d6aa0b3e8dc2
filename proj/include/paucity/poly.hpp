#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "paucity/bigint.hpp"

namespace paucity {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Index i of coeffs() is the coefficient of x^i; the highest stored
/// coefficient is nonzero (the zero polynomial stores nothing).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^i; zero past the degree.
  BigInt operator[](std::size_t i) const;
  const BigInt& leading() const;

  bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

BigInt eval(const IntPolynomial& p, const BigInt& x);
BigInt eval(const IntPolynomial& p, std::int64_t x);

IntPolynomial derivative(const IntPolynomial& p);

/// p(q(x)).
IntPolynomial compose(const IntPolynomial& p, const IntPolynomial& q);

IntPolynomial power(const IntPolynomial& p, unsigned exponent);

/// p(-x).
IntPolynomial reflect(const IntPolynomial& p);

/// Even part (p(x) + p(-x)) / 2 and odd part (p(x) - p(-x)) / 2.
IntPolynomial even_part(const IntPolynomial& p);
IntPolynomial odd_part(const IntPolynomial& p);

/// Result of parsing the polynomial text grammar. `variable` is the letter
/// used in monomial form, or '\0' for the comma-separated coefficient form.
struct ParsedPolynomial {
  IntPolynomial poly;
  char variable = '\0';
};

/// Accepts "0,0,3,1" (constant term first) or monomial sums like "x^3+3x^2",
/// "2*y^4 - 6 y^2 + 8y". Throws Error{ParseError}.
ParsedPolynomial parse_polynomial(const std::string& text);

/// Canonical monomial form, highest degree first: "x^3+3x^2", "y^3-27y", "0".
std::string format_polynomial(const IntPolynomial& p, char variable = 'x');

/// Canonical coefficient-list form, constant term first: "0,0,3,1".
std::string format_coefficients(const IntPolynomial& p);

}  // namespace paucity
