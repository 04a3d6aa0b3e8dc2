#pragma once

#include <vector>

#include "paucity/poly.hpp"

namespace paucity {

/// gcd of the coefficients (nonnegative; 0 for the zero polynomial).
BigInt content(const IntPolynomial& p);

/// p / content(p), normalized to a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

/// lc(b)^(deg a - deg b + 1) * a = q * b + r with deg r < deg b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b over Z; throws Error{InvalidArgument} if b does not divide a.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive squarefree part p / gcd(p, p'), positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

bool is_squarefree(const IntPolynomial& p);

/// Resultant of a and b by the subresultant PRS (fraction-free; exact divisions only).
BigInt resultant(const IntPolynomial& a, const IntPolynomial& b);

/// Unique polynomial of degree <= values.size()-1 through (k, values[k]), k = 0, 1, ...;
/// throws Error{InvalidArgument} if the interpolant does not have integer coefficients.
IntPolynomial interpolate_integer_nodes(const std::vector<BigInt>& values);

/// Distinct rational roots of p, ascending. Integer candidates are searched up to a
/// Fujiwara-type root bound; throws Error{RootSearchTooLarge} if that bound is unreasonably big.
std::vector<BigRational> rational_roots(const IntPolynomial& p);

/// Upper bound on |root| for every complex root of p (Fujiwara bound, rounded up).
BigInt root_bound(const IntPolynomial& p);

}  // namespace paucity
