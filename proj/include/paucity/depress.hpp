#pragma once

#include <cstdint>
#include <vector>

#include "paucity/poly.hpp"

namespace paucity {

/// Depressed form of f of degree d with leading coefficient a0 and next coefficient a1:
///   scale * f(x) = g(map_a * x + map_b) + residual,
/// where scale = a0^(d-1) d^d, map_a = a0 d, map_b = a1 and g is monic with
/// vanishing y^(d-1) coefficient and zero constant term.
struct DepressedForm {
  IntPolynomial g;
  BigInt scale;
  BigInt map_a;
  BigInt map_b;
  BigInt residual;
};

/// Throws Error{DegreeTooLow} when deg f < 3 and Error{NonPositiveLeading} when a0 <= 0.
DepressedForm depress(const IntPolynomial& f);

/// Finite arithmetic progression first, first + step, ..., of `count` terms.
struct Progression {
  BigInt first;
  BigInt step;
  std::uint64_t count = 0;

  static Progression box(std::int64_t B) { return {BigInt(1), BigInt(1), static_cast<std::uint64_t>(B)}; }

  BigInt at(std::uint64_t k) const { return first + step * BigInt(static_cast<unsigned long>(k)); }

  /// All terms as machine integers; throws Error{InvalidArgument} if a term leaves int64 range.
  std::vector<std::int64_t> points() const;

  bool operator==(const Progression&) const = default;
};

/// {map_a x + map_b : 1 <= x <= B}.
Progression image_domain(const DepressedForm& df, std::int64_t B);

/// "y=3x+3" style text for the affine map.
std::string format_map(const DepressedForm& df);

}  // namespace paucity
