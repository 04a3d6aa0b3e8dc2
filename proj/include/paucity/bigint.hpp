#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace paucity {

using BigInt = mpz_class;
using BigRational = mpq_class;
using Int128 = __int128;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline BigInt big_from_string(const std::string& text) { return BigInt(text, 10); }

inline BigInt big_from_i64(std::int64_t v) {
  BigInt r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline bool fits_i64(const BigInt& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

inline std::int64_t to_i64(const BigInt& v) { return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t())); }

/// Bit length of |v| (0 for v = 0).
inline std::size_t bit_length(const BigInt& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

/// Narrowing to __int128; empty when |v| >= 2^126 so that sums of a few values stay in range.
inline std::optional<Int128> to_int128(const BigInt& v) {
  if (bit_length(v) > 125) return std::nullopt;
  BigInt a = abs(v);
  const BigInt hi = a >> 64;
  const BigInt lo = a - (hi << 64);
  unsigned __int128 mag = (static_cast<unsigned __int128>(mpz_get_ui(hi.get_mpz_t())) << 64) |
                          static_cast<unsigned __int128>(mpz_get_ui(lo.get_mpz_t()));
  Int128 r = static_cast<Int128>(mag);
  return sgn(v) < 0 ? -r : r;
}

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace paucity
