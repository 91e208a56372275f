#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace iwgraph {

using Integer = mpz_class;

/// p-adic valuation of a nonzero integer. Returns nullopt for zero.
inline std::optional<std::int64_t> valuation(const Integer& x, std::int64_t p) {
  if (x == 0) return std::nullopt;
  Integer q = abs(x);
  const Integer prime(static_cast<long>(p));
  std::int64_t v = 0;
  while (mpz_divisible_p(q.get_mpz_t(), prime.get_mpz_t())) {
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), prime.get_mpz_t());
    ++v;
  }
  return v;
}

inline Integer ipow(std::int64_t base, std::uint64_t exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                static_cast<unsigned long>(exp));
  if (base < 0 && (exp & 1U)) r = -r;
  return r;
}

inline bool fits_int64(const Integer& x) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return x >= lo && x <= hi;
}

inline std::int64_t to_int64(const Integer& x) {
  return std::stoll(x.get_str());
}

inline Integer from_int64(std::int64_t v) {
  return Integer(std::to_string(v));
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::int64_t ipow64(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace iwgraph
