#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iwgraph/integer.hpp"
#include "iwgraph/matrix.hpp"

namespace iwgraph {

/// Element of Z[zeta_N] for a prime-power conductor N = p^k, stored in the
/// power basis 1, zeta, ..., zeta^(phi(N)-1) with exact integer coefficients.
///
/// Conductor 1 holds the rational integers and mixes freely with every other
/// conductor. Mixed p-power conductors are lifted to the larger one before
/// arithmetic, so values coming from different character levels compare
/// correctly.
class CyclotomicInteger {
 public:
  CyclotomicInteger() : coeffs_{Integer(0)} {}
  CyclotomicInteger(int value) : coeffs_{Integer(value)} {}  // NOLINT implicit
  CyclotomicInteger(const Integer& value) : coeffs_{value} {}  // NOLINT implicit

  /// Builds the element with the given power-basis coefficients; coefficient
  /// count must equal phi(p^k).
  CyclotomicInteger(std::int64_t p, int k, std::vector<Integer> coeffs);

  /// zeta_{p^k}^e.
  static CyclotomicInteger zeta_power(std::int64_t p, int k, std::int64_t e);

  std::int64_t prime() const { return p_; }
  int exponent() const { return k_; }
  std::int64_t conductor() const { return k_ == 0 ? 1 : ipow64(p_, k_); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws if the element is not a rational integer.
  Integer rational_value() const;

  /// The same element written over conductor p^k (k >= current exponent).
  CyclotomicInteger lifted(std::int64_t p, int k) const;

  /// Galois action zeta -> zeta^t for t coprime to p.
  CyclotomicInteger galois(std::int64_t t) const;
  CyclotomicInteger conj() const { return galois(-1); }

  /// Field norm down to Q, computed as the product of all Galois conjugates.
  Integer norm() const;

  /// Exact quotient a / b in Z[zeta]; throws std::domain_error when b does
  /// not divide a.
  static CyclotomicInteger exact_div(const CyclotomicInteger& a, const CyclotomicInteger& b);

  CyclotomicInteger operator-() const;
  friend CyclotomicInteger operator+(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend CyclotomicInteger operator-(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b);

  std::string to_string() const;

 private:
  std::int64_t p_ = 0;
  int k_ = 0;
  std::vector<Integer> coeffs_;

  static void common_level(const CyclotomicInteger& a, const CyclotomicInteger& b,
                           std::int64_t& p, int& k);
  static CyclotomicInteger from_cyclic(std::int64_t p, int k, std::vector<Integer> full);
};

template <>
struct RingTraits<CyclotomicInteger> {
  static bool is_zero(const CyclotomicInteger& x) { return x.is_zero(); }
  static CyclotomicInteger exact_div(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    return CyclotomicInteger::exact_div(a, b);
  }
};

using CycMatrix = Matrix<CyclotomicInteger>;

}  // namespace iwgraph
