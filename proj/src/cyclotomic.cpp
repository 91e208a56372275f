#include "iwgraph/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace iwgraph {
namespace {

std::int64_t phi_prime_power(std::int64_t p, int k) {
  return k == 0 ? 1 : (p - 1) * ipow64(p, k - 1);
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

CyclotomicInteger::CyclotomicInteger(std::int64_t p, int k, std::vector<Integer> coeffs)
    : p_(k == 0 ? 0 : p), k_(k), coeffs_(std::move(coeffs)) {
  if (k < 0) throw std::invalid_argument("cyclotomic conductor exponent must be >= 0");
  if (k > 0 && !is_prime(p)) throw std::invalid_argument("cyclotomic conductor must be a prime power");
  if (static_cast<std::int64_t>(coeffs_.size()) != phi_prime_power(p, k))
    throw std::invalid_argument("cyclotomic coefficient vector has the wrong length for its conductor");
}

CyclotomicInteger CyclotomicInteger::zeta_power(std::int64_t p, int k, std::int64_t e) {
  if (k == 0) return CyclotomicInteger(1);
  const std::int64_t n = ipow64(p, k);
  std::vector<Integer> full(static_cast<std::size_t>(n), Integer(0));
  full[static_cast<std::size_t>(mod(e, n))] = 1;
  return from_cyclic(p, k, std::move(full));
}

// Reduces a vector indexed by exponents mod p^k modulo Phi_{p^k}, using
// zeta^{(p-1)p^{k-1}} = -(1 + zeta^{p^{k-1}} + ... + zeta^{(p-2)p^{k-1}}).
CyclotomicInteger CyclotomicInteger::from_cyclic(std::int64_t p, int k, std::vector<Integer> full) {
  if (k == 0) return CyclotomicInteger(full.at(0));
  const std::int64_t n = ipow64(p, k);
  const std::int64_t step = n / p;
  const std::int64_t phi = n - step;
  for (std::int64_t d = n - 1; d >= phi; --d) {
    Integer c = full[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    full[static_cast<std::size_t>(d)] = 0;
    const std::int64_t base = d - (p - 1) * step;
    for (std::int64_t i = 0; i + 1 < p; ++i) full[static_cast<std::size_t>(base + i * step)] -= c;
  }
  full.resize(static_cast<std::size_t>(phi));
  return CyclotomicInteger(p, k, std::move(full));
}

bool CyclotomicInteger::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicInteger::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Integer CyclotomicInteger::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic integer is not rational: " + to_string());
  return coeffs_[0];
}

CyclotomicInteger CyclotomicInteger::lifted(std::int64_t p, int k) const {
  if (k == k_ && (k == 0 || p == p_)) return *this;
  if (k < k_ || (k_ > 0 && p != p_))
    throw std::invalid_argument("cannot lift cyclotomic integer to a smaller or foreign conductor");
  const std::int64_t n = ipow64(p, k);
  std::vector<Integer> full(static_cast<std::size_t>(n), Integer(0));
  const std::int64_t stride = n / (k_ == 0 ? n : ipow64(p, k_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    full[static_cast<std::size_t>(static_cast<std::int64_t>(i) * stride)] = coeffs_[i];
  return from_cyclic(p, k, std::move(full));
}

void CyclotomicInteger::common_level(const CyclotomicInteger& a, const CyclotomicInteger& b,
                                     std::int64_t& p, int& k) {
  if (a.k_ > 0 && b.k_ > 0 && a.p_ != b.p_)
    throw std::invalid_argument("cyclotomic arithmetic across different primes");
  p = a.k_ > 0 ? a.p_ : b.p_;
  k = std::max(a.k_, b.k_);
}

CyclotomicInteger CyclotomicInteger::galois(std::int64_t t) const {
  if (k_ == 0) return *this;
  if (t % p_ == 0) throw std::invalid_argument("galois exponent must be coprime to p");
  const std::int64_t n = conductor();
  std::vector<Integer> full(static_cast<std::size_t>(n), Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    full[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * t, n))] += coeffs_[i];
  return from_cyclic(p_, k_, std::move(full));
}

Integer CyclotomicInteger::norm() const {
  if (k_ == 0) return coeffs_[0];
  CyclotomicInteger prod(1);
  const std::int64_t n = conductor();
  for (std::int64_t t = 1; t < n; ++t)
    if (t % p_ != 0) prod = prod * galois(t);
  return prod.rational_value();
}

CyclotomicInteger CyclotomicInteger::exact_div(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (b.is_zero()) throw std::domain_error("cyclotomic division by zero");
  std::int64_t p;
  int k;
  common_level(a, b, p, k);
  if (b.is_rational()) {
    const Integer d = b.rational_value();
    CyclotomicInteger q = a;
    for (auto& c : q.coeffs_) c = RingTraits<Integer>::exact_div(c, d);
    return q;
  }
  const CyclotomicInteger bl = b.lifted(p, k);
  // a/b = a * (product of the other conjugates of b) / N(b).
  CyclotomicInteger cofactor(1);
  if (k > 0) {
    const std::int64_t n = ipow64(p, k);
    for (std::int64_t t = 2; t < n; ++t)
      if (t % p != 0) cofactor = cofactor * bl.galois(t);
  }
  const Integer norm = (bl * cofactor).rational_value();
  CyclotomicInteger num = (a * cofactor).lifted(p, k);
  for (auto& c : num.coeffs_) c = RingTraits<Integer>::exact_div(c, norm);
  return num;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  CyclotomicInteger r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicInteger operator+(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  std::int64_t p;
  int k;
  CyclotomicInteger::common_level(a, b, p, k);
  CyclotomicInteger r = a.lifted(p, k);
  const CyclotomicInteger bl = b.lifted(p, k);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += bl.coeffs_[i];
  return r;
}

CyclotomicInteger operator-(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  return a + (-b);
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  std::int64_t p;
  int k;
  CyclotomicInteger::common_level(a, b, p, k);
  if (k == 0) return CyclotomicInteger(a.coeffs_[0] * b.coeffs_[0]);
  const CyclotomicInteger al = a.lifted(p, k);
  const CyclotomicInteger bl = b.lifted(p, k);
  const std::int64_t n = ipow64(p, k);
  std::vector<Integer> full(static_cast<std::size_t>(n), Integer(0));
  for (std::size_t i = 0; i < al.coeffs_.size(); ++i) {
    if (al.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < bl.coeffs_.size(); ++j) {
      if (bl.coeffs_[j] == 0) continue;
      full[(i + j) % static_cast<std::size_t>(n)] += al.coeffs_[i] * bl.coeffs_[j];
    }
  }
  return CyclotomicInteger::from_cyclic(p, k, std::move(full));
}

bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  std::int64_t p;
  int k;
  CyclotomicInteger::common_level(a, b, p, k);
  return a.lifted(p, k).coeffs_ == b.lifted(p, k).coeffs_;
}

std::string CyclotomicInteger::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << (coeffs_[i] < 0 ? " - " : " + ");
    else if (coeffs_[i] < 0) out << "-";
    first = false;
    const Integer mag = abs(coeffs_[i]);
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "z" << conductor();
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace iwgraph
