#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "iwgraph/cyclotomic.hpp"
#include "iwgraph/integer.hpp"
#include "iwgraph/matrix.hpp"

namespace iwgraph {

/// Univariate polynomial over a coefficient ring R, ascending coefficients,
/// normalised so the top coefficient is nonzero (the zero polynomial is empty).
template <class R>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int constant) : Polynomial(R(constant)) {}  // NOLINT implicit
  Polynomial(const R& constant) {                        // NOLINT implicit
    if (!RingTraits<R>::is_zero(constant)) coeffs_.push_back(constant);
  }
  explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  /// The monomial c * x^degree.
  static Polynomial monomial(const R& c, std::size_t degree) {
    std::vector<R> v(degree + 1, R(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  const std::vector<R>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(0); }
  R leading() const { return coeffs_.empty() ? R(0) : coeffs_.back(); }

  R evaluate(const R& x) const {
    R acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// f(g(x)) by Horner's scheme.
  Polynomial compose(const Polynomial& g) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + Polynomial(*it);
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = R(0) - c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<R> out(std::max(a.coeffs_.size(), b.coeffs_.size()), R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = out[i] + a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = out[i] + b.coeffs_[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (RingTraits<R>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }

  /// Exact quotient a / b; throws std::domain_error when b does not divide a.
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<R> rem = a.coeffs_;
    if (rem.size() < b.coeffs_.size()) {
      if (a.is_zero()) return Polynomial();
      throw std::domain_error("polynomial division is not exact");
    }
    const std::size_t db = b.coeffs_.size() - 1;
    std::vector<R> quot(rem.size() - db, R(0));
    for (std::size_t i = rem.size(); i-- > db;) {
      if (RingTraits<R>::is_zero(rem[i])) continue;
      R q = RingTraits<R>::exact_div(rem[i], b.coeffs_[db]);
      const std::size_t shift = i - db;
      for (std::size_t j = 0; j <= db; ++j) rem[shift + j] = rem[shift + j] - q * b.coeffs_[j];
      quot[shift] = q;
    }
    for (const auto& r : rem)
      if (!RingTraits<R>::is_zero(r)) throw std::domain_error("polynomial division is not exact");
    return Polynomial(std::move(quot));
  }

 private:
  std::vector<R> coeffs_;

  void normalize() {
    while (!coeffs_.empty() && RingTraits<R>::is_zero(coeffs_.back())) coeffs_.pop_back();
  }
};

template <class R>
struct RingTraits<Polynomial<R>> {
  static bool is_zero(const Polynomial<R>& x) { return x.is_zero(); }
  static Polynomial<R> exact_div(const Polynomial<R>& a, const Polynomial<R>& b) {
    return Polynomial<R>::exact_div(a, b);
  }
};

using IntPolynomial = Polynomial<Integer>;
using CycPolynomial = Polynomial<CyclotomicInteger>;

inline std::string to_string(const IntPolynomial& f, const std::string& var = "u") {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Integer& c = f.coeffs()[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const Integer mag = abs(c);
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace iwgraph
