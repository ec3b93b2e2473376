#pragma once

#include <cstddef>
#include <vector>

#include "torsig/rational.hpp"

namespace torsig {

/// Power series truncated after x^order, with exact rational coefficients.
/// Binary operations truncate at the smaller of the two orders.
class RationalSeries {
 public:
  explicit RationalSeries(std::size_t order) : coeffs_(order + 1) {}
  RationalSeries(std::vector<Rational> coeffs, std::size_t order);

  static RationalSeries constant(const Rational& c, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  /// Coefficient of x^n; zero beyond the stored range.
  Rational operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }
  void set(std::size_t n, const Rational& c) { coeffs_.at(n) = c; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  RationalSeries operator+(const RationalSeries& rhs) const;
  RationalSeries operator-(const RationalSeries& rhs) const;
  RationalSeries operator*(const RationalSeries& rhs) const;
  RationalSeries operator*(const Rational& c) const;
  /// Series quotient; the divisor must have a nonzero constant term.
  RationalSeries operator/(const RationalSeries& rhs) const;

  /// Evaluates the polynomial sum_p poly[p] t^p at t = *this.
  RationalSeries substitute_into(const std::vector<Rational>& poly) const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// sin(x)/x, cos(x), sinh(x), cosh(x) truncated at `order`.
RationalSeries sin_over_x(std::size_t order);
RationalSeries cos_series(std::size_t order);
RationalSeries sinh_series(std::size_t order);
RationalSeries cosh_series(std::size_t order);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace torsig
