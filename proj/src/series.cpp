#include "torsig/series.hpp"

#include <algorithm>

#include "torsig/error.hpp"

namespace torsig {

RationalSeries::RationalSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

RationalSeries RationalSeries::constant(const Rational& c, std::size_t order) {
  RationalSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

RationalSeries RationalSeries::operator+(const RationalSeries& rhs) const {
  RationalSeries out(std::min(order(), rhs.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
  return out;
}

RationalSeries RationalSeries::operator-(const RationalSeries& rhs) const {
  RationalSeries out(std::min(order(), rhs.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
  return out;
}

RationalSeries RationalSeries::operator*(const RationalSeries& rhs) const {
  RationalSeries out(std::min(order(), rhs.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= out.order(); ++j) out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

RationalSeries RationalSeries::operator*(const Rational& c) const {
  RationalSeries out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

RationalSeries RationalSeries::operator/(const RationalSeries& rhs) const {
  if (rhs.coeffs_[0] == 0) throw Error(ErrorCode::InvalidInput, "series division by a series without constant term");
  RationalSeries q(std::min(order(), rhs.order()));
  for (std::size_t n = 0; n <= q.order(); ++n) {
    Rational acc = coeffs_[n];
    for (std::size_t k = 1; k <= n; ++k) acc -= rhs.coeffs_[k] * q.coeffs_[n - k];
    q.coeffs_[n] = acc / rhs.coeffs_[0];
  }
  return q;
}

RationalSeries RationalSeries::substitute_into(const std::vector<Rational>& poly) const {
  // Horner evaluation in the series ring.
  RationalSeries acc(order());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * *this + constant(*it, order());
  return acc;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

namespace {

// sum over n of sign(n) x^(2n+shift) / (2n+shift)!, shifted down by `drop`.
RationalSeries trig_like(std::size_t order, unsigned shift, bool alternating, unsigned drop) {
  RationalSeries s(order);
  for (unsigned n = 0;; ++n) {
    const unsigned power = 2 * n + shift;
    if (power < drop) continue;
    if (power - drop > order) break;
    Rational c = make_rational(1, factorial(power));
    if (alternating && n % 2 == 1) c = -c;
    s.set(power - drop, c);
  }
  return s;
}

}  // namespace

RationalSeries sin_over_x(std::size_t order) { return trig_like(order, 1, true, 1); }
RationalSeries cos_series(std::size_t order) { return trig_like(order, 0, true, 0); }
RationalSeries sinh_series(std::size_t order) { return trig_like(order, 1, false, 0); }
RationalSeries cosh_series(std::size_t order) { return trig_like(order, 0, false, 0); }

}  // namespace torsig
