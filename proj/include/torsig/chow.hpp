#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include "torsig/fan.hpp"
#include "torsig/rational.hpp"

namespace torsig {

/// Product of torus-invariant divisors D_i^{e_i}; zero exponents are dropped.
struct DivisorMonomial {
  std::map<std::size_t, unsigned> exponents;

  unsigned degree() const;
  std::size_t support_size() const { return exponents.size(); }
  friend bool operator==(const DivisorMonomial&, const DivisorMonomial&) = default;
  friend auto operator<=>(const DivisorMonomial&, const DivisorMonomial&) = default;
};

/// Intersection numbers on the toric variety of a complete simplicial fan.
/// Results are memoized per instance.
class ChowEvaluator {
 public:
  explicit ChowEvaluator(const Fan& fan);
  /// With a generator, the reducing ray and the functional u are drawn at
  /// random among admissible choices; the value must not change.
  ChowEvaluator(const Fan& fan, std::mt19937_64& rng);

  /// Throws WrongDegree unless the degree equals dim(fan).
  Rational evaluate(const DivisorMonomial& mono);

 private:
  Rational reduce(const DivisorMonomial& mono);

  const Fan& fan_;
  std::mt19937_64* rng_ = nullptr;
  std::map<DivisorMonomial, Rational> memo_;
};

Rational evaluate(const Fan& fan, const DivisorMonomial& mono);

/// One term b_{n_1}...b_{n_p} (-1)^p D_{i_1}^{2n_1}...D_{i_p}^{2n_p} of the
/// L-class expansion in top degree.
struct MonomialTerm {
  DivisorMonomial monomial;
  Rational coefficient;  ///< b_{n_1}...b_{n_p} (-1)^p
  Rational value;        ///< the intersection number
  bool sign_ok = false;  ///< (-1)^p value >= 0
};

/// Every top-degree term whose support spans a cone (others vanish).
/// Throws OddDimension.
std::vector<MonomialTerm> monomial_sign_report(const Fan& fan);

/// sigma of the toric variety, from sum of coefficient * value = (-1)^{d/2} sigma.
Rational signature_via_L(const Fan& fan);
Rational signature_from_terms(const std::vector<MonomialTerm>& terms, std::size_t dim);

}  // namespace torsig
