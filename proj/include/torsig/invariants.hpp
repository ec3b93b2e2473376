#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "torsig/fan.hpp"
#include "torsig/polytope.hpp"
#include "torsig/rational.hpp"
#include "torsig/series.hpp"

namespace torsig {

struct HVector {
  std::vector<Integer> counts;

  std::size_t dim() const { return counts.empty() ? 0 : counts.size() - 1; }
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// Coefficients of f(t - 1).
HVector h_vector(const FVector& f);
/// f(-2), the alternating sum of the h-vector.
Integer sigma(const FVector& f);
bool dehn_sommerville_ok(const HVector& h);

/// 1 - x cot x truncated after x^order; only even powers are nonzero.
RationalSeries one_minus_x_cot_x(std::size_t order);
/// Coefficient of x^{2n} in 1 - x cot x.
Rational bernoulli_b(unsigned n);
/// The n-th Bernoulli number in the convention B_1 = 1/6, B_2 = 1/30, ...,
/// i.e. |B_{2n}| in the modern indexing. Independent of the series above.
Rational bernoulli_hirzebruch(unsigned n);

enum class TheoremCase { I, II, III, None };
std::string_view to_string(TheoremCase c);
TheoremCase parse_theorem_case(std::string_view text);

/// Case ii: f_{d-1} / (3 m^{d-1}). Case iii: [x^d] of sum_p f_{d-p} s^p / m^{d-1}
/// with s = 1 - x cot x. Case i: 0. Throws OddDimension.
Rational bound_rhs(const FVector& f, const Integer& m, TheoremCase c);

struct BoundReport {
  TheoremCase theorem_case = TheoremCase::None;
  Integer lhs;  ///< (-1)^{d/2} sigma
  Rational rhs;
  bool satisfied = true;
  ConvexityClass classification = ConvexityClass::NotLocallyConvex;
  Integer m;
};

/// The case licensed by a classification: iii for strongly convex, ii for
/// pointed, i for convex.
TheoremCase strongest_case(ConvexityClass c);

/// Applies `forced` (or the strongest licensed case). A forced case the
/// classification does not license yields theorem_case None, which asserts
/// nothing: rhs 0 and satisfied true. Throws OddDimension.
BoundReport bound_report(const FVector& f, ConvexityClass classification, const Integer& m,
                         std::optional<TheoremCase> forced = std::nullopt);

/// 12 / (3 - 1/m): a 2-d fan that is locally pointed convex needs f_0 >= this.
Rational polygon_inequality_rhs(const Integer& m);

Rational kappa(const Integer& sigma, std::size_t d);
Integer mirror_euler(const Integer& sigma, std::size_t n_facets, std::size_t d);
Rational corner_euler(const std::vector<Integer>& sigmas, std::size_t d);

/// n! [x^n] tanh x.
Integer tanh_sigma(unsigned n);
/// (-1)^{(n-3)/2} C_{(n-1)/2} for odd n with C_k = binom(2k-2, k-1)/k; 0 for even n.
Integer associahedron_sigma(unsigned n);

}  // namespace torsig
