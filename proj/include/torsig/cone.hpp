#pragma once

#include <cstddef>
#include <vector>

#include "torsig/rational.hpp"

namespace torsig {

/// V-description of a polyhedral cone: C = span(lineality) + cone(rays).
/// Rays are primitive integer vectors, pairwise non-parallel, and extreme
/// modulo the lineality space.
struct ConeGenerators {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;

  /// Dimension of the linear span of the cone.
  std::size_t dimension(std::size_t ambient_dim) const;
  bool is_zero() const { return lineality.empty() && rays.empty(); }
};

/// Generators of {x in R^d : <a, x> >= 0 for all rows a} by the double
/// description method in exact arithmetic. Rows may be rational.
ConeGenerators cone_generators(const std::vector<RatVector>& inequalities, std::size_t dim);
ConeGenerators cone_generators(const std::vector<IntVector>& inequalities, std::size_t dim);

/// Generators of {x : <a,x> >= 0 for a in inequalities, <b,x> = 0 for b in equalities}.
ConeGenerators cone_generators(const std::vector<RatVector>& inequalities,
                               const std::vector<RatVector>& equalities, std::size_t dim);

}  // namespace torsig
