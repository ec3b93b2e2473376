#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "torsig/polytope.hpp"
#include "torsig/rational.hpp"

namespace torsig {

/// Sorted ray indices into the owning fan's ray table.
using Cone = std::vector<std::size_t>;

/// Ordered so that a larger value is a stronger property.
enum class ConvexityClass {
  NotLocallyConvex = 0,
  LocallyConvex = 1,
  LocallyPointedConvex = 2,
  LocallyStronglyConvex = 3,
};

std::string_view to_string(ConvexityClass c);

/// A simplicial fan given by primitive rays and maximal cones.
class Fan {
 public:
  /// Rays are made primitive; parallel duplicates are merged and cones
  /// re-indexed. Every maximal cone must have `dim` linearly independent
  /// rays (NotSimplicial otherwise).
  Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<Cone> max_cones);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const std::vector<Cone>& max_cones() const noexcept { return max_cones_; }
  std::size_t num_rays() const noexcept { return rays_.size(); }

  /// Indices of the maximal cones containing a ray.
  const std::vector<std::size_t>& cones_of_ray(std::size_t ray) const { return cones_of_ray_[ray]; }

  /// True when the ray set spans a cone of the fan (a face of a maximal cone).
  bool is_cone(const Cone& rays) const;
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency_[a][b]; }

  /// Throws NotComplete unless every wall lies in exactly two maximal cones.
  void require_complete() const;
  bool is_complete() const;

  /// Number of cones of each dimension 0..dim.
  std::vector<std::int64_t> cone_counts() const;

 private:
  std::size_t dim_;
  std::vector<IntVector> rays_;
  std::vector<Cone> max_cones_;
  std::vector<std::vector<std::size_t>> cones_of_ray_;
  std::vector<std::vector<bool>> adjacency_;
};

/// H-description of a polyhedral cone {x : <x, n> >= 0 for n in facet_normals}.
struct ConeH {
  std::vector<IntVector> facet_normals;
  std::vector<IntVector> lineality_basis;

  bool is_whole_space() const { return facet_normals.empty(); }
};

/// Normal fan of a full-dimensional simple rational polytope: one ray per
/// facet, one maximal cone per vertex. Throws NotSimple.
Fan normal_fan(const Polytope& p);

/// All nonempty cones of the fan lying in a common cone with the ray.
std::vector<Cone> star(const Fan& fan, std::size_t ray);
/// Cones of the star that meet the ray only at the origin.
std::vector<Cone> link(const Fan& fan, std::size_t ray);

/// Positive hull of the rays. Full-rank inputs use brute force over
/// (d-1)-subsets; lower-rank inputs go through the polar cone.
ConeH cone_hull(const std::vector<IntVector>& rays, std::size_t dim);
/// The polar route alone, exposed for cross-checking.
ConeH cone_hull_via_polar(const std::vector<IntVector>& rays, std::size_t dim);

struct Classification {
  std::vector<ConvexityClass> per_ray;
  ConvexityClass overall = ConvexityClass::NotLocallyConvex;
};

ConvexityClass classify_ray(const Fan& fan, std::size_t ray);
Classification classify(const Fan& fan);

bool is_flag(const Fan& fan);

/// lcm over maximal cones of |det(rays)|; 1 exactly for unimodular fans.
Integer m_of(const Fan& fan);

/// Fan of chambers of a central essential arrangement with simplicial
/// chambers. Throws NotSimplicial otherwise.
Fan arrangement_fan(const std::vector<IntVector>& normals, std::size_t dim);

/// Product fan in the direct-sum lattice.
Fan fan_product(const Fan& a, const Fan& b);

}  // namespace torsig
