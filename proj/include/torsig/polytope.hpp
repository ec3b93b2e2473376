#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "torsig/rational.hpp"

namespace torsig {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Halfspace <x, inner_normal> >= offset; inner_normal is primitive.
struct Facet {
  IntVector inner_normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// (f_0, ..., f_d) with f_i the number of i-dimensional faces and f_d = 1.
struct FVector {
  std::vector<std::int64_t> counts;

  std::size_t dim() const { return counts.empty() ? 0 : counts.size() - 1; }
  std::int64_t operator[](std::size_t i) const { return counts.at(i); }
  friend bool operator==(const FVector&, const FVector&) = default;
};

enum class AngleClass { Obtuse, NonAcuteOnly, Neither };

std::string_view to_string(AngleClass c);

/// A rational polytope with its irredundant facet list and vertex-facet
/// incidence. Facets of a polytope that is not full-dimensional are its
/// relative facets, described by ambient normals.
class Polytope {
 public:
  /// Convex hull by brute force over affinely spanning subsets. Throws
  /// StepLimit when C(n, d) * n exceeds step_limit().
  static Polytope from_vertices(const std::vector<RatVector>& points);

  /// Intersection of halfspaces. Throws Unbounded or Empty.
  static Polytope from_halfspaces(const std::vector<Facet>& facets, std::size_t ambient_dim);

  /// Known vertices and facets; incidence is recomputed and validated
  /// (every vertex feasible and extreme, every facet irredundant).
  static Polytope from_vertices_and_facets(std::vector<RatVector> vertices, std::vector<Facet> facets);

  /// Known vertices, facets, and incidence (facet -> vertex set). Only
  /// shape checks are performed; callers vouch for the combinatorics.
  static Polytope from_parts(std::vector<RatVector> vertices, std::vector<Facet> facets,
                             std::vector<VertexSet> facet_vertices);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t intrinsic_dim() const noexcept { return intrinsic_dim_; }
  bool is_full_dimensional() const noexcept { return ambient_dim_ == intrinsic_dim_; }

  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_facets() const noexcept { return facets_.size(); }

  bool incident(std::size_t vertex, std::size_t facet) const { return facet_vertices_[facet][vertex]; }
  const VertexSet& facet_vertices(std::size_t facet) const { return facet_vertices_[facet]; }
  const std::vector<std::size_t>& vertex_facets(std::size_t vertex) const { return vertex_facets_[vertex]; }

 private:
  Polytope() = default;
  void index_incidence();

  std::size_t ambient_dim_ = 0;
  std::size_t intrinsic_dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<VertexSet> facet_vertices_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
};

/// Brute-force work cap; TORSIG_STEP_LIMIT overrides the default 10^8.
std::uint64_t step_limit();

/// Faces grouped by dimension: faces[k] holds the vertex sets of the
/// k-dimensional faces. The empty face is omitted.
struct FaceLattice {
  std::vector<std::vector<VertexSet>> faces;

  std::size_t dim() const { return faces.empty() ? 0 : faces.size() - 1; }
};

/// Closed vertex sets of the vertex-facet Galois connection, top-down.
FaceLattice face_lattice(const Polytope& p);

FVector f_vector(const FaceLattice& lattice);
FVector f_vector(const Polytope& p);

bool is_simple(const Polytope& p);

AngleClass angle_class(const Polytope& p, const FaceLattice& lattice);
AngleClass angle_class(const Polytope& p);

/// The polytope rewritten in coordinates of its affine hull, together with
/// the saturated lattice basis used: x = vertices()[0] + sum_i y_i basis_i.
struct Projection {
  Polytope polytope;
  std::vector<IntVector> basis;
  RatVector origin;
};

Projection project_full_dim(const Polytope& p);

Polytope product(const Polytope& p, const Polytope& q);

}  // namespace torsig
