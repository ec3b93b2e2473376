#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torsig/fan.hpp"
#include "torsig/polytope.hpp"

namespace torsig {

/// [0,1]^d.
Polytope cube(std::size_t d);

/// Convex hull of the permutations of (0, ..., n-1), in its own lattice
/// (dimension n-1).
Polytope permutohedron(std::size_t n);

/// Loday realization: one vertex per triangulation of an n-gon, i.e. per
/// binary tree with n-2 internal nodes; dimension n-3.
Polytope associahedron(std::size_t n);

/// triangle, square, rectangle-2x1, delzant-hexagon, obtuse-pentagon.
Polytope polygon(std::string_view preset);
const std::vector<std::string>& polygon_presets();

/// coordinate, A2, B2 (two-dimensional; A2 in the quotient lattice Z^3/(1,1,1)).
Fan arrangement_preset(std::string_view preset);
const std::vector<std::string>& arrangement_presets();

struct Expected {
  std::optional<FVector> f;
  std::optional<Integer> sigma;
  std::optional<ConvexityClass> convexity;
  std::optional<Integer> m;
};

struct CorpusEntry {
  std::string name;
  Polytope polytope;
  Expected expected;
  bool is_product = false;
};

/// The labelled suite. Permutohedra run to `max_permutohedron` letters.
std::vector<CorpusEntry> corpus(std::size_t max_permutohedron = 6);

/// Any name accepted by `torsig gen`: polygon presets, "cube", "permutohedron",
/// "associahedron" (sized by n or d), and corpus names such as
/// "hexagon-x-hexagon".
Polytope generate(std::string_view name, std::optional<std::size_t> n, std::optional<std::size_t> d);

}  // namespace torsig
