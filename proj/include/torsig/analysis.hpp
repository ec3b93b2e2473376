#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsig/chow.hpp"
#include "torsig/fan.hpp"
#include "torsig/invariants.hpp"
#include "torsig/polytope.hpp"

namespace torsig {

struct AnalysisOptions {
  bool chow = false;
  std::optional<TheoremCase> forced_case;
};

/// Everything known about one polytope. Fan-dependent fields are empty for
/// non-simple input; bounds need even dimension, chow_sigma needs `chow`.
struct AnalysisReport {
  std::size_t dim = 0;
  FVector f;
  HVector h;
  Integer sigma;
  bool dehn_sommerville = false;
  bool simple = false;
  AngleClass angle_class = AngleClass::Neither;
  std::optional<ConvexityClass> convexity;
  std::optional<Integer> m;
  std::optional<bool> flag;
  std::optional<BoundReport> bounds;
  std::optional<Rational> chow_sigma;
  std::optional<bool> agreement;
  std::vector<std::string> warnings;
};

/// Projects to full dimension first when needed; angles use the metric of
/// the given coordinates.
AnalysisReport analyze(const Polytope& p, const AnalysisOptions& options = {});

/// The polytope in full-dimensional lattice coordinates (identity if it is
/// already full-dimensional).
Polytope full_dimensional(const Polytope& p);

struct ChowReport {
  Rational sigma;
  std::vector<MonomialTerm> terms;
  /// f(-2) of the fan's cone counts, for comparison.
  Integer combinatorial_sigma;
  bool agreement = false;
};

/// signature_via_L with the h-vector alternating sum of the fan's face
/// numbers (f_i of the polytope = number of (d-i)-cones). Throws OddDimension.
ChowReport chow_signature(const Fan& fan);

struct MirrorReport {
  Integer chi;
  std::size_t n = 0;
  std::size_t d = 0;
};

/// Throws NotSimple.
MirrorReport mirror(const Polytope& p);

}  // namespace torsig
