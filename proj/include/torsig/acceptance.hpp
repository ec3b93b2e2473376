#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torsig/fan.hpp"
#include "torsig/generators.hpp"
#include "torsig/invariants.hpp"

namespace torsig {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Per-entry facts shared by several criteria.
struct EntryFacts {
  std::string name;
  std::size_t dim = 0;
  FVector f;
  HVector h;
  Integer sigma;
  std::optional<Integer> expected_sigma;
  bool expected_ok = true;  ///< every expected value that is present matches
  bool euler_ok = false;
  AngleClass angle = AngleClass::Neither;
  ConvexityClass convexity = ConvexityClass::NotLocallyConvex;
  Integer m;
  bool flag = false;
  bool is_product = false;
};

struct AcceptanceOptions {
  bool permutohedron7 = false;  ///< adds n = 7 to the tanh check
  std::uint64_t seed = 0x746f72736967ULL;
  int pivot_runs = 500;
  int dual_basis_instances = 200;
};

struct AcceptanceReport {
  std::vector<EntryFacts> entries;
  std::vector<CriterionResult> criteria;

  bool passed() const;
};

AcceptanceReport run_acceptance(const AcceptanceOptions& options = {});

/// Complete unimodular 2-d fans with exactly `rays` rays whose primitive
/// generators lie in [-bound, bound]^2, one per rotation class.
std::vector<Fan> unimodular_polygon_fans(std::size_t rays, long bound);

}  // namespace torsig
