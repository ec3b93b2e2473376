#include <doctest.h>

#include <set>

#include "support.hpp"
#include "torsig/error.hpp"
#include "torsig/generators.hpp"
#include "torsig/invariants.hpp"
#include "torsig/linalg.hpp"

using namespace torsig;
using namespace torsig::test;

namespace {

FVector fv(std::initializer_list<std::int64_t> xs) { return FVector{std::vector<std::int64_t>(xs)}; }

// Ordered set partitions of n letters into k blocks.
std::int64_t ordered_partitions(int n, int k) {
  // k! S(n, k)
  std::vector<std::vector<std::int64_t>> s(n + 1, std::vector<std::int64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  std::int64_t f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return f * s[n][k];
}

}  // namespace

TEST_CASE("cube") {
  CHECK(sigma(f_vector(cube(2))) == 0);
  CHECK(f_vector(cube(3)) == fv({8, 12, 6, 1}));
  CHECK(f_vector(cube(4)) == fv({16, 32, 24, 8, 1}));
  CHECK(sigma(f_vector(cube(4))) == 0);
  CHECK(is_simple(cube(5)));
}

TEST_CASE("permutohedron") {
  const Polytope hex = permutohedron(3);
  CHECK(hex.ambient_dim() == 2);
  CHECK(f_vector(hex) == fv({6, 6, 1}));
  CHECK(sigma(f_vector(hex)) == -2);
  for (int n = 2; n <= 6; ++n) {
    const Polytope p = permutohedron(static_cast<std::size_t>(n));
    CHECK(p.is_full_dimensional());
    CHECK(p.ambient_dim() == static_cast<std::size_t>(n - 1));
    CHECK(is_simple(p));
    const FVector f = f_vector(p);
    for (int k = 0; k < n; ++k) CHECK(f[static_cast<std::size_t>(n - 1 - k)] == ordered_partitions(n, k + 1));
    CHECK(sigma(f) == tanh_sigma(static_cast<unsigned>(n)));
  }
  // incidence supplied analytically must match a validated recomputation
  const Polytope p4 = permutohedron(4);
  const Polytope check = Polytope::from_vertices_and_facets(p4.vertices(), p4.facets());
  for (std::size_t f = 0; f < p4.num_facets(); ++f) CHECK(check.facet_vertices(f) == p4.facet_vertices(f));
}

TEST_CASE("permutohedra are non-acute and obtuse in codimension one") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto a = angle_class(permutohedron(n));
    CHECK((a == AngleClass::NonAcuteOnly || a == AngleClass::Obtuse));
  }
  // Adjacent facets S, T of the permutohedron are nested subsets. Their
  // normals, projected to the sum-zero plane, are 1_S - |S|/n and 1_T - |T|/n.
  for (std::size_t n = 3; n <= 5; ++n) {
    const Polytope p = permutohedron(n);
    const auto lattice = face_lattice(p);
    const std::size_t d = p.ambient_dim();
    std::set<VertexSet> ridges(lattice.faces[d - 2].begin(), lattice.faces[d - 2].end());
    // recover each facet's subset from the unprojected construction order
    std::vector<RatVector> normals;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      RatVector v(n);
      std::size_t k = 0;
      for (std::size_t i = 0; i < n; ++i) k += (mask >> i) & 1;
      for (std::size_t i = 0; i < n; ++i) v[i] = Rational(static_cast<long>((mask >> i) & 1)) - q(static_cast<long>(k), static_cast<long>(n));
      normals.push_back(v);
    }
    REQUIRE(normals.size() == p.num_facets());
    int adjacent_pairs = 0;
    for (std::size_t f = 0; f < p.num_facets(); ++f)
      for (std::size_t g = f + 1; g < p.num_facets(); ++g) {
        if (!ridges.count(p.facet_vertices(f) & p.facet_vertices(g))) continue;
        ++adjacent_pairs;
        CHECK(dot(normals[f], normals[g]) != 0);
      }
    CHECK(adjacent_pairs > 0);
  }
}

TEST_CASE("associahedron") {
  const Polytope pent = associahedron(5);
  CHECK(f_vector(pent) == fv({5, 5, 1}));
  CHECK(sigma(f_vector(pent)) == -1);
  const Polytope a6 = associahedron(6);
  CHECK(a6.ambient_dim() == 3);
  CHECK(a6.num_vertices() == 14);
  CHECK(a6.num_facets() == 9);
  CHECK(sigma(f_vector(a6)) == 0);
  for (std::size_t n = 4; n <= 8; ++n) {
    const Polytope p = associahedron(n);
    CHECK(is_simple(p));
    CHECK(sigma(f_vector(p)) == associahedron_sigma(static_cast<unsigned>(n)));
    const Polytope check = Polytope::from_vertices_and_facets(p.vertices(), p.facets());
    for (std::size_t f = 0; f < p.num_facets(); ++f) CHECK(check.facet_vertices(f) == p.facet_vertices(f));
  }
}

TEST_CASE("Loday normal fans are locally convex with interval rays") {
  for (std::size_t n = 4; n <= 7; ++n) {
    const Polytope p = associahedron(n);
    const Fan fan = normal_fan(p);
    CHECK(classify(fan).overall >= ConvexityClass::LocallyConvex);
    // Each maximal cone is a set of pairwise compatible intervals: nested or
    // disjoint and non-adjacent (the tree's subtree ranges minus the root).
    std::vector<std::pair<std::size_t, std::size_t>> intervals;
    const std::size_t m = n - 2;
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = i; j <= m; ++j)
        if (!(i == 1 && j == m)) intervals.emplace_back(i, j);
    REQUIRE(intervals.size() == p.num_facets());
    auto compatible = [](auto a, auto b) {
      const bool nested = (a.first <= b.first && b.second <= a.second) || (b.first <= a.first && a.second <= b.second);
      const bool apart = a.second + 1 < b.first || b.second + 1 < a.first;
      return nested || apart;
    };
    for (const auto& c : fan.max_cones())
      for (auto a : c)
        for (auto b : c)
          if (a < b) CHECK(compatible(intervals[a], intervals[b]));
  }
}

TEST_CASE("polygon presets") {
  CHECK(classify(normal_fan(polygon("triangle"))).overall == ConvexityClass::NotLocallyConvex);
  const Fan rect = normal_fan(polygon("rectangle-2x1"));
  CHECK(classify(rect).overall == ConvexityClass::LocallyConvex);
  const Fan hex = normal_fan(polygon("delzant-hexagon"));
  CHECK(classify(hex).overall == ConvexityClass::LocallyStronglyConvex);
  CHECK(m_of(hex) == 1);
  CHECK(sigma(f_vector(polygon("delzant-hexagon"))) == -2);
  CHECK(angle_class(polygon("obtuse-pentagon")) == AngleClass::Obtuse);
  try {
    polygon("heptagon");
    FAIL("expected UnknownPreset");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownPreset);
  }
}

TEST_CASE("arrangement presets") {
  for (const auto& name : arrangement_presets()) {
    const Fan f = arrangement_preset(name);
    CHECK(f.is_complete());
    CHECK(classify(f).overall >= ConvexityClass::LocallyConvex);
  }
  CHECK(arrangement_preset("A2").max_cones().size() == 6);
  CHECK(arrangement_preset("B2").max_cones().size() == 8);
  CHECK_THROWS_AS(arrangement_preset("G2"), Error);
}

TEST_CASE("corpus") {
  const auto entries = corpus(5);
  CHECK(entries.size() >= 12);
  std::set<std::string> names;
  for (const auto& e : entries) {
    CAPTURE(e.name);
    names.insert(e.name);
    CHECK(is_simple(e.polytope));
    const FVector f = f_vector(e.polytope);
    if (e.expected.f) CHECK(f == *e.expected.f);
    if (e.expected.sigma) CHECK(sigma(f) == *e.expected.sigma);
  }
  CHECK(names.size() == entries.size());
  CHECK(names.count("hexagon-x-hexagon"));
  CHECK(names.count("triangle-x-triangle"));
}

TEST_CASE("generate by name") {
  CHECK(generate("cube", std::nullopt, 4).ambient_dim() == 4);
  CHECK(generate("permutohedron", 5, std::nullopt).ambient_dim() == 4);
  CHECK(generate("associahedron", 7, std::nullopt).ambient_dim() == 4);
  CHECK(generate("permutohedron-4", std::nullopt, std::nullopt).num_vertices() == 24);
  CHECK(generate("hexagon-x-hexagon", std::nullopt, std::nullopt).num_vertices() == 36);
  CHECK_THROWS_AS(generate("dodecahedron", std::nullopt, std::nullopt), Error);
}
