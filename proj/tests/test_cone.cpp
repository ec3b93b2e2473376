#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "torsig/cone.hpp"
#include "torsig/linalg.hpp"

using namespace torsig;
using namespace torsig::test;

namespace {

bool contains(const std::vector<IntVector>& rays, const IntVector& r) {
  return std::find(rays.begin(), rays.end(), r) != rays.end();
}

}  // namespace

TEST_CASE("double description: orthant and its faces") {
  auto g = cone_generators(std::vector<IntVector>{iv({1, 0}), iv({0, 1})}, 2);
  CHECK(g.lineality.empty());
  CHECK(g.rays.size() == 2);
  CHECK(contains(g.rays, iv({1, 0})));
  CHECK(contains(g.rays, iv({0, 1})));
  CHECK(g.dimension(2) == 2);
}

TEST_CASE("double description: halfplane has lineality") {
  auto g = cone_generators(std::vector<IntVector>{iv({0, 1})}, 2);
  CHECK(g.lineality.size() == 1);
  CHECK(g.rays == std::vector<IntVector>{iv({0, 1})});
}

TEST_CASE("double description: whole space and zero cone") {
  auto whole = cone_generators(std::vector<IntVector>{}, 3);
  CHECK(whole.lineality.size() == 3);
  CHECK(whole.rays.empty());
  auto zero = cone_generators(std::vector<IntVector>{iv({1, 0}), iv({0, 1}), iv({-1, -1})}, 2);
  CHECK(zero.is_zero());
  CHECK(zero.dimension(2) == 0);
}

TEST_CASE("double description: square-based cone in 3d") {
  // x+z>=0, -x+z>=0, y+z>=0, -y+z>=0: rays (+-1,+-1,1)
  auto g = cone_generators(std::vector<IntVector>{iv({1, 0, 1}), iv({-1, 0, 1}), iv({0, 1, 1}), iv({0, -1, 1})}, 3);
  CHECK(g.lineality.empty());
  REQUIRE(g.rays.size() == 4);
  for (long a : {-1, 1})
    for (long b : {-1, 1}) CHECK(contains(g.rays, iv({a, b, 1})));
}

TEST_CASE("double description: equalities cut down the dimension") {
  auto g = cone_generators({rv({1, 0, 0}), rv({0, 1, 0})}, {rv({1, -1, 0})}, 3);
  CHECK(g.dimension(3) == 2);
  CHECK(g.lineality.size() == 1);  // the z-axis
  CHECK(g.rays == std::vector<IntVector>{iv({1, 1, 0})});
}

TEST_CASE("double description: every generator satisfies the constraints") {
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = static_cast<std::size_t>(uniform(2, 4));
    std::vector<IntVector> rows(static_cast<std::size_t>(uniform(1, 7)), IntVector(d));
    for (auto& r : rows)
      for (auto& x : r) x = uniform(-3, 3);
    const auto g = cone_generators(rows, d);
    for (const auto& r : g.rays)
      for (const auto& a : rows) CHECK(dot(a, r) >= 0);
    for (const auto& l : g.lineality)
      for (const auto& a : rows) CHECK(dot(a, l) == 0);
    // each ray is extreme: its tight constraints have rank d - 1 - dim(lineality)
    for (const auto& r : g.rays) {
      std::vector<IntVector> tight;
      for (const auto& a : rows)
        if (dot(a, r) == 0) tight.push_back(a);
      const std::size_t rk = tight.empty() ? 0 : rank(tight, d);
      CHECK(rk == d - 1 - g.lineality.size());
    }
  }
}
