#include <doctest.h>

#include "support.hpp"
#include "torsig/error.hpp"
#include "torsig/linalg.hpp"

using namespace torsig;
using namespace torsig::test;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) { return RatMatrix::from_rows(points(rows)); }

RatMatrix random_matrix(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational();
  return m;
}

}  // namespace

TEST_CASE("rational strings are canonical") {
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(q("4/2")) == "2");
  CHECK(to_string(q("3/-6")) == "-1/2");
  CHECK(to_string(q("0/5")) == "0");
  CHECK(q(" -7 ") == -7);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("rational arithmetic is exact") {
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = random_rational(1000), b = random_rational(1000);
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a / b) * b == a);
  }
}

TEST_CASE("primitive") {
  CHECK(primitive(iv({2, 4})) == iv({1, 2}));
  CHECK(primitive(iv({0, 0, 3})) == iv({0, 0, 1}));
  CHECK(primitive(iv({-2, 2})) == iv({-1, 1}));
  CHECK(primitive(RatVector{q("1/2"), q("-3/4")}) == iv({2, -3}));
  try {
    primitive(iv({0, 0}));
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(RatMatrix::identity(3)) == 1);
  CHECK(determinant(mat({{1, 0}, {1, 2}})) == 2);
  CHECK(determinant(mat({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}})) == 2);
  CHECK(determinant(std::vector<IntVector>{iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})}) == 2);
  CHECK(determinant(std::vector<IntVector>{iv({0, 1}), iv({1, 0})}) == -1);
  CHECK_THROWS_AS(determinant(RatMatrix(2, 3)), Error);

  SUBCASE("multiplicative on random 3x3 matrices") {
    for (int trial = 0; trial < 100; ++trial) {
      const RatMatrix a = random_matrix(3), b = random_matrix(3);
      CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
  }
  SUBCASE("Bareiss agrees with rational elimination") {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = static_cast<std::size_t>(uniform(1, 5));
      std::vector<IntVector> rows(n, IntVector(n));
      for (auto& r : rows)
        for (auto& x : r) x = uniform(-10, 10);
      CHECK(Rational(determinant(rows)) == determinant(RatMatrix::from_rows(rows)));
    }
  }
}

TEST_CASE("solve") {
  CHECK(*solve(RatMatrix::identity(2), rv({1, 0})) == rv({1, 0}));
  CHECK(*solve(mat({{1, 0}, {1, 2}}), rv({1, 0})) == RatVector{q(1), q(-1, 2)});
  CHECK(*solve(mat({{1, 1}}), rv({2})) == rv({2, 0}));
  CHECK_FALSE(solve(mat({{1, 1}, {2, 2}}), rv({1, 3})).has_value());
  CHECK_THROWS_AS(solve(mat({{1, 1}}), rv({1, 2})), Error);
}

TEST_CASE("nullspace") {
  CHECK(nullspace(RatMatrix::identity(2)).empty());
  auto ns = nullspace(mat({{1, 1}}));
  REQUIRE(ns.size() == 1);
  CHECK(primitive(ns[0]) == iv({-1, 1}));
  CHECK(nullspace(RatMatrix(1, 3)).size() == 3);
}

TEST_CASE("dual_basis") {
  CHECK(dual_basis(points({{1, 0}, {0, 1}})) == points({{1, 0}, {0, 1}}));
  CHECK(dual_basis(points({{1, 0}, {1, 1}})) == points({{1, -1}, {0, 1}}));

  // Simple roots of A_2 inside the sum-zero plane; duals are the
  // fundamental weights (2,-1,-1)/3 and (1,1,-2)/3, hand-checked.
  auto duals = dual_basis(points({{1, -1, 0}, {0, 1, -1}}));
  REQUIRE(duals.size() == 2);
  CHECK(duals[0] == RatVector{q(2, 3), q(-1, 3), q(-1, 3)});
  CHECK(duals[1] == RatVector{q(1, 3), q(1, 3), q(-2, 3)});
  CHECK(dot(duals[0], duals[1]) == q(1, 3));

  try {
    dual_basis(points({{1, 2}, {2, 4}}));
    FAIL("expected NotABasis");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotABasis);
  }
}

TEST_CASE("dual_basis is an involution on random bases") {
  int checked = 0;
  while (checked < 100) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 5));
    std::vector<RatVector> b(n, RatVector(n));
    for (auto& r : b)
      for (auto& x : r) x = uniform(-10, 10);
    if (determinant(RatMatrix::from_rows(b)) == 0) continue;
    const auto d = dual_basis(b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(dot(b[i], d[j]) == (i == j ? 1 : 0));
    CHECK(dual_basis(d) == b);
    ++checked;
  }
}

TEST_CASE("pairwise non-acute bases have non-acute duals") {
  // Greedy sampler: each new vector must have nonpositive inner product
  // with all earlier ones.
  int instances = 0, connected_instances = 0;
  while (instances < 200) {
    const std::size_t n = static_cast<std::size_t>(uniform(2, 5));
    std::vector<RatVector> b;
    int attempts = 0;
    while (b.size() < n && attempts < 20000) {
      ++attempts;
      RatVector v(n);
      for (auto& x : v) x = uniform(0, 2) == 0 ? 0 : uniform(-10, 10);
      bool ok = true;
      for (const auto& w : b) ok = ok && dot(v, w) <= 0;
      if (!ok) continue;
      auto trial = b;
      trial.push_back(v);
      if (rank(trial, n) != trial.size()) continue;
      b = std::move(trial);
    }
    if (b.size() != n) continue;
    ++instances;
    const auto d = dual_basis(b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) CHECK(dot(d[i], d[j]) >= 0);

    // connectivity of the graph with edges where <b_i, b_j> < 0
    std::vector<std::size_t> comp(n);
    for (std::size_t i = 0; i < n; ++i) comp[i] = i;
    for (std::size_t pass = 0; pass < n; ++pass)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && dot(b[i], b[j]) < 0) comp[i] = comp[j] = std::min(comp[i], comp[j]);
    bool connected = true;
    for (auto c : comp) connected = connected && c == 0;
    if (connected) {
      ++connected_instances;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) CHECK(dot(d[i], d[j]) > 0);
    }
  }
  CHECK(connected_instances > 0);
}

TEST_CASE("saturated lattice bases") {
  CHECK(saturated_basis(points({{1, 1}}), 2) == std::vector<IntVector>{iv({1, 1})});
  CHECK(saturated_basis(points({{2, 2}}), 2) == std::vector<IntVector>{iv({1, 1})});
  const auto hex = saturated_basis(points({{1, -1, 0}, {0, 1, -1}}), 3);
  CHECK(hex == std::vector<IntVector>{iv({1, 0, -1}), iv({0, 1, -1})});
  // span{(2,0,1),(0,2,1)} contains (1,1,1) = half their sum.
  const auto sat = saturated_basis(points({{2, 0, 1}, {0, 2, 1}}), 3);
  REQUIRE(sat.size() == 2);
  auto coords = solve(RatMatrix::from_rows(sat).transpose(), rv({1, 1, 1}));
  REQUIRE(coords.has_value());
  for (const auto& c : *coords) CHECK(is_integral(c));
  CHECK(integer_kernel_basis({iv({1, 1, 1})}, 3).size() == 2);
  CHECK(saturated_basis({}, 2).empty());
}
