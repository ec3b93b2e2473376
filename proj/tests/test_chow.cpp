#include <doctest.h>

#include "support.hpp"
#include "torsig/chow.hpp"
#include "torsig/error.hpp"
#include "torsig/generators.hpp"
#include "torsig/invariants.hpp"

using namespace torsig;
using namespace torsig::test;

namespace {

DivisorMonomial mono(std::initializer_list<std::pair<const std::size_t, unsigned>> xs) { return DivisorMonomial{xs}; }

Fan fan2(std::initializer_list<std::initializer_list<long>> rays) {
  std::vector<IntVector> rs;
  for (auto r : rays) rs.push_back(iv(r));
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < rs.size(); ++i) cones.push_back({i, (i + 1) % rs.size()});
  return Fan(2, rs, cones);
}

}  // namespace

TEST_CASE("evaluate on surfaces") {
  const Fan tri = fan2({{1, 0}, {0, 1}, {-1, -1}});
  CHECK(evaluate(tri, mono({{0, 1}, {1, 1}})) == 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(evaluate(tri, mono({{i, 2}})) == 1);

  const Fan sq = fan2({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  for (std::size_t i = 0; i < 4; ++i) CHECK(evaluate(sq, mono({{i, 2}})) == 0);
  CHECK(evaluate(sq, mono({{0, 1}, {2, 1}})) == 0);

  const Fan hex = normal_fan(polygon("delzant-hexagon"));
  for (std::size_t i = 0; i < 6; ++i) CHECK(evaluate(hex, mono({{i, 2}})) == -1);

  // weighted projective plane P(1,1,2): D_3^2 = 1/2
  const Fan wpp = fan2({{1, 0}, {0, 1}, {-1, -2}});
  CHECK(evaluate(wpp, mono({{0, 1}, {2, 1}})) == q(1, 2));
  CHECK(evaluate(wpp, mono({{2, 2}})) == q(1, 2));
  CHECK(evaluate(wpp, mono({{0, 2}})) == q(1, 2));
  CHECK(evaluate(wpp, mono({{1, 2}})) == 2);

  try {
    evaluate(tri, mono({{0, 1}}));
    FAIL("expected WrongDegree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongDegree);
  }
}

TEST_CASE("evaluate on threefolds") {
  // P^3: every degree-3 monomial is 1
  const Fan p3(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({-1, -1, -1})},
               {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(evaluate(p3, mono({{0, 3}})) == 1);
  CHECK(evaluate(p3, mono({{0, 2}, {3, 1}})) == 1);
  CHECK(evaluate(p3, mono({{1, 1}, {2, 1}, {3, 1}})) == 1);
  // P^1 x P^1 x P^1: D^2 = 0 for each ray
  const Fan c3 = normal_fan(cube(3));
  for (std::size_t i = 0; i < c3.num_rays(); ++i) CHECK(evaluate(c3, mono({{i, 3}})) == 0);
}

TEST_CASE("signature_via_L") {
  CHECK(signature_via_L(normal_fan(polygon("triangle"))) == 1);
  CHECK(signature_via_L(normal_fan(polygon("square"))) == 0);
  CHECK(signature_via_L(normal_fan(polygon("delzant-hexagon"))) == -2);
  // Singular surface (m = 840): the divisor L-class misses the local
  // corrections at the quotient singularities, so it is not sigma = -1.
  CHECK(signature_via_L(normal_fan(polygon("obtuse-pentagon"))) == q(-173, 252));
  CHECK(signature_via_L(fan2({{1, 0}, {0, 1}, {-1, -2}})) == 1);
  CHECK_THROWS_AS(signature_via_L(normal_fan(cube(3))), Error);
}

TEST_CASE("signature_via_L matches f(-2) on smooth even-dimensional corpus entries") {
  int smooth = 0;
  for (const auto& e : corpus(5)) {
    if (e.polytope.ambient_dim() % 2 != 0) continue;
    const Fan fan = normal_fan(e.polytope);
    if (m_of(fan) != 1) continue;
    CAPTURE(e.name);
    ++smooth;
    CHECK(signature_via_L(fan) == Rational(sigma(f_vector(e.polytope))));
  }
  CHECK(smooth >= 8);
}

TEST_CASE("surface self-intersections match the closed form") {
  // D_i^2 = -det(n_{i-1}, n_{i+1}) / (det(n_{i-1}, n_i) det(n_i, n_{i+1}))
  // and D_i D_{i+1} = 1 / det(n_i, n_{i+1}) for rays in counterclockwise order.
  auto det2 = [](const IntVector& a, const IntVector& b) { return Integer(a[0] * b[1] - a[1] * b[0]); };
  const std::vector<std::vector<IntVector>> fans = {
      {iv({1, 3}), iv({-2, 1}), iv({-2, -3}), iv({1, -1}), iv({1, 0})},
      {iv({1, 0}), iv({1, 2}), iv({-1, 1}), iv({-2, -1}), iv({1, -3})},
      {iv({1, 0}), iv({0, 1}), iv({-2, -3})},
      {iv({2, 1}), iv({-1, 2}), iv({-3, -1}), iv({0, -1})}};
  for (const auto& rays : fans) {
    const std::size_t n = rays.size();
    std::vector<Cone> cones;
    for (std::size_t i = 0; i < n; ++i) cones.push_back({i, (i + 1) % n});
    const Fan fan(2, rays, cones);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& prev = rays[(i + n - 1) % n];
      const auto& next = rays[(i + 1) % n];
      REQUIRE(det2(rays[i], next) > 0);
      const Rational expected = -Rational(det2(prev, next)) / Rational(det2(prev, rays[i]) * det2(rays[i], next));
      CHECK(evaluate(fan, mono({{i, 2}})) == expected);
      CHECK(evaluate(fan, mono({{i, 1}, {(i + 1) % n, 1}})) == Rational(1) / Rational(det2(rays[i], next)));
    }
  }
}

TEST_CASE("monomial_sign_report") {
  const auto hex = monomial_sign_report(normal_fan(polygon("delzant-hexagon")));
  CHECK(hex.size() == 6);
  for (const auto& t : hex) {
    CHECK(t.value == -1);
    CHECK(t.sign_ok);
    CHECK(t.coefficient == q(-1, 3));
  }
  const auto sq = monomial_sign_report(normal_fan(polygon("square")));
  CHECK(sq.size() == 4);
  for (const auto& t : sq) CHECK((t.value == 0 && t.sign_ok));
  for (const auto& t : monomial_sign_report(normal_fan(polygon("triangle")))) CHECK_FALSE(t.sign_ok);
}

TEST_CASE("evaluate is independent of pivots") {
  std::vector<Fan> fans = {normal_fan(polygon("obtuse-pentagon")), normal_fan(cube(3)), normal_fan(associahedron(6)),
                           normal_fan(permutohedron(4)), fan2({{1, 0}, {0, 1}, {-2, -3}})};
  for (const auto& fan : fans) {
    ChowEvaluator canonical(fan);
    for (std::size_t r = 0; r < fan.num_rays(); ++r) {
      DivisorMonomial m;
      m.exponents[r] = static_cast<unsigned>(fan.dim());
      const Rational expected = canonical.evaluate(m);
      for (int run = 0; run < 4; ++run) {
        ChowEvaluator random(fan, rng());
        CHECK(random.evaluate(m) == expected);
      }
    }
  }
}
