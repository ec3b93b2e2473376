#include <doctest.h>

#include "support.hpp"
#include "torsig/error.hpp"
#include "torsig/invariants.hpp"

using namespace torsig;
using namespace torsig::test;

namespace {

FVector fv(std::initializer_list<std::int64_t> xs) { return FVector{std::vector<std::int64_t>(xs)}; }

HVector hv(std::initializer_list<long> xs) {
  HVector h;
  for (long x : xs) h.counts.emplace_back(x);
  return h;
}

// Eulerian numbers A(n, k): permutations of n letters with k descents.
std::vector<Integer> eulerian(unsigned n) {
  std::vector<Integer> row{1};
  for (unsigned m = 2; m <= n; ++m) {
    std::vector<Integer> next(m, 0);
    for (unsigned k = 0; k < m; ++k) {
      if (k < row.size()) next[k] += (k + 1) * row[k];
      if (k >= 1 && k - 1 < row.size()) next[k] += (m - k) * row[k - 1];
    }
    row = next;
  }
  return row;
}

}  // namespace

TEST_CASE("h_vector") {
  CHECK(h_vector(fv({4, 4, 1})) == hv({1, 2, 1}));
  CHECK(h_vector(fv({6, 6, 1})) == hv({1, 4, 1}));
  CHECK(h_vector(fv({24, 36, 14, 1})).counts == eulerian(4));
  CHECK(h_vector(fv({8, 12, 6, 1})) == hv({1, 3, 3, 1}));
}

TEST_CASE("sigma") {
  CHECK(sigma(fv({4, 4, 1})) == 0);
  CHECK(sigma(fv({5, 5, 1})) == -1);
  CHECK(sigma(fv({6, 6, 1})) == -2);
  CHECK(sigma(fv({3, 3, 1})) == 1);
  CHECK(sigma(fv({24, 36, 14, 1})) == 0);
  CHECK(sigma(fv({16, 32, 24, 8, 1})) == 0);
  CHECK(sigma(fv({36, 72, 48, 12, 1})) == 4);
  CHECK(sigma(fv({9, 18, 15, 6, 1})) == 1);
  for (const auto& f : {fv({4, 4, 1}), fv({24, 36, 14, 1}), fv({36, 72, 48, 12, 1})}) {
    Integer alt = 0;
    const auto h = h_vector(f);
    for (std::size_t i = 0; i < h.counts.size(); ++i) alt += i % 2 == 0 ? h.counts[i] : Integer(-h.counts[i]);
    CHECK(alt == sigma(f));
  }
  // polygons: (-1) sigma = f_0 - 4
  for (std::int64_t n = 3; n < 12; ++n) CHECK(-sigma(fv({n, n, 1})) == n - 4);
}

TEST_CASE("dehn_sommerville_ok") {
  CHECK(dehn_sommerville_ok(hv({1, 2, 1})));
  CHECK(dehn_sommerville_ok(hv({1, 11, 11, 1})));
  CHECK_FALSE(dehn_sommerville_ok(hv({1, 2, 3})));
}

TEST_CASE("b_n and the series 1 - x cot x") {
  CHECK(bernoulli_b(1) == q(1, 3));
  CHECK(bernoulli_b(2) == q(1, 45));
  CHECK(bernoulli_b(3) == q(2, 945));
  const auto s = one_minus_x_cot_x(6);
  CHECK(s[0] == 0);
  CHECK(s[2] == q(1, 3));
  CHECK(s[4] == q(1, 45));
  CHECK(s[6] == q(2, 945));
  for (std::size_t k = 1; k <= 6; k += 2) CHECK(s[k] == 0);
  CHECK(one_minus_x_cot_x(2).coefficients() == std::vector<Rational>{0, 0, q(1, 3)});

  CHECK(bernoulli_hirzebruch(1) == q(1, 6));
  CHECK(bernoulli_hirzebruch(2) == q(1, 30));
  CHECK(bernoulli_hirzebruch(3) == q(1, 42));
  for (unsigned n = 1; n <= 8; ++n) {
    const Rational expected = Rational(Integer(1) << (2 * n)) * bernoulli_hirzebruch(n) / Rational(factorial(2 * n));
    CHECK(bernoulli_b(n) == expected);
    CHECK(bernoulli_b(n) > 0);
  }
}

TEST_CASE("bound_rhs") {
  CHECK(bound_rhs(fv({6, 6, 1}), 1, TheoremCase::II) == 2);
  CHECK(bound_rhs(fv({6, 6, 1}), 1, TheoremCase::III) == 2);
  CHECK(bound_rhs(fv({36, 72, 48, 12, 1}), 1, TheoremCase::III) == q(28, 5));
  CHECK(bound_rhs(fv({36, 72, 48, 12, 1}), 1, TheoremCase::II) == 4);
  CHECK(bound_rhs(fv({36, 72, 48, 12, 1}), 2, TheoremCase::III) == q(28, 40));
  CHECK(bound_rhs(fv({4, 4, 1}), 1, TheoremCase::I) == 0);
  for (std::int64_t n = 3; n < 10; ++n)
    for (long m = 1; m < 5; ++m)
      CHECK(bound_rhs(fv({n, n, 1}), m, TheoremCase::II) == bound_rhs(fv({n, n, 1}), m, TheoremCase::III));
  try {
    bound_rhs(fv({8, 12, 6, 1}), 1, TheoremCase::II);
    FAIL("expected OddDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddDimension);
  }
}

TEST_CASE("bound_report") {
  auto r = bound_report(fv({6, 6, 1}), ConvexityClass::LocallyStronglyConvex, 1);
  CHECK(r.theorem_case == TheoremCase::III);
  CHECK(r.lhs == 2);
  CHECK(r.rhs == 2);
  CHECK(r.satisfied);

  r = bound_report(fv({4, 4, 1}), ConvexityClass::LocallyConvex, 1);
  CHECK(r.theorem_case == TheoremCase::I);
  CHECK(r.lhs == 0);
  CHECK(r.rhs == 0);
  CHECK(r.satisfied);

  r = bound_report(fv({4, 4, 1}), ConvexityClass::LocallyConvex, 1, TheoremCase::III);
  CHECK(r.theorem_case == TheoremCase::None);

  r = bound_report(fv({6, 6, 1}), ConvexityClass::LocallyStronglyConvex, 1, TheoremCase::II);
  CHECK(r.theorem_case == TheoremCase::II);
  CHECK(r.rhs == 2);

  r = bound_report(fv({36, 72, 48, 12, 1}), ConvexityClass::LocallyConvex, 1);
  CHECK(r.theorem_case == TheoremCase::I);
  CHECK(r.lhs == 4);

  r = bound_report(fv({3, 3, 1}), ConvexityClass::NotLocallyConvex, 1);
  CHECK(r.theorem_case == TheoremCase::None);
  CHECK(r.lhs == -1);
  for (TheoremCase forced : {TheoremCase::I, TheoremCase::II, TheoremCase::III})
    CHECK(bound_report(fv({3, 3, 1}), ConvexityClass::NotLocallyConvex, 1, forced).theorem_case == TheoremCase::None);
  CHECK(parse_theorem_case("ii") == TheoremCase::II);
  CHECK_THROWS_AS(parse_theorem_case("iv"), Error);
}

TEST_CASE("polygon inequality") {
  CHECK(polygon_inequality_rhs(1) == 6);
  CHECK(polygon_inequality_rhs(2) == q(24, 5));
  CHECK(polygon_inequality_rhs(10) == q(120, 29));
  for (long m = 1; m < 50; ++m) CHECK(polygon_inequality_rhs(m) > 4);
  // f_0 - 4 >= f_0 / (3 m) rearranged
  for (long m = 1; m < 6; ++m)
    for (std::int64_t n = 3; n < 12; ++n)
      CHECK((n - 4 >= Rational(n) / (3 * m)) == (Rational(n) >= polygon_inequality_rhs(m)));
}

TEST_CASE("kappa and Euler characteristics") {
  CHECK(kappa(-2, 2) == q(-1, 2));
  CHECK(kappa(0, 3) == 0);
  CHECK(kappa(1, 2) == q(1, 4));
  CHECK(mirror_euler(0, 4, 2) == 0);
  CHECK(mirror_euler(-1, 5, 2) == -8);
  CHECK(mirror_euler(-2, 6, 2) == -32);
  CHECK(corner_euler(std::vector<Integer>(16, 0), 2) == 0);
  CHECK(corner_euler({-2, -2, -2, -2}, 2) == -2);
  for (std::size_t n = 3; n < 8; ++n) {
    const Integer s = -static_cast<long>(n) + 4;
    CHECK(corner_euler(std::vector<Integer>(std::size_t{1} << n, s), 2) == Rational(mirror_euler(s, n, 2)));
  }
}

TEST_CASE("closed forms") {
  CHECK(tanh_sigma(1) == 1);
  CHECK(tanh_sigma(2) == 0);
  CHECK(tanh_sigma(3) == -2);
  CHECK(tanh_sigma(4) == 0);
  CHECK(tanh_sigma(5) == 16);
  CHECK(tanh_sigma(7) == -272);
  CHECK(associahedron_sigma(4) == 0);
  CHECK(associahedron_sigma(5) == -1);
  CHECK(associahedron_sigma(6) == 0);
  CHECK(associahedron_sigma(7) == 2);
  CHECK(associahedron_sigma(9) == -5);
}
