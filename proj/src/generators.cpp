#include "torsig/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "torsig/error.hpp"
#include "torsig/invariants.hpp"
#include "torsig/series.hpp"

namespace torsig {

namespace {

Facet facet(IntVector normal, const Rational& offset) { return Facet{std::move(normal), offset}; }

RatVector point(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

FVector fv(std::initializer_list<std::int64_t> xs) { return FVector{std::vector<std::int64_t>(xs)}; }

}  // namespace

Polytope cube(std::size_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "cube needs d >= 1");
  if (d > 20) throw Error(ErrorCode::StepLimit, "cube dimension too large");
  const std::size_t nv = std::size_t{1} << d;
  std::vector<RatVector> vertices(nv, RatVector(d));
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t i = 0; i < d; ++i) vertices[v][i] = (v >> i) & 1;
  std::vector<Facet> facets;
  std::vector<VertexSet> inc;
  for (std::size_t i = 0; i < d; ++i)
    for (int upper : {0, 1}) {
      IntVector n(d);
      n[i] = upper ? -1 : 1;
      facets.push_back(facet(n, upper ? -1 : 0));
      VertexSet s(nv);
      for (std::size_t v = 0; v < nv; ++v)
        if (static_cast<int>((v >> i) & 1) == upper) s.set(v);
      inc.push_back(std::move(s));
    }
  return Polytope::from_parts(std::move(vertices), std::move(facets), std::move(inc));
}

Polytope permutohedron(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "permutohedron needs n >= 2");
  if (n > 9) throw Error(ErrorCode::StepLimit, "permutohedron(n) is only generated for n <= 9");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<RatVector> vertices;
  for (const auto& p : perms) {
    RatVector v;
    for (auto x : p) v.emplace_back(static_cast<long>(x));
    vertices.push_back(std::move(v));
  }
  std::vector<Facet> facets;
  std::vector<VertexSet> inc;
  const std::size_t full = (std::size_t{1} << n) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    IntVector normal(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) {
        normal[i] = 1;
        ++k;
      }
    facets.push_back(facet(normal, static_cast<long>(k * (k - 1) / 2)));
    // tight iff the coordinates in S are exactly the |S| smallest values
    VertexSet s(perms.size());
    for (std::size_t v = 0; v < perms.size(); ++v) {
      bool tight = true;
      for (std::size_t i = 0; i < n && tight; ++i)
        if ((mask >> i) & 1) tight = perms[v][i] < k;
      if (tight) s.set(v);
    }
    inc.push_back(std::move(s));
  }
  return project_full_dim(Polytope::from_parts(std::move(vertices), std::move(facets), std::move(inc))).polytope;
}

Polytope associahedron(std::size_t n) {
  if (n < 4) throw Error(ErrorCode::InvalidInput, "associahedron needs n >= 4");
  if (n > 12) throw Error(ErrorCode::StepLimit, "associahedron(n) is only generated for n <= 12");
  const std::size_t m = n - 2;  // internal nodes, labelled 1..m in order

  struct Tree {
    std::vector<long> x;                                // x[i-1]
    std::vector<std::pair<std::size_t, std::size_t>> ranges;  // in-order subtree ranges
  };
  // all trees on the in-order label range [lo, hi]
  std::function<std::vector<Tree>(std::size_t, std::size_t)> trees = [&](std::size_t lo, std::size_t hi) {
    std::vector<Tree> out;
    if (lo > hi) {
      out.push_back(Tree{std::vector<long>(m, 0), {}});
      return out;
    }
    for (std::size_t r = lo; r <= hi; ++r) {
      const auto left = trees(lo, r - 1);
      const auto right = trees(r + 1, hi);
      for (const auto& a : left)
        for (const auto& b : right) {
          Tree t;
          t.x.resize(m);
          for (std::size_t i = 0; i < m; ++i) t.x[i] = a.x[i] + b.x[i];
          t.x[r - 1] = static_cast<long>((r - lo + 1) * (hi - r + 1));
          t.ranges = a.ranges;
          t.ranges.insert(t.ranges.end(), b.ranges.begin(), b.ranges.end());
          t.ranges.emplace_back(lo, hi);
          out.push_back(std::move(t));
        }
    }
    return out;
  };
  const auto all = trees(1, m);

  std::vector<RatVector> vertices;
  for (const auto& t : all) {
    RatVector v;
    for (long x : t.x) v.emplace_back(x);
    vertices.push_back(std::move(v));
  }
  std::vector<Facet> facets;
  std::vector<VertexSet> inc;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i; j <= m; ++j) {
      if (i == 1 && j == m) continue;
      IntVector normal(m);
      for (std::size_t k = i; k <= j; ++k) normal[k - 1] = 1;
      const std::size_t len = j - i + 2;
      facets.push_back(facet(normal, static_cast<long>(len * (len - 1) / 2)));
      // tight iff [i, j] is the range of a subtree
      VertexSet s(all.size());
      for (std::size_t v = 0; v < all.size(); ++v)
        if (std::find(all[v].ranges.begin(), all[v].ranges.end(), std::make_pair(i, j)) != all[v].ranges.end()) s.set(v);
      inc.push_back(std::move(s));
    }
  return project_full_dim(Polytope::from_parts(std::move(vertices), std::move(facets), std::move(inc))).polytope;
}

const std::vector<std::string>& polygon_presets() {
  static const std::vector<std::string> names = {"triangle", "square", "rectangle-2x1", "delzant-hexagon",
                                                 "obtuse-pentagon"};
  return names;
}

Polytope polygon(std::string_view preset) {
  if (preset == "triangle") return Polytope::from_vertices({point({0, 0}), point({1, 0}), point({0, 1})});
  if (preset == "square") return cube(2);
  if (preset == "rectangle-2x1")
    return Polytope::from_vertices({point({0, 0}), point({2, 0}), point({2, 1}), point({0, 1})});
  if (preset == "delzant-hexagon") return permutohedron(3);
  if (preset == "obtuse-pentagon")
    return Polytope::from_vertices({point({0, 1}), point({3, 0}), point({4, 2}), point({1, 4}), point({0, 3})});
  throw Error(ErrorCode::UnknownPreset, "unknown polygon preset '" + std::string(preset) + "'");
}

const std::vector<std::string>& arrangement_presets() {
  static const std::vector<std::string> names = {"coordinate", "A2", "B2"};
  return names;
}

Fan arrangement_preset(std::string_view preset) {
  auto v = [](long a, long b) { return IntVector{a, b}; };
  if (preset == "coordinate") return arrangement_fan({v(1, 0), v(0, 1)}, 2);
  // x_i - x_j in coordinates dual to the basis (1,0,-1), (0,1,-1) of the sum-zero lattice
  if (preset == "A2") return arrangement_fan({v(1, -1), v(1, 0), v(0, 1)}, 2);
  if (preset == "B2") return arrangement_fan({v(1, 0), v(0, 1), v(1, 1), v(1, -1)}, 2);
  throw Error(ErrorCode::UnknownPreset, "unknown arrangement preset '" + std::string(preset) + "'");
}

std::vector<CorpusEntry> corpus(std::size_t max_permutohedron) {
  using C = ConvexityClass;
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, Polytope p, Expected e, bool is_product = false) {
    out.push_back(CorpusEntry{std::move(name), std::move(p), std::move(e), is_product});
  };
  add("triangle", polygon("triangle"), {fv({3, 3, 1}), 1, C::NotLocallyConvex, 1});
  add("square", polygon("square"), {fv({4, 4, 1}), 0, C::LocallyConvex, 1});
  add("rectangle-2x1", polygon("rectangle-2x1"), {fv({4, 4, 1}), 0, C::LocallyConvex, 1});
  add("delzant-hexagon", polygon("delzant-hexagon"), {fv({6, 6, 1}), -2, C::LocallyStronglyConvex, 1});
  add("obtuse-pentagon", polygon("obtuse-pentagon"), {fv({5, 5, 1}), -1, C::LocallyStronglyConvex, {}});
  add("cube-3", cube(3), {fv({8, 12, 6, 1}), 0, C::LocallyConvex, 1});
  add("cube-4", cube(4), {fv({16, 32, 24, 8, 1}), 0, C::LocallyConvex, 1});
  for (std::size_t n = 4; n <= max_permutohedron; ++n) {
    Expected e{{}, tanh_sigma(static_cast<unsigned>(n)), {}, 1};
    if (n == 4) e.f = fv({24, 36, 14, 1});
    add("permutohedron-" + std::to_string(n), permutohedron(n), e);
  }
  for (std::size_t n = 5; n <= 8; ++n)
    add("associahedron-" + std::to_string(n), associahedron(n), {{}, associahedron_sigma(static_cast<unsigned>(n)), {}, {}});
  const Polytope sq = polygon("square"), tri = polygon("triangle"), hex = polygon("delzant-hexagon");
  add("square-x-square", product(sq, sq), {fv({16, 32, 24, 8, 1}), 0, C::LocallyConvex, 1}, true);
  add("triangle-x-triangle", product(tri, tri), {fv({9, 18, 15, 6, 1}), 1, C::NotLocallyConvex, 1}, true);
  add("hexagon-x-hexagon", product(hex, hex), {fv({36, 72, 48, 12, 1}), 4, C::LocallyConvex, 1}, true);
  return out;
}

Polytope generate(std::string_view name, std::optional<std::size_t> n, std::optional<std::size_t> d) {
  if (name == "cube") return cube(d.value_or(n.value_or(3)));
  if (name == "permutohedron") {
    if (!n && d) n = *d + 1;
    return permutohedron(n.value_or(4));
  }
  if (name == "associahedron") {
    if (!n && d) n = *d + 3;
    return associahedron(n.value_or(6));
  }
  for (const auto& p : polygon_presets())
    if (name == p) return polygon(name);
  const std::string s(name);
  const Polytope sq = cube(2);
  if (s == "square-x-square") return product(sq, sq);
  if (s == "triangle-x-triangle") return product(polygon("triangle"), polygon("triangle"));
  if (s == "hexagon-x-hexagon") return product(permutohedron(3), permutohedron(3));
  for (const std::string prefix : {"permutohedron-", "associahedron-", "cube-"}) {
    if (s.rfind(prefix, 0) != 0) continue;
    std::size_t k = 0;
    try {
      k = std::stoul(s.substr(prefix.size()));
    } catch (const std::exception&) {
      break;
    }
    if (prefix == "cube-") return cube(k);
    return prefix == "permutohedron-" ? permutohedron(k) : associahedron(k);
  }
  throw Error(ErrorCode::UnknownPreset, "unknown generator '" + s + "'");
}

}  // namespace torsig
