#include "torsig/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "torsig/cone.hpp"
#include "torsig/error.hpp"
#include "torsig/linalg.hpp"
#include "torsig/series.hpp"

namespace torsig {

std::string_view to_string(AngleClass c) {
  switch (c) {
    case AngleClass::Obtuse: return "Obtuse";
    case AngleClass::NonAcuteOnly: return "NonAcuteOnly";
    case AngleClass::Neither: return "Neither";
  }
  return "Neither";
}

std::uint64_t step_limit() {
  if (const char* env = std::getenv("TORSIG_STEP_LIMIT")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, std::string("TORSIG_STEP_LIMIT is not a number: ") + env);
    }
  }
  return 100'000'000ULL;
}

namespace {

/// Row echelon basis that grows one vector at a time.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t dim) : dim_(dim) {}

  /// Adds v; returns true when v was independent of the current span.
  bool add(RatVector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& c = v[pivots_[i]];
      if (c == 0) continue;
      const Rational f = c;
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[i][j];
    }
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    // keep rows fully reduced at pivot columns
    for (auto& r : rows_) {
      if (r[p] == 0) continue;
      const Rational f = r[p];
      for (std::size_t j = 0; j < dim_; ++j) r[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

RatVector difference(const RatVector& a, const RatVector& b) {
  RatVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

/// Affine rank of the points selected by `members` (all points when empty selector).
std::size_t affine_rank(const std::vector<RatVector>& points, const VertexSet& members, std::size_t cap) {
  std::size_t first = members.find_first();
  if (first == VertexSet::npos) return 0;
  IncrementalSpan span(points[first].size());
  for (std::size_t i = members.find_next(first); i != VertexSet::npos && span.rank() < cap; i = members.find_next(i))
    span.add(difference(points[i], points[first]));
  return span.rank();
}

std::size_t affine_rank(const std::vector<RatVector>& points) {
  if (points.empty()) return 0;
  VertexSet all(points.size());
  all.set();
  return affine_rank(points, all, points.front().size());
}

/// Calls fn(indices) for each k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void guard_steps(std::size_t n, std::size_t k, const char* what) {
  const Integer steps = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * static_cast<unsigned long>(n);
  if (steps > Integer(std::to_string(step_limit()))) {
    throw Error(ErrorCode::StepLimit, std::string(what) + ": " + steps.get_str() +
                                          " brute-force steps exceed the limit (set TORSIG_STEP_LIMIT to raise it)");
  }
}

std::vector<RatVector> dedupe(const std::vector<RatVector>& points) {
  std::set<RatVector> seen;
  std::vector<RatVector> out;
  for (const auto& p : points)
    if (seen.insert(p).second) out.push_back(p);
  return out;
}

IntVector sign_canonical(IntVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

std::vector<RatVector> orthogonal_complement(const std::vector<RatVector>& points) {
  std::vector<RatVector> dirs;
  for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(difference(points[i], points[0]));
  const std::size_t n = points.front().size();
  if (dirs.empty()) {
    std::vector<RatVector> all;
    for (std::size_t i = 0; i < n; ++i) {
      RatVector e(n);
      e[i] = 1;
      all.push_back(std::move(e));
    }
    return all;
  }
  return nullspace(RatMatrix::from_rows(dirs, n));
}

std::vector<VertexSet> incidence_of(const std::vector<RatVector>& vertices, const std::vector<Facet>& facets,
                                    bool check_feasible) {
  std::vector<VertexSet> inc(facets.size(), VertexSet(vertices.size()));
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      const Rational val = dot(vertices[v], facets[f].inner_normal);
      if (val == facets[f].offset) {
        inc[f].set(v);
      } else if (check_feasible && val < facets[f].offset) {
        throw Error(ErrorCode::InvalidInput, "vertex " + std::to_string(v) + " violates facet " + std::to_string(f));
      }
    }
  }
  return inc;
}

Facet make_facet(const IntVector& normal, const Rational& offset) {
  Integer g = 0;
  for (const auto& x : normal) g = gcd(g, x);
  if (g == 0) throw Error(ErrorCode::InvalidInput, "facet with zero normal");
  Facet f;
  f.inner_normal.resize(normal.size());
  for (std::size_t i = 0; i < normal.size(); ++i) f.inner_normal[i] = normal[i] / g;
  f.offset = offset / Rational(g);
  return f;
}

struct AffineChart {
  RatVector origin;
  std::vector<IntVector> basis;
  std::vector<std::size_t> rows;  // coordinates used to invert the chart
  RatMatrix inverse_rows;         // inverse of basis restricted to `rows`

  RatVector to_local(const RatVector& x) const {
    RatVector d = difference(x, origin);
    RatVector sub(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) sub[i] = d[rows[i]];
    return inverse_rows * sub;
  }

  RatVector to_ambient(const RatVector& y) const {
    RatVector x = origin;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += y[i] * basis[i][j];
    return x;
  }
};

AffineChart make_chart(const std::vector<RatVector>& points) {
  AffineChart chart;
  chart.origin = points.front();
  const std::size_t n = chart.origin.size();
  std::vector<RatVector> dirs;
  for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(difference(points[i], points[0]));
  // Keep only an independent subset before saturating.
  IncrementalSpan span(n);
  std::vector<RatVector> independent;
  for (auto& d : dirs)
    if (span.add(d)) independent.push_back(d);
  chart.basis = saturated_basis(independent, n);
  const std::size_t k = chart.basis.size();
  // Columns of the n x k matrix are basis vectors; pick k independent rows.
  RatMatrix cols(n, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) cols(j, i) = chart.basis[i][j];
  IncrementalSpan row_span(k);
  for (std::size_t j = 0; j < n && chart.rows.size() < k; ++j)
    if (row_span.add(cols.row_vector(j))) chart.rows.push_back(j);
  RatMatrix sub(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c) sub(i, c) = cols(chart.rows[i], c);
  chart.inverse_rows = k == 0 ? RatMatrix() : inverse(sub);
  return chart;
}

/// Pulls a facet <y, a> >= c of the local polytope back to ambient space.
Facet lift_facet(const Facet& local, const AffineChart& chart) {
  const std::size_t n = chart.origin.size();
  const std::size_t k = chart.basis.size();
  RatMatrix bt(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) bt(i, j) = chart.basis[i][j];
  auto sol = solve(bt, to_rational(local.inner_normal));
  if (!sol) throw Error(ErrorCode::InvalidInput, "cannot lift facet normal");
  IntVector normal = primitive(*sol);
  // normal = mu * sol with mu > 0
  Rational mu;
  for (std::size_t j = 0; j < n; ++j)
    if ((*sol)[j] != 0) {
      mu = Rational(normal[j]) / (*sol)[j];
      break;
    }
  return Facet{normal, mu * local.offset + dot(chart.origin, normal)};
}

Polytope hull_full_dim(const std::vector<RatVector>& points, std::size_t d);

}  // namespace

void Polytope::index_incidence() {
  vertex_facets_.assign(vertices_.size(), {});
  for (std::size_t f = 0; f < facets_.size(); ++f)
    for (std::size_t v = facet_vertices_[f].find_first(); v != VertexSet::npos; v = facet_vertices_[f].find_next(v))
      vertex_facets_[v].push_back(f);
}

Polytope Polytope::from_parts(std::vector<RatVector> vertices, std::vector<Facet> facets,
                              std::vector<VertexSet> facet_vertices) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidInput, "polytope without vertices");
  const std::size_t n = vertices.front().size();
  for (const auto& v : vertices)
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vertices of different dimensions");
  for (const auto& f : facets)
    if (f.inner_normal.size() != n) throw Error(ErrorCode::DimensionMismatch, "facet normal dimension");
  if (facet_vertices.size() != facets.size()) throw Error(ErrorCode::InvalidInput, "incidence/facet count mismatch");
  for (const auto& s : facet_vertices)
    if (s.size() != vertices.size()) throw Error(ErrorCode::InvalidInput, "incidence/vertex count mismatch");
  Polytope p;
  p.ambient_dim_ = n;
  p.vertices_ = std::move(vertices);
  p.facets_ = std::move(facets);
  p.facet_vertices_ = std::move(facet_vertices);
  p.intrinsic_dim_ = affine_rank(p.vertices_);
  p.index_incidence();
  return p;
}

Polytope Polytope::from_vertices_and_facets(std::vector<RatVector> vertices, std::vector<Facet> facets) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidInput, "polytope without vertices");
  if (dedupe(vertices).size() != vertices.size()) throw Error(ErrorCode::InvalidInput, "duplicate vertices");
  for (auto& f : facets) f = make_facet(f.inner_normal, f.offset);
  auto inc = incidence_of(vertices, facets, true);
  Polytope p = from_parts(std::move(vertices), std::move(facets), std::move(inc));
  const std::size_t d = p.intrinsic_dim_;
  for (std::size_t f = 0; f < p.facets_.size(); ++f) {
    const auto& members = p.facet_vertices_[f];
    if (members.count() == p.vertices_.size() || affine_rank(p.vertices_, members, d) + 1 != d)
      throw Error(ErrorCode::InvalidInput, "facet " + std::to_string(f) + " is redundant");
    for (std::size_t g = 0; g < f; ++g)
      if (p.facet_vertices_[g] == members) throw Error(ErrorCode::InvalidInput, "duplicate facet " + std::to_string(f));
  }
  if (d > 0) {
    const auto complement = orthogonal_complement(p.vertices_);
    for (std::size_t v = 0; v < p.vertices_.size(); ++v) {
      std::vector<RatVector> rows = complement;
      for (auto f : p.vertex_facets_[v]) rows.push_back(to_rational(p.facets_[f].inner_normal));
      if (rank(rows, p.ambient_dim_) != p.ambient_dim_)
        throw Error(ErrorCode::InvalidInput, "vertex " + std::to_string(v) + " is not extreme");
    }
  }
  return p;
}

namespace {

Polytope hull_full_dim(const std::vector<RatVector>& points, std::size_t d) {
  const std::size_t n = points.size();
  guard_steps(n, d, "from_vertices");
  std::set<std::pair<IntVector, Rational>> tried;
  std::vector<Facet> facets;
  for_each_subset(n, d, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVector> rows;
    rows.reserve(d - 1);
    for (std::size_t k = 1; k < d; ++k) rows.push_back(difference(points[idx[k]], points[idx[0]]));
    auto ns = nullspace(RatMatrix::from_rows(rows, d));
    if (ns.size() != 1) return;
    IntVector normal = sign_canonical(primitive(ns.front()));
    Rational offset = dot(points[idx[0]], normal);
    if (!tried.emplace(normal, offset).second) return;
    bool any_above = false, any_below = false;
    for (const auto& p : points) {
      const Rational v = dot(p, normal);
      if (v > offset) any_above = true;
      if (v < offset) any_below = true;
      if (any_above && any_below) return;
    }
    if (any_below) {
      for (auto& x : normal) x = -x;
      offset = -offset;
    }
    facets.push_back(Facet{std::move(normal), std::move(offset)});
  });

  auto inc = incidence_of(points, facets, false);
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<IntVector> normals;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (inc[f][v]) normals.push_back(facets[f].inner_normal);
    if (!normals.empty() && rank(normals, d) == d) keep.push_back(v);
  }
  std::vector<RatVector> vertices;
  for (auto v : keep) vertices.push_back(points[v]);
  auto final_inc = incidence_of(vertices, facets, false);
  return Polytope::from_parts(std::move(vertices), std::move(facets), std::move(final_inc));
}

}  // namespace

Polytope Polytope::from_vertices(const std::vector<RatVector>& input) {
  if (input.empty()) throw Error(ErrorCode::InvalidInput, "from_vertices: no points");
  const std::size_t n = input.front().size();
  for (const auto& p : input)
    if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "points of different dimensions");
  const auto points = dedupe(input);
  const std::size_t d = affine_rank(points);
  if (d == 0) return from_parts({points.front()}, {}, {});
  if (d == n) return hull_full_dim(points, d);

  const AffineChart chart = make_chart(points);
  std::vector<RatVector> local;
  local.reserve(points.size());
  for (const auto& p : points) local.push_back(chart.to_local(p));
  Polytope low = hull_full_dim(local, d);
  std::vector<RatVector> vertices;
  for (const auto& y : low.vertices()) vertices.push_back(chart.to_ambient(y));
  std::vector<Facet> facets;
  for (const auto& f : low.facets()) facets.push_back(lift_facet(f, chart));
  return from_parts(std::move(vertices), std::move(facets), low.facet_vertices_);
}

Polytope Polytope::from_halfspaces(const std::vector<Facet>& input, std::size_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "from_halfspaces: zero-dimensional ambient space");
  std::vector<Facet> facets;
  for (const auto& f : input) {
    if (f.inner_normal.size() != d) throw Error(ErrorCode::DimensionMismatch, "facet normal dimension");
    facets.push_back(make_facet(f.inner_normal, f.offset));
  }
  std::vector<IntVector> normals;
  for (const auto& f : facets) normals.push_back(f.inner_normal);
  const ConeGenerators recession = cone_generators(normals, d);
  const std::size_t lin = recession.lineality.size();
  const std::size_t k = d - lin;
  guard_steps(facets.size(), k, "from_halfspaces");

  std::vector<RatVector> found;
  std::set<RatVector> seen;
  for_each_subset(facets.size(), k, [&](const std::vector<std::size_t>& idx) {
    RatMatrix m(d, d);
    RatVector rhs(d);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < d; ++j) m(i, j) = facets[idx[i]].inner_normal[j];
      rhs[i] = facets[idx[i]].offset;
    }
    for (std::size_t i = 0; i < lin; ++i)
      for (std::size_t j = 0; j < d; ++j) m(k + i, j) = recession.lineality[i][j];
    if (determinant(m) == 0) return;
    auto x = solve(m, rhs);
    for (const auto& f : facets)
      if (dot(*x, f.inner_normal) < f.offset) return;
    if (seen.insert(*x).second) found.push_back(std::move(*x));
  });
  if (found.empty()) throw Error(ErrorCode::Empty, "the halfspaces have empty intersection");
  if (!recession.is_zero()) throw Error(ErrorCode::Unbounded, "the halfspace intersection is unbounded");

  auto inc = incidence_of(found, facets, false);
  const std::size_t dim = affine_rank(found);
  std::vector<Facet> kept;
  std::vector<VertexSet> kept_inc;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    if (dim == 0 || inc[f].count() == found.size()) continue;
    if (affine_rank(found, inc[f], dim) + 1 != dim) continue;
    if (std::find(kept_inc.begin(), kept_inc.end(), inc[f]) != kept_inc.end()) continue;
    kept.push_back(facets[f]);
    kept_inc.push_back(inc[f]);
  }
  return from_parts(std::move(found), std::move(kept), std::move(kept_inc));
}

namespace {

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return boost::hash_value(s); }
};

}  // namespace

FaceLattice face_lattice(const Polytope& p) {
  const std::size_t d = p.intrinsic_dim();
  const std::size_t nv = p.num_vertices();
  FaceLattice lattice;
  lattice.faces.assign(d + 1, {});
  VertexSet all(nv);
  all.set();
  lattice.faces[d].push_back(all);
  if (d == 0) return lattice;

  {
    std::unordered_set<VertexSet, VertexSetHash> level;
    for (std::size_t f = 0; f < p.num_facets(); ++f) level.insert(p.facet_vertices(f));
    lattice.faces[d - 1].assign(level.begin(), level.end());
  }
  for (std::size_t k = d - 1; k >= 1; --k) {
    std::unordered_set<VertexSet, VertexSetHash> next;
    for (const auto& face : lattice.faces[k]) {
      std::vector<VertexSet> cands;
      for (std::size_t f = 0; f < p.num_facets(); ++f) {
        if (face.is_subset_of(p.facet_vertices(f))) continue;
        VertexSet meet = face & p.facet_vertices(f);
        if (meet.none()) continue;
        if (std::find(cands.begin(), cands.end(), meet) == cands.end()) cands.push_back(std::move(meet));
      }
      for (std::size_t i = 0; i < cands.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cands.size() && maximal; ++j)
          if (i != j && cands[i].is_proper_subset_of(cands[j])) maximal = false;
        if (maximal) next.insert(cands[i]);
      }
    }
    lattice.faces[k - 1].assign(next.begin(), next.end());
  }
  for (auto& level : lattice.faces) std::sort(level.begin(), level.end());
  return lattice;
}

FVector f_vector(const FaceLattice& lattice) {
  FVector f;
  for (const auto& level : lattice.faces) f.counts.push_back(static_cast<std::int64_t>(level.size()));
  return f;
}

FVector f_vector(const Polytope& p) { return f_vector(face_lattice(p)); }

bool is_simple(const Polytope& p) {
  const std::size_t d = p.intrinsic_dim();
  for (std::size_t v = 0; v < p.num_vertices(); ++v)
    if (p.vertex_facets(v).size() != d) return false;
  return true;
}

AngleClass angle_class(const Polytope& p, const FaceLattice& lattice) {
  if (lattice.faces.size() < 3) return AngleClass::Obtuse;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : lattice.faces[1]) {
    const std::size_t a = e.find_first();
    edges.emplace_back(a, e.find_next(a));
  }
  const auto& verts = p.vertices();
  bool any_zero = false;
  for (const auto& face : lattice.faces[2]) {
    std::map<std::size_t, std::vector<std::size_t>> neighbours;
    for (const auto& [a, b] : edges) {
      if (!face[a] || !face[b]) continue;
      neighbours[a].push_back(b);
      neighbours[b].push_back(a);
    }
    for (const auto& [v, nb] : neighbours) {
      if (nb.size() != 2) throw Error(ErrorCode::InvalidInput, "malformed 2-face in face lattice");
      const Rational ip = dot(difference(verts[nb[0]], verts[v]), difference(verts[nb[1]], verts[v]));
      if (ip > 0) return AngleClass::Neither;
      if (ip == 0) any_zero = true;
    }
  }
  return any_zero ? AngleClass::NonAcuteOnly : AngleClass::Obtuse;
}

AngleClass angle_class(const Polytope& p) { return angle_class(p, face_lattice(p)); }

Projection project_full_dim(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  if (p.is_full_dimensional()) {
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return {p, std::move(basis), RatVector(n)};
  }
  const AffineChart chart = make_chart(p.vertices());
  const std::size_t k = chart.basis.size();
  std::vector<RatVector> local;
  local.reserve(p.num_vertices());
  for (const auto& v : p.vertices()) local.push_back(chart.to_local(v));
  std::vector<Facet> facets;
  for (const auto& f : p.facets()) {
    IntVector a(k);
    for (std::size_t i = 0; i < k; ++i) a[i] = dot(chart.basis[i], f.inner_normal);
    if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; }))
      throw Error(ErrorCode::InvalidInput, "facet normal is orthogonal to the affine hull");
    facets.push_back(make_facet(a, f.offset - dot(chart.origin, f.inner_normal)));
  }
  std::vector<VertexSet> inc;
  for (std::size_t f = 0; f < p.num_facets(); ++f) inc.push_back(p.facet_vertices(f));
  return {Polytope::from_parts(std::move(local), std::move(facets), std::move(inc)), chart.basis, chart.origin};
}

Polytope product(const Polytope& p, const Polytope& q) {
  const std::size_t np = p.ambient_dim(), nq = q.ambient_dim();
  const std::size_t vp = p.num_vertices(), vq = q.num_vertices();
  std::vector<RatVector> vertices;
  vertices.reserve(vp * vq);
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      RatVector v = a;
      v.insert(v.end(), b.begin(), b.end());
      vertices.push_back(std::move(v));
    }
  std::vector<Facet> facets;
  std::vector<VertexSet> inc;
  for (std::size_t f = 0; f < p.num_facets(); ++f) {
    IntVector n = p.facets()[f].inner_normal;
    n.resize(np + nq);
    facets.push_back(Facet{std::move(n), p.facets()[f].offset});
    VertexSet s(vp * vq);
    for (std::size_t i = 0; i < vp; ++i)
      if (p.incident(i, f))
        for (std::size_t j = 0; j < vq; ++j) s.set(i * vq + j);
    inc.push_back(std::move(s));
  }
  for (std::size_t g = 0; g < q.num_facets(); ++g) {
    IntVector n(np);
    n.insert(n.end(), q.facets()[g].inner_normal.begin(), q.facets()[g].inner_normal.end());
    facets.push_back(Facet{std::move(n), q.facets()[g].offset});
    VertexSet s(vp * vq);
    for (std::size_t j = 0; j < vq; ++j)
      if (q.incident(j, g))
        for (std::size_t i = 0; i < vp; ++i) s.set(i * vq + j);
    inc.push_back(std::move(s));
  }
  return Polytope::from_parts(std::move(vertices), std::move(facets), std::move(inc));
}

}  // namespace torsig
