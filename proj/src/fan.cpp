#include "torsig/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "torsig/cone.hpp"
#include "torsig/error.hpp"
#include "torsig/linalg.hpp"
#include "torsig/series.hpp"

namespace torsig {

std::string_view to_string(ConvexityClass c) {
  switch (c) {
    case ConvexityClass::NotLocallyConvex: return "NotLocallyConvex";
    case ConvexityClass::LocallyConvex: return "LocallyConvex";
    case ConvexityClass::LocallyPointedConvex: return "LocallyPointedConvex";
    case ConvexityClass::LocallyStronglyConvex: return "LocallyStronglyConvex";
  }
  return "NotLocallyConvex";
}

Fan::Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<Cone> max_cones) : dim_(dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidInput, "fan of dimension 0");
  std::map<IntVector, std::size_t> index;
  std::vector<std::size_t> remap(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != dim) throw Error(ErrorCode::DimensionMismatch, "ray " + std::to_string(i) + " has wrong length");
    IntVector p = primitive(rays[i]);
    auto [it, inserted] = index.emplace(p, rays_.size());
    if (inserted) rays_.push_back(std::move(p));
    remap[i] = it->second;
  }
  for (auto& cone : max_cones) {
    Cone c;
    for (auto r : cone) {
      if (r >= remap.size()) throw Error(ErrorCode::InvalidInput, "cone references ray " + std::to_string(r));
      c.push_back(remap[r]);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.size() != dim) throw Error(ErrorCode::NotSimplicial, "maximal cone with " + std::to_string(c.size()) + " rays");
    std::vector<IntVector> m;
    for (auto r : c) m.push_back(rays_[r]);
    if (determinant(m) == 0) throw Error(ErrorCode::NotSimplicial, "maximal cone with dependent rays");
    max_cones_.push_back(std::move(c));
  }
  cones_of_ray_.assign(rays_.size(), {});
  adjacency_.assign(rays_.size(), std::vector<bool>(rays_.size(), false));
  for (std::size_t k = 0; k < max_cones_.size(); ++k) {
    for (auto a : max_cones_[k]) {
      cones_of_ray_[a].push_back(k);
      for (auto b : max_cones_[k])
        if (a != b) adjacency_[a][b] = true;
    }
  }
  for (std::size_t r = 0; r < rays_.size(); ++r)
    if (cones_of_ray_[r].empty()) throw Error(ErrorCode::InvalidInput, "ray " + std::to_string(r) + " lies in no maximal cone");
}

bool Fan::is_cone(const Cone& rays) const {
  if (rays.empty()) return true;
  for (auto k : cones_of_ray_.at(rays.front())) {
    const auto& mc = max_cones_[k];
    if (std::includes(mc.begin(), mc.end(), rays.begin(), rays.end())) return true;
  }
  return false;
}

bool Fan::is_complete() const {
  std::map<Cone, int> walls;
  for (const auto& c : max_cones_)
    for (std::size_t skip = 0; skip < c.size(); ++skip) {
      Cone w;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (i != skip) w.push_back(c[i]);
      ++walls[w];
    }
  return !walls.empty() && std::all_of(walls.begin(), walls.end(), [](const auto& kv) { return kv.second == 2; });
}

void Fan::require_complete() const {
  if (!is_complete()) throw Error(ErrorCode::NotComplete, "some wall does not lie in exactly two maximal cones");
}

std::vector<std::int64_t> Fan::cone_counts() const {
  std::set<Cone> all;
  for (const auto& c : max_cones_) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << c.size()); ++mask) {
      Cone sub;
      for (std::size_t i = 0; i < c.size(); ++i)
        if ((mask >> i) & 1) sub.push_back(c[i]);
      all.insert(std::move(sub));
    }
  }
  std::vector<std::int64_t> counts(dim_ + 1, 0);
  for (const auto& c : all) ++counts[c.size()];
  return counts;
}

Fan normal_fan(const Polytope& p) {
  if (!p.is_full_dimensional())
    throw Error(ErrorCode::InvalidInput, "normal_fan needs a full-dimensional polytope (project it first)");
  if (!is_simple(p)) throw Error(ErrorCode::NotSimple, "polytope is not simple");
  std::vector<IntVector> rays;
  for (const auto& f : p.facets()) rays.push_back(f.inner_normal);
  std::vector<Cone> cones;
  for (std::size_t v = 0; v < p.num_vertices(); ++v) cones.push_back(p.vertex_facets(v));
  return Fan(p.ambient_dim(), std::move(rays), std::move(cones));
}

namespace {

void add_subsets(const Cone& c, std::set<Cone>& out) {
  for (std::size_t mask = 1; mask < (std::size_t{1} << c.size()); ++mask) {
    Cone sub;
    for (std::size_t i = 0; i < c.size(); ++i)
      if ((mask >> i) & 1) sub.push_back(c[i]);
    out.insert(std::move(sub));
  }
}

std::vector<std::size_t> star_rays(const Fan& fan, std::size_t ray) {
  std::set<std::size_t> rs;
  for (auto k : fan.cones_of_ray(ray))
    for (auto r : fan.max_cones()[k]) rs.insert(r);
  return {rs.begin(), rs.end()};
}

// Above this many (d-1)-subsets the polar double description is faster.
constexpr unsigned long kBruteForceSubsets = 4000;

IntVector sign_canonical(IntVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

std::vector<IntVector> lineality_of(const std::vector<IntVector>& normals, std::size_t dim) {
  std::vector<IntVector> out;
  for (const auto& v : nullspace(RatMatrix::from_rows(normals, dim))) out.push_back(primitive(v));
  return out;
}

}  // namespace

std::vector<Cone> star(const Fan& fan, std::size_t ray) {
  std::set<Cone> out;
  for (auto k : fan.cones_of_ray(ray)) add_subsets(fan.max_cones()[k], out);
  return {out.begin(), out.end()};
}

std::vector<Cone> link(const Fan& fan, std::size_t ray) {
  std::set<Cone> out;
  for (auto k : fan.cones_of_ray(ray)) {
    Cone rest;
    for (auto r : fan.max_cones()[k])
      if (r != ray) rest.push_back(r);
    add_subsets(rest, out);
  }
  return {out.begin(), out.end()};
}

ConeH cone_hull_via_polar(const std::vector<IntVector>& rays, std::size_t dim) {
  const ConeGenerators polar = cone_generators(rays, dim);
  ConeH h;
  std::set<IntVector> seen;
  for (const auto& r : polar.rays)
    if (seen.insert(r).second) h.facet_normals.push_back(r);
  for (const auto& l : polar.lineality) {
    IntVector neg = l;
    for (auto& x : neg) x = -x;
    for (const auto& v : {l, neg})
      if (seen.insert(v).second) h.facet_normals.push_back(v);
  }
  std::sort(h.facet_normals.begin(), h.facet_normals.end());
  h.lineality_basis = h.facet_normals.empty() ? lineality_of({}, dim) : lineality_of(h.facet_normals, dim);
  return h;
}

ConeH cone_hull(const std::vector<IntVector>& rays, std::size_t dim) {
  if (rays.empty()) throw Error(ErrorCode::InvalidInput, "cone_hull of no rays");
  if (rank(rays, dim) < dim) return cone_hull_via_polar(rays, dim);
  if (binomial(static_cast<unsigned>(rays.size()), static_cast<unsigned>(dim - 1)) > kBruteForceSubsets)
    return cone_hull_via_polar(rays, dim);

  std::set<IntVector> normals;
  std::set<IntVector> tried;
  const std::size_t k = dim - 1;
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      std::vector<IntVector> rows;
      for (auto i : idx) rows.push_back(rays[i]);
      auto ns = nullspace(RatMatrix::from_rows(rows, dim));
      if (ns.size() != 1) return;
      IntVector n = sign_canonical(primitive(ns.front()));
      if (!tried.insert(n).second) return;
      bool pos = false, neg = false;
      for (const auto& r : rays) {
        const Integer v = dot(n, r);
        if (v > 0) pos = true;
        if (v < 0) neg = true;
      }
      if (pos && neg) return;
      if (neg)
        for (auto& x : n) x = -x;
      if (!pos && !neg) return;  // every ray on the hyperplane; impossible at full rank
      normals.insert(std::move(n));
      return;
    }
    for (std::size_t i = start; i < rays.size(); ++i) {
      idx[depth] = i;
      recurse(i + 1, depth + 1);
    }
  };
  recurse(0, 0);
  ConeH h;
  h.facet_normals.assign(normals.begin(), normals.end());
  if (h.facet_normals.empty()) {
    h.lineality_basis = lineality_of({}, dim);
  } else {
    h.lineality_basis = lineality_of(h.facet_normals, dim);
  }
  return h;
}

namespace {

bool full_dim_intersection(const ConeH& hull, const std::vector<IntVector>& tau, std::size_t dim) {
  IntVector interior(dim);
  for (const auto& r : tau)
    for (std::size_t j = 0; j < dim; ++j) interior[j] += r[j];
  bool strictly_inside = true;
  for (const auto& n : hull.facet_normals) {
    bool all_nonpositive = true;
    for (const auto& r : tau) all_nonpositive = all_nonpositive && dot(n, r) <= 0;
    if (all_nonpositive) return false;
    if (dot(n, interior) <= 0) strictly_inside = false;
  }
  if (strictly_inside) return true;
  std::vector<RatVector> ineq;
  for (const auto& n : hull.facet_normals) ineq.push_back(to_rational(n));
  std::vector<RatVector> tau_rows;
  for (const auto& r : tau) tau_rows.push_back(to_rational(r));
  for (auto& d : dual_basis(tau_rows)) ineq.push_back(std::move(d));
  return cone_generators(ineq, dim).dimension(dim) == dim;
}

}  // namespace

ConvexityClass classify_ray(const Fan& fan, std::size_t ray) {
  const std::size_t d = fan.dim();
  const auto srays = star_rays(fan, ray);
  std::vector<IntVector> vecs;
  for (auto r : srays) vecs.push_back(fan.rays()[r]);
  const ConeH hull = cone_hull(vecs, d);

  const auto& in_star = fan.cones_of_ray(ray);
  if (hull.is_whole_space()) {
    if (in_star.size() != fan.max_cones().size()) return ConvexityClass::NotLocallyConvex;
  } else {
    std::vector<bool> member(fan.max_cones().size(), false);
    for (auto k : in_star) member[k] = true;
    for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
      if (member[k]) continue;
      std::vector<IntVector> tau;
      for (auto r : fan.max_cones()[k]) tau.push_back(fan.rays()[r]);
      if (full_dim_intersection(hull, tau, d)) return ConvexityClass::NotLocallyConvex;
    }
  }
  if (!hull.lineality_basis.empty()) return ConvexityClass::LocallyConvex;

  for (const auto& sigma : link(fan, ray)) {
    std::vector<const IntVector*> containing;
    for (const auto& n : hull.facet_normals) {
      bool all_zero = true;
      for (auto r : sigma) all_zero = all_zero && dot(n, fan.rays()[r]) == 0;
      if (all_zero) containing.push_back(&n);
    }
    if (containing.empty()) return ConvexityClass::LocallyPointedConvex;
    Cone exposed;
    for (auto r : srays) {
      bool on_all = true;
      for (const IntVector* n : containing) on_all = on_all && dot(*n, fan.rays()[r]) == 0;
      if (on_all) exposed.push_back(r);
    }
    if (exposed != sigma) return ConvexityClass::LocallyPointedConvex;
  }
  return ConvexityClass::LocallyStronglyConvex;
}

Classification classify(const Fan& fan) {
  fan.require_complete();
  Classification c;
  c.overall = ConvexityClass::LocallyStronglyConvex;
  for (std::size_t r = 0; r < fan.num_rays(); ++r) {
    c.per_ray.push_back(classify_ray(fan, r));
    c.overall = std::min(c.overall, c.per_ray.back());
  }
  return c;
}

bool is_flag(const Fan& fan) {
  const std::size_t n = fan.num_rays();
  Cone clique;
  std::function<bool(std::size_t)> extend = [&](std::size_t start) -> bool {
    if (clique.size() >= 3 && !fan.is_cone(clique)) return false;
    if (clique.size() == fan.dim() + 1) return true;
    for (std::size_t j = start; j < n; ++j) {
      bool ok = true;
      for (auto i : clique) ok = ok && fan.adjacent(i, j);
      if (!ok) continue;
      clique.push_back(j);
      const bool fine = extend(j + 1);
      clique.pop_back();
      if (!fine) return false;
    }
    return true;
  };
  return extend(0);
}

Integer m_of(const Fan& fan) {
  Integer m = 1;
  for (const auto& c : fan.max_cones()) {
    std::vector<IntVector> rows;
    for (auto r : c) rows.push_back(fan.rays()[r]);
    m = lcm(m, Integer(abs(determinant(rows))));
  }
  return m;
}

Fan arrangement_fan(const std::vector<IntVector>& normals, std::size_t dim) {
  for (const auto& a : normals) {
    if (a.size() != dim) throw Error(ErrorCode::DimensionMismatch, "arrangement normal has wrong length");
    if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; }))
      throw Error(ErrorCode::InvalidInput, "zero arrangement normal");
  }
  std::vector<IntVector> rays;
  std::map<IntVector, std::size_t> ray_index;
  std::vector<Cone> cones;
  std::vector<IntVector> constraints;

  std::function<void(std::size_t)> descend = [&](std::size_t i) {
    const ConeGenerators g = cone_generators(constraints, dim);
    if (g.dimension(dim) < dim) return;
    if (i == normals.size()) {
      if (!g.lineality.empty() || g.rays.size() != dim)
        throw Error(ErrorCode::NotSimplicial, "chamber with " + std::to_string(g.rays.size()) + " rays and " +
                                                  std::to_string(g.lineality.size()) + " lineality directions");
      Cone c;
      for (const auto& r : g.rays) {
        auto [it, inserted] = ray_index.emplace(r, rays.size());
        if (inserted) rays.push_back(r);
        c.push_back(it->second);
      }
      std::sort(c.begin(), c.end());
      cones.push_back(std::move(c));
      return;
    }
    for (int sign : {1, -1}) {
      IntVector a = normals[i];
      if (sign < 0)
        for (auto& x : a) x = -x;
      constraints.push_back(std::move(a));
      descend(i + 1);
      constraints.pop_back();
    }
  };
  descend(0);
  return Fan(dim, std::move(rays), std::move(cones));
}

Fan fan_product(const Fan& a, const Fan& b) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<IntVector> rays;
  for (const auto& r : a.rays()) {
    IntVector v = r;
    v.resize(da + db);
    rays.push_back(std::move(v));
  }
  for (const auto& r : b.rays()) {
    IntVector v(da);
    v.insert(v.end(), r.begin(), r.end());
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const auto& ca : a.max_cones())
    for (const auto& cb : b.max_cones()) {
      Cone c = ca;
      for (auto r : cb) c.push_back(r + a.num_rays());
      cones.push_back(std::move(c));
    }
  return Fan(da + db, std::move(rays), std::move(cones));
}

}  // namespace torsig
