#include "torsig/cone.hpp"

#include <algorithm>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "torsig/error.hpp"
#include "torsig/linalg.hpp"

namespace torsig {

std::size_t ConeGenerators::dimension(std::size_t ambient_dim) const {
  std::vector<IntVector> all = lineality;
  all.insert(all.end(), rays.begin(), rays.end());
  if (all.empty()) return 0;
  return rank(all, ambient_dim);
}

namespace {

using ZeroSet = boost::dynamic_bitset<std::uint64_t>;

RatVector axpy(const RatVector& y, const Rational& t, const RatVector& x) {
  RatVector out = y;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= t * x[i];
  return out;
}

bool is_zero_vector(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Rescale to a primitive integer vector to keep entries small across steps.
RatVector rescale(const RatVector& v) { return to_rational(primitive(v)); }

}  // namespace

ConeGenerators cone_generators(const std::vector<RatVector>& inequalities, const std::vector<RatVector>& equalities,
                               std::size_t dim) {
  std::vector<RatVector> constraints;
  for (const auto& a : inequalities) {
    if (a.size() != dim) throw Error(ErrorCode::DimensionMismatch, "cone_generators: constraint length");
    if (!is_zero_vector(a)) constraints.push_back(a);
  }
  for (const auto& b : equalities) {
    if (b.size() != dim) throw Error(ErrorCode::DimensionMismatch, "cone_generators: constraint length");
    if (is_zero_vector(b)) continue;
    constraints.push_back(b);
    RatVector neg = b;
    for (auto& x : neg) x = -x;
    constraints.push_back(std::move(neg));
  }

  std::vector<RatVector> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    RatVector e(dim);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  // Each ray carries the set of processed constraints it satisfies with
  // equality; adjacency is decided combinatorially from these sets.
  std::vector<RatVector> rays;
  std::vector<ZeroSet> zeros;
  std::size_t processed = 0;

  for (const auto& a : constraints) {
    auto pivot = std::find_if(lin.begin(), lin.end(), [&](const RatVector& l) { return dot(a, l) != 0; });
    if (pivot != lin.end()) {
      RatVector lstar = *pivot;
      lin.erase(pivot);
      Rational al = dot(a, lstar);
      if (al < 0) {
        for (auto& x : lstar) x = -x;
        al = -al;
      }
      for (auto& l : lin) l = axpy(l, dot(a, l) / al, lstar);
      for (std::size_t i = 0; i < rays.size(); ++i) {
        rays[i] = rescale(axpy(rays[i], dot(a, rays[i]) / al, lstar));
        zeros[i].push_back(true);
      }
      rays.push_back(rescale(lstar));
      ZeroSet z(processed);
      z.set();
      z.push_back(false);
      zeros.push_back(std::move(z));
      ++processed;
      continue;
    }

    std::vector<int> sign(rays.size());
    std::vector<Rational> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i]);
      sign[i] = sgn(val[i]);
    }
    std::vector<RatVector> next;
    std::vector<ZeroSet> next_zeros;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (sign[i] >= 0) {
        next.push_back(rays[i]);
        next_zeros.push_back(zeros[i]);
        next_zeros.back().push_back(sign[i] == 0);
      }

    // two extreme rays of a pointed cone of dimension k are adjacent iff
    // their common zero set has rank k-2, iff no third ray vanishes on it
    const std::size_t pointed_dim = dim - lin.size();
    const std::size_t min_common = pointed_dim >= 2 ? pointed_dim - 2 : 0;
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (sign[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (sign[n] >= 0) continue;
        const ZeroSet common = zeros[p] & zeros[n];
        if (common.count() < min_common) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != n && common.is_subset_of(zeros[r])) adjacent = false;
        if (!adjacent) continue;
        RatVector cand(dim);
        for (std::size_t k = 0; k < dim; ++k) cand[k] = val[p] * rays[n][k] - val[n] * rays[p][k];
        next.push_back(rescale(cand));
        next_zeros.push_back(common);
        next_zeros.back().push_back(true);
      }
    }
    rays = std::move(next);
    zeros = std::move(next_zeros);
    ++processed;
  }

  ConeGenerators out;
  if (!lin.empty()) {
    auto ech = rref(RatMatrix::from_rows(lin, dim));
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) out.lineality.push_back(primitive(ech.reduced.row_vector(i)));
  }
  std::set<IntVector> seen;
  for (const auto& r : rays) {
    if (is_zero_vector(r)) continue;
    auto p = primitive(r);
    if (seen.insert(p).second) out.rays.push_back(std::move(p));
  }
  return out;
}

ConeGenerators cone_generators(const std::vector<RatVector>& inequalities, std::size_t dim) {
  return cone_generators(inequalities, {}, dim);
}

ConeGenerators cone_generators(const std::vector<IntVector>& inequalities, std::size_t dim) {
  std::vector<RatVector> rows;
  rows.reserve(inequalities.size());
  for (const auto& a : inequalities) rows.push_back(to_rational(a));
  return cone_generators(rows, {}, dim);
}

}  // namespace torsig
