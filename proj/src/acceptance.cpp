#include "torsig/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "torsig/analysis.hpp"
#include "torsig/chow.hpp"
#include "torsig/linalg.hpp"

namespace torsig {

bool AcceptanceReport::passed() const {
  return !criteria.empty() && std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed; });
}

namespace {

std::vector<TheoremCase> licensed_cases(ConvexityClass c) {
  switch (c) {
    case ConvexityClass::NotLocallyConvex: return {};
    case ConvexityClass::LocallyConvex: return {TheoremCase::I};
    case ConvexityClass::LocallyPointedConvex: return {TheoremCase::I, TheoremCase::II};
    case ConvexityClass::LocallyStronglyConvex: return {TheoremCase::I, TheoremCase::II, TheoremCase::III};
  }
  return {};
}

bool euler_relation(const FVector& f) {
  std::int64_t alt = 0;
  for (std::size_t i = 0; i < f.counts.size(); ++i) alt += (i % 2 == 0 ? 1 : -1) * f.counts[i];
  return alt == 1;
}

Integer power(const Integer& base, std::size_t e) {
  Integer out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

DivisorMonomial pure_power(std::size_t ray, std::size_t d) {
  DivisorMonomial m;
  m.exponents[ray] = static_cast<unsigned>(d);
  return m;
}

// Upper half-plane (including the positive x-axis) comes first; within a
// half, counterclockwise order is the sign of the cross product.
int half(const IntVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

bool angle_less(const IntVector& a, const IntVector& b) {
  if (half(a) != half(b)) return half(a) < half(b);
  return a[0] * b[1] - a[1] * b[0] > 0;
}

Integer det2(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

struct Entry {
  EntryFacts facts;
  std::optional<Fan> fan;
};

Entry analyze_entry(const CorpusEntry& c) {
  Entry e;
  EntryFacts& x = e.facts;
  x.name = c.name;
  x.is_product = c.is_product;
  const FaceLattice lattice = face_lattice(c.polytope);
  x.dim = c.polytope.intrinsic_dim();
  x.f = f_vector(lattice);
  x.h = h_vector(x.f);
  x.sigma = sigma(x.f);
  x.euler_ok = euler_relation(x.f);
  x.angle = angle_class(c.polytope, lattice);
  e.fan.emplace(normal_fan(full_dimensional(c.polytope)));
  x.convexity = classify(*e.fan).overall;
  x.m = m_of(*e.fan);
  x.flag = is_flag(*e.fan);
  x.expected_sigma = c.expected.sigma;
  if (c.expected.f && *c.expected.f != x.f) x.expected_ok = false;
  if (c.expected.sigma && *c.expected.sigma != x.sigma) x.expected_ok = false;
  if (c.expected.convexity && *c.expected.convexity != x.convexity) x.expected_ok = false;
  if (c.expected.m && *c.expected.m != x.m) x.expected_ok = false;
  return e;
}

// Collects failures; the criterion passes when none were recorded.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  CriterionResult result(int id, std::string name) const {
    CriterionResult r{id, std::move(name), failures_.empty(), {}};
    const auto& parts = failures_.empty() ? notes_ : failures_;
    std::ostringstream out;
    if (!failures_.empty()) out << "failed: ";
    for (std::size_t i = 0; i < parts.size() && i < 6; ++i) out << (i ? "; " : "") << parts[i];
    if (parts.size() > 6) out << "; ... (" << parts.size() - 6 << " more)";
    r.detail = out.str();
    return r;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

CriterionResult central_identity() {
  Check c;
  const std::vector<std::pair<std::string, Polytope>> cases = {
      {"triangle", polygon("triangle")},
      {"square", polygon("square")},
      {"delzant-hexagon", polygon("delzant-hexagon")},
      {"triangle-x-triangle", product(polygon("triangle"), polygon("triangle"))},
      {"square-x-square", product(polygon("square"), polygon("square"))},
  };
  const std::vector<long> expected = {1, 0, -2, 1, 0};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& [name, p] = cases[i];
    const Integer s = sigma(f_vector(p));
    const Rational l = signature_via_L(normal_fan(p));
    c.require(s == expected[i], name + ": f(-2) = " + to_string(s));
    c.require(l == Rational(s), name + ": L-class gives " + to_string(l));
    c.note(name + " " + to_string(l));
  }
  for (const auto& [name, square] : std::vector<std::pair<std::string, long>>{{"triangle", 1}, {"delzant-hexagon", -1}}) {
    const Fan fan = normal_fan(polygon(name));
    for (std::size_t r = 0; r < fan.num_rays(); ++r)
      c.require(evaluate(fan, pure_power(r, 2)) == square, name + ": D_" + std::to_string(r) + "^2");
  }
  return c.result(1, "L-class signature equals f(-2)");
}

CriterionResult tanh_criterion(bool with7) {
  Check c;
  const unsigned top = with7 ? 7 : 6;
  for (unsigned n = 2; n <= top; ++n) {
    const Integer s = sigma(f_vector(permutohedron(n)));
    c.require(s == tanh_sigma(n), "n=" + std::to_string(n) + ": sigma " + to_string(s) + " vs " + to_string(tanh_sigma(n)));
    c.note("n=" + std::to_string(n) + " " + to_string(s));
  }
  return c.result(2, "permutohedra follow the tanh series");
}

CriterionResult catalan_criterion() {
  Check c;
  const std::vector<long> expected = {0, -1, 0, 2, 0};
  for (unsigned n = 4; n <= 8; ++n) {
    const Integer s = sigma(f_vector(associahedron(n)));
    c.require(s == associahedron_sigma(n) && s == expected[n - 4], "n=" + std::to_string(n) + ": sigma " + to_string(s));
    c.note("n=" + std::to_string(n) + " " + to_string(s));
  }
  return c.result(3, "associahedra follow the Catalan formula");
}

CriterionResult classifier_ground_truth() {
  Check c;
  const auto tri = classify(normal_fan(polygon("triangle"))).overall;
  c.require(tri == ConvexityClass::NotLocallyConvex, "triangle is " + std::string(to_string(tri)));
  const auto rect = classify(normal_fan(polygon("rectangle-2x1"))).overall;
  c.require(rect == ConvexityClass::LocallyConvex, "rectangle is " + std::string(to_string(rect)));
  const Fan hex = normal_fan(polygon("delzant-hexagon"));
  const auto h = classify(hex).overall;
  c.require(h == ConvexityClass::LocallyStronglyConvex, "hexagon is " + std::string(to_string(h)));
  c.require(m_of(hex) == 1, "hexagon m = " + to_string(m_of(hex)));
  c.note("triangle " + std::string(to_string(tri)));
  c.note("rectangle " + std::string(to_string(rect)));
  c.note("hexagon " + std::string(to_string(h)) + ", m=1");
  return c.result(4, "classifier on the planar examples");
}

CriterionResult bounds_criterion(const std::vector<Entry>& entries) {
  Check c;
  int checked = 0;
  for (const auto& e : entries) {
    const auto& x = e.facts;
    if (x.dim % 2 != 0) continue;
    const Integer lhs = (x.dim % 4 == 0 ? 1 : -1) * x.sigma;
    for (TheoremCase tc : licensed_cases(x.convexity)) {
      const Rational rhs = bound_rhs(x.f, x.m, tc);
      c.require(Rational(lhs) >= rhs, x.name + " case " + std::string(to_string(tc)) + ": " + to_string(lhs) + " < " +
                                          to_string(rhs));
      ++checked;
    }
  }
  const Polytope hex = polygon("delzant-hexagon");
  const FVector f = f_vector(hex);
  for (TheoremCase tc : {TheoremCase::II, TheoremCase::III})
    c.require(bound_rhs(f, 1, tc) == 2 && -sigma(f) == 2, "hexagon not tight in case " + std::string(to_string(tc)));
  c.note(std::to_string(checked) + " licensed bounds hold");
  c.note("hexagon tight in ii and iii");
  return c.result(5, "lower bounds hold on even-dimensional entries");
}

CriterionResult polygon_criterion(const std::vector<Entry>& entries) {
  Check c;
  int polygons = 0;
  for (const auto& e : entries) {
    const auto& x = e.facts;
    if (x.dim != 2 || x.convexity < ConvexityClass::LocallyPointedConvex) continue;
    ++polygons;
    c.require(Rational(x.f[0]) >= polygon_inequality_rhs(x.m), x.name + " violates f0 >= 12/(3-1/m)");
  }
  const auto fans = unimodular_polygon_fans(5, 5);
  std::size_t pointed = 0;
  for (const auto& fan : fans)
    if (classify(fan).overall >= ConvexityClass::LocallyPointedConvex) ++pointed;
  c.require(!fans.empty(), "enumeration found no fans");
  c.require(pointed == 0, std::to_string(pointed) + " five-ray unimodular fans are pointed");
  c.note(std::to_string(polygons) + " pointed corpus polygons satisfy the inequality");
  c.note(std::to_string(fans.size()) + " five-ray unimodular fans, none pointed");
  return c.result(6, "polygon inequality");
}

CriterionResult implications(const std::vector<Entry>& entries) {
  Check c;
  for (const auto& e : entries) {
    const auto& x = e.facts;
    if (x.angle != AngleClass::Neither)
      c.require(x.convexity >= ConvexityClass::LocallyConvex, x.name + ": non-acute but not convex");
    if (x.angle == AngleClass::Obtuse)
      c.require(x.convexity == ConvexityClass::LocallyStronglyConvex, x.name + ": obtuse but not strongly convex");
    if (x.convexity >= ConvexityClass::LocallyConvex) c.require(x.flag, x.name + ": convex but not flag");
  }
  for (const auto& name : arrangement_presets()) {
    const auto k = classify(arrangement_preset(name)).overall;
    c.require(k >= ConvexityClass::LocallyConvex, "arrangement " + name + " is " + std::string(to_string(k)));
  }
  c.note("angle, convexity and flag implications hold on " + std::to_string(entries.size()) + " entries");
  c.note(std::to_string(arrangement_presets().size()) + " arrangements convex");
  return c.result(7, "implication chain");
}

CriterionResult chow_robustness(const std::vector<Entry>& entries, const AcceptanceOptions& options) {
  Check c;
  std::vector<const Entry*> small;
  for (const auto& e : entries)
    if (e.facts.dim >= 2 && e.facts.dim <= 4) small.push_back(&e);
  std::mt19937_64 rng(options.seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  std::map<std::pair<std::size_t, DivisorMonomial>, Rational> reference;
  for (int run = 0; run < options.pivot_runs && !small.empty(); ++run) {
    const std::size_t which = pick(small.size());
    const Entry& e = *small[which];
    const Fan& fan = *e.fan;
    const std::size_t d = fan.dim();
    const Cone& cone = fan.max_cones()[pick(fan.max_cones().size())];
    DivisorMonomial mono;
    for (std::size_t k = 0; k < d; ++k) ++mono.exponents[cone[pick(cone.size())]];
    ChowEvaluator randomized(fan, rng);
    const Rational v = randomized.evaluate(mono);
    auto [it, fresh] = reference.try_emplace({which, mono}, Rational{});
    if (fresh) it->second = ChowEvaluator(fan).evaluate(mono);
    c.require(v == it->second, e.facts.name + ": pivot order changed a value");
    const Rational scaled = v * Rational(power(e.facts.m, d - 1));
    c.require(is_integral(scaled), e.facts.name + ": value " + to_string(v) + " outside (1/m^(d-1))Z");
  }

  int self = 0;
  for (const Entry* e : small) {
    const auto& x = e->facts;
    if (x.dim % 2 != 0 || x.convexity < ConvexityClass::LocallyPointedConvex) continue;
    const Rational floor = Rational(1) / Rational(power(x.m, x.dim - 1));
    ChowEvaluator ev(*e->fan);
    for (std::size_t r = 0; r < e->fan->num_rays(); ++r) {
      const Rational v = ev.evaluate(pure_power(r, x.dim));
      c.require(-v >= floor, x.name + ": -D_" + std::to_string(r) + "^d = " + to_string(-v));
      ++self;
    }
  }
  c.note(std::to_string(options.pivot_runs) + " randomized evaluations agree and have bounded denominators");
  c.note(std::to_string(self) + " self-intersections on pointed fans meet 1/m^(d-1)");
  return c.result(8, "intersection numbers are pivot independent");
}

CriterionResult structural(const std::vector<Entry>& entries, const AcceptanceOptions& options) {
  Check c;
  for (const auto& e : entries) {
    const auto& x = e.facts;
    c.require(dehn_sommerville_ok(x.h), x.name + ": h-vector not palindromic");
    if (x.dim % 2 != 0) c.require(x.sigma == 0, x.name + ": odd dimension with sigma " + to_string(x.sigma));
    c.require(x.euler_ok, x.name + ": Euler relation fails");
    c.require(x.expected_ok, x.name + ": differs from its labelled values");
  }

  // Bases with pairwise nonpositive inner products, built greedily.
  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  int instances = 0, connected = 0;
  while (instances < options.dual_basis_instances) {
    const std::size_t n = static_cast<std::size_t>(uniform(2, 5));
    std::vector<RatVector> b;
    for (int attempts = 0; b.size() < n && attempts < 20000; ++attempts) {
      RatVector v(n);
      for (auto& x : v) x = uniform(0, 2) == 0 ? 0 : uniform(-10, 10);
      if (!std::all_of(b.begin(), b.end(), [&](const RatVector& w) { return dot(v, w) <= 0; })) continue;
      auto trial = b;
      trial.push_back(v);
      if (rank(trial, n) == trial.size()) b = std::move(trial);
    }
    if (b.size() != n) continue;
    ++instances;
    const auto dual = dual_basis(b);
    std::vector<std::size_t> comp(n);
    for (std::size_t i = 0; i < n; ++i) comp[i] = i;
    std::function<std::size_t(std::size_t)> root = [&](std::size_t i) { return comp[i] == i ? i : comp[i] = root(comp[i]); };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (dot(b[i], b[j]) < 0) comp[root(i)] = root(j);
    bool is_connected = true;
    for (std::size_t i = 0; i < n; ++i) is_connected = is_connected && root(i) == root(0);
    connected += is_connected;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational g = dot(dual[i], dual[j]);
        c.require(g >= 0, "dual basis pair with negative inner product");
        if (is_connected) c.require(g > 0, "connected instance with orthogonal dual pair");
      }
  }
  c.require(connected > 0, "no connected instances sampled");
  c.note("Dehn-Sommerville, odd-dimension vanishing and Euler hold on " + std::to_string(entries.size()) + " entries");
  c.note(std::to_string(instances) + " non-acute bases (" + std::to_string(connected) + " connected)");
  return c.result(9, "structural invariants");
}

}  // namespace

std::vector<Fan> unimodular_polygon_fans(std::size_t rays, long bound) {
  std::vector<IntVector> prim;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y)
      if (std::gcd(x, y) == 1) prim.push_back({Integer(x), Integer(y)});
  std::sort(prim.begin(), prim.end(), angle_less);

  // Rays listed counterclockwise starting from the one of least angle, so
  // each fan appears once; consecutive determinants 1 force completeness.
  std::vector<Fan> out;
  std::vector<std::size_t> path;
  std::function<void()> extend = [&]() {
    const IntVector& last = prim[path.back()];
    if (path.size() == rays) {
      if (det2(last, prim[path.front()]) != 1) return;
      std::vector<IntVector> r;
      std::vector<Cone> cones;
      for (std::size_t i = 0; i < rays; ++i) {
        r.push_back(prim[path[i]]);
        cones.push_back({i, (i + 1) % rays});
      }
      out.emplace_back(2, std::move(r), std::move(cones));
      return;
    }
    for (std::size_t k = path.back() + 1; k < prim.size(); ++k) {
      if (det2(last, prim[k]) != 1) continue;
      path.push_back(k);
      extend();
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < prim.size(); ++s) {
    path = {s};
    extend();
  }
  return out;
}

AcceptanceReport run_acceptance(const AcceptanceOptions& options) {
  AcceptanceReport report;
  std::vector<Entry> entries;
  for (const auto& c : corpus()) entries.push_back(analyze_entry(c));
  for (const auto& e : entries) report.entries.push_back(e.facts);

  report.criteria.push_back(central_identity());
  report.criteria.push_back(tanh_criterion(options.permutohedron7));
  report.criteria.push_back(catalan_criterion());
  report.criteria.push_back(classifier_ground_truth());
  report.criteria.push_back(bounds_criterion(entries));
  report.criteria.push_back(polygon_criterion(entries));
  report.criteria.push_back(implications(entries));
  report.criteria.push_back(chow_robustness(entries, options));
  report.criteria.push_back(structural(entries, options));
  return report;
}

}  // namespace torsig
