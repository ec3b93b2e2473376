#include "torsig/analysis.hpp"

#include "torsig/error.hpp"

namespace torsig {

Polytope full_dimensional(const Polytope& p) {
  return p.is_full_dimensional() ? p : project_full_dim(p).polytope;
}

AnalysisReport analyze(const Polytope& p, const AnalysisOptions& options) {
  AnalysisReport r;
  const FaceLattice lattice = face_lattice(p);
  r.dim = p.intrinsic_dim();
  r.f = f_vector(lattice);
  r.h = h_vector(r.f);
  r.sigma = sigma(r.f);
  r.dehn_sommerville = dehn_sommerville_ok(r.h);
  r.angle_class = angle_class(p, lattice);

  const Polytope q = full_dimensional(p);
  r.simple = is_simple(q);
  if (!r.simple) return r;

  const Fan fan = normal_fan(q);
  const Classification c = classify(fan);
  r.convexity = c.overall;
  r.m = m_of(fan);
  r.flag = is_flag(fan);
  if (r.dim % 2 == 0) {
    r.bounds = bound_report(r.f, c.overall, *r.m, options.forced_case);
  } else if (options.forced_case) {
    r.warnings.push_back("bounds need even dimension");
  }
  if (options.chow) {
    if (r.dim % 2 == 0) {
      r.chow_sigma = signature_via_L(fan);
      r.agreement = *r.chow_sigma == Rational(r.sigma);
    } else {
      r.warnings.push_back("chow signature skipped: odd dimension");
    }
  }
  return r;
}

ChowReport chow_signature(const Fan& fan) {
  ChowReport r;
  r.terms = monomial_sign_report(fan);
  r.sigma = signature_from_terms(r.terms, fan.dim());
  // cone k-faces of the fan correspond to (d-k)-faces of a dual polytope
  const auto counts = fan.cone_counts();
  const std::size_t d = fan.dim();
  FVector f;
  for (std::size_t i = 0; i <= d; ++i) f.counts.push_back(counts[d - i]);
  r.combinatorial_sigma = sigma(f);
  r.agreement = r.sigma == Rational(r.combinatorial_sigma);
  return r;
}

MirrorReport mirror(const Polytope& p) {
  const Polytope q = full_dimensional(p);
  if (!is_simple(q)) throw Error(ErrorCode::NotSimple, "mirror construction needs a simple polytope");
  MirrorReport r;
  r.n = q.num_facets();
  r.d = q.ambient_dim();
  r.chi = mirror_euler(sigma(f_vector(q)), r.n, r.d);
  return r;
}

}  // namespace torsig
