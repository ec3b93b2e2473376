#include "torsig/invariants.hpp"

#include <string>

#include "torsig/error.hpp"

namespace torsig {

HVector h_vector(const FVector& f) {
  const std::size_t d = f.dim();
  HVector h;
  h.counts.assign(d + 1, 0);
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t k = 0; k <= i; ++k) {
      Integer term = f[i] * binomial(static_cast<unsigned>(i), static_cast<unsigned>(k));
      h.counts[k] += ((i - k) % 2 == 0) ? term : Integer(-term);
    }
  return h;
}

Integer sigma(const FVector& f) {
  Integer s = 0, power = 1;
  for (std::size_t i = 0; i <= f.dim(); ++i) {
    s += f[i] * power;
    power *= -2;
  }
  return s;
}

bool dehn_sommerville_ok(const HVector& h) {
  const auto& c = h.counts;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != c[c.size() - 1 - i]) return false;
  return true;
}

RationalSeries one_minus_x_cot_x(std::size_t order) {
  // x cot x = cos x / (sin x / x)
  return RationalSeries::constant(1, order) - cos_series(order) / sin_over_x(order);
}

Rational bernoulli_b(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "bernoulli_b needs n >= 1");
  return one_minus_x_cot_x(2 * n)[2 * n];
}

Rational bernoulli_hirzebruch(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "bernoulli_hirzebruch needs n >= 1");
  // modern B_k from sum_{j<=k} binom(k+1, j) B_j = 0
  const unsigned top = 2 * n;
  std::vector<Rational> b(top + 1);
  b[0] = 1;
  for (unsigned k = 1; k <= top; ++k) {
    Rational s = 0;
    for (unsigned j = 0; j < k; ++j) s += Rational(binomial(k + 1, j)) * b[j];
    b[k] = -s / Rational(k + 1);
  }
  return abs(b[top]);
}

std::string_view to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::I: return "i";
    case TheoremCase::II: return "ii";
    case TheoremCase::III: return "iii";
    case TheoremCase::None: return "none-applicable";
  }
  return "none-applicable";
}

TheoremCase parse_theorem_case(std::string_view text) {
  if (text == "i") return TheoremCase::I;
  if (text == "ii") return TheoremCase::II;
  if (text == "iii") return TheoremCase::III;
  if (text == "none-applicable") return TheoremCase::None;
  throw Error(ErrorCode::InvalidInput, "unknown theorem case '" + std::string(text) + "'");
}

namespace {

std::size_t even_dim(const FVector& f) {
  const std::size_t d = f.dim();
  if (d % 2 != 0) throw Error(ErrorCode::OddDimension, "bounds need even dimension, got " + std::to_string(d));
  return d;
}

Integer pow_int(const Integer& base, std::size_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

Rational bound_rhs(const FVector& f, const Integer& m, TheoremCase c) {
  const std::size_t d = even_dim(f);
  if (m < 1) throw Error(ErrorCode::InvalidInput, "m must be positive");
  const Rational scale = Rational(pow_int(m, d - 1));
  switch (c) {
    case TheoremCase::I:
    case TheoremCase::None: return 0;
    case TheoremCase::II: return Rational(f[d - 1]) / (3 * scale);
    case TheoremCase::III: {
      std::vector<Rational> poly(d + 1);
      for (std::size_t p = 0; p <= d; ++p) poly[p] = f[d - p];
      return one_minus_x_cot_x(d).substitute_into(poly)[d] / scale;
    }
  }
  return 0;
}

TheoremCase strongest_case(ConvexityClass c) {
  switch (c) {
    case ConvexityClass::LocallyStronglyConvex: return TheoremCase::III;
    case ConvexityClass::LocallyPointedConvex: return TheoremCase::II;
    case ConvexityClass::LocallyConvex: return TheoremCase::I;
    case ConvexityClass::NotLocallyConvex: return TheoremCase::None;
  }
  return TheoremCase::None;
}

BoundReport bound_report(const FVector& f, ConvexityClass classification, const Integer& m,
                         std::optional<TheoremCase> forced) {
  const std::size_t d = even_dim(f);
  BoundReport r;
  r.classification = classification;
  r.m = m;
  const Integer s = sigma(f);
  r.lhs = (d / 2) % 2 == 0 ? s : Integer(-s);
  const TheoremCase licensed = strongest_case(classification);
  TheoremCase c = forced.value_or(licensed);
  if (licensed == TheoremCase::None || static_cast<int>(c) > static_cast<int>(licensed)) c = TheoremCase::None;
  r.theorem_case = c;
  r.rhs = bound_rhs(f, m, c);
  r.satisfied = c == TheoremCase::None || Rational(r.lhs) >= r.rhs;
  return r;
}

Rational polygon_inequality_rhs(const Integer& m) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "m must be positive");
  return Rational(12) / (Rational(3) - Rational(1) / Rational(m));
}

Rational kappa(const Integer& sigma, std::size_t d) { return Rational(sigma) / Rational(pow_int(2, d)); }

Integer mirror_euler(const Integer& sigma, std::size_t n_facets, std::size_t d) {
  if (n_facets < d + 1) throw Error(ErrorCode::InvalidInput, "a d-polytope has at least d+1 facets");
  return pow_int(2, n_facets - d) * sigma;
}

Rational corner_euler(const std::vector<Integer>& sigmas, std::size_t d) {
  Integer total = 0;
  for (const auto& s : sigmas) total += s;
  return kappa(total, d);
}

Integer tanh_sigma(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "tanh_sigma needs n >= 1");
  const Rational c = (sinh_series(n) / cosh_series(n))[n] * Rational(factorial(n));
  return c.get_num();
}

Integer associahedron_sigma(unsigned n) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "associahedron_sigma needs n >= 3");
  if (n % 2 == 0) return 0;
  const unsigned k = (n - 1) / 2;
  const Integer catalan = binomial(2 * k - 2, k - 1) / k;
  return ((n - 3) / 2) % 2 == 0 ? catalan : Integer(-catalan);
}

}  // namespace torsig
