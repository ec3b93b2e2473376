#include "torsig/chow.hpp"

#include <functional>
#include <string>

#include "torsig/error.hpp"
#include "torsig/invariants.hpp"
#include "torsig/linalg.hpp"

namespace torsig {

unsigned DivisorMonomial::degree() const {
  unsigned d = 0;
  for (const auto& [ray, e] : exponents) d += e;
  return d;
}

ChowEvaluator::ChowEvaluator(const Fan& fan) : fan_(fan) {}
ChowEvaluator::ChowEvaluator(const Fan& fan, std::mt19937_64& rng) : fan_(fan), rng_(&rng) {}

Rational ChowEvaluator::evaluate(const DivisorMonomial& mono) {
  DivisorMonomial clean;
  for (const auto& [ray, e] : mono.exponents) {
    if (ray >= fan_.num_rays()) throw Error(ErrorCode::InvalidInput, "monomial references ray " + std::to_string(ray));
    if (e > 0) clean.exponents[ray] = e;
  }
  if (clean.degree() != fan_.dim())
    throw Error(ErrorCode::WrongDegree, "degree " + std::to_string(clean.degree()) + " in dimension " +
                                            std::to_string(fan_.dim()));
  return reduce(clean);
}

Rational ChowEvaluator::reduce(const DivisorMonomial& mono) {
  Cone support;
  for (const auto& [ray, e] : mono.exponents) support.push_back(ray);
  if (!fan_.is_cone(support)) return 0;
  if (auto it = memo_.find(mono); it != memo_.end()) return it->second;

  std::vector<IntVector> rows;
  for (auto r : support) rows.push_back(fan_.rays()[r]);

  Rational value;
  if (support.size() == fan_.dim()) {
    value = Rational(1) / Rational(abs(determinant(rows)));
  } else {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < support.size(); ++i)
      if (mono.exponents.at(support[i]) >= 2) candidates.push_back(i);
    std::size_t pick = candidates.front();
    if (rng_) pick = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(*rng_)];

    RatVector rhs(support.size(), 0);
    rhs[pick] = 1;
    const RatMatrix m = RatMatrix::from_rows(rows, fan_.dim());
    RatVector u = *solve(m, rhs);  // independent rows: always solvable
    if (rng_) {
      std::uniform_int_distribution<int> coef(-3, 3);
      for (const auto& k : nullspace(m)) {
        const int c = coef(*rng_);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += c * k[i];
      }
    }

    DivisorMonomial lowered = mono;
    --lowered.exponents[support[pick]];
    value = 0;
    for (std::size_t j = 0; j < fan_.num_rays(); ++j) {
      if (mono.exponents.count(j)) continue;
      const Rational pairing = dot(u, fan_.rays()[j]);
      if (pairing == 0) continue;
      DivisorMonomial next = lowered;
      next.exponents[j] = 1;
      value -= pairing * reduce(next);
    }
  }
  memo_.emplace(mono, value);
  return value;
}

Rational evaluate(const Fan& fan, const DivisorMonomial& mono) { return ChowEvaluator(fan).evaluate(mono); }

namespace {

void compositions(unsigned total, unsigned parts, std::vector<unsigned>& cur,
                  const std::function<void(const std::vector<unsigned>&)>& emit) {
  if (parts == 0) {
    if (total == 0) emit(cur);
    return;
  }
  for (unsigned first = 1; first + (parts - 1) <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MonomialTerm> monomial_sign_report(const Fan& fan) {
  const std::size_t d = fan.dim();
  if (d % 2 != 0) throw Error(ErrorCode::OddDimension, "the L-class expansion needs even dimension");
  fan.require_complete();
  const unsigned half = static_cast<unsigned>(d / 2);
  ChowEvaluator eval(fan);
  std::vector<MonomialTerm> terms;

  Cone support;
  std::vector<unsigned> parts;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    if (!support.empty()) {
      compositions(half, static_cast<unsigned>(support.size()), parts, [&](const std::vector<unsigned>& ns) {
        MonomialTerm t;
        t.coefficient = support.size() % 2 == 0 ? 1 : -1;
        for (std::size_t k = 0; k < support.size(); ++k) {
          t.monomial.exponents[support[k]] = 2 * ns[k];
          t.coefficient *= bernoulli_b(ns[k]);
        }
        t.value = eval.evaluate(t.monomial);
        const Rational signed_value = support.size() % 2 == 0 ? t.value : Rational(-t.value);
        t.sign_ok = signed_value >= 0;
        terms.push_back(std::move(t));
      });
    }
    if (support.size() == half) return;
    for (std::size_t j = start; j < fan.num_rays(); ++j) {
      bool adjacent = true;
      for (auto i : support) adjacent = adjacent && fan.adjacent(i, j);
      if (!adjacent) continue;
      support.push_back(j);
      if (fan.is_cone(support)) grow(j + 1);
      support.pop_back();
    }
  };
  grow(0);
  return terms;
}

Rational signature_from_terms(const std::vector<MonomialTerm>& terms, std::size_t dim) {
  Rational total = 0;
  for (const auto& t : terms) total += t.coefficient * t.value;
  return (dim / 2) % 2 == 0 ? total : Rational(-total);
}

Rational signature_via_L(const Fan& fan) { return signature_from_terms(monomial_sign_report(fan), fan.dim()); }

}  // namespace torsig
