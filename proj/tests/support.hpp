#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "torsig/rational.hpp"

namespace torsig::test {

inline Rational q(const char* s) { return parse_rational(s); }
inline Rational q(long p, long d = 1) { return make_rational(p, d); }

inline RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline std::vector<RatVector> points(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> out;
  for (auto r : rows) out.push_back(rv(r));
  return out;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x70525349ULL);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long bound = 10) {
  long den = 0;
  while (den == 0) den = uniform(-bound, bound);
  return make_rational(uniform(-bound, bound), den);
}

}  // namespace torsig::test
