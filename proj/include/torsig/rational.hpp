#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace torsig {

using Integer = mpz_class;
using Rational = mpq_class;

using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Builds p/q in lowest terms. Throws on q == 0.
Rational make_rational(const Integer& p, const Integer& q);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q" (any sign placement on p), with optional surrounding
/// whitespace. The result is canonical.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

RatVector to_rational(const IntVector& v);

}  // namespace torsig
