#include "torsig/rational.hpp"

#include <algorithm>
#include <cctype>

#include "torsig/error.hpp"

namespace torsig {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::StepLimit: return "StepLimit";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
  }
  return "Unknown";
}

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  // mpq_class::get_str already omits "/1" for canonical integers.
  return r.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  auto s = trim(text);
  if (!is_decimal_integer(s)) throw Error(ErrorCode::InvalidInput, "not an integer: '" + std::string(text) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer p = parse_integer(s.substr(0, slash));
  Integer q = parse_integer(s.substr(slash + 1));
  if (q == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return make_rational(p, q);
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.emplace_back(z);
  return out;
}

}  // namespace torsig
