#pragma once

#include <json.hpp>

#include <string>

#include "torsig/acceptance.hpp"
#include "torsig/analysis.hpp"
#include "torsig/chow.hpp"
#include "torsig/fan.hpp"
#include "torsig/invariants.hpp"
#include "torsig/polytope.hpp"

namespace torsig {

// Objects use sorted keys, so dump() is canonical. Rationals and
// arbitrary-precision integers are strings; counts and indices are numbers.
using Json = nlohmann::json;

Json to_json(const Rational& r);
Json to_json(const Integer& z);
Json to_json(const Polytope& p);
Json to_json(const Fan& f);
Json to_json(const BoundReport& b);
Json to_json(const MonomialTerm& t);
Json to_json(const AnalysisReport& r);
Json to_json(const ChowReport& r, bool with_terms);
Json to_json(const MirrorReport& r);
Json to_json(const CriterionResult& c);
Json to_json(const AcceptanceReport& r);

/// {"dim", "vertices", optional "facets"}. With facets present the hull is
/// skipped and incidence is validated. Throws InvalidInput.
Polytope polytope_from_json(const Json& j);
/// {"dim", "rays", "max_cones"}.
Fan fan_from_json(const Json& j);

Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);

std::string dump(const Json& j, bool pretty);

}  // namespace torsig
