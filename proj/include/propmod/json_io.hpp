#pragma once

// JSON encodings. Inequalities: {"f": [int | "p/q", ...], "g": [...],
// "b": int | "p/q"}; points are arrays of integers.

#include <json.hpp>

#include "propmod/core.hpp"
#include "propmod/dioph.hpp"
#include "propmod/frob.hpp"
#include "propmod/gen2.hpp"
#include "propmod/genp.hpp"
#include "propmod/lines.hpp"
#include "propmod/ring.hpp"

namespace propmod {

using json = nlohmann::json;

Rational rational_from_json(const json& j);
ModularInequality inequality_from_json(const json& j);
json to_json(const ModularInequality& ineq);

json to_json(const Point& p);
json to_json(const std::vector<Point>& pts);
Point point_from_json(const json& j);
std::vector<Point> points_from_json(const json& j);

/// Integers that fit in 64 bits are numbers; larger ones are strings.
json int_to_json(Int v);

json to_json(const GeneratorSet& gens);
json to_json(const MinimalSolutionSet& sols);
json to_json(const ConstructionTrace& trace);
json to_json(const StripGeometry& geom);
json to_json(const FrobeniusReport& rep);
json to_json(const AperyData& ap);
json to_json(const PropertyReport& rep);

}  // namespace propmod
