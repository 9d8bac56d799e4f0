#include "propmod/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace propmod {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(Int(j.get<std::int64_t>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

ModularInequality inequality_from_json(const json& j) {
  if (!j.is_object() || !j.contains("f") || !j.contains("g") || !j.contains("b"))
    throw std::invalid_argument("inequality JSON needs keys f, g and b");
  auto vec = [](const json& a) {
    if (!a.is_array()) throw std::invalid_argument("f and g must be arrays");
    std::vector<Rational> out;
    for (const auto& e : a) out.push_back(rational_from_json(e));
    return out;
  };
  auto f = vec(j.at("f"));
  auto g = vec(j.at("g"));
  return normalize(f, g, rational_from_json(j.at("b")));
}

json to_json(const ModularInequality& ineq) {
  return {{"f", ineq.f().coeffs()}, {"g", ineq.g().coeffs()}, {"b", ineq.b()}};
}

json to_json(const Point& p) {
  json a = json::array();
  for (auto c : p.coords()) a.push_back(c);
  return a;
}

json to_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

Point point_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("point must be an array");
  std::vector<std::int64_t> c;
  for (const auto& e : j) c.push_back(e.get<std::int64_t>());
  return Point(std::span<const std::int64_t>(c));
}

std::vector<Point> points_from_json(const json& j) {
  std::vector<Point> out;
  for (const auto& e : j) out.push_back(point_from_json(e));
  return out;
}

json int_to_json(Int v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return to_string(v);
}

json to_json(const GeneratorSet& gens) { return {{"trivial", gens.trivial}, {"generators", to_json(gens.points)}}; }

json to_json(const MinimalSolutionSet& sols) {
  return {{"homogeneous", sols.homogeneous},
          {"certified_bound", int_to_json(sols.certified_bound)},
          {"solutions", to_json(sols.points)}};
}

json to_json(const ConstructionTrace& t) {
  json ck = json::array();
  for (const auto& c : t.Ck) ck.push_back(to_json(c));
  json slabs = json::object();
  for (std::size_t i = 1; i < t.C0.slab.size(); ++i) slabs[std::to_string(i)] = to_json(t.C0.slab[i]);
  json mdk = json::array();
  for (const auto& [key, sols] : t.Mdk)
    mdk.push_back({{"d", key.first}, {"k", key.second}, {"solutions", to_json(sols.points)}});
  return {{"U", to_json(t.U)},
          {"V", to_json(t.V)},
          {"C0", {{"zero", to_json(t.C0.zero)}, {"slabs", slabs}, {"high", to_json(t.C0.high)}}},
          {"Ck", ck},
          {"C", to_json(t.C)},
          {"Ctilde", to_json(t.Ctilde)},
          {"Mdk", mdk},
          {"generators", to_json(t.generators)}};
}

json rational_to_json(const Rational& r) {
  if (r.den() == 1) return int_to_json(r.num());
  return r.str();
}

json to_json(const StripGeometry& geom) {
  return {{"u", to_json(geom.u)},
          {"u_tilde", to_json(geom.u_tilde)},
          {"w", {rational_to_json(geom.w[0]), rational_to_json(geom.w[1])}},
          {"axis", geom.axis == Axis::X ? "x" : "y"}};
}

json to_json(const FrobeniusReport& rep) {
  json j{{"delta_size", rep.delta.size()},
         {"minimal", to_json(rep.minimal)},
         {"all_in_delta", to_json(rep.frobenius_vectors)},
         {"below_cone", to_json(rep.below_cone)}};
  return j;
}

json to_json(const AperyData& ap) {
  return {{"s1", to_json(ap.s1)},
          {"s2", to_json(ap.s2)},
          {"apery_intersection", to_json(ap.apery_restricted)},
          {"maximal_elements", to_json(ap.maximal_elements)}};
}

json to_json(const PropertyReport& rep) {
  json j{{"cohen_macaulay", rep.cohen_macaulay},
         {"gorenstein", rep.gorenstein},
         {"buchsbaum", rep.buchsbaum ? json(*rep.buchsbaum) : json(nullptr)}};
  json w{{"apery_intersection", to_json(rep.apery_intersection)},
         {"apery_maximal", to_json(rep.apery_maximal)},
         {"cm_counterexample", rep.cm_counterexample ? to_json(*rep.cm_counterexample) : json(nullptr)},
         {"closure_equals_S", rep.closure_equals_S},
         {"notes", rep.notes}};
  j["witnesses"] = w;
  return j;
}

}  // namespace propmod
