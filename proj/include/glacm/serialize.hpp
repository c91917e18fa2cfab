#pragma once

// JSON forms (nlohmann::json, found via ADL).
//   LElem        {"lambda":[a,b,c,d],"ell":e}
//   ExtLabel     {"x":LElem,"twist":LElem}
//   K0Class      [{"degree":LElem,"coeff":n}, ...]
//   StableObj    {"label":ExtLabel,"shift":n}
// Generator and index-set numbering in JSON is 1-based.

#include <json.hpp>

#include "glacm/extbundle.hpp"
#include "glacm/k0.hpp"
#include "glacm/orbits.hpp"
#include "glacm/picard.hpp"
#include "glacm/stablehom.hpp"
#include "glacm/tilting.hpp"

namespace glacm {

using json = nlohmann::json;

inline void to_json(json& j, const LElem& x) {
  j = json{{"lambda", {x.lambda[0], x.lambda[1], x.lambda[2], x.lambda[3]}}, {"ell", x.ell}};
}

inline void from_json(const json& j, LElem& x) {
  const auto& lam = j.at("lambda");
  if (!lam.is_array() || lam.size() != kArity) throw std::invalid_argument("LElem lambda must have 4 entries");
  for (std::size_t i = 0; i < kArity; ++i) x.lambda[i] = lam.at(i).get<Int>();
  x.ell = j.at("ell").get<Int>();
}

inline void to_json(json& j, const ExtLabel& a) { j = json{{"x", a.x}, {"twist", a.twist}}; }

inline void from_json(const json& j, ExtLabel& a) {
  a.x = j.at("x").get<LElem>();
  a.twist = j.at("twist").get<LElem>();
}

inline void to_json(json& j, const K0Class& k) {
  j = json::array();
  for (const auto& [deg, n] : k.terms()) j.push_back(json{{"degree", deg}, {"coeff", n}});
}

inline void from_json(const json& j, K0Class& k) {
  k = K0Class{};
  for (const auto& term : j) k.add_term(term.at("degree").get<LElem>(), term.at("coeff").get<Int>());
}

inline void to_json(json& j, const LineBundleMultiset& m) { j = m.degrees(); }

inline void from_json(const json& j, LineBundleMultiset& m) { m = LineBundleMultiset(j.get<std::vector<LElem>>()); }

inline void to_json(json& j, const StableObj& o) { j = json{{"label", o.label}, {"shift", o.shift}}; }

inline void from_json(const json& j, StableObj& o) {
  o.label = j.at("label").get<ExtLabel>();
  o.shift = j.value("shift", Int{0});
}

namespace stablehom {
inline void to_json(json& j, const HomEntry& e) { j = json{{"x", e.x}, {"y", e.y}, {"n", e.n}, {"dim", e.dim}}; }
}  // namespace stablehom

inline void to_json(json& j, const OrbitReport& r) {
  json fixed = json::object();
  for (const auto& [set, n] : r.fixed_counts) fixed[index_set_to_string(set)] = n;
  j = json{{"weights", r.weights.to_string()},
           {"fixed_counts", fixed},
           {"fixed_total", r.fixed_total},
           {"burnside", r.burnside},
           {"closed_formula", r.closed_formula},
           {"faithful_order", r.faithful_order},
           {"orbit_count", r.orbits.size()},
           {"orbits", r.orbits}};
}

inline json quiver_to_json(const QuiverPresentation& pres, const CartanMatrix& cartan) {
  json arrows = json::array();
  for (const auto& a : pres.arrows) arrows.push_back(json{{"from", a.from}, {"to", a.to}, {"gen", a.gen + 1}});
  json comm = json::array();
  for (const auto& r : pres.comm) comm.push_back(json{{"vertex", r.vertex}, {"i", r.i + 1}, {"j", r.j + 1}});
  json nil = json::array();
  for (const auto& r : pres.nil) nil.push_back(json{{"vertex", r.vertex}, {"gen", r.gen + 1}});
  return json{{"vertices", pres.vertices}, {"arrows", arrows}, {"comm", comm},
              {"nil", nil},               {"cartan", cartan.dims}};
}

}  // namespace glacm
