#ifndef VANGLE_IO_HPP
#define VANGLE_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "vangle/distortion.hpp"
#include "vangle/domain.hpp"
#include "vangle/extremal.hpp"
#include "vangle/metrics.hpp"

namespace vangle {

using Json = nlohmann::json;

inline Json to_json(Point p) { return Json::array({p.x, p.y}); }

inline Json to_json(const IdealPoint& p) {
  if (p.is_infinite()) return "infinity";
  return to_json(p.point());
}

inline Point point_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError(where + ": expected a point [x, y]");
  const Point p{j[0].get<double>(), j[1].get<double>()};
  if (!is_finite(p)) throw ConfigError(where + ": non-finite coordinate");
  return p;
}

/// {"variant": "halfplane" | "disk" | "punctured" | "polygon", "vertices": [[x,y], ...]}.
/// A bare preset name ("disk", "square", ...) is accepted as well.
inline Domain domain_from_json(const Json& j, const std::string& where = "domain") {
  if (j.is_string()) {
    try {
      return domain_preset(j.get<std::string>());
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  if (!j.is_object()) throw ConfigError(where + ": expected an object or a preset name");
  if (!j.contains("variant") || !j["variant"].is_string()) throw ConfigError(where + ".variant: missing or not a string");
  const std::string v = j["variant"].get<std::string>();
  if (v == "polygon") {
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw ConfigError(where + ".vertices: missing or not an array");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < j["vertices"].size(); ++i)
      pts.push_back(point_from_json(j["vertices"][i], where + ".vertices[" + std::to_string(i) + "]"));
    try {
      return ConvexPolygon(std::move(pts));
    } catch (const ConfigError& e) {
      throw ConfigError(where + ".vertices: " + e.what());
    }
  }
  try {
    return domain_preset(v);
  } catch (const ConfigError&) {
    throw ConfigError(where + ".variant: unknown variant '" + v + "'");
  }
}

inline Json to_json(const Domain& d) {
  Json j{{"variant", variant_name(d)}};
  if (const auto* poly = std::get_if<ConvexPolygon>(&d)) {
    Json verts = Json::array();
    for (Point p : poly->vertices()) verts.push_back(to_json(p));
    j["vertices"] = verts;
  }
  return j;
}

inline Json to_json(const MetricReport& r) {
  Json j{{"value", r.value}, {"method", to_string(r.method)}};
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

inline Json to_json(const Geodesic& g) {
  Json j{{"model", to_string(g.model)}, {"ends", Json::array({to_json(g.ends[0]), to_json(g.ends[1])})}};
  if (g.shape == Geodesic::Shape::Arc) {
    j["shape"] = "arc";
    j["center"] = to_json(g.arc.center);
    j["radius"] = g.arc.radius;
  } else {
    j["shape"] = "line";
    j["point"] = to_json(g.line_point);
    j["direction"] = to_json(g.line_direction);
  }
  return j;
}

inline Json to_json(const ExtremalResult& r) {
  Json cands = Json::array();
  for (const Candidate& c : r.candidates) cands.push_back({{"point", to_json(c.point)}, {"angle", c.angle}});
  return {{"model", to_string(r.model)},   {"value", r.value},
          {"point", to_json(r.extremal_point)}, {"case", to_string(r.case_tag)},
          {"candidates", cands},           {"certificate", r.certificate},
          {"bisector", to_json(r.bisector)}, {"fallback", r.fallback},
          {"discrepancy", r.discrepancy}};
}

inline Json to_json(const DistortionConstants& c) {
  return {{"K", c.K},   {"n", c.n},   {"alpha", c.alpha}, {"lambda", c.lambda},
          {"lambda_interval", Json::array({c.lambda_lo, c.lambda_hi})},
          {"t0", c.t0}, {"t1", c.t1}, {"C1", c.C1}, {"C2", c.C2}};
}

inline Json to_json(const QcReport& r) {
  Json j{{"constants", to_json(r.constants)}, {"pairs", r.pairs.size()}};
  if (r.s_checked) j["s"] = {{"violations", r.s_violations}, {"worst_margin", r.s_worst_margin}};
  if (r.v_checked) j["v"] = {{"violations", r.v_violations}, {"worst_margin", r.v_worst_margin}};
  return j;
}

}  // namespace vangle

#endif  // VANGLE_IO_HPP
