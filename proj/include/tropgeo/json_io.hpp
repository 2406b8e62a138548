#pragma once

#include "tropgeo/core.hpp"
#include "tropgeo/honeycomb.hpp"
#include "tropgeo/isoperimetry.hpp"
#include "tropgeo/measure.hpp"
#include "tropgeo/polytope.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace tropgeo {

using Json = nlohmann::ordered_json;

/// Exact input boundary: coordinates are rational strings ("3/2") or JSON
/// integers. Floats are refused so the exactness guarantee starts at the
/// file format.
inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float())
    throw std::invalid_argument("floating-point literals are not accepted on exact inputs; "
                                "use rational strings like \"3/2\"");
  throw std::invalid_argument("expected a rational string or integer");
}

inline Json rational_to_json(const Rational& q) { return Json(format_rational(q)); }

inline Json point_to_json(const Point& p) {
  Json arr = Json::array();
  for (const auto& q : p.x) arr.push_back(rational_to_json(q));
  return arr;
}

inline Point point_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("point must be a nonempty array");
  RatVec v;
  for (const auto& c : j) v.push_back(rational_from_json(c));
  return Point(v);
}

inline Json halfspace_to_json(const Halfspace& h) {
  Json a = Json::array();
  for (const auto& q : h.a) a.push_back(rational_to_json(q));
  return Json{{"a", a}, {"b", rational_to_json(h.b)}};
}

inline Halfspace halfspace_from_json(const Json& j) {
  Halfspace h;
  for (const auto& c : j.at("a")) h.a.push_back(rational_from_json(c));
  h.b = rational_from_json(j.at("b"));
  return h;
}

inline Json polytope_to_json(const Polytope& P) {
  Json verts = Json::array();
  for (const auto& v : P.vertices) verts.push_back(point_to_json(v));
  Json hs = Json::array();
  for (const auto& h : P.halfspaces) hs.push_back(halfspace_to_json(h));
  return Json{{"dim", P.dim}, {"vertices", verts}, {"halfspaces", hs},
              {"provenance", P.provenance}};
}

/// Accepts {dim, vertices} or {dim, halfspaces} or both (one representation
/// is authoritative, the other is derived or validated).
inline Polytope polytope_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
  std::string prov = j.value("provenance", std::string("generic"));
  const bool has_v = j.contains("vertices") && !j["vertices"].empty();
  const bool has_h = j.contains("halfspaces") && !j["halfspaces"].empty();
  if (has_v) {
    std::vector<Point> pts;
    for (const auto& v : j["vertices"]) {
      Point p = point_from_json(v);
      if (p.dim() != dim) throw std::invalid_argument("vertex dimension mismatch");
      pts.push_back(std::move(p));
    }
    Polytope P = polytope_from_points(dim, pts, prov);
    if (has_h) {
      Polytope Q;
      Q.dim = dim;
      Q.vertices = P.vertices;
      for (const auto& h : j["halfspaces"]) Q.halfspaces.push_back(halfspace_from_json(h));
      Q.halfspaces = detail::sorted_canonical(Q.halfspaces);
      if (!validate_polytope(Q))
        throw std::invalid_argument("vertex and halfspace representations disagree");
    }
    return P;
  }
  if (has_h) {
    std::vector<Halfspace> hs;
    for (const auto& h : j["halfspaces"]) {
      Halfspace hh = halfspace_from_json(h);
      if (static_cast<int>(hh.a.size()) != dim)
        throw std::invalid_argument("halfspace dimension mismatch");
      hs.push_back(std::move(hh));
    }
    return polytope_from_halfspaces(dim, hs, prov);
  }
  throw std::invalid_argument("polytope needs vertices or halfspaces");
}

inline Json polygon_to_json(const Polygon2D& P) {
  Json verts = Json::array();
  for (const auto& v : P.vertices) verts.push_back(point_to_json(v));
  return Json{{"dim", 2}, {"vertices", verts}};
}

inline Polygon2D polygon_from_json(const Json& j) {
  if (j.at("dim").get<int>() != 2) throw std::invalid_argument("polygon must have dim 2");
  Polygon2D out;
  for (const auto& v : j.at("vertices")) {
    Point p = point_from_json(v);
    if (p.dim() != 2) throw std::invalid_argument("polygon vertices must be 2-dimensional");
    out.vertices.push_back(std::move(p));
  }
  if (out.vertices.size() < 3) throw std::invalid_argument("polygon needs >= 3 vertices");
  return out;
}

inline Json measure_report_to_json(const MeasureReport& r) {
  Json j{{"value", r.value},
         {"exact", r.exact()},
         {"method", r.method},
         {"eps_schedule", r.eps_schedule},
         {"upper_bound", r.upper_bound},
         {"error_estimate", r.error_estimate}};
  if (r.exact()) j["exact_value"] = rational_to_json(*r.exact_value);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json tiling_to_json(const Tiling& t) {
  Json centers = Json::array();
  for (const auto& c : t.centers) centers.push_back(point_to_json(c));
  return Json{{"dim", t.dim}, {"centers", centers}, {"window", rational_to_json(t.window)}};
}

inline Json tiling_report_to_json(const TilingReport& r) {
  Json j{{"pass", r.pass},
         {"disjoint", r.disjoint},
         {"covered", r.covered},
         {"facets_shared", r.facets_shared},
         {"cells", r.cells},
         {"grid_points", r.grid_points},
         {"interior_cells", r.interior_cells}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  if (r.witness) j["witness"] = point_to_json(*r.witness);
  return j;
}

inline Json deficit2d_to_json(const Deficit2D& d) {
  return Json{{"perimeter", rational_to_json(d.perimeter)},
              {"area", rational_to_json(d.area)},
              {"deficit", rational_to_json(d.deficit)},
              {"perimeter_float", to_double(d.perimeter)},
              {"area_float", to_double(d.area)},
              {"deficit_float", to_double(d.deficit)},
              {"equality_case", d.equality_case}};
}

inline Json deficit_nd_to_json(const DeficitND& d) {
  return Json{{"perimeter", rational_to_json(d.surface)},
              {"area", rational_to_json(d.volume)},
              {"deficit", rational_to_json(d.deficit)},
              {"perimeter_float", to_double(d.surface)},
              {"area_float", to_double(d.volume)},
              {"deficit_float", to_double(d.deficit)},
              {"equality_case", d.equality_case}};
}

inline Json radical_to_json(const Radical& r) {
  return Json{{"coef", rational_to_json(r.coef)},
              {"radicand", r.radicand.str()},
              {"value", r.value()}};
}

}  // namespace tropgeo
