#pragma once

#include "tropgeo/core.hpp"
#include "tropgeo/measure.hpp"
#include "tropgeo/polytope.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace tropgeo {

/// Counterclockwise simple polygon in the plane.
struct Polygon2D {
  std::vector<Point> vertices;

  Rational signed_area2() const { return detail::shoelace_area2(vertices); }
  Rational area() const { return abs_rat(signed_area2()) / 2; }

  Rational tropical_perimeter() const {
    Polyline b{vertices, true};
    return polyline_length(b);
  }
};

namespace detail {

inline bool segments_properly_intersect(const Point& a, const Point& b, const Point& c,
                                        const Point& d) {
  auto orient = [](const Point& o, const Point& p, const Point& q) {
    Rational v = (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]);
    return v == 0 ? 0 : (v > 0 ? 1 : -1);
  };
  auto on_segment = [&](const Point& o, const Point& p, const Point& q) {
    return orient(o, p, q) == 0 && std::min(o[0], p[0]) <= q[0] && q[0] <= std::max(o[0], p[0]) &&
           std::min(o[1], p[1]) <= q[1] && q[1] <= std::max(o[1], p[1]);
  };
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b))
    return true;
  return false;
}

}  // namespace detail

inline bool is_simple_polygon(const Polygon2D& P) {
  const std::size_t m = P.vertices.size();
  if (m < 3) return false;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      // skip adjacent edges (shared endpoint)
      if (j == i || (j + 1) % m == i || (i + 1) % m == j) continue;
      if (detail::segments_properly_intersect(P.vertices[i], P.vertices[(i + 1) % m],
                                              P.vertices[j], P.vertices[(j + 1) % m]))
        return false;
    }
  }
  return true;
}

/// Edge lengths a, b, c, d (tropical metric) of the canonical tropically
/// geodesic hexagon; feasibility keeps the remaining two edge lengths
/// a+b-d and b+c-d nonnegative.
struct HexagonParams {
  Rational a, b, c, d;

  bool feasible() const {
    return a >= 0 && b >= 0 && c >= 0 && d >= 0 && a + b - d >= 0 && b + c - d >= 0;
  }
  Rational perimeter_formula() const { return 2 * a + 3 * b + 2 * c - d; }
  Rational area_formula() const { return b * b / 2 - d * d / 2 + a * b + a * c + b * c; }
  Rational deficit_identity_rhs() const {
    auto sq = [](const Rational& x) { return x * x; };
    return 3 * sq(b - d) + 2 * sq(a - c) + 2 * sq(c - d) + 2 * sq(d - a);
  }
};

/// Realizes the hexagon with the lower-left vertex at the origin, edges in
/// the order bottom (a), lower-right diagonal (b), right (c), top (a+b-d),
/// upper-left diagonal (d), left (b+c-d); diagonal edges run along (1,1), so
/// the figure labels are tropical lengths. Zero-length edges collapse.
/// Construction asserts the closed-form perimeter and area exactly.
inline Polygon2D hexagon_from_params(const HexagonParams& p) {
  if (!p.feasible()) throw std::invalid_argument("infeasible hexagon parameters");
  std::vector<Point> vs;
  auto push = [&](Rational x, Rational y) {
    Point q(RatVec{std::move(x), std::move(y)});
    if (vs.empty() || vs.back() != q) vs.push_back(std::move(q));
  };
  push(0, 0);
  push(p.a, 0);
  push(p.a + p.b, p.b);
  push(p.a + p.b, p.b + p.c);
  push(p.d, p.b + p.c);
  push(0, p.b + p.c - p.d);
  if (vs.size() > 1 && vs.back() == vs.front()) vs.pop_back();
  Polygon2D poly{vs};
  if (poly.vertices.size() < 3 || poly.signed_area2() <= 0)
    throw std::invalid_argument("degenerate hexagon parameters");
  if (poly.tropical_perimeter() != p.perimeter_formula())
    throw std::logic_error("hexagon perimeter formula violated");
  if (poly.area() != p.area_formula())
    throw std::logic_error("hexagon area formula violated");
  return poly;
}

struct Deficit2D {
  Rational perimeter;
  Rational area;
  Rational deficit;
  bool equality_case = false;
};

namespace detail {

/// Merge collinear edges and return the polygon's edge list as (direction,
/// tropical length) pairs with primitive directions.
inline std::vector<std::pair<RatVec, Rational>> merged_edges(const std::vector<Point>& vs) {
  std::vector<std::pair<RatVec, Rational>> edges;
  const std::size_t m = vs.size();
  for (std::size_t i = 0; i < m; ++i) {
    RatVec d = vs[(i + 1) % m].x - vs[i].x;
    if (is_zero_vec(d)) continue;
    RatVec dir = primitive(d);
    Rational len = trop_norm(Point(d));
    if (!edges.empty() && edges.back().first == dir) edges.back().second += len;
    else edges.emplace_back(dir, len);
  }
  if (edges.size() > 1 && edges.front().first == edges.back().first) {
    edges.front().second += edges.back().second;
    edges.pop_back();
  }
  return edges;
}

}  // namespace detail

/// True iff P is a translate/dilation of the tropical disk: exactly six
/// merged edges whose primitive directions are the hexagon cycle and whose
/// tropical lengths are all equal (normal-fan equality, no float compare).
inline bool is_tropical_disk(const Polygon2D& P) {
  auto edges = detail::merged_edges(P.vertices);
  if (edges.size() != 6) return false;
  // CCW hexagon edge directions starting anywhere
  const std::vector<RatVec> cycle{
      RatVec{Rational(1), Rational(0)},  RatVec{Rational(1), Rational(1)},
      RatVec{Rational(0), Rational(1)},  RatVec{Rational(-1), Rational(0)},
      RatVec{Rational(-1), Rational(-1)}, RatVec{Rational(0), Rational(-1)}};
  int start = -1;
  for (int s = 0; s < 6; ++s)
    if (edges[0].first == cycle[s]) start = s;
  if (start < 0) return false;
  for (int i = 0; i < 6; ++i) {
    if (edges[i].first != cycle[(start + i) % 6]) return false;
    if (edges[i].second != edges[0].second) return false;
  }
  return true;
}

/// l_tr(boundary)^2 - 12 * Area; >= 0 for simple polygons, zero exactly for
/// tropical disks. Non-convex simple polygons are evaluated as-is.
inline Deficit2D deficit_2d(const Polygon2D& P) {
  if (!is_simple_polygon(P)) throw std::invalid_argument("polygon must be simple");
  Polygon2D Q = P;
  if (Q.signed_area2() < 0) std::reverse(Q.vertices.begin(), Q.vertices.end());
  Deficit2D out;
  out.perimeter = Q.tropical_perimeter();
  out.area = Q.area();
  out.deficit = out.perimeter * out.perimeter - 12 * out.area;
  out.equality_case = is_tropical_disk(Q);
  return out;
}

/// Smallest tropically geodesic hexagon containing P: tight bounds on x, y
/// and y - x.
inline Polygon2D circumscribed_geodesic_hexagon(const Polygon2D& P) {
  Rational x_lo = P.vertices[0][0], x_hi = x_lo;
  Rational y_lo = P.vertices[0][1], y_hi = y_lo;
  Rational d_lo = P.vertices[0][1] - P.vertices[0][0], d_hi = d_lo;
  for (const auto& v : P.vertices) {
    x_lo = std::min(x_lo, v[0]);
    x_hi = std::max(x_hi, v[0]);
    y_lo = std::min(y_lo, v[1]);
    y_hi = std::max(y_hi, v[1]);
    d_lo = std::min(d_lo, v[1] - v[0]);
    d_hi = std::max(d_hi, v[1] - v[0]);
  }
  std::vector<Halfspace> hs;
  hs.push_back(Halfspace{RatVec{Rational(1), Rational(0)}, x_hi});
  hs.push_back(Halfspace{RatVec{Rational(-1), Rational(0)}, -x_lo});
  hs.push_back(Halfspace{RatVec{Rational(0), Rational(1)}, y_hi});
  hs.push_back(Halfspace{RatVec{Rational(0), Rational(-1)}, -y_lo});
  hs.push_back(Halfspace{RatVec{Rational(-1), Rational(1)}, d_hi});
  hs.push_back(Halfspace{RatVec{Rational(1), Rational(-1)}, -d_lo});
  Polytope Q = polytope_from_halfspaces(2, hs, "hexagon");
  return Polygon2D{detail::hull2d(Q.vertices)};
}

struct DeficitND {
  Rational surface;  // Minkowski surface measure
  Rational volume;
  Rational deficit;
  bool equality_case = false;
};

/// True iff P equals a tropical ball reconstructed from its support values.
inline bool is_tropical_ball(const Polytope& P) {
  const int n = P.dim;
  RatVec center(n);
  Rational R;
  for (int j = 0; j < n; ++j) {
    RatVec plus(n, Rational(0)), minus(n, Rational(0));
    plus[j] = 1;
    minus[j] = -1;
    Rational hp = support_function(P, plus);
    Rational hm = support_function(P, minus);
    Rational rj = (hp + hm) / 2;
    if (j == 0) R = rj;
    else if (rj != R) return false;
    center[j] = (hp - hm) / 2;
  }
  if (R <= 0) return false;
  Polytope ball = trop_ball(n, R, Point(center));
  std::vector<Point> a = P.vertices, b = ball.vertices;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

/// M^{n-1}(boundary)^n - n^n (n+1) vol^{n-1}; zero exactly on tropical balls.
inline DeficitND deficit_nd(const Polytope& P) {
  if (!P.full_dimensional()) throw std::invalid_argument("deficit needs a full-dimensional polytope");
  DeficitND out;
  out.surface = *minkowski_surface_polytope(P).exact_value;
  out.volume = polytope_volume(P);
  Rational lhs = pow_rat(out.surface, P.dim);
  Rational c(P.dim + 1);
  for (int i = 0; i < P.dim; ++i) c *= P.dim;
  out.deficit = lhs - c * pow_rat(out.volume, P.dim - 1);
  out.equality_case = is_tropical_ball(P);
  return out;
}

/// 36 pi V^2 / A^3, normalized to 1 for the Euclidean sphere.
inline double isoperimetric_quotient(double V, double A) {
  if (V <= 0 || A <= 0) throw std::invalid_argument("quotient needs positive volume and area");
  return 36.0 * std::numbers::pi * V * V / (A * A * A);
}

struct QuotientRow {
  std::string structure;
  double quotient;
  bool computed;  // false = echoed literature constant
};

/// The 3D isoperimetric quotient table: sphere, cube and both tropical-ball
/// rows computed from geometry; Weaire-Phelan and Kelvin echoed as
/// literature constants.
inline std::vector<QuotientRow> quotient_table() {
  std::vector<QuotientRow> rows;
  const double pi = std::numbers::pi;
  rows.push_back({"Standard sphere", isoperimetric_quotient(4.0 * pi / 3.0, 4.0 * pi), true});
  rows.push_back({"Weaire-Phelan", 0.764, false});
  rows.push_back({"Kelvin", 0.757, false});

  // unit cube: Euclidean facet areas
  std::vector<Halfspace> cube_hs;
  for (int j = 0; j < 3; ++j) {
    RatVec plus(3, Rational(0)), minus(3, Rational(0));
    plus[j] = 1;
    minus[j] = -1;
    cube_hs.push_back(Halfspace{plus, Rational(1)});
    cube_hs.push_back(Halfspace{minus, Rational(0)});
  }
  Polytope cube = polytope_from_halfspaces(3, cube_hs, "hypercube");
  double cube_area = 0.0;
  for (const auto& fa : facet_euclidean_areas(cube)) cube_area += fa.area.value();
  rows.push_back({"Cube", isoperimetric_quotient(to_double(polytope_volume(cube)), cube_area), true});

  Polytope ball = trop_ball(3, 1);
  double ball_vol = to_double(polytope_volume(ball));
  double euclid_area = 0.0;
  for (const auto& fa : facet_euclidean_areas(ball)) euclid_area += fa.area.value();
  rows.push_back({"Tropical ball (Euclidean measure)",
                  isoperimetric_quotient(ball_vol, euclid_area), true});
  rows.push_back({"Tropical ball (tropical measure)",
                  isoperimetric_quotient(ball_vol, to_double(*sigma_surface_polytope(ball).exact_value)),
                  true});
  return rows;
}

}  // namespace tropgeo
