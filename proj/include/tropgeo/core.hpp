#pragma once

#include "tropgeo/rational.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace tropgeo {

/// A point of the tropical projective torus R^{n+1}/R*1, using the
/// representative with last homogeneous coordinate 0, stored as the n
/// remaining coordinates.
struct Point {
  RatVec x;

  Point() = default;
  explicit Point(RatVec coords) : x(std::move(coords)) {}

  int dim() const { return static_cast<int>(x.size()); }
  const Rational& operator[](std::size_t i) const { return x[i]; }
  Rational& operator[](std::size_t i) { return x[i]; }

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) { return a.x < b.x; }
  friend Point operator+(const Point& a, const Point& b) { return Point(a.x + b.x); }
  friend Point operator-(const Point& a, const Point& b) { return Point(a.x - b.x); }
  friend Point operator*(const Rational& s, const Point& a) { return Point(s * a.x); }
};

inline Point origin(int n) { return Point(RatVec(n, Rational(0))); }

inline void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("point dimension mismatch");
}

/// The n+1 (min) tropical standard unit vectors: e_1..e_n and -(1,...,1).
struct TropFrame {
  int n;

  explicit TropFrame(int dim) : n(dim) {
    if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  }

  /// i in 1..n+1 (1-based to match the usual indexing).
  RatVec unit_vector(int i) const {
    if (i < 1 || i > n + 1) throw std::invalid_argument("unit vector index out of range");
    if (i == n + 1) return RatVec(n, Rational(-1));
    RatVec v(n, Rational(0));
    v[i - 1] = 1;
    return v;
  }

  std::vector<RatVec> unit_vectors() const {
    std::vector<RatVec> vs;
    vs.reserve(n + 1);
    for (int i = 1; i <= n + 1; ++i) vs.push_back(unit_vector(i));
    return vs;
  }
};

struct Polyline {
  std::vector<Point> points;
  bool closed = false;
};

/// (h_1,...,h_{n+1}) homogeneous -> representative (h_i - h_{n+1}) in R^n.
inline Point normalize_projective(const RatVec& h) {
  if (h.size() < 2) throw std::invalid_argument("need at least 2 homogeneous coordinates");
  RatVec r(h.size() - 1);
  for (std::size_t i = 0; i + 1 < h.size(); ++i) r[i] = h[i] - h.back();
  return Point(std::move(r));
}

/// x~_i = <x, e~_i> for i = 1..n+1; the last entry is -(x_1+...+x_n).
inline RatVec tilde_coords(const Point& p) {
  RatVec r(p.x);
  Rational s(0);
  for (const auto& xi : p.x) s += xi;
  r.push_back(-s);
  return r;
}

/// d_tr(x,y) = max(max_i(x_i-y_i), 0) - min(min_i(x_i-y_i), 0).
inline Rational trop_distance(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Rational mx(0), mn(0);
  for (int i = 0; i < a.dim(); ++i) {
    Rational d = a[i] - b[i];
    if (d > mx) mx = d;
    if (d < mn) mn = d;
  }
  return mx - mn;
}

inline Rational trop_norm(const Point& p) { return trop_distance(p, origin(p.dim())); }
inline Rational trop_norm(const RatVec& v) { return trop_norm(Point(v)); }

/// Tropical dual norm: max over subsets I of |sum_{i in I} x_i|, i.e.
/// max(sum of positive entries, |sum of negative entries|). Also equal to
/// (1/2) sum |x~_i| over the tilde coordinates; both routes are computed and
/// must agree exactly.
inline Rational dual_norm(const Point& p) {
  Rational pos(0), neg(0);
  for (const auto& xi : p.x) {
    if (xi > 0) pos += xi;
    else neg -= xi;
  }
  Rational subset_form = std::max(pos, neg);

  Rational tilde_sum(0);
  for (const auto& t : tilde_coords(p)) tilde_sum += abs_rat(t);
  Rational half_l1_form = tilde_sum / 2;

  if (subset_form != half_l1_form)
    throw std::logic_error("dual norm internal consistency failure");
  return subset_form;
}

inline Rational dual_norm(const RatVec& v) { return dual_norm(Point(v)); }

inline Rational dual_distance(const Point& a, const Point& b) {
  require_same_dim(a, b);
  return dual_norm(a - b);
}

/// Max pairwise tropical distance. For a convex polytope this is the correct
/// diameter when called on its vertex list (d_tr is convex in each argument).
inline Rational trop_diameter(const std::vector<Point>& pts) {
  if (pts.empty()) throw std::invalid_argument("diameter of empty set");
  Rational best(0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, trop_distance(pts[i], pts[j]));
  return best;
}

/// Total variation of the polyline in the tropical metric.
inline Rational polyline_length(const Polyline& pl) {
  if (pl.points.empty()) throw std::invalid_argument("empty polyline");
  Rational s(0);
  for (std::size_t i = 0; i + 1 < pl.points.size(); ++i)
    s += trop_distance(pl.points[i], pl.points[i + 1]);
  if (pl.closed && pl.points.size() > 1)
    s += trop_distance(pl.points.back(), pl.points.front());
  return s;
}

/// Breakpoint polyline of the min-plus segment between x and y.
///
/// In homogeneous coordinates the segment is z(t)_i = x^_i + min(t, d^_i)
/// with d^ = y^ - x^ = (y-x, 0); breakpoints are the distinct values of d^.
/// Ties merge, so no zero-length pieces are emitted and the vertex count is
/// at most n+1.
inline Polyline tropical_segment(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const int n = x.dim();
  std::set<Rational> ts;
  ts.insert(Rational(0));
  for (int i = 0; i < n; ++i) ts.insert(y[i] - x[i]);

  Polyline out;
  for (const Rational& t : ts) {
    RatVec z(n);
    Rational last = std::min(t, Rational(0));
    for (int i = 0; i < n; ++i) z[i] = x[i] + std::min(t, y[i] - x[i]) - last;
    out.points.emplace_back(std::move(z));
  }
  return out;
}

/// True iff the polyline's tropical length equals the endpoint distance
/// within tol (tol = 0 is the intended use for rational inputs).
inline bool is_geodesic(const Polyline& pl, const Rational& tol = Rational(0)) {
  if (pl.points.size() < 2) throw std::invalid_argument("geodesic check needs >= 2 points");
  Rational len = polyline_length(pl);
  Rational d = trop_distance(pl.points.front(), pl.closed ? pl.points.front() : pl.points.back());
  return abs_rat(len - d) <= tol;
}

}  // namespace tropgeo
