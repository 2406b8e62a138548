#pragma once

#include "tropgeo/core.hpp"
#include "tropgeo/radical.hpp"
#include "tropgeo/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tropgeo {

/// <a, x> <= b
struct Halfspace {
  RatVec a;
  Rational b;

  friend bool operator==(const Halfspace& l, const Halfspace& r) {
    return l.a == r.a && l.b == r.b;
  }
  friend bool operator<(const Halfspace& l, const Halfspace& r) {
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  }
};

namespace detail {

inline Rational det(std::vector<RatVec> m) {
  const std::size_t n = m.size();
  Rational result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      result = -result;
    }
    result *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return result;
}

inline int rank(std::vector<RatVec> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  int r = 0;
  for (std::size_t col = 0; col < cols && r < static_cast<int>(m.size()); ++col) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t row = r + 1; row < m.size(); ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[row][c] -= f * m[r][c];
    }
    ++r;
  }
  return r;
}

/// Solves A x = rhs for square A; nullopt when singular.
inline std::optional<RatVec> solve(std::vector<RatVec> a, RatVec rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

/// Scales a rational vector to a coprime integer vector, preserving direction.
inline RatVec primitive(const RatVec& v) {
  Int lcm_den(1);
  for (const auto& q : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(q));
  Int gcd_num(0);
  for (const auto& q : v) gcd_num = boost::multiprecision::gcd(gcd_num, Int(numerator(q) * (lcm_den / denominator(q))));
  if (gcd_num == 0) return RatVec(v.size(), Rational(0));
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * Rational(lcm_den) / Rational(gcd_num);
  return r;
}

/// Joint primitive form of (a | b), preserving orientation. Used as a
/// canonical key for halfspaces.
inline Halfspace canonical(const Halfspace& h) {
  RatVec joint = h.a;
  joint.push_back(h.b);
  RatVec p = primitive(joint);
  Halfspace out;
  out.a.assign(p.begin(), p.end() - 1);
  out.b = p.back();
  return out;
}

/// Normal of the hyperplane through d points in R^d via cofactor expansion
/// of the (d-1) x d difference matrix; zero vector when degenerate.
inline RatVec hyperplane_normal(const std::vector<RatVec>& pts) {
  const std::size_t d = pts[0].size();
  std::vector<RatVec> diff;
  for (std::size_t i = 1; i < pts.size(); ++i) diff.push_back(pts[i] - pts[0]);
  RatVec normal(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<RatVec> minor;
    for (const auto& row : diff) {
      RatVec r;
      for (std::size_t c = 0; c < d; ++c)
        if (c != i) r.push_back(row[c]);
      minor.push_back(std::move(r));
    }
    Rational m = det(minor);
    normal[i] = (i % 2 == 0) ? m : -m;
  }
  return normal;
}

inline int affine_rank(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<RatVec> diff;
  for (std::size_t i = 1; i < pts.size(); ++i) diff.push_back(pts[i].x - pts[0].x);
  return rank(diff);
}

/// Convex hull of 2-d points, CCW, collinear points dropped.
inline std::vector<Point> hull2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t m = pts.size();
  if (m <= 2) return pts;
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Point> h(2 * m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = m - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

/// Facets of conv(points) for full-dimensional input, d <= 4, by exhaustive
/// hyperplane enumeration over d-subsets with early-exit side tests. Exact
/// and insensitive to degeneracies (coplanar subsets simply rediscover the
/// same canonical halfspace).
inline std::vector<Halfspace> facets_from_points(const std::vector<Point>& pts, int d) {
  std::set<Halfspace> found;
  const std::size_t m = pts.size();
  std::vector<std::size_t> idx(d);
  std::vector<std::size_t> stack;

  auto consider = [&](const std::vector<std::size_t>& sel) {
    std::vector<RatVec> sub;
    for (auto i : sel) sub.push_back(pts[i].x);
    RatVec a = hyperplane_normal(sub);
    if (is_zero_vec(a)) return;
    Rational b = dot(a, sub[0]);
    bool above = false, below = false;
    for (const auto& p : pts) {
      Rational s = dot(a, p.x) - b;
      if (s > 0) above = true;
      else if (s < 0) below = true;
      if (above && below) return;
    }
    if (above) {
      for (auto& q : a) q = -q;
      b = -b;
    }
    found.insert(canonical(Halfspace{std::move(a), b}));
  };

  // iterate d-subsets
  std::vector<std::size_t> sel(d);
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int depth) {
    if (depth == d) {
      consider(sel);
      return;
    }
    for (std::size_t i = start; i + (d - depth - 1) < m; ++i) {
      sel[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return {found.begin(), found.end()};
}

/// All vertices of the intersection of halfspaces (bounded input assumed),
/// by solving every d-subset of tight constraints.
inline std::vector<Point> vertices_from_halfspaces(const std::vector<Halfspace>& hs, int d) {
  std::set<Point> verts;
  const std::size_t m = hs.size();
  std::vector<std::size_t> sel(d);
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int depth) {
    if (depth == d) {
      std::vector<RatVec> a;
      RatVec b;
      for (auto i : sel) {
        a.push_back(hs[i].a);
        b.push_back(hs[i].b);
      }
      auto x = solve(a, b);
      if (!x) return;
      for (const auto& h : hs)
        if (dot(h.a, *x) > h.b) return;
      verts.insert(Point(*x));
      return;
    }
    for (std::size_t i = start; i + (d - depth - 1) < m; ++i) {
      sel[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (m >= static_cast<std::size_t>(d)) rec(0, 0);
  return {verts.begin(), verts.end()};
}

/// Extreme points of a full-dimensional point set given its facets.
inline std::vector<Point> extreme_points(const std::vector<Point>& pts,
                                         const std::vector<Halfspace>& facets, int d) {
  std::vector<Point> out;
  for (const auto& p : pts) {
    std::vector<RatVec> tight;
    for (const auto& h : facets)
      if (dot(h.a, p.x) == h.b) tight.push_back(h.a);
    if (static_cast<int>(tight.size()) >= d && rank(tight) == d) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Rational shoelace_area2(const std::vector<Point>& ccw) {
  Rational s(0);
  const std::size_t m = ccw.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point& a = ccw[i];
    const Point& b = ccw[(i + 1) % m];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return s;  // twice the signed area
}

inline Rational point_set_volume(const std::vector<Point>& pts, int d);

/// (d-1)-volume of the facet with outward normal `a` spanned by `pts`
/// (all on the facet hyperplane), as coef * sqrt(a . a): project out the
/// coordinate with the largest |a| entry and rescale by |a| / |a_drop|.
inline Radical facet_measure(const std::vector<Point>& pts, const RatVec& a, int d) {
  if (d == 1) return Radical(Rational(1));  // a 0-face counts once
  std::size_t drop = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (abs_rat(a[i]) > abs_rat(a[drop])) drop = i;
  std::vector<Point> proj;
  proj.reserve(pts.size());
  for (const auto& p : pts) {
    RatVec q;
    for (std::size_t c = 0; c < p.x.size(); ++c)
      if (c != drop) q.push_back(p[c]);
    proj.emplace_back(std::move(q));
  }
  Rational aproj = point_set_volume(proj, d - 1);
  RatVec ap = primitive(a);
  Int norm2 = 0;
  for (const auto& q : ap) norm2 += numerator(q) * numerator(q);
  return Radical(aproj / abs_rat(ap[drop]), norm2);
}

/// Exact d-volume of conv(pts): cone decomposition from the centroid over
/// facets, each facet volume obtained by coordinate projection. Returns 0
/// for lower-dimensional input.
inline Rational point_set_volume(const std::vector<Point>& pts, int d) {
  if (pts.empty()) return Rational(0);
  if (d == 0) return Rational(1);
  if (d == 1) {
    Rational lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  if (d == 2) {
    auto h = hull2d(pts);
    if (h.size() < 3) return Rational(0);
    return abs_rat(shoelace_area2(h)) / 2;
  }
  if (affine_rank(pts) < d) return Rational(0);
  auto facets = facets_from_points(pts, d);
  RatVec centroid(d, Rational(0));
  for (const auto& p : pts) centroid = centroid + p.x;
  centroid = Rational(1, pts.size()) * centroid;

  Rational vol(0);
  for (const auto& f : facets) {
    std::vector<Point> tight;
    for (const auto& p : pts)
      if (dot(f.a, p.x) == f.b) tight.push_back(p);
    std::size_t drop = 0;
    for (std::size_t i = 1; i < f.a.size(); ++i)
      if (abs_rat(f.a[i]) > abs_rat(f.a[drop])) drop = i;
    std::vector<Point> proj;
    for (const auto& p : tight) {
      RatVec q;
      for (std::size_t c = 0; c < p.x.size(); ++c)
        if (c != drop) q.push_back(p[c]);
      proj.emplace_back(std::move(q));
    }
    Rational aproj = point_set_volume(proj, d - 1);
    // cone volume = (1/d) * (b - <a,o>) * A_proj / |a_drop|  (radicals cancel)
    vol += (f.b - dot(f.a, centroid)) * aproj / abs_rat(f.a[drop]);
  }
  return vol / d;
}

}  // namespace detail
}  // namespace tropgeo
