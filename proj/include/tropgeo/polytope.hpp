#pragma once

#include "tropgeo/core.hpp"
#include "tropgeo/hull.hpp"
#include "tropgeo/radical.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropgeo {

/// Raised when an operation is asked for a facet/section direction it has no
/// exact algorithm for (generic directions in dimension > 3).
struct UnsupportedDirectionError : std::runtime_error {
  std::vector<RatVec> directions;
  explicit UnsupportedDirectionError(std::string msg, std::vector<RatVec> dirs = {})
      : std::runtime_error(std::move(msg)), directions(std::move(dirs)) {}
};

/// Convex polytope carried in dual representation: vertex list and halfspace
/// list, kept consistent on construction.
struct Polytope {
  int dim = 0;
  std::vector<Point> vertices;
  std::vector<Halfspace> halfspaces;
  std::string provenance = "generic";

  bool full_dimensional() const { return detail::affine_rank(vertices) == dim; }

  bool contains(const Point& p) const {
    for (const auto& h : halfspaces)
      if (dot(h.a, p.x) > h.b) return false;
    return true;
  }

  std::vector<Point> facet_vertices(std::size_t facet) const {
    std::vector<Point> out;
    for (const auto& v : vertices)
      if (dot(halfspaces[facet].a, v.x) == halfspaces[facet].b) out.push_back(v);
    return out;
  }

  Point vertex_centroid() const {
    if (vertices.empty()) throw std::logic_error("empty polytope");
    RatVec c(dim, Rational(0));
    for (const auto& v : vertices) c = c + v.x;
    return Point(Rational(1, vertices.size()) * c);
  }
};

/// Zonotope as base point plus generator list.
struct Zonotope {
  Point base;
  std::vector<RatVec> generators;

  int dim() const { return base.dim(); }

  /// All 2^m corner combinations (meant for m close to dim).
  std::vector<Point> corners() const {
    std::vector<Point> out;
    const std::size_t m = generators.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
      RatVec p = base.x;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::size_t(1) << i)) p = p + generators[i];
      out.emplace_back(std::move(p));
    }
    return out;
  }
};

/// Hyperplane <normal, x> = offset with the direction stored exactly
/// (unnormalized) to avoid irrational unit vectors.
struct Hyperplane {
  RatVec normal;
  Rational offset;
};

/// Sum over n-subsets of |det|; zero exactly when the generators span fewer
/// than n dimensions.
inline Rational zonotope_volume(const Zonotope& z) {
  const int n = z.dim();
  const std::size_t m = z.generators.size();
  if (m < static_cast<std::size_t>(n)) return Rational(0);
  Rational total(0);
  std::vector<std::size_t> sel(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int depth) {
    if (depth == n) {
      std::vector<RatVec> rows;
      for (auto i : sel) rows.push_back(z.generators[i]);
      total += abs_rat(detail::det(rows));
      return;
    }
    for (std::size_t i = start; i + (n - depth - 1) < m; ++i) {
      sel[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return total;
}

namespace detail {

inline std::vector<Halfspace> sorted_canonical(std::vector<Halfspace> hs) {
  for (auto& h : hs) h = canonical(h);
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

/// Unique lexicographically-greatest maximizer of <d, .> — always a vertex
/// of the hull.
inline Point lexmax_in_direction(const std::vector<Point>& pts, const RatVec& d) {
  const Point* best = &pts[0];
  Rational best_val = dot(pts[0].x, d);
  for (const auto& p : pts) {
    Rational v = dot(p.x, d);
    if (v > best_val || (v == best_val && best->x < p.x)) {
      best = &p;
      best_val = v;
    }
  }
  return *best;
}

}  // namespace detail

/// Builds a polytope from points: vertices are the extreme points, halfspaces
/// the facet description. Lower-dimensional input keeps the deduplicated
/// points and an empty halfspace list.
inline Polytope polytope_from_points(int dim, std::vector<Point> pts,
                                     std::string provenance = "generic") {
  for (const auto& p : pts)
    if (p.dim() != dim) throw std::invalid_argument("point dimension mismatch");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polytope P;
  P.dim = dim;
  P.provenance = std::move(provenance);
  if (detail::affine_rank(pts) < dim) {
    P.vertices = std::move(pts);
    return P;
  }
  if (dim == 2) {
    P.vertices = detail::hull2d(pts);
    std::vector<Halfspace> hs;
    const std::size_t m = P.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point& p = P.vertices[i];
      const Point& q = P.vertices[(i + 1) % m];
      // outward normal of a CCW edge
      RatVec a{q[1] - p[1], p[0] - q[0]};
      hs.push_back(Halfspace{a, dot(a, p.x)});
    }
    P.halfspaces = detail::sorted_canonical(hs);
    std::sort(P.vertices.begin(), P.vertices.end());
    return P;
  }
  if (pts.size() > 48) {
    // Exhaustive facet enumeration is cubic/quartic in the point count, so
    // prune first: seed a survivor set with directional maximizers (certain
    // vertices), hull the survivors exactly, then verify every input point
    // against that hull and fold violators back in until the hull certifies
    // all inputs. The result is the exact hull of the full set.
    std::set<Point> survivors;
    std::vector<RatVec> dirs;
    {
      RatVec d(dim, Rational(0));
      std::function<void(int)> rec = [&](int depth) {
        if (depth == dim) {
          if (!is_zero_vec(d)) dirs.push_back(d);
          return;
        }
        for (int v : {-1, 0, 1}) {
          d[depth] = v;
          rec(depth + 1);
        }
      };
      rec(0);
      std::uint64_t state = 0x9e3779b97f4a7c15ull;
      auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
      };
      for (int i = 0; i < 24 * dim; ++i) {
        RatVec rd(dim);
        for (int c = 0; c < dim; ++c) rd[c] = Rational(static_cast<int>(next() % 19) - 9);
        if (!is_zero_vec(rd)) dirs.push_back(rd);
      }
    }
    for (const auto& d : dirs) survivors.insert(detail::lexmax_in_direction(pts, d));
    while (true) {
      std::vector<Point> surv(survivors.begin(), survivors.end());
      std::vector<Halfspace> hs = detail::facets_from_points(surv, dim);
      bool all_inside = true;
      for (const auto& p : pts) {
        for (const auto& h : hs)
          if (dot(h.a, p.x) > h.b) {
            survivors.insert(p);
            all_inside = false;
            break;
          }
      }
      if (all_inside) {
        P.halfspaces = std::move(hs);
        P.vertices = detail::extreme_points(surv, P.halfspaces, dim);
        return P;
      }
    }
  }
  P.halfspaces = detail::facets_from_points(pts, dim);
  P.vertices = detail::extreme_points(pts, P.halfspaces, dim);
  return P;
}

/// Builds a polytope from halfspaces (bounded input): enumerates vertices and
/// drops redundant halfspaces (those not tight on a (dim-1)-dimensional set).
inline Polytope polytope_from_halfspaces(int dim, std::vector<Halfspace> hs,
                                         std::string provenance = "generic") {
  Polytope P;
  P.dim = dim;
  P.provenance = std::move(provenance);
  hs = detail::sorted_canonical(std::move(hs));
  P.vertices = detail::vertices_from_halfspaces(hs, dim);
  if (P.vertices.empty()) throw std::invalid_argument("empty or unbounded halfspace system");
  for (const auto& h : hs) {
    std::vector<Point> tight;
    for (const auto& v : P.vertices)
      if (dot(h.a, v.x) == h.b) tight.push_back(v);
    if (detail::affine_rank(tight) == dim - 1) P.halfspaces.push_back(h);
  }
  return P;
}

/// Checks the dual-representation invariants: every vertex satisfies every
/// halfspace, every halfspace is tight on >= dim affinely independent
/// vertices, and the two representations describe the same set.
inline bool validate_polytope(const Polytope& P) {
  for (const auto& v : P.vertices)
    for (const auto& h : P.halfspaces)
      if (dot(h.a, v.x) > h.b) return false;
  for (const auto& h : P.halfspaces) {
    std::vector<Point> tight;
    for (const auto& v : P.vertices)
      if (dot(h.a, v.x) == h.b) tight.push_back(v);
    if (static_cast<int>(tight.size()) < P.dim) return false;
    if (detail::affine_rank(tight) != P.dim - 1) return false;
  }
  auto enumerated = detail::vertices_from_halfspaces(P.halfspaces, P.dim);
  std::vector<Point> verts = P.vertices;
  std::sort(verts.begin(), verts.end());
  return enumerated == verts;
}

/// The n-dimensional tropical closed ball of radius R centered at `center`:
/// vertices center + R*v for v in ({0,1}^n u {0,-1}^n) \ {0}; facets
/// +-x_j <= R and x_j - x_i <= R (shifted), in the canonical order: axis
/// facets ascending j with signs +,-; then difference facets lex by (j, i).
inline Polytope trop_ball(int n, const Rational& R, const Point& center) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  if (R <= 0) throw std::invalid_argument("radius must be positive");
  if (center.dim() != n) throw std::invalid_argument("center dimension mismatch");

  Polytope P;
  P.dim = n;
  P.provenance = "ball";
  for (int sign = 0; sign < 2; ++sign) {
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      RatVec v = center.x;
      for (int i = 0; i < n; ++i)
        if (mask & (std::size_t(1) << i)) v[i] += (sign == 0 ? R : -R);
      P.vertices.emplace_back(std::move(v));
    }
  }
  for (int j = 0; j < n; ++j) {
    RatVec plus(n, Rational(0)), minus(n, Rational(0));
    plus[j] = 1;
    minus[j] = -1;
    P.halfspaces.push_back(Halfspace{plus, R + center[j]});
    P.halfspaces.push_back(Halfspace{minus, R - center[j]});
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      RatVec a(n, Rational(0));
      a[j] = 1;
      a[i] = -1;
      P.halfspaces.push_back(Halfspace{a, R + center[j] - center[i]});
    }
  return P;
}

inline Polytope trop_ball(int n, const Rational& R) { return trop_ball(n, R, origin(n)); }

/// The n+1 tropical unit hypercubes I^n_j of side R (base at the origin):
/// zonotopes on the tropical unit vectors with e~_j omitted.
inline std::vector<Zonotope> ball_hypercube_decomposition(int n, const Rational& R) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  if (R <= 0) throw std::invalid_argument("radius must be positive");
  TropFrame frame(n);
  std::vector<Zonotope> cells;
  for (int j = 1; j <= n + 1; ++j) {
    Zonotope z;
    z.base = origin(n);
    for (int i = 1; i <= n + 1; ++i)
      if (i != j) z.generators.push_back(R * frame.unit_vector(i));
    cells.push_back(std::move(z));
  }
  return cells;
}

/// conv{e_i - e_j : 0 <= i != j <= n} with e_0 = 0 — the tropical dual unit
/// ball, equal to the Wulff shape of the tropical norm. Halfspaces are the
/// subset-sum constraints |sum_{i in I} x_i| <= 1.
inline Polytope dual_ball(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  Polytope P;
  P.dim = n;
  P.provenance = "dual_ball";
  std::vector<Point> pts;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      RatVec v(n, Rational(0));
      if (i > 0) v[i - 1] += 1;
      if (j > 0) v[j - 1] -= 1;
      pts.emplace_back(std::move(v));
    }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  P.vertices = std::move(pts);
  std::vector<Halfspace> hs;
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    RatVec a(n, Rational(0));
    for (int i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) a[i] = 1;
    hs.push_back(Halfspace{a, Rational(1)});
    hs.push_back(Halfspace{Rational(-1) * a, Rational(1)});
  }
  P.halfspaces = detail::sorted_canonical(hs);
  return P;
}

/// Support function h_P(v) = max over vertices of <vertex, v>.
inline Rational support_function(const Polytope& P, const RatVec& v) {
  if (P.vertices.empty()) throw std::invalid_argument("support of empty polytope");
  Rational best = dot(P.vertices[0].x, v);
  for (const auto& p : P.vertices) best = std::max(best, dot(p.x, v));
  return best;
}

/// Wulff shape of the crystalline surface tension phi(v) = max_{g in G} <v,g>:
/// the unit ball of phi*, i.e. conv(G). G must be symmetric and span R^n.
inline Polytope wulff_shape(int n, const std::vector<RatVec>& generators) {
  std::vector<Point> pts;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("generator dimension mismatch");
    pts.emplace_back(g);
  }
  for (const auto& g : generators) {
    bool has_neg = false;
    for (const auto& h : generators)
      if (h == Rational(-1) * g) {
        has_neg = true;
        break;
      }
    if (!has_neg) throw std::invalid_argument("generator set must be symmetric");
  }
  if (detail::affine_rank(pts) < n)
    throw std::invalid_argument("generators do not span R^n (unbounded Wulff shape)");
  Polytope P = polytope_from_points(n, std::move(pts), "generic");
  return P;
}

/// Exact Lebesgue volume by cone decomposition over facets; 0 when P is not
/// full-dimensional.
inline Rational polytope_volume(const Polytope& P) {
  if (!P.full_dimensional()) return Rational(0);
  if (P.dim == 2) {
    auto h = detail::hull2d(P.vertices);
    return abs_rat(detail::shoelace_area2(h)) / 2;
  }
  Point o = P.vertex_centroid();
  Rational vol(0);
  for (std::size_t f = 0; f < P.halfspaces.size(); ++f) {
    const auto& h = P.halfspaces[f];
    auto tight = P.facet_vertices(f);
    std::size_t drop = 0;
    for (std::size_t i = 1; i < h.a.size(); ++i)
      if (abs_rat(h.a[i]) > abs_rat(h.a[drop])) drop = i;
    std::vector<Point> proj;
    for (const auto& p : tight) {
      RatVec q;
      for (std::size_t c = 0; c < p.x.size(); ++c)
        if (c != drop) q.push_back(p[c]);
      proj.emplace_back(std::move(q));
    }
    Rational aproj = detail::point_set_volume(proj, P.dim - 1);
    vol += (h.b - dot(h.a, o.x)) * aproj / abs_rat(h.a[drop]);
  }
  return vol / P.dim;
}

struct FacetArea {
  std::size_t facet_index;
  RatVec normal;    // primitive integer outward normal
  Radical area;     // exact (n-1)-volume, possibly irrational
};

/// Per-facet Euclidean (n-1)-volumes, exact in coef * sqrt(radicand) form.
inline std::vector<FacetArea> facet_euclidean_areas(const Polytope& P) {
  if (!P.full_dimensional()) throw std::invalid_argument("facet areas need a full-dimensional polytope");
  std::vector<FacetArea> out;
  for (std::size_t f = 0; f < P.halfspaces.size(); ++f) {
    auto tight = P.facet_vertices(f);
    out.push_back(FacetArea{f, detail::primitive(P.halfspaces[f].a),
                            detail::facet_measure(tight, P.halfspaces[f].a, P.dim)});
  }
  return out;
}

/// Minkowski sum P + eps * B^n (convex P): hull of pairwise vertex sums.
inline Polytope minkowski_sum_ball(const Polytope& P, const Rational& eps) {
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  if (eps == 0) return P;
  Polytope B = trop_ball(P.dim, eps);
  std::vector<Point> sums;
  sums.reserve(P.vertices.size() * (B.vertices.size() + 1));
  for (const auto& p : P.vertices) {
    sums.push_back(p);
    for (const auto& w : B.vertices) sums.push_back(p + w);
  }
  return polytope_from_points(P.dim, std::move(sums), P.provenance);
}

// ---------------------------------------------------------------------------
// Central sections of the unit tropical ball
// ---------------------------------------------------------------------------

enum class SectionKind { subset_family, difference_family, generic2d, generic3d };

struct CentralSection {
  SectionKind kind;
  Radical area;    // exact (n-1)-volume of v-perp cap B^n
  int subset_size = 0;  // k for the subset family
};

namespace detail {

/// v proportional to +-(indicator of I)? Returns I (0-based) if so.
inline std::optional<std::vector<int>> as_subset_direction(const RatVec& v) {
  RatVec p = primitive(v);
  bool any_pos = false, any_neg = false;
  for (const auto& q : p) {
    if (q > 0) any_pos = true;
    if (q < 0) any_neg = true;
  }
  if (any_pos && any_neg) return std::nullopt;
  std::vector<int> idx;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational a = abs_rat(p[i]);
    if (a == 0) continue;
    if (a != 1) return std::nullopt;
    idx.push_back(static_cast<int>(i));
  }
  if (idx.empty()) return std::nullopt;
  return idx;
}

/// v proportional to e_j - e_i?
inline std::optional<std::pair<int, int>> as_difference_direction(const RatVec& v) {
  RatVec p = primitive(v);
  int pos = -1, neg = -1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 1 && pos < 0) pos = static_cast<int>(i);
    else if (p[i] == -1 && neg < 0) neg = static_cast<int>(i);
    else if (p[i] != 0) return std::nullopt;
  }
  if (pos < 0 || neg < 0) return std::nullopt;
  return std::make_pair(pos, neg);
}

/// Sum_i |det(v, y_1, .., y_i-hat, .., y_n)| for the paper's generator
/// construction of v-perp cap B^n, with the irrational 1/sqrt(...) factor of
/// the unit normal pulled out by the caller.
inline Rational section_det_sum(const RatVec& v_int, const std::vector<RatVec>& gens) {
  const std::size_t n = gens.size();
  Rational total(0);
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::vector<RatVec> rows;
    rows.push_back(v_int);
    for (std::size_t i = 0; i < n; ++i)
      if (i != skip) rows.push_back(gens[i]);
    total += abs_rat(det(rows));
  }
  return total;
}

/// Clips a convex polygon (CCW or CW, exact) by u*s + v*t <= w.
inline std::vector<std::pair<Rational, Rational>> clip_halfplane(
    const std::vector<std::pair<Rational, Rational>>& poly, const Rational& u,
    const Rational& v, const Rational& w) {
  std::vector<std::pair<Rational, Rational>> out;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % m];
    Rational fa = u * a.first + v * a.second - w;
    Rational fb = u * b.first + v * b.second - w;
    if (fa <= 0) {
      out.push_back(a);
      if (fb > 0) {
        Rational t = fa / (fa - fb);
        out.emplace_back(a.first + t * (b.first - a.first), a.second + t * (b.second - a.second));
      }
    } else if (fb <= 0) {
      Rational t = fa / (fa - fb);
      out.emplace_back(a.first + t * (b.first - a.first), a.second + t * (b.second - a.second));
    }
  }
  return out;
}

inline Rational polygon_area(const std::vector<std::pair<Rational, Rational>>& poly) {
  Rational s(0);
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % m];
    s += a.first * b.second - b.first * a.second;
  }
  return abs_rat(s) / 2;
}

}  // namespace detail

/// (n-1)-volume of v-perp cap B^n (unit ball, centered at 0), exact.
///
/// Special families (any n): v ~ sum_{i in I} e_i gives n/sqrt(k) via the
/// determinant-sum over the zonotope generators e_i - (1/k) 1 and e_j;
/// v ~ e_j - e_i gives sqrt(2) n. In the plane every direction reduces to a
/// chord length. For other directions with n = 3 the section polygon is cut
/// out of the halfspace description and measured through the parametrization
/// Jacobian |v| / |v_c|. Anything else raises UnsupportedDirectionError.
inline CentralSection central_section_area(int n, const RatVec& v) {
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("direction dimension mismatch");
  if (is_zero_vec(v)) throw std::invalid_argument("zero direction");
  if (n == 1) return CentralSection{SectionKind::subset_family, Radical(Rational(1)), 1};

  if (auto subset = detail::as_subset_direction(v)) {
    const int k = static_cast<int>(subset->size());
    std::vector<bool> in_I(n, false);
    for (int i : *subset) in_I[i] = true;
    RatVec v_int(n, Rational(0));
    for (int i : *subset) v_int[i] = 1;
    std::vector<RatVec> gens;
    for (int i = 0; i < n; ++i) {
      RatVec g(n, Rational(0));
      g[i] = 1;
      if (in_I[i])
        for (int c = 0; c < n; ++c) g[c] -= Rational(1, k);
      gens.push_back(std::move(g));
    }
    Rational dsum = detail::section_det_sum(v_int, gens);
    // unit normal = v_int / sqrt(k): area = dsum / sqrt(k)
    return CentralSection{SectionKind::subset_family, Radical(dsum / k, Int(k)), k};
  }

  if (auto diff = detail::as_difference_direction(v)) {
    auto [j, i] = *diff;
    RatVec v_int(n, Rational(0));
    v_int[j] = 1;
    v_int[i] = -1;
    std::vector<RatVec> gens;
    RatVec first(n, Rational(0));
    first[i] = 1;
    first[j] = 1;
    gens.push_back(std::move(first));
    for (int c = 0; c < n; ++c) {
      if (c == i || c == j) continue;
      RatVec g(n, Rational(0));
      g[c] = 1;
      gens.push_back(std::move(g));
    }
    gens.push_back(RatVec(n, Rational(-1)));
    Rational dsum = detail::section_det_sum(v_int, gens);
    return CentralSection{SectionKind::difference_family, Radical(dsum / 2, Int(2)), 2};
  }

  if (n == 2) {
    // chord of the hexagon through 0 in direction d = rot90(v)
    RatVec d{-v[1], v[0]};
    Int norm2 = 0;
    RatVec dp = detail::primitive(d);
    for (const auto& q : dp) norm2 += numerator(q) * numerator(q);
    return CentralSection{SectionKind::generic2d,
                          Radical(Rational(2) / trop_norm(Point(dp)), norm2), 0};
  }

  if (n == 3) {
    // permute coordinates so the last entry is nonzero, then slice
    RatVec p = detail::primitive(v);
    int last = -1;
    for (int i = 2; i >= 0; --i)
      if (p[i] != 0) {
        last = i;
        break;
      }
    std::swap(p[last], p[2]);
    const Rational &a = p[0], &b = p[1], &c = p[2];
    Rational ac = abs_rat(c);
    std::vector<std::pair<Rational, Rational>> poly{
        {Rational(-2), Rational(-2)}, {Rational(2), Rational(-2)},
        {Rational(2), Rational(2)},   {Rational(-2), Rational(2)}};
    const Rational one(1);
    std::vector<std::array<Rational, 3>> cons{
        {one, Rational(0), one},   {-one, Rational(0), one},
        {Rational(0), one, one},   {Rational(0), -one, one},
        {a, b, ac},                {-a, -b, ac},
        {one, -one, one},          {-one, one, one},
        {a + c, b, ac},            {-(a + c), -b, ac},
        {a, b + c, ac},            {-a, -(b + c), ac}};
    for (const auto& cn : cons) {
      poly = detail::clip_halfplane(poly, cn[0], cn[1], cn[2]);
      if (poly.empty()) break;
    }
    Rational area_st = detail::polygon_area(poly);
    Int norm2 = 0;
    for (const auto& q : p) norm2 += numerator(q) * numerator(q);
    // L^2(section) = area_st * sqrt(a^2+b^2+c^2) / |c|
    return CentralSection{SectionKind::generic3d, Radical(area_st / ac, norm2), 0};
  }

  throw UnsupportedDirectionError(
      "central sections in dimension > 3 are only available for subset and "
      "difference directions",
      {v});
}

/// L^{n-1}(v-perp cap B^n) * h_B(v-hat), exact. The square roots cancel, so
/// the result is an exact rational; equals n on both special families.
inline Rational section_times_height(int n, const RatVec& v) {
  CentralSection s = central_section_area(n, v);
  RatVec p = detail::primitive(v);
  Int norm2 = 0;
  for (const auto& q : p) norm2 += numerator(q) * numerator(q);
  // h_B(v / |v|) = dual_norm(v) / |v|
  Radical h(dual_norm(Point(p)) / Rational(norm2), norm2);
  Radical prod = s.area * h;
  if (!prod.is_rational())
    throw std::logic_error("section * height failed to reduce to a rational");
  return prod.rational_value();
}

}  // namespace tropgeo
