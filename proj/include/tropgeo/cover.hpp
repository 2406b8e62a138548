#pragma once

#include "tropgeo/core.hpp"
#include "tropgeo/measure.hpp"
#include "tropgeo/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropgeo {

/// Which pieces a covering uses. Pieces are always n-dimensional regardless
/// of the target dimension k; bases/centers sit on the covered set
/// (Minkowski cover).
struct CoverSpec {
  enum class Shape { ball, hypercube, simplex };
  Shape shape = Shape::ball;
  Rational eps;
  bool fixed_radius = true;  // every piece uses radius/side exactly eps
  int k = 0;                 // dimension of the measured set
  int cube_type = 0;         // j in 1..n+1 restricting hypercube type; 0 = all types
  std::vector<int> simplex_perm;  // fixed permutation; empty = all permutations
};

namespace detail {

inline std::vector<RatVec> matrix_inverse(const std::vector<RatVec>& cols) {
  // cols are matrix columns; returns rows of the inverse
  const std::size_t n = cols.size();
  std::vector<RatVec> rows_of_inv(n);
  for (std::size_t r = 0; r < n; ++r) {
    // solve M^T y = e_r ; rows of M^{-1} are solutions of M^T y = e_r
    std::vector<RatVec> mt(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mt[i][j] = cols[i][j];
    RatVec rhs(n, Rational(0));
    rhs[r] = 1;
    auto y = solve(mt, rhs);
    if (!y) throw std::invalid_argument("singular generator matrix");
    rows_of_inv[r] = *y;
  }
  return rows_of_inv;
}

struct CoverPiece {
  std::vector<Halfspace> hs;
  Point anchor;
  RatVec lo, hi;  // bounding box

  bool contains(const Point& p) const {
    for (const auto& h : hs)
      if (dot(h.a, p.x) > h.b) return false;
    return true;
  }
  bool contains_all(const std::vector<Point>& pts) const {
    for (const auto& p : pts)
      if (!contains(p)) return false;
    return true;
  }
  bool bbox_disjoint(const RatVec& olo, const RatVec& ohi) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (hi[i] <= olo[i] || ohi[i] <= lo[i]) return true;
    return false;
  }
};

inline CoverPiece ball_piece(int n, const Rational& eps, const Point& center) {
  CoverPiece p;
  p.anchor = center;
  p.hs = trop_ball(n, eps, center).halfspaces;
  p.lo = center.x;
  p.hi = center.x;
  for (int i = 0; i < n; ++i) {
    p.lo[i] -= eps;
    p.hi[i] += eps;
  }
  return p;
}

inline CoverPiece parallelotope_piece(int n, const std::vector<RatVec>& gens, const Point& base) {
  CoverPiece p;
  p.anchor = base;
  auto inv_rows = matrix_inverse(gens);
  for (const auto& r : inv_rows) {
    Rational rb = dot(r, base.x);
    p.hs.push_back(Halfspace{Rational(-1) * r, -rb});
    p.hs.push_back(Halfspace{r, rb + 1});
  }
  p.lo = base.x;
  p.hi = base.x;
  for (const auto& g : gens)
    for (int i = 0; i < n; ++i) {
      if (g[i] > 0) p.hi[i] += g[i];
      else p.lo[i] += g[i];
    }
  return p;
}

/// Tropical unit hypercube I^n_j of side eps based at `base`.
inline CoverPiece cube_piece(int n, const Rational& eps, int j, const Point& base) {
  TropFrame frame(n);
  std::vector<RatVec> gens;
  for (int i = 1; i <= n + 1; ++i)
    if (i != j) gens.push_back(eps * frame.unit_vector(i));
  return parallelotope_piece(n, gens, base);
}

inline CoverPiece simplex_piece(int n, const Rational& eps, const std::vector<int>& perm,
                                const Point& base) {
  CoverPiece p;
  p.anchor = base;
  // 0 <= d_{perm[0]} <= d_{perm[1]} <= ... <= d_{perm[n-1]} <= eps
  RatVec first(n, Rational(0));
  first[perm[0]] = -1;
  p.hs.push_back(Halfspace{first, -base[perm[0]]});
  for (int i = 0; i + 1 < n; ++i) {
    RatVec a(n, Rational(0));
    a[perm[i]] = 1;
    a[perm[i + 1]] = -1;
    p.hs.push_back(Halfspace{a, base[perm[i]] - base[perm[i + 1]]});
  }
  RatVec lastn(n, Rational(0));
  lastn[perm[n - 1]] = 1;
  p.hs.push_back(Halfspace{lastn, base[perm[n - 1]] + eps});
  p.lo = base.x;
  p.hi = base.x;
  for (int i = 0; i < n; ++i) p.hi[i] += eps;
  return p;
}

inline void bbox_of(const std::vector<Point>& pts, RatVec& lo, RatVec& hi) {
  lo = pts[0].x;
  hi = pts[0].x;
  for (const auto& p : pts)
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
}

/// region \ piece as full-dimensional convex remainders. Lower-dimensional
/// remainders lie on the piece boundary or reappear in later remainders, so
/// they are dropped. Returns nullopt when the piece does not cut the region.
inline std::optional<std::vector<Polytope>> subtract_piece(const Polytope& region,
                                                           const CoverPiece& piece) {
  // quick accept: piece swallows region entirely
  if (piece.contains_all(region.vertices)) return std::vector<Polytope>{};
  // overlap must be full-dimensional for the piece to make progress
  {
    std::vector<Halfspace> both = region.halfspaces;
    both.insert(both.end(), piece.hs.begin(), piece.hs.end());
    try {
      Polytope inter = polytope_from_halfspaces(region.dim, both);
      if (!inter.full_dimensional()) return std::nullopt;
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  std::vector<Polytope> out;
  std::vector<Halfspace> acc = region.halfspaces;
  for (const auto& h : piece.hs) {
    std::vector<Halfspace> cand = acc;
    cand.push_back(Halfspace{Rational(-1) * h.a, -h.b});
    try {
      Polytope r = polytope_from_halfspaces(region.dim, cand);
      if (r.full_dimensional()) out.push_back(std::move(r));
    } catch (const std::invalid_argument&) {
      // empty remainder
    }
    acc.push_back(h);
  }
  return out;
}

/// Cone triangulation of a full-dimensional polytope; each simplex is a
/// (dim+1)-point Polytope of its own.
inline std::vector<Polytope> triangulate(const Polytope& P) {
  std::vector<Polytope> out;
  if (P.dim == 1) {
    out.push_back(P);
    return out;
  }
  if (P.dim == 2) {
    auto cyc = hull2d(P.vertices);
    for (std::size_t i = 1; i + 1 < cyc.size(); ++i)
      out.push_back(polytope_from_points(2, {cyc[0], cyc[i], cyc[i + 1]}));
    return out;
  }
  Point apex = P.vertex_centroid();
  for (std::size_t f = 0; f < P.halfspaces.size(); ++f) {
    auto tight = P.facet_vertices(f);
    // project the facet, triangulate in dim-1, lift back by index
    const auto& a = P.halfspaces[f].a;
    std::size_t drop = 0;
    for (std::size_t i = 1; i < a.size(); ++i)
      if (abs_rat(a[i]) > abs_rat(a[drop])) drop = i;
    std::vector<Point> proj;
    for (const auto& p : tight) {
      RatVec q;
      for (std::size_t c = 0; c < p.x.size(); ++c)
        if (c != drop) q.push_back(p[c]);
      proj.emplace_back(std::move(q));
    }
    Polytope flatP;
    flatP.dim = P.dim - 1;
    flatP.vertices = proj;
    if (P.dim - 1 == 2) {
      // handled in the recursive call
    } else {
      flatP.halfspaces = facets_from_points(proj, P.dim - 1);
    }
    auto sub = triangulate(flatP);
    std::map<Point, Point> lift;
    for (std::size_t i = 0; i < proj.size(); ++i) lift[proj[i]] = tight[i];
    for (const auto& s : sub) {
      std::vector<Point> simplex{apex};
      for (const auto& v : s.vertices) simplex.push_back(lift.at(v));
      out.push_back(polytope_from_points(P.dim, simplex));
    }
  }
  return out;
}

}  // namespace detail

/// Greedy Minkowski cover of a full-dimensional polytope target by
/// lattice-anchored pieces, with containment certified by exact convex
/// set-difference: target minus the union of kept pieces is maintained as a
/// list of convex remainders which must empty out. Pieces anchored on the
/// target, lattice order; leftover boundary slivers are covered by a
/// completion pass anchored at remainder vertices. The result is a certified
/// upper bound on the measure.
inline MeasureReport cover_estimate(const Polytope& target, const CoverSpec& spec) {
  const int n = target.dim;
  if (spec.eps <= 0) throw std::invalid_argument("cover eps must be positive");
  if (!target.full_dimensional())
    throw std::invalid_argument("polytope cover targets must be full-dimensional");
  if (spec.k != n)
    throw std::invalid_argument("polytope cover targets require k = n");

  const Rational& eps = spec.eps;
  RatVec lo, hi;
  detail::bbox_of(target.vertices, lo, hi);

  // lattice piece stream, lexicographic
  std::vector<detail::CoverPiece> stream;
  auto enumerate_int_box = [&](const RatVec& cell, auto&& emit) {
    // iterate integer vectors l with eps*l within [lo - cell, hi]
    std::vector<Int> lmin(n), lmax(n), cur(n);
    for (int i = 0; i < n; ++i) {
      Rational a = (lo[i] - cell[i]) / eps;
      Rational b = hi[i] / eps;
      Int ai = Int(numerator(a) / denominator(a));
      while (Rational(ai) < a) ++ai;
      while (Rational(ai - 1) >= a) --ai;
      Int bi = Int(numerator(b) / denominator(b));
      while (Rational(bi) > b) --bi;
      while (Rational(bi + 1) <= b) ++bi;
      lmin[i] = ai;
      lmax[i] = bi;
    }
    std::function<void(int)> rec = [&](int depth) {
      if (depth == n) {
        emit(cur);
        return;
      }
      for (Int v = lmin[depth]; v <= lmax[depth]; ++v) {
        cur[depth] = v;
        rec(depth + 1);
      }
    };
    rec(0);
  };

  if (spec.shape == CoverSpec::Shape::ball) {
    RatVec cell(n, eps);
    enumerate_int_box(cell, [&](const std::vector<Int>& l) {
      Int s = 0;
      for (const auto& v : l) s += v;
      Int mod = s % (n + 1);
      if (mod != 0) return;
      RatVec c(n);
      for (int i = 0; i < n; ++i) c[i] = eps * Rational(l[i]);
      Point center(c);
      if (target.contains(center)) stream.push_back(detail::ball_piece(n, eps, center));
    });
  } else if (spec.shape == CoverSpec::Shape::hypercube) {
    std::vector<int> types;
    if (spec.cube_type >= 1) types.push_back(spec.cube_type);
    else types.push_back(n + 1);  // standard axis cube leads the stream
    RatVec cell(n, eps);
    enumerate_int_box(cell, [&](const std::vector<Int>& l) {
      RatVec c(n);
      for (int i = 0; i < n; ++i) c[i] = eps * Rational(l[i]);
      Point base(c);
      if (!target.contains(base)) return;
      for (int j : types) stream.push_back(detail::cube_piece(n, eps, j, base));
    });
  } else {
    std::vector<std::vector<int>> perms;
    if (!spec.simplex_perm.empty()) perms.push_back(spec.simplex_perm);
    else {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      do perms.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
    }
    RatVec cell(n, eps);
    enumerate_int_box(cell, [&](const std::vector<Int>& l) {
      RatVec c(n);
      for (int i = 0; i < n; ++i) c[i] = eps * Rational(l[i]);
      Point base(c);
      if (!target.contains(base)) return;
      for (const auto& perm : perms) stream.push_back(detail::simplex_piece(n, eps, perm, base));
    });
  }

  std::deque<Polytope> regions;
  for (auto& s : detail::triangulate(target)) regions.push_back(std::move(s));

  std::size_t used = 0;
  auto apply_piece = [&](const detail::CoverPiece& piece) {
    bool progressed = false;
    std::deque<Polytope> next;
    while (!regions.empty()) {
      Polytope region = std::move(regions.front());
      regions.pop_front();
      RatVec rlo, rhi;
      detail::bbox_of(region.vertices, rlo, rhi);
      if (piece.bbox_disjoint(rlo, rhi)) {
        next.push_back(std::move(region));
        continue;
      }
      auto rem = detail::subtract_piece(region, piece);
      if (!rem) {
        next.push_back(std::move(region));
        continue;
      }
      progressed = true;
      for (auto& r : *rem) next.push_back(std::move(r));
    }
    regions = std::move(next);
    return progressed;
  };

  for (const auto& piece : stream) {
    if (regions.empty()) break;
    if (apply_piece(piece)) ++used;
  }

  // completion: anchor extra pieces at remainder vertices (which lie on the
  // target) until nothing is left
  MeasureReport r;
  std::size_t guard = 64 * (stream.size() + 16);
  while (!regions.empty() && guard-- > 0) {
    Point anchor = regions.front().vertices.front();
    for (const auto& v : regions.front().vertices)
      if (v < anchor) anchor = v;
    std::vector<detail::CoverPiece> candidates;
    if (spec.shape == CoverSpec::Shape::ball) {
      candidates.push_back(detail::ball_piece(n, eps, anchor));
    } else if (spec.shape == CoverSpec::Shape::hypercube) {
      for (int j = 1; j <= n + 1; ++j) candidates.push_back(detail::cube_piece(n, eps, j, anchor));
    } else {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      do candidates.push_back(detail::simplex_piece(n, eps, p, anchor));
      while (std::next_permutation(p.begin(), p.end()));
    }
    bool any = false;
    for (const auto& cand : candidates)
      if (apply_piece(cand)) {
        ++used;
        any = true;
      }
    if (!any) {
      r.note = "coverage-failure";
      break;
    }
  }
  if (!regions.empty() && r.note.empty()) r.note = "coverage-failure";

  Rational value;
  const Rational eps_k = pow_rat(eps, spec.k);
  switch (spec.shape) {
    case CoverSpec::Shape::ball:
      value = Rational(spec.k + 1) * Rational(used) * eps_k;
      break;
    case CoverSpec::Shape::hypercube:
      value = Rational(used) * eps_k;
      break;
    case CoverSpec::Shape::simplex: {
      Rational kfact(1);
      for (int i = 2; i <= spec.k; ++i) kfact *= i;
      value = Rational(used) * eps_k / kfact;
      break;
    }
  }
  r.value = to_double(value);
  r.exact_value = value;
  r.method = "cover_estimate";
  r.upper_bound = true;
  r.eps_schedule = {to_double(eps)};
  return r;
}

/// Greedy Minkowski cover of a polyline (k = 1 target) by pieces anchored on
/// the curve. Ball pieces march in exact arc length: a ball at arc position s
/// covers the sub-arc [s - eps, s + eps] because tropical distance along a
/// curve is bounded by arc length (triangle inequality); this makes the count
/// ceil(L / 2 eps) and the bound certified without sampling. Cube and simplex
/// pieces use sample-certified marching at resolution eps/8.
inline MeasureReport cover_estimate(const Polyline& target, const CoverSpec& spec) {
  if (spec.eps <= 0) throw std::invalid_argument("cover eps must be positive");
  if (spec.k != 1) throw std::invalid_argument("polyline cover targets require k = 1");
  if (target.points.empty()) throw std::invalid_argument("empty polyline");
  const int n = target.points.front().dim();
  const Rational& eps = spec.eps;

  // arc-length table
  std::vector<Point> pts = target.points;
  if (target.closed && pts.size() > 1) pts.push_back(pts.front());
  std::vector<Rational> cum{Rational(0)};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    cum.push_back(cum.back() + trop_distance(pts[i], pts[i + 1]));
  const Rational L = cum.back();

  auto point_at_arc = [&](const Rational& s) {
    if (s <= 0) return pts.front();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (s <= cum[i + 1]) {
        Rational seg = cum[i + 1] - cum[i];
        if (seg == 0) continue;
        Rational t = (s - cum[i]) / seg;
        return Point(pts[i].x + t * (pts[i + 1].x - pts[i].x));
      }
    }
    return pts.back();
  };

  MeasureReport r;
  r.method = "cover_estimate";
  r.upper_bound = true;
  r.eps_schedule = {to_double(eps)};

  std::size_t used = 0;
  std::vector<Point> centers;
  if (spec.shape == CoverSpec::Shape::ball) {
    if (L == 0) {
      used = 1;
      centers.push_back(pts.front());
    } else {
      Rational f(0);
      while (f < L) {
        Rational c = std::min(f + eps, L);
        centers.push_back(point_at_arc(c));
        ++used;
        f = c + eps;
      }
    }
    // secondary certificate: every eps/8 sample lies in some piece (exact)
    const Rational h = eps / 8;
    Rational s(0);
    while (true) {
      Point q = point_at_arc(std::min(s, L));
      bool covered = false;
      for (const auto& c : centers)
        if (trop_distance(c, q) <= eps) {
          covered = true;
          break;
        }
      if (!covered) {
        r.note = "coverage-failure";
        break;
      }
      if (s >= L) break;
      s += h;
    }
    Rational value = Rational(spec.k + 1) * Rational(used) * eps;
    r.value = to_double(value);
    r.exact_value = value;
    return r;
  }

  // cube / simplex marching over eps/8 samples. Each new piece is anchored
  // at the last covered sample, so consecutive samples always share a piece
  // and the arc between them is covered by convexity.
  const Rational h = eps / 8;
  std::vector<Point> samples;
  {
    Rational s(0);
    while (s < L) {
      samples.push_back(point_at_arc(s));
      s += h;
    }
    samples.push_back(point_at_arc(L));
  }
  auto candidates_at = [&](const Point& anchor) {
    std::vector<detail::CoverPiece> candidates;
    if (spec.shape == CoverSpec::Shape::hypercube) {
      if (spec.cube_type >= 1)
        candidates.push_back(detail::cube_piece(n, eps, spec.cube_type, anchor));
      else
        for (int j = 1; j <= n + 1; ++j)
          candidates.push_back(detail::cube_piece(n, eps, j, anchor));
    } else {
      if (!spec.simplex_perm.empty())
        candidates.push_back(detail::simplex_piece(n, eps, spec.simplex_perm, anchor));
      else {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do candidates.push_back(detail::simplex_piece(n, eps, p, anchor));
        while (std::next_permutation(p.begin(), p.end()));
      }
    }
    return candidates;
  };
  std::size_t seam = 0;
  while (true) {
    // bases may sit ahead of the seam (a piece based at a forward curve
    // point can cover backward-running arc), but must contain the seam
    // sample so covered arcs stay contiguous
    std::size_t best = seam;
    for (std::size_t a = seam; a < std::min(seam + 9, samples.size()); ++a) {
      for (const auto& cand : candidates_at(samples[a])) {
        if (!cand.contains(samples[seam])) continue;
        std::size_t reach = seam;
        while (reach + 1 < samples.size() && cand.contains(samples[reach + 1])) ++reach;
        best = std::max(best, reach);
      }
    }
    ++used;
    if (best + 1 >= samples.size()) break;
    if (best == seam) {
      // nothing anchored near here reaches the next sample: the seam arc
      // cannot be certified
      r.note = "coverage-failure";
      ++seam;
      if (seam + 1 >= samples.size()) break;
      continue;
    }
    seam = best;
  }
  if (r.note.empty()) r.note = "sampled-certification";
  Rational value = Rational(used) * eps;  // k = 1, and 1/1! = 1 for simplices
  r.value = to_double(value);
  r.exact_value = value;
  return r;
}

}  // namespace tropgeo
