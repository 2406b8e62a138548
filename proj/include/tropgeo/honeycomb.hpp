#pragma once

#include "tropgeo/core.hpp"
#include "tropgeo/polytope.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tropgeo {

/// Unit tropical balls centered on the sublattice
/// { c in Z^n : sum c_i = 0 (mod n+1) } tile R^n. Lattice arithmetic runs on
/// 64-bit integers (exact at desk-scale windows); the API exposes Points.
struct Tiling {
  int dim = 0;
  Rational radius{1};
  std::vector<Point> centers;
  Rational window{0};
};

namespace detail {

using IVec = std::vector<std::int64_t>;

inline std::int64_t itrop_norm(const IVec& c) {
  std::int64_t mx = 0, mn = 0;
  for (auto v : c) {
    if (v > mx) mx = v;
    if (v < mn) mn = v;
  }
  return mx - mn;
}

inline std::int64_t itrop_distance(const IVec& a, const IVec& b) {
  std::int64_t mx = 0, mn = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = a[i] - b[i];
    if (d > mx) mx = d;
    if (d < mn) mn = d;
  }
  return mx - mn;
}

inline bool in_lattice(const IVec& c, int n) {
  std::int64_t s = 0;
  for (auto v : c) s += v;
  return s % (n + 1) == 0;
}

template <typename F>
inline void for_each_box(int n, std::int64_t m, F&& f) {
  IVec cur(n, -m);
  while (true) {
    f(cur);
    int i = 0;
    while (i < n && ++cur[i] > m) cur[i++] = -m;
    if (i == n) break;
  }
}

/// Lattice vectors whose unit cells share a facet with the cell at the
/// origin: +-(e_j + 1) for the 2n axis facets and e_j - e_i for the
/// n(n-1) difference facets.
inline std::vector<IVec> facet_neighbor_offsets(int n) {
  std::vector<IVec> out;
  for (int j = 0; j < n; ++j) {
    IVec g(n, 1);
    g[j] = 2;
    out.push_back(g);
    IVec gn(n, -1);
    gn[j] = -2;
    out.push_back(gn);
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      IVec g(n, 0);
      g[j] = 1;
      g[i] = -1;
      out.push_back(g);
    }
  return out;
}

/// Vertices of the unit ball at the origin grouped per facet, integer
/// coordinates. Facet order matches trop_ball's canonical order.
inline std::vector<std::vector<IVec>> unit_ball_facet_vertices(int n) {
  std::vector<IVec> verts;
  for (int sign = 0; sign < 2; ++sign)
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      IVec v(n, 0);
      for (int i = 0; i < n; ++i)
        if (mask & (std::size_t(1) << i)) v[i] = (sign == 0 ? 1 : -1);
      verts.push_back(v);
    }
  std::vector<std::vector<IVec>> facets;
  for (int j = 0; j < n; ++j)
    for (int sgn : {+1, -1}) {
      std::vector<IVec> f;
      for (const auto& v : verts)
        if (v[j] == sgn) f.push_back(v);
      facets.push_back(std::move(f));
    }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      std::vector<IVec> f;
      for (const auto& v : verts)
        if (v[j] - v[i] == 1) f.push_back(v);
      facets.push_back(std::move(f));
    }
  return facets;
}

}  // namespace detail

/// All lattice centers with trop_norm(c) <= window_R + 2; the +2 margin keeps
/// every cell that can matter for a window of radius window_R.
inline std::vector<Point> lattice_centers(int n, const Rational& window_R) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  if (window_R <= 0) throw std::invalid_argument("window must be positive");
  const Rational bound = window_R + 2;
  std::int64_t m = static_cast<std::int64_t>(to_double(bound)) + 1;
  std::vector<Point> out;
  detail::for_each_box(n, m, [&](const detail::IVec& c) {
    if (!detail::in_lattice(c, n)) return;
    if (Rational(detail::itrop_norm(c)) > bound) return;
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = c[i];
    out.emplace_back(std::move(x));
  });
  std::sort(out.begin(), out.end());
  return out;
}

struct TilingReport {
  bool pass = false;
  bool disjoint = false;
  bool covered = false;
  bool facets_shared = false;
  std::size_t cells = 0;
  std::size_t grid_points = 0;
  std::size_t interior_cells = 0;
  std::string failure;
  std::optional<Point> witness;
};

namespace detail {

inline TilingReport verify_tiling_impl(int n, const Rational& window_R,
                                       const std::vector<IVec>& centers) {
  TilingReport rep;
  rep.cells = centers.size();
  std::set<IVec> center_set(centers.begin(), centers.end());

  // (i) disjointness: open unit balls are disjoint iff centers are pairwise
  // at tropical distance >= 2
  rep.disjoint = true;
  for (std::size_t i = 0; i < centers.size() && rep.disjoint; ++i)
    for (std::size_t j = i + 1; j < centers.size(); ++j)
      if (itrop_distance(centers[i], centers[j]) < 2) {
        rep.disjoint = false;
        RatVec w(n);
        for (int c = 0; c < n; ++c) w[c] = centers[i][c];
        rep.witness = Point(w);
        rep.failure = "open-ball overlap between centers";
        break;
      }

  // (ii) coverage: every point of the grid with step 1/(2(n+1)) inside the
  // window lies in some cell (checked in integers scaled by 2(n+1))
  const std::int64_t S = 2 * (n + 1);
  const Rational scaled_R = window_R * S;
  const std::int64_t m = static_cast<std::int64_t>(to_double(scaled_R)) + 1;
  rep.covered = true;
  for_each_box(n, m, [&](const IVec& g) {
    if (!rep.covered) return;
    if (Rational(itrop_norm(g)) > scaled_R) return;
    ++rep.grid_points;
    // candidates: centers near round(g / S)
    IVec base(n);
    for (int i = 0; i < n; ++i)
      base[i] = static_cast<std::int64_t>(std::llround(static_cast<double>(g[i]) / S));
    // a covering center is within 1 of g/S in every coordinate, so only the
    // +-2 box around round(g/S) can matter
    bool found = false;
    IVec cand(n);
    std::function<void(int)> rec = [&](int depth) {
      if (found) return;
      if (depth == n) {
        if (center_set.find(cand) == center_set.end()) return;
        IVec sc(cand);
        for (auto& v : sc) v *= S;
        if (itrop_distance(sc, g) <= S) found = true;
        return;
      }
      for (std::int64_t d = -2; d <= 2 && !found; ++d) {
        cand[depth] = base[depth] + d;
        rec(depth + 1);
      }
    };
    rec(0);
    if (!found) {
      rep.covered = false;
      RatVec w(n);
      for (int i = 0; i < n; ++i) w[i] = Rational(g[i], S);
      rep.witness = Point(w);
      rep.failure = "uncovered grid point";
    }
  });

  // (iii) shared facets: every facet of a cell interior to the window is
  // shared by exactly two cells
  rep.facets_shared = true;
  auto facet_verts = unit_ball_facet_vertices(n);
  std::vector<IVec> near_offsets;
  for_each_box(n, 2, [&](const IVec& g) {
    if (itrop_norm(g) <= 2 && in_lattice(g, n)) near_offsets.push_back(g);
  });
  for (const auto& c : centers) {
    if (Rational(itrop_norm(c) + 1) > window_R) continue;  // only interior cells
    ++rep.interior_cells;
    if (!rep.facets_shared) continue;
    for (const auto& fv : facet_verts) {
      int owners = 0;
      for (const auto& off : near_offsets) {
        IVec c2(n);
        for (int i = 0; i < n; ++i) c2[i] = c[i] + off[i];
        if (center_set.find(c2) == center_set.end()) continue;
        bool owns = true;
        for (const auto& v : fv) {
          IVec p(n);
          for (int i = 0; i < n; ++i) p[i] = c[i] + v[i];
          if (itrop_distance(p, c2) > 1) {
            owns = false;
            break;
          }
        }
        if (owns) ++owners;
      }
      if (owners != 2) {
        rep.facets_shared = false;
        RatVec w(n);
        for (int i = 0; i < n; ++i) w[i] = c[i];
        rep.witness = Point(w);
        rep.failure = "cell facet not shared by exactly two cells";
        break;
      }
    }
  }

  rep.pass = rep.disjoint && rep.covered && rep.facets_shared;
  return rep;
}

}  // namespace detail

/// Exact verification (desk scale, n <= 4) that the unit balls on the lattice
/// tile the window: pairwise disjoint interiors, full grid coverage, and
/// two-cell facet sharing.
inline TilingReport verify_tiling(int n, const Rational& window_R) {
  if (n > 4) throw std::invalid_argument("verify_tiling is desk-scale: n <= 4");
  auto centers = lattice_centers(n, window_R);
  std::vector<detail::IVec> ic;
  for (const auto& c : centers) {
    detail::IVec v(n);
    for (int i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(to_double(c[i]));
    ic.push_back(std::move(v));
  }
  return detail::verify_tiling_impl(n, window_R, ic);
}

/// Same checks against an explicit center list (falsification control).
inline TilingReport verify_tiling_centers(int n, const Rational& window_R,
                                          const std::vector<Point>& centers) {
  std::vector<detail::IVec> ic;
  for (const auto& c : centers) {
    detail::IVec v(n);
    for (int i = 0; i < n; ++i) {
      if (denominator(c[i]) != 1) throw std::invalid_argument("centers must be integer points");
      v[i] = static_cast<std::int64_t>(to_double(c[i]));
    }
    ic.push_back(std::move(v));
  }
  return detail::verify_tiling_impl(n, window_R, ic);
}

enum class SurfaceMeasure { sigma, minkowski };

struct HoneycombRatio {
  double ratio = 0.0;
  double limit_target = 0.0;          // n (n+1)^{1/n} / 2
  std::size_t cells = 0;              // cells accounted (center in window)
  std::size_t boundary_cells = 0;     // accounted cells not fully inside
  double boundary_contribution = 0.0; // their share of the ratio
  std::string measure;
};

/// Unit-measure honeycomb ratio over a tropical-ball window of radius R:
/// cells are tropical balls of radius r = (n+1)^{-1/n} (unit tropical
/// measure) on the rescaled lattice. Every facet of every cell whose center
/// lies in the window contributes half its surface measure (each facet
/// belongs to two cells), divided by the window volume. Cells near the
/// boundary are included; their contribution is reported separately.
/// Window membership is decided exactly by comparing trop_norm(c)^n with
/// R^n (n+1).
inline HoneycombRatio honeycomb_ratio(int n, const Rational& window_R,
                                      SurfaceMeasure measure = SurfaceMeasure::sigma) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  const double r = std::pow(static_cast<double>(n + 1), -1.0 / n);
  if (to_double(window_R) < 3 * r) throw std::invalid_argument("window too small (< 3 cells)");

  // trop_norm(r c) <= R  <=>  t^n <= R^n (n+1); precompute the exact integer
  // threshold so the lattice sweep runs on int64
  const Rational in_window_bound = pow_rat(window_R, n) * Rational(n + 1);
  auto pow_n = [&](std::int64_t t) {
    Rational p(1);
    for (int i = 0; i < n; ++i) p *= t;
    return p;
  };
  std::int64_t t_in = 0;
  while (pow_n(t_in + 1) <= in_window_bound) ++t_in;
  const std::int64_t m = t_in + 1;

  std::size_t cells = 0, boundary = 0;
  detail::for_each_box(n, m, [&](const detail::IVec& c) {
    if (!detail::in_lattice(c, n)) return;
    std::int64_t t = detail::itrop_norm(c);
    if (t > t_in) return;
    ++cells;
    // fully inside <=> trop_norm(r c) <= R - r <=> (t+1)^n <= R^n (n+1)
    if (t + 1 > t_in) ++boundary;
  });

  // per-facet surface measure of a radius-r cell: sigma gives r^{n-1} on all
  // n(n+1) facets; minkowski gives EuclidArea * dual_norm(nu-hat), which is
  // r^{n-1} * 1 on axis facets and (sqrt(2) r^{n-1}) * (1/sqrt(2)) on
  // difference facets — identical facet by facet.
  double facet_measure = std::pow(r, n - 1);
  double per_cell_half = 0.5 * n * (n + 1) * facet_measure;
  double window_volume = (n + 1) * std::pow(to_double(window_R), n);

  HoneycombRatio out;
  out.cells = cells;
  out.boundary_cells = boundary;
  out.ratio = cells * per_cell_half / window_volume;
  out.boundary_contribution = boundary * per_cell_half / window_volume;
  out.limit_target = n * std::pow(static_cast<double>(n + 1), 1.0 / n) / 2.0;
  out.measure = measure == SurfaceMeasure::sigma ? "sigma" : "minkowski";
  return out;
}

struct UnitMeasureCell {
  int n = 0;
  Rational radius_pow_n;             // r^n = 1/(n+1), exact
  Rational boundary_measure_pow_n;   // b^n = n^n (n+1), exact
  double radius = 0.0;
  double boundary_measure = 0.0;
};

/// Radius r with (n+1) r^n = 1 and the per-cell boundary measure
/// n(n+1) r^{n-1}, exact in n-th-power form (for n = 2 the perimeter is
/// 2 sqrt(3): boundary_measure_pow_n = 12).
inline UnitMeasureCell rescale_to_unit_measure(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  UnitMeasureCell c;
  c.n = n;
  c.radius_pow_n = Rational(1, n + 1);
  Rational b(n + 1);
  for (int i = 0; i < n; ++i) b *= n;
  c.boundary_measure_pow_n = b;
  c.radius = std::pow(static_cast<double>(n + 1), -1.0 / n);
  c.boundary_measure = std::pow(to_double(b), 1.0 / n);
  return c;
}

}  // namespace tropgeo
