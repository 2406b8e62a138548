#pragma once

#include "tropgeo/core.hpp"
#include "tropgeo/polytope.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropgeo {

/// Named measure value plus how it was obtained. `exact_value` is set when
/// the computation stayed in rational arithmetic; `value` is always the
/// reporting float.
struct MeasureReport {
  double value = 0.0;
  std::optional<Rational> exact_value;
  std::string method;  // exact_facet_sum | cover_estimate | steiner_limit | closed_form | rectification
  std::vector<double> eps_schedule;
  bool upper_bound = false;
  double error_estimate = 0.0;
  std::string note;  // coverage-failure / non-convergence flags

  bool exact() const { return exact_value.has_value(); }

  static MeasureReport exact_report(Rational v, std::string method) {
    MeasureReport r;
    r.value = to_double(v);
    r.exact_value = std::move(v);
    r.method = std::move(method);
    return r;
  }
};

/// Regular tropical simplex: {x : 0 <= x_{s(1)} <= ... <= x_{s(n)} <= R} + base.
struct TropSimplex {
  int n;
  std::vector<int> perm;  // 0-based permutation of {0..n-1}
  Rational side;
  Point base;

  std::vector<Point> corners() const {
    // vertices of the order simplex: prefix patterns of the permutation
    std::vector<Point> out;
    RatVec v(n, Rational(0));
    out.push_back(Point(base.x + v));
    // x_{s(n)} gets R first, then x_{s(n-1)}, ...
    for (int i = n - 1; i >= 0; --i) {
      v[perm[i]] = side;
      out.push_back(Point(base.x + v));
    }
    return out;
  }

  bool contains(const Point& p) const {
    RatVec d = p.x - base.x;
    Rational prev(0);
    for (int i = 0; i < n; ++i) {
      const Rational& cur = d[perm[i]];
      if (cur < prev) return false;
      prev = cur;
    }
    return prev <= side && d[perm[0]] >= 0;
  }
};

/// sigma^n = Lebesgue on n-dimensional sets (Theorem: the two measures agree).
inline Rational sigma_volume(const Polytope& P) { return polytope_volume(P); }

namespace detail {

/// Facet density of the sigma surface measure per unit Euclidean area is
/// n / L^{n-1}(nu-perp cap B^n); the product with the exact facet area is
/// always rational. Throws UnsupportedDirectionError via central_section_area.
inline Rational sigma_facet_term(int n, const FacetArea& fa) {
  CentralSection s = central_section_area(n, fa.normal);
  Radical density_times_area = Rational(n) * (fa.area / s.area);
  if (!density_times_area.is_rational())
    throw std::logic_error("sigma facet term failed to reduce to a rational");
  return density_times_area.rational_value();
}

/// Minkowski facet density is h_B(nu-hat) = dual_norm(nu)/|nu|; the product
/// with the facet area is rational.
inline Rational minkowski_facet_term(int n, const FacetArea& fa) {
  (void)n;
  Int norm2 = 0;
  for (const auto& q : fa.normal) norm2 += numerator(q) * numerator(q);
  Radical h(dual_norm(Point(fa.normal)) / Rational(norm2), norm2);
  Radical term = fa.area * h;
  if (!term.is_rational())
    throw std::logic_error("minkowski facet term failed to reduce to a rational");
  return term.rational_value();
}

}  // namespace detail

/// sigma^{n-1}(boundary of P) as the facet sum of Euclidean areas weighted by
/// n / L^{n-1}(nu-perp cap B^n). Exact wherever sections are exact; generic
/// directions outside dimension <= 3 raise UnsupportedDirectionError listing
/// the offending facets.
inline MeasureReport sigma_surface_polytope(const Polytope& P) {
  if (!P.full_dimensional()) throw std::invalid_argument("sigma surface needs a full-dimensional polytope");
  auto areas = facet_euclidean_areas(P);
  Rational total(0);
  std::vector<RatVec> bad;
  for (const auto& fa : areas) {
    try {
      total += detail::sigma_facet_term(P.dim, fa);
    } catch (const UnsupportedDirectionError&) {
      bad.push_back(fa.normal);
    }
  }
  if (!bad.empty())
    throw UnsupportedDirectionError("sigma surface: unsupported facet directions", bad);
  return MeasureReport::exact_report(total, "exact_facet_sum");
}

/// M^{n-1}(boundary of P): facet sum of Euclidean areas weighted by the dual
/// norm of the unit outward normal. Defined for every normal direction.
inline MeasureReport minkowski_surface_polytope(const Polytope& P) {
  if (!P.full_dimensional()) throw std::invalid_argument("minkowski surface needs a full-dimensional polytope");
  auto areas = facet_euclidean_areas(P);
  Rational total(0);
  for (const auto& fa : areas) total += detail::minkowski_facet_term(P.dim, fa);
  return MeasureReport::exact_report(total, "exact_facet_sum");
}

/// Tropical Minkowski-Steiner surface area: difference quotients
/// (vol(P + eps B) - vol(P)) / eps over the schedule, extrapolated linearly
/// through the two smallest eps (the quotient is a polynomial in eps for
/// convex polytopes, so in the plane this is exact). The report carries the
/// quotient per schedule point and the extrapolation bound
/// eps_min * eps_second * vol(B^n).
inline MeasureReport steiner_surface(const Polytope& P, std::vector<Rational> eps_schedule) {
  if (eps_schedule.size() < 2) throw std::invalid_argument("eps schedule needs >= 2 points");
  for (std::size_t i = 1; i < eps_schedule.size(); ++i)
    if (eps_schedule[i] >= eps_schedule[i - 1])
      throw std::invalid_argument("eps schedule must be strictly decreasing");
  Rational vol_p = polytope_volume(P);
  std::vector<Rational> quotients;
  MeasureReport r;
  for (const auto& eps : eps_schedule) {
    Polytope sum = minkowski_sum_ball(P, eps);
    quotients.push_back((polytope_volume(sum) - vol_p) / eps);
    r.eps_schedule.push_back(to_double(eps));
  }
  const Rational& e1 = eps_schedule[eps_schedule.size() - 1];  // smallest
  const Rational& e2 = eps_schedule[eps_schedule.size() - 2];
  const Rational& q1 = quotients[quotients.size() - 1];
  const Rational& q2 = quotients[quotients.size() - 2];
  Rational extrapolated = q1 - e1 * (q2 - q1) / (e2 - e1);
  r.value = to_double(extrapolated);
  r.exact_value = extrapolated;
  r.method = "steiner_limit";
  r.error_estimate = to_double(e1 * e2 * Rational(P.dim + 1));
  return r;
}

/// k-dimensional tropical Minkowski measure of a convex set S of affine
/// dimension k embedded in R^n:
/// (1/(n-k+1)) * lim vol(S + eps B^n) / eps^{n-k}, linearly extrapolated over
/// the schedule. For k = n this is sigma^n = Lebesgue and no limit is taken.
inline MeasureReport minkowski_content(const Polytope& S, std::vector<Rational> eps_schedule) {
  const int n = S.dim;
  const int k = detail::affine_rank(S.vertices);
  if (k == n) {
    auto r = MeasureReport::exact_report(sigma_volume(S), "closed_form");
    return r;
  }
  if (eps_schedule.size() < 2) throw std::invalid_argument("eps schedule needs >= 2 points");
  std::vector<Rational> ratios;
  MeasureReport r;
  for (const auto& eps : eps_schedule) {
    Polytope sum = minkowski_sum_ball(S, eps);
    Rational v = polytope_volume(sum);
    ratios.push_back(v / pow_rat(eps, n - k));
    r.eps_schedule.push_back(to_double(eps));
  }
  const Rational& e1 = eps_schedule[eps_schedule.size() - 1];
  const Rational& e2 = eps_schedule[eps_schedule.size() - 2];
  const Rational& q1 = ratios[ratios.size() - 1];
  const Rational& q2 = ratios[ratios.size() - 2];
  Rational extrapolated = (q1 - e1 * (q2 - q1) / (e2 - e1)) / Rational(n - k + 1);
  r.value = to_double(extrapolated);
  r.exact_value = extrapolated;
  r.method = "steiner_limit";
  return r;
}

/// sigma^1 of a parametric curve on [0,1] by rectification: polyline length
/// over 2^m uniform partitions, m increasing until the change drops below
/// tol. Partial sums are monotone nondecreasing (total-variation property);
/// a failure to converge within max_refinements is flagged, not thrown.
inline MeasureReport curve_length(const std::function<std::vector<double>(double)>& sampler,
                                  int initial_refinement, double tol,
                                  int max_refinements = 22) {
  auto length_at = [&](int m) {
    const std::size_t steps = std::size_t(1) << m;
    double total = 0.0;
    std::vector<double> prev = sampler(0.0);
    for (std::size_t i = 1; i <= steps; ++i) {
      std::vector<double> cur = sampler(static_cast<double>(i) / static_cast<double>(steps));
      double mx = 0.0, mn = 0.0;
      for (std::size_t c = 0; c < cur.size(); ++c) {
        double d = cur[c] - prev[c];
        mx = std::max(mx, d);
        mn = std::min(mn, d);
      }
      total += mx - mn;
      prev = std::move(cur);
    }
    return total;
  };

  MeasureReport r;
  r.method = "rectification";
  double previous = length_at(initial_refinement);
  for (int m = initial_refinement + 1; m <= max_refinements; ++m) {
    double cur = length_at(m);
    if (cur + 1e-12 < previous)
      throw std::logic_error("curve length decreased under refinement");
    if (cur - previous < tol) {
      r.value = cur;
      r.error_estimate = cur - previous;
      return r;
    }
    previous = cur;
  }
  r.value = previous;
  r.note = "no-convergence";
  r.error_estimate = tol;
  return r;
}

}  // namespace tropgeo
