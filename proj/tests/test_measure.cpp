#include "tropgeo/measure.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace tropgeo;

namespace {

struct RatGen {
  std::mt19937_64 rng;
  explicit RatGen(std::uint64_t seed) : rng(seed) {}
  Rational operator()(int num_range = 40, int den_range = 6) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
  }
  Rational positive(int num_range = 40, int den_range = 6) {
    std::uniform_int_distribution<int> num(1, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
  }
  Point point(int n) {
    RatVec v(n);
    for (auto& q : v) q = (*this)();
    return Point(v);
  }
};

Polytope unit_cube(int n) {
  std::vector<Halfspace> hs;
  for (int j = 0; j < n; ++j) {
    RatVec plus(n, Rational(0)), minus(n, Rational(0));
    plus[j] = 1;
    minus[j] = -1;
    hs.push_back(Halfspace{plus, Rational(1)});
    hs.push_back(Halfspace{minus, Rational(0)});
  }
  return polytope_from_halfspaces(n, hs, "hypercube");
}

Polytope random_convex_polygon(RatGen& gen, int points = 8) {
  while (true) {
    std::vector<Point> pts;
    for (int i = 0; i < points; ++i) pts.push_back(gen.point(2));
    Polytope P = polytope_from_points(2, pts);
    if (P.full_dimensional() && P.vertices.size() >= 3) return P;
  }
}

/// Polytope with normals drawn from ball facets and dual-ball facets only.
Polytope random_facet_parallel(RatGen& gen, int n, int extra_dirs) {
  std::vector<RatVec> pool;
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    RatVec a(n, Rational(0));
    for (int i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) a[i] = 1;
    pool.push_back(a);
    pool.push_back(Rational(-1) * a);
  }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      RatVec a(n, Rational(0));
      a[j] = 1;
      a[i] = -1;
      pool.push_back(a);
    }
  std::vector<Halfspace> hs;
  // axis bounds keep it bounded
  for (int j = 0; j < n; ++j) {
    RatVec plus(n, Rational(0)), minus(n, Rational(0));
    plus[j] = 1;
    minus[j] = -1;
    hs.push_back(Halfspace{plus, gen.positive(8, 3) + 1});
    hs.push_back(Halfspace{minus, gen.positive(8, 3) + 1});
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int e = 0; e < extra_dirs; ++e)
    hs.push_back(Halfspace{pool[pick(gen.rng)], gen.positive(8, 3) + 1});
  return polytope_from_halfspaces(n, hs);
}

const Polytope witness_221 = [] {
  // tetrahedron-like body with one facet on 2x + 2y - z = 1
  std::vector<Halfspace> hs;
  hs.push_back(Halfspace{RatVec{Rational(2), Rational(2), Rational(-1)}, Rational(1)});
  hs.push_back(Halfspace{RatVec{Rational(-1), Rational(0), Rational(0)}, Rational(1)});
  hs.push_back(Halfspace{RatVec{Rational(0), Rational(-1), Rational(0)}, Rational(1)});
  hs.push_back(Halfspace{RatVec{Rational(0), Rational(0), Rational(1)}, Rational(3)});
  return polytope_from_halfspaces(3, hs);
}();

}  // namespace

TEST_CASE("sigma volume equals Lebesgue volume") {
  for (int n = 1; n <= 4; ++n)
    for (Rational R : {Rational(1), Rational(2), Rational(3, 2)})
      CHECK(sigma_volume(trop_ball(n, R)) == Rational(n + 1) * pow_rat(R, n));

  // axis-aligned box
  std::vector<Halfspace> hs;
  RatVec sides{Rational(3, 2), Rational(2), Rational(1, 3)};
  for (int j = 0; j < 3; ++j) {
    RatVec plus(3, Rational(0)), minus(3, Rational(0));
    plus[j] = 1;
    minus[j] = -1;
    hs.push_back(Halfspace{plus, sides[j]});
    hs.push_back(Halfspace{minus, Rational(0)});
  }
  CHECK(sigma_volume(polytope_from_halfspaces(3, hs)) == Rational(3, 2) * 2 / 3);

  TropSimplex simplex{3, {0, 1, 2}, Rational(1), origin(3)};
  CHECK(sigma_volume(polytope_from_points(3, simplex.corners(), "simplex")) == Rational(1, 6));
}

TEST_CASE("tropical simplex type") {
  TropSimplex s{3, {2, 0, 1}, Rational(2), Point({Rational(1), Rational(0), Rational(-1)})};
  CHECK(polytope_volume(polytope_from_points(3, s.corners())) == Rational(8, 6));
  for (const auto& c : s.corners()) CHECK(s.contains(c));
  CHECK_FALSE(s.contains(Point({Rational(10), Rational(0), Rational(0)})));
}

TEST_CASE("sigma surface of tropical spheres") {
  for (int n = 2; n <= 4; ++n) {
    for (Rational R : {Rational(1), Rational(2), Rational(3, 2)}) {
      Polytope B = trop_ball(n, R);
      MeasureReport s = sigma_surface_polytope(B);
      REQUIRE(s.exact());
      CHECK(*s.exact_value == Rational(n * (n + 1)) * pow_rat(R, n - 1));
      // surface : volume = n : R
      CHECK(*s.exact_value * R == sigma_volume(B) * n);
    }
  }
}

TEST_CASE("sigma surface of the unit cube is its Euclidean surface") {
  MeasureReport s = sigma_surface_polytope(unit_cube(3));
  CHECK(*s.exact_value == 6);
}

TEST_CASE("in the plane, sigma surface equals boundary tropical length equals minkowski surface") {
  RatGen gen(81);
  for (int t = 0; t < 40; ++t) {
    Polytope P = random_convex_polygon(gen);
    auto cyc = detail::hull2d(P.vertices);
    Polyline boundary{cyc, true};
    Rational perim = polyline_length(boundary);
    CHECK(*sigma_surface_polytope(P).exact_value == perim);
    CHECK(*minkowski_surface_polytope(P).exact_value == perim);
  }
}

TEST_CASE("minkowski surface closed forms") {
  for (int n = 2; n <= 4; ++n) {
    Polytope B = trop_ball(n, 1);
    CHECK(*minkowski_surface_polytope(B).exact_value == n * (n + 1));
    // Wulff identity: Phi(W) = n vol(W)
    CHECK(*minkowski_surface_polytope(B).exact_value == Rational(n) * polytope_volume(B));
  }
  CHECK(*minkowski_surface_polytope(unit_cube(3)).exact_value == 6);
}

TEST_CASE("the (2,2,-1) facet witness separates the two surface measures") {
  auto areas = facet_euclidean_areas(witness_221);
  bool found = false;
  for (const auto& fa : areas) {
    if (fa.normal == RatVec{Rational(2), Rational(2), Rational(-1)}) {
      found = true;
      Rational sigma_term = detail::sigma_facet_term(3, fa);
      Rational mink_term = detail::minkowski_facet_term(3, fa);
      CHECK(mink_term * 9 == sigma_term * 11);  // M / sigma = 11/9 exactly
      CHECK(mink_term > sigma_term);
    }
  }
  REQUIRE(found);
  CHECK(*minkowski_surface_polytope(witness_221).exact_value >
        *sigma_surface_polytope(witness_221).exact_value);
}

TEST_CASE("sigma equals minkowski on facet-parallel polytopes") {
  RatGen gen(82);
  for (int n : {2, 3, 4}) {
    for (int t = 0; t < (n == 4 ? 8 : 20); ++t) {
      Polytope P = random_facet_parallel(gen, n, n == 4 ? 4 : 6);
      REQUIRE(P.full_dimensional());
      CHECK(*sigma_surface_polytope(P).exact_value == *minkowski_surface_polytope(P).exact_value);
    }
  }
}

TEST_CASE("sigma surface rejects unsupported directions in dimension 4") {
  std::vector<Point> pts;
  RatGen gen(83);
  // a 4D polytope with a generic facet: perturb one vertex of a simplex
  std::vector<Point> simplex{origin(4)};
  for (int i = 0; i < 4; ++i) {
    RatVec v(4, Rational(0));
    v[i] = 1;
    simplex.emplace_back(v);
  }
  simplex.back() = Point({Rational(1, 7), Rational(2, 7), Rational(3, 7), Rational(6, 7)});
  Polytope P = polytope_from_points(4, simplex);
  REQUIRE(P.full_dimensional());
  CHECK_THROWS_AS(sigma_surface_polytope(P), UnsupportedDirectionError);
}

TEST_CASE("steiner surface") {
  std::vector<Rational> sched{Rational(1, 2), Rational(1, 4), Rational(1, 8)};

  Polytope B2 = trop_ball(2, 1);
  MeasureReport s = steiner_surface(B2, sched);
  REQUIRE(s.exact());
  CHECK(*s.exact_value == 6);

  MeasureReport sq = steiner_surface(unit_cube(2), sched);
  CHECK(*sq.exact_value == 4);

  Polytope pointP;
  pointP.dim = 2;
  pointP.vertices = {Point({Rational(1), Rational(2)})};
  CHECK(*steiner_surface(pointP, sched).exact_value == 0);

  CHECK_THROWS_AS(steiner_surface(B2, std::vector<Rational>{Rational(1, 2)}), std::invalid_argument);

  // in the plane the quotient is linear in eps, so extrapolation is exact
  RatGen gen(84);
  for (int t = 0; t < 15; ++t) {
    Polytope P = random_convex_polygon(gen);
    CHECK(*steiner_surface(P, sched).exact_value == *minkowski_surface_polytope(P).exact_value);
  }
}

TEST_CASE("steiner surface agrees with minkowski surface within the extrapolation bound in 3D") {
  std::vector<Rational> sched{Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  std::vector<Polytope> bodies;
  bodies.push_back(trop_ball(3, 1));
  bodies.push_back(unit_cube(3));
  std::vector<Point> simplex{origin(3), Point({Rational(2), Rational(0), Rational(0)}),
                             Point({Rational(0), Rational(2), Rational(0)}),
                             Point({Rational(0), Rational(0), Rational(2)})};
  bodies.push_back(polytope_from_points(3, simplex));
  for (const auto& P : bodies) {
    MeasureReport st = steiner_surface(P, sched);
    Rational mink = *minkowski_surface_polytope(P).exact_value;
    Rational err = abs_rat(*st.exact_value - mink);
    CHECK(to_double(err) <= st.error_estimate + 1e-15);
  }
}

TEST_CASE("minkowski content") {
  std::vector<Rational> sched{Rational(1, 2), Rational(1, 4), Rational(1, 8)};

  for (int n : {2, 3}) {
    Polytope pointP;
    pointP.dim = n;
    pointP.vertices = {origin(n)};
    CHECK(*minkowski_content(pointP, sched).exact_value == 1);
  }

  Polytope seg;
  seg.dim = 2;
  seg.vertices = {origin(2), Point({Rational(5, 2), Rational(5, 2)})};
  CHECK(*minkowski_content(seg, sched).exact_value == Rational(5, 2));

  CHECK(*minkowski_content(trop_ball(2, 1), sched).exact_value == 3);
}

TEST_CASE("curve length by rectification") {
  auto segment = [](double t) { return std::vector<double>{t, t}; };
  MeasureReport s = curve_length(segment, 2, 1e-12);
  CHECK(s.value == Catch::Approx(1.0).epsilon(1e-12));

  const double pi = std::numbers::pi;
  auto circle = [&](double t) {
    return std::vector<double>{std::cos(2 * pi * t), std::sin(2 * pi * t)};
  };
  MeasureReport c = curve_length(circle, 4, 1e-10);
  CHECK(c.note.empty());
  CHECK(c.value == Catch::Approx(4.0 + 2.0 * std::sqrt(2.0)).margin(1e-8));

  // boundary of the tropical disk as a curve
  auto hexagon = [&](double t) {
    static const double vx[7] = {1, 1, 0, -1, -1, 0, 1};
    static const double vy[7] = {0, 1, 1, 0, -1, -1, 0};
    double u = t * 6;
    int i = std::min(5, static_cast<int>(u));
    double f = u - i;
    return std::vector<double>{vx[i] + f * (vx[i + 1] - vx[i]), vy[i] + f * (vy[i + 1] - vy[i])};
  };
  MeasureReport h = curve_length(hexagon, 5, 1e-10);
  CHECK(h.value == Catch::Approx(6.0).margin(1e-9));
}
