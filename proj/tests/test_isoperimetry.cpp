#include "tropgeo/isoperimetry.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace tropgeo;

namespace {

struct RatGen {
  std::mt19937_64 rng;
  explicit RatGen(std::uint64_t seed) : rng(seed) {}
  Rational nonneg(int num_range = 24, int den_range = 6) {
    std::uniform_int_distribution<int> num(0, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
  }
  Rational any(int num_range = 24, int den_range = 6) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
  }
  Point point2() { return Point({any(), any()}); }
};

HexagonParams random_feasible(RatGen& gen) {
  while (true) {
    HexagonParams p{gen.nonneg(), gen.nonneg(), gen.nonneg(), gen.nonneg()};
    if (!p.feasible()) continue;
    // the realization needs positive area
    if (p.area_formula() <= 0) continue;
    return p;
  }
}

Polygon2D random_convex_polygon(RatGen& gen, int points = 9) {
  while (true) {
    std::vector<Point> pts;
    for (int i = 0; i < points; ++i) pts.push_back(gen.point2());
    auto hull = detail::hull2d(pts);
    if (hull.size() >= 3) return Polygon2D{hull};
  }
}

Polygon2D ball_polygon(const Rational& R, const Point& c) {
  Polytope B = trop_ball(2, R, c);
  return Polygon2D{detail::hull2d(B.vertices)};
}

}  // namespace

TEST_CASE("hexagon realization matches the closed forms") {
  HexagonParams unit{1, 1, 1, 1};
  Polygon2D hexagon = hexagon_from_params(unit);
  CHECK(hexagon.vertices.size() == 6);
  Deficit2D d = deficit_2d(hexagon);
  CHECK(d.deficit == 0);
  CHECK(d.equality_case);
  // a = b = c = d = R is the tropical disk up to translation
  CHECK(is_tropical_disk(ball_polygon(1, Point({Rational(5), Rational(-2)}))));

  HexagonParams p2{2, 1, 1, 1};
  Polygon2D h2 = hexagon_from_params(p2);
  Deficit2D d2 = deficit_2d(h2);
  CHECK(d2.perimeter == 8);
  CHECK(d2.area == 5);
  CHECK(d2.deficit == 4);
  CHECK(d2.deficit == p2.deficit_identity_rhs());

  HexagonParams pent{1, 1, 1, 0};
  Polygon2D h3 = hexagon_from_params(pent);
  CHECK(h3.vertices.size() == 5);
  Deficit2D d3 = deficit_2d(h3);
  CHECK(d3.deficit == 7);
  CHECK(d3.deficit == pent.deficit_identity_rhs());

  CHECK_THROWS_AS(hexagon_from_params(HexagonParams{0, 0, 0, 5}), std::invalid_argument);
}

TEST_CASE("hexagon deficit identity on random feasible parameters") {
  RatGen gen(91);
  for (int t = 0; t < 1000; ++t) {
    HexagonParams p = random_feasible(gen);
    Rational l = p.perimeter_formula();
    Rational A = p.area_formula();
    CHECK(l * l - 12 * A == p.deficit_identity_rhs());
    bool equal_params = (p.a == p.b && p.b == p.c && p.c == p.d);
    CHECK((l * l - 12 * A == 0) == equal_params);
  }
}

TEST_CASE("2D deficit: examples") {
  for (Rational R : {Rational(1), Rational(3), Rational(5, 2)}) {
    Deficit2D d = deficit_2d(ball_polygon(R, origin(2)));
    CHECK(d.deficit == 0);
    CHECK(d.equality_case);
  }

  Polygon2D square{{Point({Rational(0), Rational(0)}), Point({Rational(1), Rational(0)}),
                    Point({Rational(1), Rational(1)}), Point({Rational(0), Rational(1)})}};
  Deficit2D ds = deficit_2d(square);
  CHECK(ds.perimeter == 4);
  CHECK(ds.area == 1);
  CHECK(ds.deficit == 4);
  CHECK_FALSE(ds.equality_case);

  Polygon2D bowtie{{Point({Rational(0), Rational(0)}), Point({Rational(2), Rational(2)}),
                    Point({Rational(2), Rational(0)}), Point({Rational(0), Rational(2)})}};
  CHECK_THROWS_AS(deficit_2d(bowtie), std::invalid_argument);
}

TEST_CASE("2D isoperimetric inequality on random convex polygons") {
  RatGen gen(92);
  for (int t = 0; t < 120; ++t) {
    Polygon2D P = random_convex_polygon(gen);
    Deficit2D d = deficit_2d(P);
    CHECK(d.deficit >= 0);
    CHECK(d.equality_case == is_tropical_disk(P));
    // proof-chain oracle: the circumscribed geodesic hexagon has smaller or
    // equal deficit
    Polygon2D H = circumscribed_geodesic_hexagon(P);
    Deficit2D dh = deficit_2d(H);
    CHECK(dh.perimeter <= d.perimeter);
    CHECK(dh.area >= d.area);
    CHECK(d.deficit >= dh.deficit);
    CHECK(dh.deficit >= 0);
  }
}

TEST_CASE("deficit scale covariance") {
  RatGen gen(93);
  for (int t = 0; t < 50; ++t) {
    Polygon2D P = random_convex_polygon(gen);
    Rational lambda = gen.nonneg(8, 3) + Rational(1, 3);
    Polygon2D Q = P;
    for (auto& v : Q.vertices) v = lambda * v;
    CHECK(deficit_2d(Q).deficit == lambda * lambda * deficit_2d(P).deficit);
  }
  // nD: deficit(lambda P) = lambda^{n(n-1)} deficit(P)
  for (int n : {2, 3}) {
    Polytope cube_like = trop_ball(n, 1);
    std::vector<Point> scaled;
    Rational lambda(3, 2);
    for (const auto& v : cube_like.vertices) scaled.push_back(lambda * v);
    Polytope Q = polytope_from_points(n, scaled);
    Rational expect = deficit_nd(cube_like).deficit;
    Rational factor(1);
    for (int i = 0; i < n * (n - 1); ++i) factor *= lambda;
    CHECK(deficit_nd(Q).deficit == factor * expect);
  }
}

TEST_CASE("nD deficit at the optimum and on the cube") {
  for (int n = 2; n <= 4; ++n) {
    for (Rational R : {Rational(1), Rational(2), Rational(3, 2)}) {
      DeficitND d = deficit_nd(trop_ball(n, R));
      CHECK(d.deficit == 0);
      CHECK(d.equality_case);
    }
  }

  std::vector<Halfspace> hs;
  for (int j = 0; j < 3; ++j) {
    RatVec plus(3, Rational(0)), minus(3, Rational(0));
    plus[j] = 1;
    minus[j] = -1;
    hs.push_back(Halfspace{plus, Rational(1)});
    hs.push_back(Halfspace{minus, Rational(0)});
  }
  DeficitND dc = deficit_nd(polytope_from_halfspaces(3, hs));
  CHECK(dc.surface == 6);
  CHECK(dc.volume == 1);
  CHECK(dc.deficit == 108);
  CHECK_FALSE(dc.equality_case);
}

TEST_CASE("surface to volume ratio of balls is n : R") {
  for (int n = 1; n <= 4; ++n) {
    for (Rational R : {Rational(1), Rational(2), Rational(3, 2)}) {
      Polytope B = trop_ball(n, R);
      Rational vol = sigma_volume(B);
      Rational surf = n == 1 ? Rational(2) : *sigma_surface_polytope(B).exact_value;
      CHECK(surf * R == vol * n);
    }
  }
}

TEST_CASE("isoperimetric quotient and the table") {
  const double pi = std::numbers::pi;
  CHECK(isoperimetric_quotient(4 * pi / 3, 4 * pi) == Catch::Approx(1.0).margin(1e-12));
  CHECK(isoperimetric_quotient(4, 12) == Catch::Approx(pi / 3).margin(1e-12));
  CHECK_THROWS_AS(isoperimetric_quotient(0, 1), std::invalid_argument);

  auto rows = quotient_table();
  REQUIRE(rows.size() == 6);
  auto find = [&](const std::string& name) {
    for (const auto& r : rows)
      if (r.structure == name) return r;
    FAIL("missing row " + name);
    return rows[0];
  };
  CHECK(std::round(find("Standard sphere").quotient * 1000) == 1000);
  CHECK(std::round(find("Cube").quotient * 1000) == 524);
  CHECK(std::round(find("Tropical ball (Euclidean measure)").quotient * 1000) == 595);
  CHECK(std::round(find("Tropical ball (tropical measure)").quotient * 1000) == 1047);
  CHECK(find("Standard sphere").computed);
  CHECK_FALSE(find("Weaire-Phelan").computed);
  CHECK(find("Weaire-Phelan").quotient == 0.764);
  CHECK_FALSE(find("Kelvin").computed);
  CHECK(find("Kelvin").quotient == 0.757);
}
