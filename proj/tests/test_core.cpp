#include "tropgeo/core.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace tropgeo;

namespace {

// Independent oracles, kept deliberately dumb.

// homogeneous two-index form of the tropical distance
Rational distance_oracle(const Point& x, const Point& y) {
  RatVec xh = x.x, yh = y.x;
  xh.push_back(Rational(0));
  yh.push_back(Rational(0));
  Rational best = xh[0] - yh[0] - xh[0] + yh[0];
  for (std::size_t i = 0; i < xh.size(); ++i)
    for (std::size_t j = 0; j < xh.size(); ++j)
      best = std::max(best, xh[i] - yh[i] - xh[j] + yh[j]);
  return best;
}

// subset enumeration for the dual norm
Rational dual_norm_oracle(const Point& x) {
  const int n = x.dim();
  Rational best(0);
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    Rational s(0);
    for (int i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) s += x[i];
    best = std::max(best, abs_rat(s));
  }
  return best;
}

struct RatGen {
  std::mt19937_64 rng;
  explicit RatGen(std::uint64_t seed) : rng(seed) {}
  Rational operator()(int num_range = 100, int den_range = 20) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
  }
  Point point(int n) {
    RatVec v(n);
    for (auto& q : v) q = (*this)();
    return Point(v);
  }
};

}  // namespace

TEST_CASE("normalize_projective subtracts the last homogeneous coordinate") {
  CHECK(normalize_projective({Rational(3), Rational(4), Rational(1)}) ==
        Point({Rational(2), Rational(3)}));
  CHECK(normalize_projective({Rational(5), Rational(5), Rational(5)}) ==
        Point({Rational(0), Rational(0)}));
  CHECK(normalize_projective({Rational(0), Rational(-1), Rational(2), Rational(0)}) ==
        Point({Rational(0), Rational(-1), Rational(2)}));
  CHECK_THROWS_AS(normalize_projective({Rational(1)}), std::invalid_argument);
}

TEST_CASE("adding a constant to homogeneous coordinates is projectively trivial") {
  RatGen gen(101);
  for (int t = 0; t < 200; ++t) {
    RatVec h(4);
    for (auto& q : h) q = gen();
    Rational c = gen();
    RatVec h2 = h;
    for (auto& q : h2) q += c;
    CHECK(normalize_projective(h) == normalize_projective(h2));
  }
}

TEST_CASE("tilde coordinates") {
  CHECK(tilde_coords(Point({Rational(1), Rational(-1)})) ==
        RatVec{Rational(1), Rational(-1), Rational(0)});
  CHECK(tilde_coords(Point({Rational(0), Rational(0)})) ==
        RatVec{Rational(0), Rational(0), Rational(0)});
  CHECK(tilde_coords(Point({Rational(2), Rational(3)})) ==
        RatVec{Rational(2), Rational(3), Rational(-5)});
  TropFrame frame(3);
  RatVec sum(3, Rational(0));
  for (const auto& e : frame.unit_vectors()) sum = sum + e;
  CHECK(is_zero_vec(sum));
}

TEST_CASE("tropical distance: examples and oracle") {
  Point o2 = origin(2);
  CHECK(trop_distance(o2, Point({Rational(1), Rational(1)})) == 1);
  CHECK(trop_distance(Point({Rational(5), Rational(-3)}), Point({Rational(5), Rational(-3)})) == 0);
  CHECK(trop_distance(o2, Point({Rational(2), Rational(1)})) == 2);
  CHECK_THROWS_AS(trop_distance(o2, origin(3)), std::invalid_argument);

  RatGen gen(202);
  for (int t = 0; t < 500; ++t) {
    Point x = gen.point(3), y = gen.point(3);
    CHECK(trop_distance(x, y) == distance_oracle(x, y));
  }
}

TEST_CASE("tropical norm") {
  CHECK(trop_norm(Point({Rational(1), Rational(0), Rational(0)})) == 1);
  CHECK(trop_norm(Point({Rational(1), Rational(-1)})) == 2);
  CHECK(trop_norm(Point({Rational(7), Rational(7), Rational(7)})) == 7);
  RatGen gen(303);
  for (int t = 0; t < 300; ++t) {
    Point x = gen.point(4);
    CHECK(trop_norm(x) == trop_distance(x, origin(4)));
  }
}

TEST_CASE("metric axioms hold exactly on random rational points") {
  RatGen gen(404);
  for (int n : {2, 3, 4}) {
    for (int t = 0; t < 400; ++t) {
      Point x = gen.point(n), y = gen.point(n), z = gen.point(n);
      // symmetry
      CHECK(trop_distance(x, y) == trop_distance(y, x));
      CHECK(dual_distance(x, y) == dual_distance(y, x));
      // identity of indiscernibles
      CHECK(trop_distance(x, x) == 0);
      CHECK((trop_distance(x, y) == 0) == (x == y));
      CHECK((dual_distance(x, y) == 0) == (x == y));
      // triangle inequality
      CHECK(trop_distance(x, z) <= trop_distance(x, y) + trop_distance(y, z));
      CHECK(dual_distance(x, z) <= dual_distance(x, y) + dual_distance(y, z));
      // translation invariance
      Point tvec = gen.point(n);
      CHECK(trop_distance(x + tvec, y + tvec) == trop_distance(x, y));
    }
  }
}

TEST_CASE("rotation non-invariance witness") {
  Point x = origin(2), y({Rational(1), Rational(1)});
  // rotate both by 90 degrees: (a, b) -> (-b, a)
  Point rx = origin(2), ry({Rational(-1), Rational(1)});
  CHECK(trop_distance(x, y) == 1);
  CHECK(trop_distance(rx, ry) == 2);
  CHECK(trop_distance(x, y) != trop_distance(rx, ry));
}

TEST_CASE("dual norm: examples, oracle, sandwich") {
  CHECK(dual_norm(Point({Rational(1), Rational(1)})) == 2);
  CHECK(dual_norm(Point({Rational(1), Rational(-1)})) == 1);
  CHECK(dual_norm(origin(5)) == 0);

  RatGen gen(505);
  for (int n : {2, 3, 4}) {
    for (int t = 0; t < 400; ++t) {
      Point x = gen.point(n);
      Rational dn = dual_norm(x);
      CHECK(dn == dual_norm_oracle(x));
      Rational l1(0);
      for (int i = 0; i < n; ++i) l1 += abs_rat(x[i]);
      CHECK(2 * dn >= l1);
      CHECK(dn <= l1);
    }
  }
}

TEST_CASE("dual distance examples") {
  CHECK(dual_distance(origin(2), Point({Rational(1), Rational(2)})) == 3);
  Point p({Rational(4), Rational(-9)});
  CHECK(dual_distance(p, p) == 0);
  CHECK(dual_distance(Point({Rational(1), Rational(0)}), Point({Rational(0), Rational(1)})) == 1);
}

TEST_CASE("tropical diameter") {
  CHECK(trop_diameter({origin(3)}) == 0);
  // vertices of the unit tropical ball in R^2
  std::vector<Point> hex{Point({Rational(1), Rational(0)}),  Point({Rational(1), Rational(1)}),
                         Point({Rational(0), Rational(1)}),  Point({Rational(-1), Rational(0)}),
                         Point({Rational(-1), Rational(-1)}), Point({Rational(0), Rational(-1)})};
  CHECK(trop_diameter(hex) == 2);
  CHECK(trop_diameter({origin(2), Point({Rational(1), Rational(1)}),
                       Point({Rational(2), Rational(1)})}) == 2);
  CHECK_THROWS_AS(trop_diameter({}), std::invalid_argument);
}

TEST_CASE("tropical segment: breakpoints, degeneracy, length additivity") {
  auto seg = tropical_segment(origin(2), Point({Rational(2), Rational(1)}));
  REQUIRE(seg.points.size() == 3);
  CHECK(seg.points[0] == origin(2));
  CHECK(seg.points[1] == Point({Rational(1), Rational(1)}));
  CHECK(seg.points[2] == Point({Rational(2), Rational(1)}));

  auto deg = tropical_segment(Point({Rational(3), Rational(4)}), Point({Rational(3), Rational(4)}));
  CHECK(deg.points.size() == 1);

  auto diag = tropical_segment(origin(2), Point({Rational(1), Rational(1)}));
  CHECK(diag.points.size() == 2);

  RatGen gen(606);
  for (int n : {2, 3, 4}) {
    for (int t = 0; t < 300; ++t) {
      Point x = gen.point(n), y = gen.point(n);
      auto s = tropical_segment(x, y);
      REQUIRE(s.points.size() <= static_cast<std::size_t>(n) + 1);
      CHECK(s.points.front() == x);
      CHECK(s.points.back() == y);
      // sum of piece lengths equals the distance, exactly
      CHECK(polyline_length(s) == trop_distance(x, y));
      // each piece direction is a 0/1 pattern up to sign and the -1 completion
      for (std::size_t i = 0; i + 1 < s.points.size(); ++i) {
        RatVec d = s.points[i + 1].x - s.points[i].x;
        RatVec hd = d;
        hd.push_back(Rational(0));
        Rational lo(0), hi(0);
        for (const auto& q : hd) {
          lo = std::min(lo, q);
          hi = std::max(hi, q);
        }
        Rational span = hi - lo;
        REQUIRE(span > 0);
        for (const auto& q : hd) CHECK((q == lo || q == hi));
      }
    }
  }
}

TEST_CASE("is_geodesic") {
  auto seg = tropical_segment(Point({Rational(-2), Rational(5)}), Point({Rational(1), Rational(1)}));
  CHECK(is_geodesic(seg));
  Polyline back{{origin(2), Point({Rational(1), Rational(0)}), origin(2)}, false};
  CHECK_FALSE(is_geodesic(back));
  Polyline bent{{origin(2), Point({Rational(1), Rational(1)}), Point({Rational(2), Rational(1)})}, false};
  CHECK(is_geodesic(bent));
}

TEST_CASE("polyline length") {
  Polyline p{{origin(2), Point({Rational(1), Rational(1)}), Point({Rational(2), Rational(1)})}, false};
  CHECK(polyline_length(p) == 2);
  Polyline single{{origin(2)}, false};
  CHECK(polyline_length(single) == 0);
  Polyline hex{{Point({Rational(1), Rational(0)}), Point({Rational(1), Rational(1)}),
                Point({Rational(0), Rational(1)}), Point({Rational(-1), Rational(0)}),
                Point({Rational(-1), Rational(-1)}), Point({Rational(0), Rational(-1)})},
               true};
  CHECK(polyline_length(hex) == 6);
}
