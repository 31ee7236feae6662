#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "selfcover/errors.hpp"
#include "selfcover/homothets.hpp"

using namespace selfcover;

namespace {

ShapePtr unit_square() { return make_shape(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})); }
ShapePtr canon() { return make_shape(canonical_triangle()); }

bool has(const std::vector<Homothet>& hs, const Rational& s, const Point2& t) {
  return std::any_of(hs.begin(), hs.end(), [&](const Homothet& h) { return h.scale() == s && h.offset() == t; });
}

}  // namespace

TEST_CASE("circumscribing homothets: spec examples") {
  auto sq = unit_square();
  auto a = circumscribing_homothets(sq, {0, 0}, {1, 0}, {Rational(1, 2), 1});
  CHECK(has(a, 1, {0, 0}));

  auto tri = canon();
  // Points on the three edges of the scale-2 homothet at the origin.
  auto b = circumscribing_homothets(tri, {1, 0}, {3, 1}, {1, 1});
  CHECK(has(b, 2, {0, 0}));

  auto c = circumscribing_homothets(sq, {0, 0}, {3, 0}, {0, 3});
  CHECK(has(c, 3, {0, 0}));

  CHECK_THROWS_AS(circumscribing_homothets(sq, {0, 0}, {1, 1}, {2, 2}), GeometryError);
}

TEST_CASE("circumscribing homothets put all three points on the boundary") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-20, 20);
  auto pent = make_shape(ConvexPolygon({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}}));
  for (auto shape : {unit_square(), canon(), pent}) {
    for (int trial = 0; trial < 40; ++trial) {
      Point2 p[3];
      for (auto& x : p) x = {frac(d(rng), 7), frac(d(rng), 7)};
      if (sgn(orient(p[0], p[1], p[2])) == 0) continue;
      for (const auto& h : circumscribing_homothets(shape, p[0], p[1], p[2])) {
        for (const auto& x : p) CHECK(locate(h, x) == Location::Boundary);
      }
    }
  }
}

TEST_CASE("circumscribing homothets agree with a grid oracle") {
  // Points placed on the edges of grid homothets, so that every circumscribing
  // homothet with grid parameters is visible to the oracle.
  const Rational res(1, 64);
  auto tri = canon();
  struct Case {
    Point2 a, b, c;
  };
  std::vector<Case> cases{
      {{Rational(1, 2), 0}, {Rational(3, 2), Rational(1, 2)}, {Rational(1, 4), Rational(1, 4)}},
      {{Rational(1, 4), 0}, {Rational(5, 4), Rational(3, 4)}, {Rational(1, 2), Rational(1, 2)}},
      {{1, 0}, {Rational(7, 4), Rational(1, 4)}, {Rational(1, 8), Rational(1, 8)}},
  };
  for (const auto& cs : cases) {
    auto list = circumscribing_homothets(tri, cs.a, cs.b, cs.c);
    auto grid = oracle::grid_boundary_homothets(*tri, {cs.a, cs.b, cs.c}, res, -1, 1, Rational(3, 2));
    CHECK(!grid.empty());
    for (const auto& [t, s] : grid) CHECK(has(list, s, t));
    for (const auto& h : list) {
      const bool on_grid = Rational(h.scale() / res).get_den() == 1 && Rational(h.offset().x / res).get_den() == 1 &&
                           Rational(h.offset().y / res).get_den() == 1;
      if (on_grid && h.scale() <= Rational(3, 2) && abs(h.offset().x) <= 1 && abs(h.offset().y) <= 1)
        CHECK(std::find(grid.begin(), grid.end(), std::make_pair(h.offset(), h.scale())) != grid.end());
    }
  }
}

TEST_CASE("min enclosing homothet: spec examples") {
  auto sq = unit_square();
  std::vector<Point2> one{{Rational(1, 3), 2}};
  auto e1 = min_enclosing_homothet(sq, one);
  CHECK(e1.scale == 0);
  CHECK(e1.offset == one[0]);
  CHECK_FALSE(e1.homothet().has_value());

  std::vector<Point2> diag{{0, 0}, {1, 1}};
  CHECK(min_enclosing_homothet(sq, diag).scale == 1);

  std::vector<Point2> verts{{0, 0}, {2, 0}, {1, 1}};
  auto e3 = min_enclosing_homothet(canon(), verts);
  CHECK(e3.scale == 1);
  CHECK(e3.offset == Point2(0, 0));
}

TEST_CASE("min enclosing homothet is minimal against a grid oracle") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(0, 16);
  const Rational res(1, 256);
  for (auto shape : {unit_square(), canon()}) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Point2> pts;
      for (int i = 0; i < 3; ++i) pts.push_back({frac(d(rng), 32), frac(d(rng), 32)});
      auto e = min_enclosing_homothet(shape, pts);
      for (const auto& p : pts) {
        bool inside = true;
        for (std::size_t i = 0; i < shape->size(); ++i) {
          const auto k = static_cast<std::ptrdiff_t>(i);
          inside = inside && dot(shape->outward_normal(k), p - e.offset) <= e.scale * shape->support_offset(k);
        }
        CHECK(inside);
      }
      auto g = oracle::grid_min_scale(*shape, pts, res, 512, -2, 1);
      REQUIRE(g.has_value());
      CHECK(e.scale <= *g);
      // Rounding the optimum outward costs at most a few grid steps.
      CHECK(*g - e.scale <= 4 * res);
    }
  }
}
