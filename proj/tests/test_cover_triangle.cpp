#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "selfcover/errors.hpp"
#include "selfcover/self_cover.hpp"

using namespace selfcover;

namespace {

ConvexPolygon canon() { return canonical_triangle(); }

bool has_homothet(const CoverSolution& sol, const std::vector<Point2>& verts) {
  const ConvexPolygon want(verts);
  for (const auto& h : sol.homothets)
    if (h.realize() == want) return true;
  return false;
}

// Random triangle with small integer vertices, counter-clockwise or not.
ConvexPolygon random_triangle(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  while (true) {
    Point2 a(d(rng), d(rng)), b(d(rng), d(rng)), c(d(rng), d(rng));
    if (orient(a, b, c) != 0) return ConvexPolygon({a, b, c});
  }
}

}  // namespace

TEST_CASE("rectangle strips") {
  const AxisRect R{0, 0, 4, 1};
  auto empty = cover_rectangle_axis(R, {});
  CHECK(empty.strips.size() == 1);
  CHECK(empty.report.ok());

  auto two = cover_rectangle_axis(R, {{1, frac(1, 2)}, {3, frac(1, 2)}});
  REQUIRE(two.strips.size() == 3);
  CHECK(two.strips[0].x1 == 1);
  CHECK(two.strips[1].x0 == 1);
  CHECK(two.strips[1].x1 == 3);
  CHECK(two.strips[2].x1 == 4);
  CHECK(two.report.ok());

  auto tied = cover_rectangle_axis({0, 0, 2, 1}, {{1, frac(1, 4)}, {1, frac(3, 4)}});
  CHECK(tied.strips.size() == 2);
  CHECK(tied.report.ok());

  // Boundary points are ignored, exterior ones rejected.
  CHECK(cover_rectangle_axis(R, {{0, frac(1, 2)}}).strips.size() == 1);
  CHECK_THROWS_AS(cover_rectangle_axis(R, {{5, frac(1, 2)}}), GeometryError);
}

TEST_CASE("triangle induction on the spec examples") {
  auto zero = cover_triangle(canon(), {});
  CHECK(zero.homothets.size() == 1);
  CHECK(zero.report.ok());

  auto one = cover_triangle(canon(), {{1, frac(1, 2)}});
  CHECK(one.homothets.size() == 3);
  CHECK(one.report.ok());
  CHECK(one.report.deficit == 0);
  CHECK(has_homothet(one, {{frac(1, 2), frac(1, 2)}, {frac(3, 2), frac(1, 2)}, {1, 1}}));
  // Bottom on y = 0 and meeting y = 1/2 in [1/2, 1] and [1, 3/2]: scale 3/4.
  CHECK(has_homothet(one, {{0, 0}, {frac(3, 2), 0}, {frac(3, 4), frac(3, 4)}}));
  CHECK(has_homothet(one, {{frac(1, 2), 0}, {2, 0}, {frac(5, 4), frac(3, 4)}}));

  // Points on the boundary are irrelevant.
  auto edge = cover_triangle(canon(), {{1, 0}, {1, 1}});
  CHECK(edge.pts.empty());
  CHECK(edge.homothets.size() == 1);
  CHECK_THROWS_AS(cover_triangle(canon(), {{3, 3}}), GeometryError);
}

TEST_CASE("triangle induction on rows of tied points") {
  // Several points at one height, and columns of points above one another.
  std::vector<std::vector<Point2>> cases = {
      {{frac(1, 2), frac(1, 4)}, {1, frac(1, 4)}, {frac(3, 2), frac(1, 4)}},
      {{1, frac(1, 4)}, {1, frac(1, 2)}, {1, frac(3, 4)}},
      {{frac(3, 4), frac(1, 4)}, {frac(5, 4), frac(1, 4)}, {1, frac(1, 2)}, {frac(7, 8), frac(1, 2)}},
  };
  for (const auto& P : cases) {
    auto sol = cover_triangle(canon(), P);
    CHECK(sol.report.ok());
    CHECK(sol.homothets.size() <= 2 * P.size() + 1);
  }
  // A full grid row by row.
  std::vector<Point2> grid;
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 4; ++j) {
      Point2 q(frac(i, 4), frac(j, 8));
      if (locate(canon(), q) == Location::Interior) grid.push_back(q);
    }
  auto sol = cover_triangle(canon(), grid);
  CHECK(sol.report.ok());
  CHECK(sol.homothets.size() <= 2 * sol.pts.size() + 1);
}

TEST_CASE("triangle induction on random instances") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const ConvexPolygon T = random_triangle(rng);
    const int k = 1 + trial % 9;
    const auto P = oracle::random_interior_points(T, rng, k, trial % 2 ? 16 : 97);
    auto sol = cover_triangle(T, P);
    INFO("trial " << trial);
    CHECK(sol.report.ok());
    CHECK(sol.homothets.size() <= 2 * sol.pts.size() + 1);
    for (std::size_t start = 0; start < 3; ++start) {
      const auto hs = cover_triangle_from(make_shape(T), sol.pts, start);
      CHECK(check_cover(T, sol.pts, hs, 2 * sol.pts.size() + 1).ok());
    }
  }
}

TEST_CASE("triangle cover count is affine invariant") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 15; ++trial) {
    const ConvexPolygon T = random_triangle(rng);
    const auto P = oracle::random_interior_points(T, rng, 2 + trial % 6, 31);
    Rational a, b, c, e;
    do {
      a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    } while (a * e - b * c == 0);
    const AffineMap A(a, b, c, e, Point2(d(rng), frac(d(rng), 3)));
    std::vector<Point2> AP;
    for (const auto& p : P) AP.push_back(A.apply(p));
    auto base = cover_triangle(T, P);
    auto mapped = cover_triangle(A.apply(T), AP);
    CHECK(mapped.report.ok());
    CHECK(base.homothets.size() == mapped.homothets.size());
  }
}

TEST_CASE("triangle via generalized Delaunay") {
  auto zero = cover_triangle_delaunay(canon(), {});
  CHECK(zero.homothets.size() == 1);
  CHECK(zero.report.ok());

  auto one = cover_triangle_delaunay(canon(), {{frac(9, 10), frac(2, 5)}});
  CHECK(one.homothets.size() == 3);
  CHECK(one.report.ok());

  std::mt19937 rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    const ConvexPolygon T = trial == 0 ? canon() : random_triangle(rng);
    const auto P = oracle::random_interior_points(T, rng, 5, 997);
    auto del = cover_triangle_delaunay(T, P);
    INFO("trial " << trial);
    CHECK(del.homothets.size() == 11);
    CHECK(del.report.ok());
    CHECK(cover_triangle(T, P).homothets.size() <= 11);
  }
}
