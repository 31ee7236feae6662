#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "selfcover/errors.hpp"
#include "selfcover/self_cover.hpp"
#include "selfcover/union_area.hpp"

using namespace selfcover;

namespace {

ConvexPolygon square(const Rational& x, const Rational& y, const Rational& w) {
  return ConvexPolygon({{x, y}, {x + w, y}, {x + w, y + w}, {x, y + w}});
}

// Checks every lemma guarantee directly: squares, covering R, staying in R
// (case i) or R plus its cap (case ii), no marked point inside, and the count.
void check_lemma(const Rational& a, const Rational& b, const std::vector<Point2>& P, const Point2& p) {
  const auto rs = lemma_square_cover(a, b, P, p);
  const AxisRect R{0, 0, a, b};
  const bool cap = 2 * b < a;
  const ConvexPolygon outer = AxisRect{0, 0, a, cap ? a - b : b}.polygon();
  std::size_t k = 0;
  for (const auto& q : P)
    if (0 < q.x && q.x < a && 0 < q.y && (q.y < b || (cap && q.y == b)) && q != p) ++k;
  CHECK(rs.size() <= 2 * k + 2);
  std::vector<ConvexPolygon> clipped;
  for (const auto& r : rs) {
    CHECK(r.width() == r.height());
    const ConvexPolygon poly = r.polygon();
    CHECK(contains(outer, poly));
    CHECK(locate(poly, p) != Location::Interior);
    for (const auto& q : P) CHECK(locate(poly, q) != Location::Interior);
    if (auto c = clip_convex(poly, R.polygon())) clipped.push_back(*c);
  }
  CHECK(union_area(clipped) == a * b);
}

}  // namespace

TEST_CASE("lemma base cases") {
  // Case (ii), k = 0: heights min(a - b, x(p)) and max(b, a - x(p)).
  const auto two = lemma_square_cover(4, 1, {}, {3, 1});
  REQUIRE(two.size() == 2);
  CHECK(two[0].width() == 3);
  CHECK(two[0].x0 == 0);
  CHECK(two[1].width() == 1);
  CHECK(two[1].x1 == 4);
  check_lemma(4, 1, {}, {3, 1});
  check_lemma(4, 1, {}, {1, 1});
  check_lemma(5, 2, {}, {frac(5, 2), 2});

  // Case (i), k = 0: two unit squares.
  const auto one = lemma_square_cover(frac(3, 2), 1, {}, {0, 1});
  REQUIRE(one.size() == 2);
  CHECK(one[0].width() == 1);
  CHECK(one[1].width() == 1);
  check_lemma(frac(3, 2), 1, {}, {0, 1});

  // The vertical cut through s in the window.
  check_lemma(2, 1, {{1, frac(1, 2)}}, {1, 1});
  CHECK(lemma_square_cover(2, 1, {{1, frac(1, 2)}}, {1, 1}).size() <= 4);

  CHECK_THROWS_AS(lemma_square_cover(1, 2, {}, {0, 2}), GeometryError);
  CHECK_THROWS_AS(lemma_square_cover(2, 1, {}, {1, frac(1, 2)}), GeometryError);
}

TEST_CASE("lemma on random rectangles") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coord(0, 48);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational b = frac(1 + trial % 7, 2);
    const Rational a = b * frac(8 + trial % 33, 8);
    std::vector<Point2> P;
    const int k = trial % 8;
    for (int i = 0; i < k; ++i) {
      // Grid points, many on the top edge or on shared coordinates.
      Rational y = b * frac(coord(rng) % 9, 8);
      P.push_back({a * frac(coord(rng), 48), y});
    }
    const Point2 p(a * frac(coord(rng), 48), b);
    INFO("trial " << trial << " a=" << a << " b=" << b);
    check_lemma(a, b, P, p);
  }
}

TEST_CASE("square covers") {
  const ConvexPolygon S = square(0, 0, 1);
  auto zero = cover_square(S, {});
  CHECK(zero.homothets.size() == 2);
  CHECK(zero.report.ok());

  auto centre = cover_square(S, {{frac(1, 2), frac(1, 2)}});
  CHECK(centre.homothets.size() <= 4);
  CHECK(centre.report.ok());

  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const ConvexPolygon Q = square(frac(trial, 3), -trial, 1 + trial % 4);
    const auto P = oracle::random_interior_points(Q, rng, trial % 10, trial % 2 ? 8 : 101);
    auto sol = cover_square(Q, P);
    INFO("trial " << trial);
    CHECK(sol.report.ok());
    CHECK(sol.homothets.size() <= 2 * sol.pts.size() + 2);
  }
  CHECK_THROWS_AS(cover_square(canonical_triangle(), {}), GeometryError);
}

TEST_CASE("square covers via generalized Delaunay") {
  const ConvexPolygon S = square(0, 0, 1);
  auto zero = cover_square_delaunay(S, {});
  CHECK(zero.homothets.size() <= 2);
  CHECK(zero.report.ok());

  auto one = cover_square_delaunay(S, {{frac(1, 3), frac(2, 5)}});
  CHECK(one.homothets.size() <= 8);
  CHECK(one.report.ok());

  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const ConvexPolygon Q = square(trial, frac(1, 7), 2);
    const auto P = oracle::random_interior_points(Q, rng, 1 + trial % 6, 1009);
    bool distinct = true;
    for (std::size_t i = 0; i < P.size(); ++i)
      for (std::size_t j = i + 1; j < P.size(); ++j)
        if (P[i].x == P[j].x || P[i].y == P[j].y) distinct = false;
    if (!distinct) continue;
    auto sol = cover_square_delaunay(Q, P);
    INFO("trial " << trial);
    CHECK(sol.report.ok());
    CHECK(sol.homothets.size() <= 6 * P.size() + 2);
  }
  CHECK_THROWS_AS(cover_square_delaunay(S, {{frac(1, 3), frac(1, 3)}, {frac(1, 3), frac(1, 2)}}), DegeneracyError);
}
