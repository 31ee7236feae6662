#include <algorithm>
#include <random>

#include "doctest.h"
#include "selfcover/errors.hpp"
#include "selfcover/geometry.hpp"
#include "selfcover/union_area.hpp"

using namespace selfcover;

namespace {

Rational q(const char* s) { return parse_rational(s); }

ConvexPolygon unit_square() { return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

ConvexPolygon square_at(Rational x, Rational y, Rational side) {
  return ConvexPolygon({{x, y}, {x + side, y}, {x + side, y + side}, {x, y + side}});
}

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(q("3/6") == Rational(1, 2));
  CHECK(q("-0.125") == Rational(-1, 8));
  CHECK(q("1e-3") == Rational(1, 1000));
  CHECK(q("2.5E2") == 250);
  CHECK(to_string(q("10/4")) == "5/2");
  CHECK(to_string(q("-7")) == "-7");
  CHECK_THROWS_AS(q("1/0"), ParseError);
  CHECK_THROWS_AS(q("abc"), ParseError);
  CHECK_THROWS_AS(q(""), ParseError);
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(pow2(-3) == Rational(1, 8));
}

TEST_CASE("polygon normalizes orientation and rejects non-convex input") {
  ConvexPolygon cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK(signed_area(cw.vertices()) > 0);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}}), GeometryError);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), GeometryError);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {2, 0}, {1, 1}, {1, 2}, {0, 2}}), GeometryError);
}

TEST_CASE("locate on the canonical triangle") {
  const auto& t = canonical_triangle();
  CHECK(locate(t, {Rational(1), Rational(1, 2)}) == Location::Interior);
  CHECK(locate(t, {1, 0}) == Location::Boundary);
  CHECK(locate(t, {3, 0}) == Location::Exterior);
  CHECK(locate(t, {1, 1}) == Location::Boundary);
}

TEST_CASE("homothet locate agrees with its realization") {
  auto shape = make_shape(ConvexPolygon({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}}));
  Homothet h(shape, Rational(1, 3), {Rational(1, 2), Rational(-1, 5)});
  const ConvexPolygon real = h.realize();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-40, 60);
  for (int i = 0; i < 300; ++i) {
    Point2 p{frac(d(rng), 24), frac(d(rng), 24)};
    CHECK(locate(h, p) == locate(real, p));
  }
  for (std::size_t i = 0; i < shape->size(); ++i) CHECK(locate(h, h.vertex(i)) == Location::Boundary);
}

TEST_CASE("clip_halfplane examples") {
  const auto& t = canonical_triangle();
  auto upper = clip_halfplane(t, HalfPlane({0, 1}, Rational(1, 2)));
  REQUIRE(upper.has_value());
  CHECK(*upper == ConvexPolygon({{Rational(1, 2), Rational(1, 2)}, {Rational(3, 2), Rational(1, 2)}, {1, 1}}));
  CHECK(polygon_area(*upper) == Rational(1, 4));
  auto all = clip_halfplane(t, HalfPlane({0, 1}, 0));
  REQUIRE(all.has_value());
  CHECK(*all == t);
  CHECK_FALSE(clip_halfplane(t, HalfPlane({0, 1}, 2)).has_value());
  // Touching at a single vertex has empty interior.
  CHECK_FALSE(clip_halfplane(t, HalfPlane({0, 1}, 1)).has_value());
}

TEST_CASE("clip_halfplane output is contained and no larger") {
  const ConvexPolygon hex({{0, 0}, {2, 0}, {3, 1}, {2, 2}, {0, 2}, {-1, 1}});
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int i = 0; i < 200; ++i) {
    Vec2 n{d(rng), d(rng)};
    if (n.x == 0 && n.y == 0) continue;
    HalfPlane h(n, frac(d(rng), 2));
    auto out = clip_halfplane(hex, h);
    if (!out) continue;
    CHECK(contains(hex, *out));
    for (const auto& v : out->vertices()) CHECK(h.contains(v));
    bool whole = std::all_of(hex.vertices().begin(), hex.vertices().end(), [&](const Point2& v) { return h.contains(v); });
    CHECK((polygon_area(*out) == polygon_area(hex)) == whole);
    CHECK(polygon_area(*out) <= polygon_area(hex));
  }
}

TEST_CASE("canonical triangle map") {
  CHECK(canonical_triangle_map(canonical_triangle()).is_identity());
  auto half = canonical_triangle_map(ConvexPolygon({{0, 0}, {4, 0}, {2, 2}}));
  CHECK(half.a() == Rational(1, 2));
  CHECK(half.d() == Rational(1, 2));
  CHECK(half.b() == 0);
  CHECK(half.c() == 0);
  ConvexPolygon rt({{0, 0}, {1, 0}, {0, 1}});
  auto m = canonical_triangle_map(rt);
  // Signed area ratio |T_canon| / |t| = 1 / (1/2).
  CHECK(m.determinant() == 2);
  CHECK(m.apply(rt) == canonical_triangle());
  auto inv = m.inverse();
  for (const auto& v : rt.vertices()) CHECK(inv.apply(m.apply(v)) == v);
  CHECK(m.compose(inv).is_identity());
  CHECK_THROWS(canonical_triangle_map(unit_square()));
}

TEST_CASE("polygon_area examples") {
  CHECK(polygon_area(canonical_triangle()) == 1);
  CHECK(polygon_area(unit_square()) == 1);
  // Shoelace by hand: 2x2 square plus two unit-area side triangles.
  CHECK(polygon_area(ConvexPolygon({{0, 0}, {2, 0}, {3, 1}, {2, 2}, {0, 2}, {-1, 1}})) == 6);
}

TEST_CASE("union_area examples") {
  std::vector<ConvexPolygon> disjoint{unit_square(), square_at(3, 0, 1)};
  CHECK(union_area(disjoint) == 2);
  std::vector<ConvexPolygon> same{unit_square(), unit_square()};
  CHECK(union_area(same) == 1);
  std::vector<ConvexPolygon> shifted{unit_square(), square_at(Rational(1, 2), 0, 1)};
  CHECK(union_area(shifted) == Rational(3, 2));
  std::vector<ConvexPolygon> none;
  CHECK(union_area(none) == 0);
}

// Inclusion-exclusion over all subsets, using clip_convex for intersections.
Rational inclusion_exclusion(const std::vector<ConvexPolygon>& ps) {
  Rational total = 0;
  const std::size_t n = ps.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::optional<ConvexPolygon> acc;
    bool empty = false;
    int bits = 0;
    for (std::size_t i = 0; i < n && !empty; ++i) {
      if (!(mask >> i & 1)) continue;
      ++bits;
      if (!acc) {
        acc = ps[i];
      } else {
        acc = clip_convex(*acc, ps[i]);
        if (!acc) empty = true;
      }
    }
    if (empty) continue;
    Rational a = polygon_area(*acc);
    total += (bits % 2 == 1) ? a : Rational(-a);
  }
  return total;
}

TEST_CASE("union_area matches inclusion-exclusion and is permutation invariant") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, 12);
  auto tri = make_shape(ConvexPolygon({{0, 0}, {3, 1}, {1, 2}}));
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ConvexPolygon> ps;
    int n = 1 + trial % 5;
    for (int i = 0; i < n; ++i) {
      Homothet h(tri, frac(1 + d(rng), 4), {frac(d(rng), 3), frac(d(rng), 3)});
      ps.push_back(h.realize());
    }
    Rational u = union_area(ps);
    CHECK(u == inclusion_exclusion(ps));
    std::shuffle(ps.begin(), ps.end(), rng);
    CHECK(union_area(ps) == u);
  }
  CHECK(union_area(std::vector<ConvexPolygon>{canonical_triangle()}) == 1);
}

TEST_CASE("affine image of a homothet") {
  auto shape = make_shape(canonical_triangle());
  AffineMap m(Rational(2), Rational(1), Rational(-1), Rational(3), {Rational(1, 2), 5});
  Homothet h(shape, Rational(3, 7), {1, 2});
  auto mapped_shape = make_shape(m.apply(*shape));
  Homothet img = m.apply(h, mapped_shape);
  for (int i = 0; i < 3; ++i) CHECK(img.vertex(i) == m.apply(h.vertex(i)));
}

TEST_CASE("convex hull drops collinear points") {
  std::vector<Point2> pts{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {1, 1}, {0, 2}, {1, 2}};
  auto hull = convex_hull(pts);
  CHECK(hull.size() == 4);
  CHECK(signed_area(hull) == 4);
}
