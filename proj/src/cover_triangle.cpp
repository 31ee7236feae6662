#include <algorithm>
#include <optional>
#include <set>

#include "cover_internal.hpp"
#include "selfcover/errors.hpp"
#include "selfcover/homothets.hpp"

namespace selfcover {
namespace {

// Canonical-frame homothet (x0, y0) + s * {(0,0), (2,0), (1,1)}.
struct Tri {
  Rational x0, y0, s;
  Rational right() const { return x0 + 2 * s; }
  friend bool operator==(const Tri& a, const Tri& b) { return a.x0 == b.x0 && a.y0 == b.y0 && a.s == b.s; }
};

bool strictly_inside(const Tri& t, const Point2& q) {
  const Rational h = q.y - t.y0;
  return h > 0 && h < q.x - t.x0 && h < t.right() - q.x;
}

// Homothet with bottom edge on y = base whose section at height y is [x1, x2].
Tri cone_below(const Rational& base, const Rational& y, const Rational& x1, const Rational& x2) {
  const Rational s = (x2 - x1) / 2 + (y - base);
  return {(x1 + x2) / 2 - s, base, s};
}

using Interval = std::pair<Rational, Rational>;

std::vector<Interval> merge(std::vector<Interval> iv) {
  std::sort(iv.begin(), iv.end());
  std::vector<Interval> out;
  for (auto& i : iv) {
    if (!out.empty() && i.first <= out.back().second) {
      if (i.second > out.back().second) out.back().second = i.second;
    } else {
      out.push_back(std::move(i));
    }
  }
  return out;
}

// Closed hull of the points of [a, b] outside the merged closed intervals.
std::optional<Interval> uncovered_hull(const Rational& a, const Rational& b, const std::vector<Interval>& covered) {
  Rational lo = a, hi = b;
  for (const auto& c : covered) {
    if (c.first <= a && a <= c.second) {
      if (c.second >= b) return std::nullopt;
      lo = c.second;
    }
    if (c.first <= b && b <= c.second) hi = c.first;
  }
  return Interval{lo, hi};
}

// Induction on the lowest row of points. Every point with the minimum y is
// handled in the same step.
std::vector<Tri> induct(const Tri& R, const std::vector<Point2>& Q) {
  std::vector<Point2> inside;
  for (const auto& q : Q)
    if (strictly_inside(R, q)) inside.push_back(q);
  if (inside.empty()) return {R};

  Rational ystar = inside[0].y;
  for (const auto& q : inside) ystar = std::min(ystar, q.y);
  std::vector<Rational> G;
  std::vector<Point2> rest;
  for (auto& q : inside) {
    if (q.y == ystar)
      G.push_back(q.x);
    else
      rest.push_back(q);
  }
  std::sort(G.begin(), G.end());
  G.erase(std::unique(G.begin(), G.end()), G.end());

  const Rational s1 = R.y0 + R.s - ystar;
  const Tri R1{R.x0 + R.s - s1, ystar, s1};
  const std::vector<Tri> sub = induct(R1, rest);

  const std::size_t m = G.size();
  std::vector<std::optional<Rational>> reach_l(m), reach_r(m);
  std::vector<Interval> kept;
  std::vector<Tri> out;
  for (const Tri& t : sub) {
    if (t.y0 == ystar) {
      const Rational lo = t.x0, hi = t.right();
      bool blocked = false;
      for (std::size_t j = 0; j < m; ++j) {
        if (!(lo < G[j] && G[j] < hi)) continue;
        blocked = true;
        if (!reach_l[j] || lo < *reach_l[j]) reach_l[j] = lo;
        if (!reach_r[j] || hi > *reach_r[j]) reach_r[j] = hi;
      }
      if (!blocked) {
        // Stretch down to the base, keeping the apex.
        kept.push_back({lo, hi});
        const Rational ax = t.x0 + t.s;
        const Rational s = ystar + t.s - R.y0;
        out.push_back({ax - s, R.y0, s});
        continue;
      }
    }
    out.push_back(t);
  }

  // What the stretched triangles leave open on the row is filled from below,
  // at most one piece on each side of every row point.
  const std::vector<Interval> covered = merge(std::move(kept));
  const Rational e_lo = R1.x0, e_hi = R1.right();
  auto add_piece = [&](const Rational& a, const Rational& b) {
    if (auto u = uncovered_hull(a, b, covered)) {
      Tri t = cone_below(R.y0, ystar, u->first, u->second);
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
    }
  };
  for (std::size_t j = 0; j < m; ++j) {
    if (reach_l[j]) add_piece(std::max(*reach_l[j], j > 0 ? G[j - 1] : e_lo), G[j]);
    if (reach_r[j]) add_piece(G[j], std::min(*reach_r[j], j + 1 < m ? G[j + 1] : e_hi));
  }
  return out;
}

const ShapePtr& canonical_shape() {
  static const ShapePtr shape = make_shape(canonical_triangle());
  return shape;
}

}  // namespace

std::vector<Homothet> cover_triangle_from(const ShapePtr& T, const std::vector<Point2>& interior, std::size_t start) {
  const AffineMap to_canon = canonical_triangle_map(*T, start);
  const AffineMap back = to_canon.inverse();
  std::vector<Point2> Q;
  Q.reserve(interior.size());
  for (const auto& p : interior) Q.push_back(to_canon.apply(p));
  std::vector<Homothet> hs;
  for (const Tri& t : induct({0, 0, 1}, Q))
    hs.push_back(back.apply(Homothet(canonical_shape(), t.s, Point2(t.x0, t.y0)), T));
  return hs;
}

CoverSolution cover_triangle(const ConvexPolygon& T, const std::vector<Point2>& P) {
  if (T.size() != 3) throw GeometryError("cover_triangle needs a triangle");
  const ShapePtr shape = make_shape(T);
  CoverSolution sol{T, interior_points(T, P), {}, 0, {}};
  const auto& vs = T.vertices();
  const auto first = static_cast<std::size_t>(std::min_element(vs.begin(), vs.end()) - vs.begin());
  for (std::size_t r = 0; r < 3; ++r) {
    auto hs = cover_triangle_from(shape, sol.pts, (first + r) % 3);
    if (r == 0 || hs.size() < sol.homothets.size()) sol.homothets = std::move(hs);
  }
  sol.bound_claimed = 2 * sol.pts.size() + 1;
  detail::certify(sol);
  return sol;
}

CoverSolution cover_triangle_delaunay(const ConvexPolygon& T, const std::vector<Point2>& P, const GDOptions& opts) {
  if (T.size() != 3) throw GeometryError("cover_triangle_delaunay needs a triangle");
  const ShapePtr shape = make_shape(T);
  CoverSolution sol{T, interior_points(T, P), {}, 0, {}};
  const std::size_t k = sol.pts.size();
  sol.bound_claimed = 2 * k + 1;
  const Point2 g = T.centroid_of_vertices();

  // A reflected copy of T, scaled up until its vertices are exactly the hull
  // and every input point sees them as far away.
  std::optional<GDTriangulation> tri;
  for (Rational lam = 64; lam <= pow2(40); lam *= 2) {
    std::vector<Point2> all = sol.pts;
    for (const auto& v : T.vertices()) all.push_back(g - lam * (v - g));
    GDTriangulation t = gdt_build(all, shape, opts);
    const std::set<std::size_t> hull(t.hull.begin(), t.hull.end());
    if (t.faces.size() == 2 * k + 1 && hull == std::set<std::size_t>{k, k + 1, k + 2}) {
      tri = std::move(t);
      break;
    }
  }
  if (!tri) throw CertificationError("far points never became the outer hull");

  const std::size_t edges[3] = {0, 1, 2};
  for (const Homothet& w : tri->witnesses) {
    Rational rhs[3];
    for (std::size_t e = 0; e < 3; ++e) {
      const auto ie = static_cast<std::ptrdiff_t>(e);
      rhs[e] = std::min(w.support(ie), T.support_offset(ie));
    }
    auto sol3 = solve_support_system(T, edges, rhs);
    if (!sol3 || sol3->second <= 0) continue;
    sol.homothets.emplace_back(shape, sol3->second, sol3->first);
  }
  detail::certify(sol);
  return sol;
}

}  // namespace selfcover
