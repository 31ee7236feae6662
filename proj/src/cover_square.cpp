#include <algorithm>
#include <functional>
#include <sstream>

#include "cover_internal.hpp"
#include "selfcover/errors.hpp"

namespace selfcover {
namespace {

using PointMap = std::function<Point2(const Point2&)>;

AxisRect image(const AxisRect& r, const PointMap& f) {
  const Point2 p = f({r.x0, r.y0}), q = f({r.x1, r.y1});
  return {std::min(p.x, q.x), std::min(p.y, q.y), std::max(p.x, q.x), std::max(p.y, q.y)};
}

AxisRect square_at(const Rational& x, const Rational& y, const Rational& side) { return {x, y, x + side, y + side}; }

// Rectangle [0, a] x [0, b], b <= a, with the marked point p on the top edge.
// Case (i) when a <= 2b, case (ii) otherwise; in case (ii) the squares may
// rise up to height a - b.
std::vector<AxisRect> lemma(const Rational& a, const Rational& b, const std::vector<Point2>& pts, const Point2& p) {
  const bool tall_cap = 2 * b < a;
  std::vector<Point2> rel;
  for (const auto& q : pts) {
    if (q == p || !(0 < q.x && q.x < a)) continue;
    if ((0 < q.y && q.y < b) || (tall_cap && q.y == b)) rel.push_back(q);
  }

  auto mirrored = [&]() {
    const PointMap flip = [&a](const Point2& q) { return Point2(a - q.x, q.y); };
    std::vector<Point2> mp;
    for (const auto& q : pts) mp.push_back(flip(q));
    std::vector<AxisRect> out;
    for (const auto& r : lemma(a, b, mp, flip(p))) out.push_back(image(r, flip));
    return out;
  };

  if (rel.empty()) {
    if (!tall_cap) return {square_at(0, 0, b), square_at(a - b, 0, b)};
    if (2 * p.x < a) return mirrored();
    const Rational h1 = std::min(Rational(a - b), p.x);
    const Rational h2 = std::max(b, Rational(a - p.x));
    return {square_at(0, 0, h1), square_at(a - h2, 0, h2)};
  }

  // Part [u0, u1] x [0, b] of the rectangle, solved in its own frame.
  auto part = [&](const Rational& u0, const Rational& u1) {
    const Rational w = u1 - u0;
    std::vector<Point2> sub;
    std::vector<AxisRect> out;
    if (w < b) {
      for (const auto& q : pts)
        if (u0 <= q.x && q.x <= u1) sub.push_back({q.y, q.x - u0});
      const PointMap back = [&u0](const Point2& q) { return Point2(u0 + q.y, q.x); };
      for (const auto& r : lemma(b, w, sub, Point2(b, w))) out.push_back(image(r, back));
    } else {
      for (const auto& q : pts)
        if (u0 <= q.x && q.x <= u1) sub.push_back({q.x - u0, q.y});
      const Point2 top = (u0 <= p.x && p.x <= u1) ? Point2(p.x - u0, p.y) : Point2(w, b);
      const PointMap back = [&u0](const Point2& q) { return Point2(q.x + u0, q.y); };
      for (const auto& r : lemma(w, b, sub, top)) out.push_back(image(r, back));
    }
    return out;
  };

  const Rational half = a / 2;
  auto closer = [&](const Point2& s, const Point2& t) { return abs(s.x - half) < abs(t.x - half); };
  const Point2* cut = nullptr;
  for (const auto& s : rel)
    if (b / 2 <= s.x && s.x <= a - b / 2 && (!cut || closer(s, *cut))) cut = &s;
  if (cut) {
    auto out = part(0, cut->x);
    auto right = part(cut->x, a);
    out.insert(out.end(), right.begin(), right.end());
    return out;
  }

  const Point2* s = &rel[0];
  for (const auto& t : rel)
    if (closer(t, *s)) s = &t;
  if (s->x > half) return mirrored();
  // s.x < b / 2: the left part is a thin column whose top edge is the cut
  // line, with s as its marked point.
  const Rational c = s->x;
  std::vector<Point2> sub;
  for (const auto& q : pts)
    if (q.x <= c) sub.push_back({q.y, q.x});
  const PointMap back = [](const Point2& q) { return Point2(q.y, q.x); };
  std::vector<AxisRect> out;
  for (const auto& r : lemma(b, c, sub, Point2(s->y, c))) out.push_back(image(r, back));
  auto right = part(c, a);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

// Homothet of S (lower-left corner `corner`, side w) realizing r.
Homothet square_homothet(const ShapePtr& S, const Point2& corner, const Rational& w, const AxisRect& r) {
  const Rational lambda = (r.x1 - r.x0) / w;
  return Homothet(S, lambda, Point2(r.x0, r.y0) - lambda * corner);
}

}  // namespace

std::vector<AxisRect> lemma_square_cover(const Rational& a, const Rational& b, const std::vector<Point2>& P,
                                         const Point2& p) {
  if (!(0 < b && b <= a)) throw GeometryError("lemma_square_cover needs 0 < b <= a");
  if (p.y != b || p.x < 0 || p.x > a) throw GeometryError("marked point is not on the top edge");
  for (const auto& q : P)
    if (q.x < 0 || q.x > a || q.y < 0 || q.y > b) throw GeometryError("point outside the rectangle");
  return lemma(a, b, P, p);
}

CoverSolution cover_square(const ConvexPolygon& S, const std::vector<Point2>& P) {
  const auto [corner, w] = detail::square_frame(S);
  const ShapePtr shape = make_shape(S);
  CoverSolution sol{S, interior_points(S, P), {}, 0, {}};
  std::vector<Point2> local;
  for (const auto& q : sol.pts) local.push_back(q - corner);
  for (const auto& r : lemma(w, w, local, Point2(w, w)))
    sol.homothets.push_back(square_homothet(shape, corner, w, image(r, [&](const Point2& q) { return q + corner; })));
  sol.bound_claimed = 2 * sol.pts.size() + 2;
  detail::certify(sol);
  return sol;
}

CoverSolution cover_square_delaunay(const ConvexPolygon& S, const std::vector<Point2>& P) {
  const auto [corner, w] = detail::square_frame(S);
  const ShapePtr shape = make_shape(S);
  CoverSolution sol{S, interior_points(S, P), {}, 0, {}};
  const std::size_t k = sol.pts.size();
  sol.bound_claimed = 6 * k + 2;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (sol.pts[i].x == sol.pts[j].x || sol.pts[i].y == sol.pts[j].y) {
        std::ostringstream os;
        os << "points " << sol.pts[i] << " and " << sol.pts[j] << " share a coordinate";
        throw DegeneracyError(os.str());
      }

  const Rational x1 = corner.x + w, y1 = corner.y + w;
  std::vector<Point2> all = sol.pts;
  for (const auto& q : sol.pts) {
    all.push_back({corner.x, q.y});
    all.push_back({x1, q.y});
    all.push_back({q.x, corner.y});
    all.push_back({q.x, y1});
  }
  for (const auto& v : S.vertices()) all.push_back(v);

  const GDTriangulation tri = gdt_build(all, shape, {DegeneracyPolicy::Symbolic});
  for (const Homothet& h : tri.witnesses) {
    const ConvexPolygon box = h.realize();
    Rational bx0 = box.min_x(), by0 = box.min_y(), side = box.max_x() - bx0;
    if (side > w) throw CertificationError("witness square larger than the container");
    // Push back through each side it crosses.
    if (bx0 < corner.x) bx0 = corner.x;
    if (bx0 + side > x1) bx0 = x1 - side;
    if (by0 < corner.y) by0 = corner.y;
    if (by0 + side > y1) by0 = y1 - side;
    Homothet fixed = square_homothet(shape, corner, w, square_at(bx0, by0, side));
    if (std::find(sol.homothets.begin(), sol.homothets.end(), fixed) == sol.homothets.end())
      sol.homothets.push_back(std::move(fixed));
  }
  detail::certify(sol);
  return sol;
}

}  // namespace selfcover
