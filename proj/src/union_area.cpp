#include "selfcover/union_area.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace selfcover {
namespace {

struct Box {
  Rational x0, x1, y0, y1;
  double dx0, dx1;
};

Box bounding_box(const ConvexPolygon& p) {
  Box b{p.min_x(), p.max_x(), p.min_y(), p.max_y(), 0, 0};
  b.dx0 = b.x0.get_d();
  b.dx1 = b.x1.get_d();
  return b;
}

bool overlap(const Box& a, const Box& b) { return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1; }

// Abscissa of a proper crossing of segments pq and rs, if any.
void push_crossing(const Point2& p, const Point2& q, const Point2& r, const Point2& s, std::vector<Rational>& xs) {
  const Vec2 d1 = q - p, d2 = s - r;
  const Rational den = cross(d1, d2);
  if (den == 0) return;
  const Vec2 w = r - p;
  const Rational t = cross(w, d2) / den;
  if (t <= 0 || t >= 1) return;
  const Rational u = cross(w, d1) / den;
  if (u <= 0 || u >= 1) return;
  xs.push_back(p.x + t * d1.x);
}

// Vertical section [lo, hi] of a convex polygon at abscissa x strictly inside its x-range.
std::pair<Rational, Rational> section(const ConvexPolygon& poly, const Rational& x) {
  bool first = true;
  Rational lo, hi;
  const auto& vs = poly.vertices();
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vs[i];
    const Point2& b = vs[(i + 1) % n];
    if (a.x == b.x) continue;
    const bool spans = (a.x < x && x < b.x) || (b.x < x && x < a.x);
    if (!spans) continue;
    Rational y = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    if (first) {
      lo = y;
      hi = y;
      first = false;
    } else {
      if (y < lo) lo = y;
      if (y > hi) hi = y;
    }
  }
  return {lo, hi};
}

}  // namespace

Rational union_area(std::span<const ConvexPolygon> polys) {
  const std::size_t n = polys.size();
  if (n == 0) return 0;
  std::vector<Box> boxes;
  boxes.reserve(n);
  for (const auto& p : polys) boxes.push_back(bounding_box(p));

  std::vector<Rational> xs;
  for (const auto& p : polys)
    for (const auto& v : p.vertices()) xs.push_back(v.x);

  // Candidate pairs by sweeping boxes in x order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return boxes[a].x0 < boxes[b].x0; });
  for (std::size_t oi = 0; oi < n; ++oi) {
    const std::size_t i = order[oi];
    for (std::size_t oj = oi + 1; oj < n; ++oj) {
      const std::size_t j = order[oj];
      if (boxes[j].x0 >= boxes[i].x1) break;
      if (!overlap(boxes[i], boxes[j])) continue;
      const auto& a = polys[i].vertices();
      const auto& b = polys[j].vertices();
      for (std::size_t ea = 0; ea < a.size(); ++ea)
        for (std::size_t eb = 0; eb < b.size(); ++eb)
          push_crossing(a[ea], a[(ea + 1) % a.size()], b[eb], b[(eb + 1) % b.size()], xs);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  Rational area = 0;
  std::vector<std::pair<Rational, Rational>> intervals;
  std::vector<std::size_t> active;
  std::size_t next = 0;
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    const Rational& xl = xs[s];
    const Rational& xr = xs[s + 1];
    while (next < n && boxes[order[next]].x0 <= xl) active.push_back(order[next++]);
    std::erase_if(active, [&](std::size_t i) { return boxes[i].x1 <= xl; });
    if (active.empty()) continue;
    const Rational mid = (xl + xr) / 2;
    intervals.clear();
    for (std::size_t i : active) {
      if (!(boxes[i].x0 < mid && mid < boxes[i].x1)) continue;
      intervals.push_back(section(polys[i], mid));
    }
    if (intervals.empty()) continue;
    std::sort(intervals.begin(), intervals.end());
    Rational covered = 0;
    Rational cur_lo = intervals[0].first, cur_hi = intervals[0].second;
    for (std::size_t k = 1; k < intervals.size(); ++k) {
      if (intervals[k].first > cur_hi) {
        covered += cur_hi - cur_lo;
        cur_lo = intervals[k].first;
        cur_hi = intervals[k].second;
      } else if (intervals[k].second > cur_hi) {
        cur_hi = intervals[k].second;
      }
    }
    covered += cur_hi - cur_lo;
    area += (xr - xl) * covered;
  }
  return area;
}

}  // namespace selfcover
