#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

using namespace selfcover;

std::optional<std::pair<Rational, Rational>> feasible_ty(const ConvexPolygon& C, const std::vector<Point2>& pts,
                                                         const Rational& tx, const Rational& s) {
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < C.size(); ++i) {
    const Vec2 n = C.outward_normal(static_cast<std::ptrdiff_t>(i));
    const Rational h = C.support_offset(static_cast<std::ptrdiff_t>(i));
    for (const auto& p : pts) {
      // n.x (p.x - tx) + n.y (p.y - ty) <= s h
      const Rational c = n.x * (p.x - tx) + n.y * p.y - s * h;  // c - n.y ty <= 0
      if (sgn(n.y) == 0) {
        if (sgn(c) > 0) return std::nullopt;
      } else if (sgn(n.y) > 0) {
        Rational b = c / n.y;  // ty >= b
        if (!lo || b > *lo) lo = b;
      } else {
        Rational b = c / n.y;  // ty <= b
        if (!hi || b < *hi) hi = b;
      }
    }
  }
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

std::optional<Rational> grid_min_scale(const ConvexPolygon& C, const std::vector<Point2>& pts, const Rational& res,
                                       int max_steps, const Rational& tx_lo, const Rational& tx_hi) {
  for (int j = 1; j <= max_steps; ++j) {
    const Rational s = j * res;
    for (Rational tx = tx_lo; tx <= tx_hi; tx += res) {
      auto iv = feasible_ty(C, pts, tx, s);
      if (!iv) continue;
      // Some multiple of res inside [lo, hi]?
      const Rational k = ceil(iv->first / res);
      if (k * res <= iv->second) return s;
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Point2, Rational>> grid_boundary_homothets(const ConvexPolygon& C,
                                                                 const std::vector<Point2>& pts,
                                                                 const Rational& res, const Rational& lo,
                                                                 const Rational& hi, const Rational& smax) {
  std::vector<std::pair<Point2, Rational>> out;
  for (Rational s = res; s <= smax; s += res)
    for (Rational tx = lo; tx <= hi; tx += res) {
      auto iv = feasible_ty(C, pts, tx, s);
      if (!iv) continue;
      for (Rational ty = ceil(iv->first / res) * res; ty <= iv->second; ty += res) {
        Point2 t{tx, ty};
        bool all_boundary = true;
        for (const auto& p : pts) {
          // Boundary iff some edge is tight.
          bool tight = false;
          for (std::size_t i = 0; i < C.size() && !tight; ++i) {
            const auto e = static_cast<std::ptrdiff_t>(i);
            tight = dot(C.outward_normal(e), p - t) == s * C.support_offset(e);
          }
          all_boundary = all_boundary && tight;
        }
        if (all_boundary) out.emplace_back(t, s);
      }
    }
  return out;
}

std::vector<Point2> random_interior_points(const ConvexPolygon& C, std::mt19937& rng, int n, int den) {
  const Rational x0 = C.min_x(), y0 = C.min_y();
  const Rational w = C.max_x() - x0, h = C.max_y() - y0;
  std::uniform_int_distribution<int> d(1, den - 1);
  std::vector<Point2> out;
  for (int attempt = 0; static_cast<int>(out.size()) < n; ++attempt) {
    if (attempt > 100000) throw std::runtime_error("too few grid points inside the polygon");
    Point2 p{x0 + w * frac(d(rng), den), y0 + h * frac(d(rng), den)};
    if (locate(C, p) != Location::Interior) continue;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

std::vector<Point2> random_general_points(const ConvexPolygon& C, std::mt19937& rng, int n, int den) {
  std::vector<Point2> out;
  for (int attempt = 0; static_cast<int>(out.size()) < n; ++attempt) {
    if (attempt > 100000) throw std::runtime_error("too few grid points in general position");
    const Point2 q = random_interior_points(C, rng, 1, den)[0];
    bool ok = true;
    for (const auto& p : out)
      for (std::size_t e = 0; e < C.size() && ok; ++e)
        if (cross(C.edge_vector(static_cast<std::ptrdiff_t>(e)), q - p) == 0) ok = false;
    if (ok) out.push_back(q);
  }
  return out;
}

Rational sampled_edge_epsilon(const ConvexPolygon& C, std::size_t i, const Point2& p, int boundary_samples,
                              int scale_steps) {
  const auto ie = static_cast<std::ptrdiff_t>(i);
  const Point2 v = C.vertex(ie);
  const Vec2 d = C.edge_vector(ie);
  const Vec2 nu(-d.y, d.x);
  const Rational dd = dot(d, d);
  auto level = [&](const Point2& x) { return dot(nu, x - v); };
  Rational H = 0;
  for (const auto& u : C.vertices()) H = std::max(H, level(u));
  const Rational smin = level(p) / H;

  std::vector<Point2> boundary;
  for (std::size_t e = 0; e < C.size(); ++e)
    for (int j = 0; j < boundary_samples; ++j)
      boundary.push_back(C.vertex(static_cast<std::ptrdiff_t>(e)) +
                         frac(j, boundary_samples) * C.edge_vector(static_cast<std::ptrdiff_t>(e)));

  std::optional<Rational> best;
  for (int j = 0; j <= scale_steps; ++j) {
    const Rational s = smin * (1 + frac(3 * j, scale_steps));
    for (const auto& b : boundary) {
      const Point2 t = p - s * b;
      std::optional<Rational> lo, hi;
      for (std::size_t e = 0; e < C.size(); ++e) {
        const Point2 a = t + s * C.vertex(static_cast<std::ptrdiff_t>(e));
        const Point2 c = t + s * C.vertex(static_cast<std::ptrdiff_t>(e + 1));
        const Rational za = level(a), zc = level(c);
        std::vector<Point2> hits;
        if (za == 0) hits.push_back(a);
        if ((za < 0 && zc > 0) || (za > 0 && zc < 0)) hits.push_back(a + (za / (za - zc)) * (c - a));
        for (const auto& x : hits) {
          const Rational u = dot(x - v, d) / dd;
          if (!lo || u < *lo) lo = u;
          if (!hi || u > *hi) hi = u;
        }
      }
      if (lo && (!best || *hi - *lo < *best)) best = *hi - *lo;
    }
  }
  return best.value_or(Rational(-1));
}

namespace {

// Open interval of t_y for which q is interior to (tx, ty) + s C.
std::optional<std::pair<Rational, Rational>> interior_ty(const ConvexPolygon& C, const Rational& s,
                                                         const Rational& tx, const Point2& q) {
  const Rational x = (q.x - tx) / s;
  if (!(C.min_x() < x && x < C.max_x())) return std::nullopt;
  std::optional<Rational> lo, hi;
  for (std::size_t e = 0; e < C.size(); ++e) {
    const Point2& a = C.vertex(static_cast<std::ptrdiff_t>(e));
    const Point2& b = C.vertex(static_cast<std::ptrdiff_t>(e + 1));
    if (a.x == b.x || !((a.x <= x && x <= b.x) || (b.x <= x && x <= a.x))) continue;
    const Rational y = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
    if (!lo || y < *lo) lo = y;
    if (!hi || y > *hi) hi = y;
  }
  return std::make_pair(q.y - s * *hi, q.y - s * *lo);
}

}  // namespace

std::optional<std::pair<Point2, Rational>> grid_separation_witness(const ConvexPolygon& C,
                                                                   const std::vector<Point2>& P,
                                                                   const Point2& d1, const Point2& d2,
                                                                   const Rational& res) {
  for (Rational s = res; s < 1; s += res) {
    // Offsets keeping t + s C inside C: t in (1 - s) C shifted, so t_x ranges
    // over the x-extent of (1 - s) C.
    const Rational span_lo = (1 - s) * C.min_x(), span_hi = (1 - s) * C.max_x();
    for (Rational tx = floor(span_lo / res) * res; tx <= span_hi; tx += res) {
      auto a = interior_ty(C, s, tx, d1), b = interior_ty(C, s, tx, d2);
      if (!a || !b) continue;
      Rational lo = std::max(a->first, b->first), hi = std::min(a->second, b->second);
      if (!(lo < hi)) continue;
      std::vector<Rational> cuts{lo, hi};
      for (const auto& p : P)
        if (auto i = interior_ty(C, s, tx, p)) {
          cuts.push_back(i->first);
          cuts.push_back(i->second);
        }
      std::sort(cuts.begin(), cuts.end());
      std::vector<Rational> cand = cuts;
      for (std::size_t j = 0; j + 1 < cuts.size(); ++j) cand.push_back((cuts[j] + cuts[j + 1]) / 2);
      for (const auto& ty : cand) {
        if (!(lo < ty && ty < hi)) continue;
        const Homothet H(make_shape(C), s, Point2(tx, ty));
        if (!contains(C, H.realize())) continue;
        bool clear = true;
        for (const auto& p : P)
          if (locate(H, p) == Location::Interior) clear = false;
        if (clear) return std::make_pair(Point2(tx, ty), s);
      }
    }
  }
  return std::nullopt;
}

}  // namespace oracle

namespace oracle {

namespace {

// Closed interval of t_y with q in (tx, ty) + s C.
std::optional<std::pair<Rational, Rational>> closed_ty(const ConvexPolygon& C, const Rational& s, const Rational& tx,
                                                       const Point2& q) {
  const Rational x = (q.x - tx) / s;
  if (x < C.min_x() || x > C.max_x()) return std::nullopt;
  std::optional<Rational> lo, hi;
  for (std::size_t e = 0; e < C.size(); ++e) {
    const Point2& a = C.vertex(static_cast<std::ptrdiff_t>(e));
    const Point2& b = C.vertex(static_cast<std::ptrdiff_t>(e + 1));
    std::vector<Rational> ys;
    if (a.x == b.x) {
      if (a.x == x) ys = {a.y, b.y};
    } else if ((a.x <= x && x <= b.x) || (b.x <= x && x <= a.x)) {
      ys = {a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)};
    }
    for (const auto& y : ys) {
      if (!lo || y < *lo) lo = y;
      if (!hi || y > *hi) hi = y;
    }
  }
  return std::make_pair(q.y - s * *hi, q.y - s * *lo);
}

}  // namespace

std::set<std::vector<std::size_t>> grid_ranges(const ConvexPolygon& C, const std::vector<Point2>& P,
                                               const Rational& res, const Rational& smax) {
  std::set<std::vector<std::size_t>> out;
  if (P.empty()) return out;
  Rational px_lo = P[0].x, px_hi = P[0].x;
  for (const auto& p : P) {
    px_lo = std::min(px_lo, p.x);
    px_hi = std::max(px_hi, p.x);
  }
  std::vector<std::optional<std::pair<Rational, Rational>>> iv(P.size());
  for (Rational s = res; s <= smax; s += res) {
    const Rational lo = floor((px_lo - s * C.max_x()) / res) * res - res;
    const Rational hi = px_hi - s * C.min_x() + res;
    for (Rational tx = lo; tx <= hi; tx += res) {
      std::vector<Rational> cuts;
      for (std::size_t i = 0; i < P.size(); ++i) {
        iv[i] = closed_ty(C, s, tx, P[i]);
        if (iv[i]) {
          cuts.push_back(iv[i]->first);
          cuts.push_back(iv[i]->second);
        }
      }
      if (cuts.empty()) continue;
      std::sort(cuts.begin(), cuts.end());
      std::vector<Rational> cand = cuts;
      for (std::size_t j = 0; j + 1 < cuts.size(); ++j) cand.push_back((cuts[j] + cuts[j + 1]) / 2);
      for (const auto& ty : cand) {
        std::vector<std::size_t> in;
        for (std::size_t i = 0; i < P.size(); ++i)
          if (iv[i] && iv[i]->first <= ty && ty <= iv[i]->second) in.push_back(i);
        out.insert(std::move(in));
      }
    }
  }
  return out;
}

}  // namespace oracle
