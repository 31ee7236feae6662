#include <algorithm>
#include <numeric>
#include <sstream>

#include "cover_internal.hpp"
#include "selfcover/errors.hpp"
#include "selfcover/union_area.hpp"

namespace selfcover {
namespace {

// Lengths along edge i are measured in the parameter t of v_i + t * d_i, so
// the edge itself is [0, 1]. Heights above the edge line use the inward
// normal (-d.y, d.x) without normalization. Both keep everything rational.
struct EdgeFrame {
  Point2 v;
  Vec2 d, nu;
  Rational dd;

  EdgeFrame(const ConvexPolygon& C, std::size_t i) {
    const auto e = static_cast<std::ptrdiff_t>(i);
    v = C.vertex(e);
    d = C.edge_vector(e);
    nu = Vec2(-d.y, d.x);
    dd = dot(d, d);
  }
  Rational level(const Point2& x) const { return dot(nu, x - v); }
  Rational param(const Point2& x) const { return dot(d, x - v) / dd; }
  Point2 at(const Rational& t) const { return v + t * d; }
};

// Chord of C at a given level, as a parameter length.
Rational chord(const ConvexPolygon& C, const EdgeFrame& f, const Rational& z) {
  bool any = false;
  Rational lo, hi;
  auto take = [&](const Rational& t) {
    if (!any) {
      lo = hi = t;
      any = true;
    } else {
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
  };
  const std::size_t n = C.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Point2& a = C.vertex(static_cast<std::ptrdiff_t>(j));
    const Point2& b = C.vertex(static_cast<std::ptrdiff_t>(j + 1));
    const Rational za = f.level(a), zb = f.level(b);
    if (za == z) take(f.param(a));
    if ((za < z && z < zb) || (zb < z && z < za)) take(f.param(a + ((z - za) / (zb - za)) * (b - a)));
  }
  return any ? hi - lo : Rational(0);
}

// min over base levels z0 in [0, H) of chord(z0) / (H - z0); attained at a
// vertex level because chord is concave and piecewise linear.
Rational epsilon_per_height(const ConvexPolygon& C, const EdgeFrame& f) {
  std::vector<Rational> levels;
  for (const auto& v : C.vertices()) levels.push_back(f.level(v));
  const Rational H = *std::max_element(levels.begin(), levels.end());
  bool first = true;
  Rational best;
  for (const auto& z : levels) {
    if (z >= H) continue;
    const Rational r = chord(C, f, z) / (H - z);
    if (first || r < best) best = r;
    first = false;
  }
  return best;
}

void check_probe(const ConvexPolygon& C, const Point2& p) {
  if (locate(C, p) != Location::Interior) throw GeometryError("probe point must be interior");
}

Rational shadow_length(const ConvexPolygon& C, std::size_t i, const Point2& p) {
  const EdgeFrame f(C, i);
  const auto [a, b] = edge_shadow(C, i, p);
  return f.param(b) - f.param(a);
}

}  // namespace

std::pair<Point2, Point2> edge_shadow(const ConvexPolygon& C, std::size_t i, const Point2& p) {
  const EdgeFrame f(C, i);
  if (f.level(p) <= 0) throw GeometryError("probe point not on the inner side of the edge");
  const auto e = static_cast<std::ptrdiff_t>(i);
  auto hit = [&](const Vec2& dir) {
    const Rational t = -cross(f.d, p - f.v) / cross(f.d, dir);
    return p + t * dir;
  };
  Point2 a = hit(C.edge_vector(e - 1)), b = hit(C.edge_vector(e + 1));
  if (f.param(b) < f.param(a)) std::swap(a, b);
  return {a, b};
}

Rational edge_epsilon(const ConvexPolygon& C, std::size_t i, const Point2& p) {
  const EdgeFrame f(C, i);
  const Rational h = f.level(p);
  if (h <= 0) throw GeometryError("probe point not on the inner side of the edge");
  return h * epsilon_per_height(C, f);
}

std::vector<EdgeConstant> edge_constants_at(const ConvexPolygon& C, const Point2& probe) {
  check_probe(C, probe);
  std::vector<EdgeConstant> out;
  for (std::size_t i = 0; i < C.size(); ++i) {
    const Rational ratio = shadow_length(C, i, probe) / edge_epsilon(C, i, probe);
    out.push_back({i, ratio, static_cast<std::size_t>(floor(ratio).get_ui())});
  }
  return out;
}

std::vector<EdgeConstant> edge_constants(const ConvexPolygon& C) { return edge_constants_at(C, C.centroid_of_vertices()); }

CoverSolution cover_convex_polygon(const ConvexPolygon& C, const std::vector<Point2>& P, PolygonCoverStats* stats) {
  const ShapePtr shape = make_shape(C);
  CoverSolution sol{C, interior_points(C, P), {}, 0, {}};
  const std::size_t k = sol.pts.size();
  const std::vector<EdgeConstant> consts = edge_constants(C);
  std::size_t per_point = 0;
  for (const auto& ec : consts) per_point += ec.n_points + 2;
  sol.bound_claimed = k * per_point + 8;
  PolygonCoverStats local;
  if (k == 0) {
    sol.homothets.emplace_back(shape, 1, Point2(0, 0));
    detail::certify(sol);
    if (stats) *stats = local;
    return sol;
  }

  // Blocking points on every edge, spaced closer than eps, around the shadow
  // of each input point. Clamping to the edge only merges points with the
  // vertices, which are added anyway.
  std::vector<Point2> all = sol.pts;
  for (const auto& p : sol.pts) {
    for (const auto& ec : consts) {
      const EdgeFrame f(C, ec.edge_index);
      const auto [a, b] = edge_shadow(C, ec.edge_index, p);
      const Rational t1 = f.param(a), t2 = f.param(b);
      const Rational eps = edge_epsilon(C, ec.edge_index, p) ;
      const Rational gap = (t2 - t1) / static_cast<long>(ec.n_points + 1);
      const Rational delta = std::min(Rational(eps / 4), Rational((eps - gap) / 3));
      std::vector<Rational> ts{t1 - delta};
      for (std::size_t j = 1; j <= ec.n_points; ++j) ts.push_back(t1 + static_cast<long>(j) * gap);
      ts.push_back(t2 + delta);
      for (auto& t : ts) all.push_back(f.at(std::clamp(t, Rational(0), Rational(1))));
    }
  }
  for (const auto& v : C.vertices()) all.push_back(v);
  std::sort(all.begin() + static_cast<std::ptrdiff_t>(k), all.end());
  all.erase(std::unique(all.begin() + static_cast<std::ptrdiff_t>(k), all.end()), all.end());
  local.added_points = all.size() - k;

  std::vector<std::size_t> centers(k);
  std::iota(centers.begin(), centers.end(), 0);
  const GDTriangulation tri = gdt_build_stars(all, shape, centers, {DegeneracyPolicy::Symbolic});
  local.raw_faces = tri.faces.size();

  std::vector<Homothet> hs;
  for (const Homothet& w : tri.witnesses) {
    if (!contains(C, w.realize())) {
      std::ostringstream os;
      os << "witness with scale " << w.scale() << " leaves the container";
      throw CertificationError(os.str());
    }
    if (std::find(hs.begin(), hs.end(), w) == hs.end()) hs.push_back(w);
  }
  local.after_dedupe = hs.size();

  std::vector<ConvexPolygon> polys;
  for (const auto& h : hs) polys.push_back(h.realize());
  std::vector<bool> dropped(hs.size(), false);
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = 0; j < hs.size() && !dropped[i]; ++j)
      if (i != j && !dropped[j] && contains(polys[j], polys[i])) dropped[i] = true;

  // Greedy removal of pieces already covered by the rest, smallest first.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (!dropped[i]) order.push_back(i);
  std::vector<Rational> areas;
  for (const auto& poly : polys) areas.push_back(polygon_area(poly));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return areas[a] < areas[b]; });
  for (std::size_t i : order) {
    std::vector<ConvexPolygon> parts;
    for (std::size_t j = 0; j < hs.size(); ++j) {
      if (j == i || dropped[j]) continue;
      if (auto c = clip_convex(polys[j], polys[i])) parts.push_back(std::move(*c));
    }
    if (union_area(parts) == areas[i]) dropped[i] = true;
  }
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (!dropped[i]) sol.homothets.push_back(hs[i]);
  local.after_prune = sol.homothets.size();
  if (stats) *stats = local;
  detail::certify(sol);
  return sol;
}

}  // namespace selfcover
