#include "selfcover/homothets.hpp"

#include <algorithm>

#include "selfcover/errors.hpp"
#include "selfcover/lp.hpp"

namespace selfcover {

std::optional<std::pair<Point2, Rational>> solve_support_system(const ConvexPolygon& C, const std::size_t (&edges)[3],
                                                                 const Rational (&rhs)[3]) {
  Rational m[3][3];
  for (int r = 0; r < 3; ++r) {
    const Vec2 n = C.outward_normal(static_cast<std::ptrdiff_t>(edges[r]));
    m[r][0] = n.x;
    m[r][1] = n.y;
    m[r][2] = C.support_offset(static_cast<std::ptrdiff_t>(edges[r]));
  }
  auto det3 = [](const Rational (&a)[3][3]) -> Rational {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  const Rational det = det3(m);
  if (sgn(det) == 0) return std::nullopt;
  Rational sol[3];
  for (int col = 0; col < 3; ++col) {
    Rational mc[3][3];
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) mc[r][c] = (c == col) ? rhs[r] : m[r][c];
    sol[col] = det3(mc) / det;
  }
  return std::make_pair(Point2(sol[0], sol[1]), sol[2]);
}

std::vector<Homothet> circumscribing_homothets(const ShapePtr& C, const Point2& a, const Point2& b, const Point2& c) {
  if (sgn(orient(a, b, c)) == 0) throw GeometryError("circumscribing_homothets: points are collinear");
  const ConvexPolygon& poly = *C;
  const std::size_t m = poly.size();
  const Point2* pts[3] = {&a, &b, &c};
  std::vector<Homothet> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t edges[3] = {i, j, k};
        Rational rhs[3];
        for (int r = 0; r < 3; ++r) rhs[r] = dot(poly.outward_normal(static_cast<std::ptrdiff_t>(edges[r])), *pts[r]);
        auto sol = solve_support_system(poly, edges, rhs);
        if (!sol || sgn(sol->second) <= 0) continue;
        const auto& [t, s] = *sol;
        bool on_edges = true;
        for (int r = 0; r < 3 && on_edges; ++r) {
          const auto e = static_cast<std::ptrdiff_t>(edges[r]);
          const Vec2 d = poly.edge_vector(e);
          const Rational along = dot(*pts[r] - t - s * poly.vertex(e), d);
          on_edges = sgn(along) >= 0 && along <= s * dot(d, d);
        }
        if (!on_edges) continue;
        Homothet h(C, s, t);
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
      }
  return out;
}

std::optional<Homothet> Enclosing::homothet() const {
  if (sgn(scale) <= 0) return std::nullopt;
  return Homothet(shape, scale, offset);
}

Enclosing min_enclosing_homothet(const ShapePtr& C, std::span<const Point2> pts) {
  if (pts.empty()) throw GeometryError("min_enclosing_homothet: empty point set");
  const ConvexPolygon& poly = *C;
  LinearProgram lp;
  lp.add_variable(true);   // t_x
  lp.add_variable(true);   // t_y
  lp.add_variable(false);  // s
  for (const auto& p : pts)
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto e = static_cast<std::ptrdiff_t>(i);
      const Vec2 n = poly.outward_normal(e);
      lp.add_row({-n.x, -n.y, -poly.support_offset(e)}, Sense::LessEq, -dot(n, p));
    }
  auto res = minimize_lex(lp, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  if (!res.optimal()) throw GeometryError("min_enclosing_homothet: LP failed");
  return {res.x[2], {res.x[0], res.x[1]}, C};
}

}  // namespace selfcover
