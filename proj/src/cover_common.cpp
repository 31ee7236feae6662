#include <algorithm>
#include <sstream>

#include "cover_internal.hpp"
#include "selfcover/errors.hpp"

namespace selfcover {

ConvexPolygon AxisRect::polygon() const { return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}); }

std::vector<Point2> interior_points(const ConvexPolygon& container, const std::vector<Point2>& P) {
  std::vector<Point2> out;
  for (const auto& p : P) {
    const Location loc = locate(container, p);
    if (loc == Location::Exterior) {
      std::ostringstream os;
      os << "point " << p << " lies outside the container";
      throw GeometryError(os.str());
    }
    if (loc == Location::Interior) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RectCover cover_rectangle_axis(const AxisRect& R, const std::vector<Point2>& P) {
  if (!(R.x0 < R.x1 && R.y0 < R.y1)) throw GeometryError("empty rectangle");
  const ConvexPolygon poly = R.polygon();
  RectCover out{R, interior_points(poly, P), {}, 0, {}};
  std::vector<Rational> cuts{R.x0};
  for (const auto& p : out.pts) cuts.push_back(p.x);
  cuts.push_back(R.x1);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.strips.push_back({cuts[i], R.y0, cuts[i + 1], R.y1});
  out.bound_claimed = out.pts.size() + 1;
  std::vector<ConvexPolygon> pieces;
  for (const auto& s : out.strips) pieces.push_back(s.polygon());
  out.report = check_polygon_cover(poly, out.pts, pieces, out.bound_claimed);
  return out;
}

namespace detail {

void certify(CoverSolution& sol) { sol.report = check_cover(sol.container, sol.pts, sol.homothets, sol.bound_claimed); }

std::pair<Point2, Rational> square_frame(const ConvexPolygon& S) {
  if (S.size() == 4) {
    const Rational x0 = S.min_x(), y0 = S.min_y();
    const Rational w = S.max_x() - x0;
    if (w == S.max_y() - y0) {
      const ConvexPolygon expect({{x0, y0}, {x0 + w, y0}, {x0 + w, y0 + w}, {x0, y0 + w}});
      if (expect == S) return {Point2(x0, y0), w};
    }
  }
  throw GeometryError("container is not an axis-parallel square");
}

}  // namespace detail
}  // namespace selfcover
