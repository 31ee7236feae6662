#include "selfcover/verification.hpp"

#include <sstream>

#include "selfcover/errors.hpp"
#include "selfcover/union_area.hpp"

namespace selfcover {
namespace {

void check_pieces(const ConvexPolygon& container, const std::vector<Point2>& P,
                  const std::vector<ConvexPolygon>& pieces, CertReport& rep) {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (const auto& v : pieces[i].vertices()) {
      if (locate(container, v) == Location::Exterior) {
        rep.contained_in_container = false;
        rep.violations.push_back({Violation::Kind::NotContained, i, std::nullopt, 0, v,
                                  "piece " + std::to_string(i) + " leaves the container"});
        break;
      }
    }
    for (std::size_t j = 0; j < P.size(); ++j) {
      if (locate(pieces[i], P[j]) == Location::Interior) {
        rep.avoids_interiors = false;
        rep.violations.push_back({Violation::Kind::PointInterior, i, j, 0, P[j],
                                  "point " + std::to_string(j) + " is interior to piece " + std::to_string(i)});
      }
    }
  }
}

void check_count(std::size_t count, std::size_t bound, CertReport& rep) {
  rep.count = count;
  rep.bound_ok = count <= bound;
  if (!rep.bound_ok)
    rep.violations.push_back({Violation::Kind::CountExceeded, std::nullopt, std::nullopt, 0, std::nullopt,
                              std::to_string(count) + " pieces exceed the bound " + std::to_string(bound)});
}

std::vector<ConvexPolygon> realize_all(const ConvexPolygon& container, const std::vector<Homothet>& hs) {
  std::vector<ConvexPolygon> out;
  out.reserve(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!is_homothetic_shape(hs[i].shape(), container))
      throw GeometryError("homothet " + std::to_string(i) + " is not of the container's shape");
    out.push_back(hs[i].realize());
  }
  return out;
}

}  // namespace

bool is_homothetic_shape(const ConvexPolygon& shape, const ConvexPolygon& container) {
  const std::size_t n = shape.size();
  if (n != container.size()) return false;
  const Vec2 e0 = container.edge_vector(0);
  for (std::size_t r = 0; r < n; ++r) {
    const auto off = static_cast<std::ptrdiff_t>(r);
    const Vec2 f0 = shape.edge_vector(off);
    if (sgn(cross(e0, f0)) != 0 || sgn(dot(e0, f0)) <= 0) continue;
    const Rational lambda = e0.x != 0 ? Rational(e0.x / f0.x) : Rational(e0.y / f0.y);
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) {
      const auto k = static_cast<std::ptrdiff_t>(i);
      same = container.edge_vector(k) == lambda * shape.edge_vector(k + off);
    }
    if (same) return true;
  }
  return false;
}

CertReport check_polygon_cover(const ConvexPolygon& container, const std::vector<Point2>& P,
                               const std::vector<ConvexPolygon>& pieces, std::size_t bound) {
  CertReport rep;
  check_pieces(container, P, pieces, rep);
  std::vector<ConvexPolygon> clipped;
  for (const auto& p : pieces)
    if (auto c = clip_convex(p, container)) clipped.push_back(std::move(*c));
  const Rational total = polygon_area(container);
  const Rational covered = union_area(clipped);
  rep.deficit = total - covered;
  rep.covers_exactly = sgn(rep.deficit) == 0;
  if (!rep.covers_exactly)
    rep.violations.push_back({Violation::Kind::AreaDeficit, std::nullopt, std::nullopt, rep.deficit, std::nullopt,
                              "uncovered area " + to_string(rep.deficit)});
  check_count(pieces.size(), bound, rep);
  return rep;
}

CertReport check_cover(const ConvexPolygon& container, const std::vector<Point2>& P,
                       const std::vector<Homothet>& hs, std::size_t bound) {
  return check_polygon_cover(container, P, realize_all(container, hs), bound);
}

CertReport check_cover_sampled(const ConvexPolygon& container, const std::vector<Point2>& P,
                               const std::vector<Homothet>& hs, const Rational& resolution) {
  if (sgn(resolution) <= 0) throw GeometryError("sampling resolution must be positive");
  CertReport rep;
  rep.sampled = true;
  const auto pieces = realize_all(container, hs);
  check_pieces(container, P, pieces, rep);
  rep.count = hs.size();

  std::vector<Point2> samples;
  auto add_ring = [&](const ConvexPolygon& poly) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto k = static_cast<std::ptrdiff_t>(i);
      samples.push_back(poly.vertex(k));
      samples.push_back((poly.vertex(k) + poly.vertex(k + 1)) / Rational(2));
    }
  };
  add_ring(container);
  for (const auto& p : pieces) add_ring(p);
  for (Rational x = container.min_x(); x <= container.max_x(); x += resolution)
    for (Rational y = container.min_y(); y <= container.max_y(); y += resolution) samples.emplace_back(x, y);

  for (const auto& s : samples) {
    if (locate(container, s) == Location::Exterior) continue;
    bool covered = false;
    for (const auto& p : pieces) {
      if (locate(p, s) != Location::Exterior) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      std::ostringstream msg;
      msg << "sample " << s << " is not covered";
      rep.violations.push_back({Violation::Kind::UncoveredSample, std::nullopt, std::nullopt, 0, s, msg.str()});
      break;
    }
  }
  return rep;
}

}  // namespace selfcover
