#pragma once

// Certification of covers: union equals the container, every piece lies in
// the container, no point is interior to a piece, and the count is bounded.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "selfcover/geometry.hpp"

namespace selfcover {

struct Violation {
  enum class Kind { NotContained, PointInterior, AreaDeficit, UncoveredSample, CountExceeded };
  Kind kind;
  std::optional<std::size_t> piece;
  std::optional<std::size_t> point;
  /// Uncovered area for AreaDeficit.
  Rational deficit;
  /// Offending location for UncoveredSample / NotContained.
  std::optional<Point2> where;
  std::string message;
};

struct CertReport {
  bool covers_exactly = false;
  bool contained_in_container = true;
  bool avoids_interiors = true;
  std::size_t count = 0;
  bool bound_ok = true;
  /// container area - union area (0 when covers_exactly).
  Rational deficit;
  /// Set by check_cover_sampled: coverage was only sampled.
  bool sampled = false;
  std::vector<Violation> violations;

  /// All four conditions hold (never true for a sampled report).
  bool ok() const { return covers_exactly && contained_in_container && avoids_interiors && bound_ok; }
};

/// True when h's shape is a positive homothet of container (same vertex
/// cycle up to scaling and translation).
bool is_homothetic_shape(const ConvexPolygon& shape, const ConvexPolygon& container);

/// Exact certification. Throws GeometryError when a homothet is not of the
/// container's shape.
CertReport check_cover(const ConvexPolygon& container, const std::vector<Point2>& P,
                       const std::vector<Homothet>& hs, std::size_t bound);

/// Same conditions for arbitrary convex pieces (used for rectangle strips,
/// which are not homothets of the rectangle).
CertReport check_polygon_cover(const ConvexPolygon& container, const std::vector<Point2>& P,
                               const std::vector<ConvexPolygon>& pieces, std::size_t bound);

/// Fast pre-check. Containment and avoidance are exact; coverage is probed on
/// a grid of the given resolution plus all piece and container vertices and
/// edge midpoints. covers_exactly is never set; an uncovered sample is a
/// definitive failure.
CertReport check_cover_sampled(const ConvexPolygon& container, const std::vector<Point2>& P,
                               const std::vector<Homothet>& hs, const Rational& resolution);

}  // namespace selfcover
