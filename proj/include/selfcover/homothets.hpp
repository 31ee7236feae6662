#pragma once

// Exact solvers for homothets pinned by points: circumscribing homothets of
// three points and the minimum enclosing homothet of a point set.

#include <optional>
#include <span>
#include <vector>

#include "selfcover/geometry.hpp"

namespace selfcover {

/// Every homothet of C having a, b and c on its boundary. For each ordered
/// triple of edges (i, j, k) the 3x3 system n_i.(a - t) = s h_i, ... is solved
/// and kept when s > 0 and each point lies on its assigned closed edge.
/// Throws GeometryError for collinear (or repeated) points.
std::vector<Homothet> circumscribing_homothets(const ShapePtr& C, const Point2& a, const Point2& b, const Point2& c);

/// Result of the minimum enclosing homothet LP. scale may be 0 when all the
/// points coincide; homothet() is then empty.
struct Enclosing {
  Rational scale;
  Point2 offset;
  ShapePtr shape;

  std::optional<Homothet> homothet() const;
};

/// Minimum scale homothet of C whose closure contains pts; among optima the
/// lexicographically smallest offset (x, then y) is returned.
Enclosing min_enclosing_homothet(const ShapePtr& C, std::span<const Point2> pts);

/// Solves n_ei . t + s h_ei = rhs_i for three edges. nullopt when singular.
std::optional<std::pair<Point2, Rational>> solve_support_system(const ConvexPolygon& C, const std::size_t (&edges)[3],
                                                                 const Rational (&rhs)[3]);

}  // namespace selfcover
