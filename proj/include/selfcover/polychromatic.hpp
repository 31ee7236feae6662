#pragma once

// Polychromatic colorings for homothets: the m_k threshold, exact range
// enumeration, a brute-force 2-coloring oracle, the recursive k-coloring and
// its verification.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "selfcover/geometry.hpp"

namespace selfcover {

struct Coloring {
  std::vector<int> assignment;
  int k = 1;
};

/// Nondecreasing self-coverability bound.
using BoundFunction = std::function<Integer(const Integer&)>;

/// m * f(m - 1)^(ceil(log2 k) - 1), with m_1 = m.
Integer mk_value(const Integer& m, int k, const BoundFunction& f);

/// Subsets of P cut out by closed homothets of the shape, each with a witness.
struct RangeFamily {
  ConvexPolygon shape;
  /// Sorted point indices -> a homothet H with P cap H equal to that set.
  std::map<std::vector<std::size_t>, Homothet> ranges;
};

/// Every arrangement cell of the planes "p on the line of edge i" in (t, s)
/// space has a vertex in its closure or reaches s = 0. Ranges are read off
/// small perturbations of each vertex in all 27 sign patterns of its three
/// active planes, plus the empty set and singletons. Planes of points that
/// are outside the vertex homothet anyway are ignored. Throws DegeneracyError
/// when the remaining planes at a vertex are more than three or dependent.
RangeFamily enumerate_ranges(const std::vector<Point2>& P, const ConvexPolygon& C);

/// First 2-coloring in which every range of at least m points has both
/// colors. Point 0 keeps color 0; the other points run through binary codes
/// in descending order, so the first candidate colors them all 1. Throws GeometryError
/// for more than 20 points.
std::optional<Coloring> oracle2_bruteforce(const std::vector<Point2>& P, const ConvexPolygon& C, int m);

using Oracle2 = std::function<std::optional<Coloring>(const std::vector<Point2>&)>;

struct AuditNode {
  int k = 1;
  std::vector<std::size_t> points;
  Integer threshold;
  /// Index of the node this one refines, or -1 for the root.
  int parent = -1;
};

struct Composition {
  Coloring coloring;
  std::vector<AuditNode> audit;
};

/// Colors P with ceil(k/2) colors recursively, then splits every class with
/// the 2-coloring oracle. For odd k the extra class is merged into color
/// k - 1. Throws CertificationError when the oracle fails on some class.
Composition compose_k_coloring(const std::vector<Point2>& P, int k, const Oracle2& oracle2, const BoundFunction& f,
                               const Integer& m);

struct ColoringViolation {
  std::vector<std::size_t> range;
  Homothet witness;
  std::vector<int> missing;
};

struct ColoringReport {
  std::size_t ranges_checked = 0;
  std::vector<ColoringViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Every range with at least `threshold` points must show all k colors.
ColoringReport verify_coloring(const std::vector<Point2>& P, const ConvexPolygon& C, const Coloring& col,
                               const Integer& threshold);
ColoringReport verify_coloring(const RangeFamily& ranges, const Coloring& col, const Integer& threshold);

}  // namespace selfcover
