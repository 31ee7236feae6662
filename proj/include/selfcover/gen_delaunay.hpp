#pragma once

// Generalized Delaunay triangulation of a point set with respect to a convex
// polygon C: three points span a face when some homothet of C has them on its
// boundary and no input point in its interior.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "selfcover/geometry.hpp"

namespace selfcover {

enum class DegeneracyPolicy {
  /// Exact input; four points on one witness boundary (or any other tie the
  /// construction depends on) raises DegeneracyError.
  Reject,
  /// Simulation of simplicity: every point is moved by eps * v(p) with v
  /// derived from its coordinates, and eps -> 0. Faces that collapse in the
  /// limit are dropped and witnesses are the limit homothets.
  Symbolic,
};

struct GDTriangulation {
  std::vector<Point2> points;
  /// Counter-clockwise index triples.
  std::vector<std::array<std::size_t, 3>> faces;
  std::vector<Homothet> witnesses;
  /// Counter-clockwise hull vertices (collinear boundary points omitted).
  std::vector<std::size_t> hull;
};

struct GDOptions {
  DegeneracyPolicy policy = DegeneracyPolicy::Reject;
};

/// Full triangulation. Requires |P| >= 3, distinct and not all collinear.
GDTriangulation gdt_build(const std::vector<Point2>& P, const ShapePtr& C, const GDOptions& opts = {});

/// Only the faces incident to the listed point indices.
GDTriangulation gdt_build_stars(const std::vector<Point2>& P, const ShapePtr& C,
                                const std::vector<std::size_t>& centers, const GDOptions& opts = {});

struct ValidationReport {
  bool witnesses_ok = true;
  bool disjoint = true;
  /// Faces cover the convex hull. Guaranteed when the hull points are
  /// pairwise Delaunay neighbours (far or boundary points were added), not in
  /// general: the outer face of a generalized Delaunay graph can be non-convex.
  bool tiles_hull = true;
  bool connected = true;
  bool euler_ok = true;
  std::vector<std::string> failures;

  bool ok() const { return witnesses_ok && disjoint && tiles_hull && connected && euler_ok; }
};

/// Checks witnesses, disjointness and hull tiling (face areas against union
/// area and hull area), connectivity of
/// the edge graph and V - E + F = 2. Points lying inside an edge split it.
ValidationReport gdt_validate(const GDTriangulation& T, const ConvexPolygon& C);

/// Deterministic rational jitter: each coordinate moves by at most magnitude/2.
std::vector<Point2> perturb(const std::vector<Point2>& P, std::uint64_t seed, const Rational& magnitude);

}  // namespace selfcover
