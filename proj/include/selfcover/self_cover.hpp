#pragma once

// Self-covering algorithms: for a container S and points P interior to S,
// produce homothets of S whose union is S and whose interiors avoid P.

#include <cstddef>
#include <vector>

#include "selfcover/gen_delaunay.hpp"
#include "selfcover/geometry.hpp"
#include "selfcover/verification.hpp"

namespace selfcover {

struct CoverSolution {
  ConvexPolygon container;
  /// The points actually covered around (boundary points already dropped).
  std::vector<Point2> pts;
  std::vector<Homothet> homothets;
  std::size_t bound_claimed = 0;
  /// Result of check_cover(container, pts, homothets, bound_claimed).
  CertReport report;
};

/// Closed axis-parallel rectangle [x0, x1] x [y0, y1].
struct AxisRect {
  Rational x0, y0, x1, y1;

  Rational width() const { return x1 - x0; }
  Rational height() const { return y1 - y0; }
  ConvexPolygon polygon() const;
};

/// Strips of a rectangle are not homothets of it, so they are returned as
/// rectangles and certified with check_polygon_cover.
struct RectCover {
  AxisRect container;
  std::vector<Point2> pts;
  std::vector<AxisRect> strips;
  std::size_t bound_claimed = 0;
  CertReport report;
};

/// Points strictly inside the container. Boundary points are dropped; a point
/// outside raises GeometryError.
std::vector<Point2> interior_points(const ConvexPolygon& container, const std::vector<Point2>& P);

/// Vertical strips between consecutive distinct x-coordinates: at most k + 1.
RectCover cover_rectangle_axis(const AxisRect& R, const std::vector<Point2>& P);

/// Inductive cover by homothets of a triangle, at most 2k + 1. Each of the
/// three edges is tried as the base of the induction and the smallest cover
/// kept, which makes the count invariant under affine maps.
CoverSolution cover_triangle(const ConvexPolygon& T, const std::vector<Point2>& P);

/// The same cover for one fixed base: the edge starting at vertex `start`
/// of T (counter-clockwise order) is sent to the canonical bottom edge.
std::vector<Homothet> cover_triangle_from(const ShapePtr& T, const std::vector<Point2>& interior, std::size_t start);

/// Witnesses of the generalized Delaunay triangulation of P plus three far
/// points in reflected position, clipped to T. 2k + 1 under general position.
CoverSolution cover_triangle_delaunay(const ConvexPolygon& T, const std::vector<Point2>& P,
                                      const GDOptions& opts = {});

/// Axis-parallel square cover with at most 2k + 2 squares.
CoverSolution cover_square(const ConvexPolygon& S, const std::vector<Point2>& P);

/// Rectangle [0, a] x [0, b] with b <= a, points P in it and a point p on the
/// top edge. Returns axis-parallel squares (as rectangles) of which at most
/// 2|P'| + 2 are produced, where P' are the points of P that matter. Their
/// union is R when a <= 2b and lies between R and R plus a cap of height
/// a - 2b above the top edge otherwise.
std::vector<AxisRect> lemma_square_cover(const Rational& a, const Rational& b, const std::vector<Point2>& P,
                                         const Point2& p);

/// Delaunay route for squares: P, its 4k side projections and the corners are
/// triangulated and each witness pushed back inside. At most 6k + 2.
CoverSolution cover_square_delaunay(const ConvexPolygon& S, const std::vector<Point2>& P);

struct EdgeConstant {
  std::size_t edge_index = 0;
  /// |p_l p_r| / eps; independent of the probe point.
  Rational seg_ratio;
  /// floor(seg_ratio).
  std::size_t n_points = 0;
};

/// For a probe point p strictly on the inner side of edge i, the points where
/// the lines through p parallel to the neighbouring edges meet the edge line,
/// ordered along the edge direction. They coincide when those edges are
/// parallel.
std::pair<Point2, Point2> edge_shadow(const ConvexPolygon& C, std::size_t i, const Point2& p);

/// Minimum length of closure(C') meeting the line of edge i, over homothets
/// C' of C that have p on their boundary and meet that line.
Rational edge_epsilon(const ConvexPolygon& C, std::size_t i, const Point2& p);

/// Ratios computed at the vertex centroid.
std::vector<EdgeConstant> edge_constants(const ConvexPolygon& C);
/// Ratios computed at an arbitrary interior probe point.
std::vector<EdgeConstant> edge_constants_at(const ConvexPolygon& C, const Point2& probe);

struct PolygonCoverStats {
  std::size_t added_points = 0;
  std::size_t raw_faces = 0;
  std::size_t after_dedupe = 0;
  std::size_t after_prune = 0;
};

/// Cover of an arbitrary convex polygon with at most k * sum(N_i + 2) + 8
/// homothets.
CoverSolution cover_convex_polygon(const ConvexPolygon& C, const std::vector<Point2>& P,
                                   PolygonCoverStats* stats = nullptr);

}  // namespace selfcover
