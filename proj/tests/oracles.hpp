#pragma once

// Brute-force grid oracles shared by the unit and acceptance tests. They are
// deliberately naive and independent of the LP and Delaunay code paths.

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "selfcover/geometry.hpp"

namespace oracle {

using selfcover::ConvexPolygon;
using selfcover::Point2;
using selfcover::Rational;

/// Interval of t_y for which offset (tx, ty) and scale s contain every point,
/// i.e. n_i.(p - t) <= s h_i for all i, p. Empty optional if infeasible.
std::optional<std::pair<Rational, Rational>> feasible_ty(const ConvexPolygon& C, const std::vector<Point2>& pts,
                                                         const Rational& tx, const Rational& s);

/// Smallest scale on the grid {j * res} (j <= max_steps) for which some grid
/// offset (multiples of res) gives a homothet containing pts.
std::optional<Rational> grid_min_scale(const ConvexPolygon& C, const std::vector<Point2>& pts, const Rational& res,
                                       int max_steps, const Rational& tx_lo, const Rational& tx_hi);

/// Grid homothets (offset and scale on the res grid) having all of pts on
/// the boundary.
std::vector<std::pair<Point2, Rational>> grid_boundary_homothets(const ConvexPolygon& C,
                                                                 const std::vector<Point2>& pts,
                                                                 const Rational& res, const Rational& lo,
                                                                 const Rational& hi, const Rational& smax);

/// n distinct points strictly inside C with coordinates on the 1/den grid of
/// its bounding box.
std::vector<Point2> random_interior_points(const ConvexPolygon& C, std::mt19937& rng, int n, int den);

/// Like random_interior_points, but no two points share a line parallel to
/// an edge of C.
std::vector<Point2> random_general_points(const ConvexPolygon& C, std::mt19937& rng, int n, int den);

/// Brute-force minimum, over sampled homothets C' = p - s b + s C (b on the
/// boundary of C, s on a grid), of the length of C' on the line of edge i,
/// in units of the edge length.
Rational sampled_edge_epsilon(const ConvexPolygon& C, std::size_t i, const Point2& p, int boundary_samples,
                              int scale_steps);

/// Grid search for a homothet t + s C inside C with d1, d2 interior and no
/// point of P interior. s and t_x run over multiples of res; t_y is solved
/// exactly (breakpoints and midpoints of the per-point open intervals).
std::optional<std::pair<Point2, Rational>> grid_separation_witness(const ConvexPolygon& C,
                                                                   const std::vector<Point2>& P,
                                                                   const Point2& d1, const Point2& d2,
                                                                   const Rational& res);

/// Subsets of P cut out by closed homothets t + s C with s and t_x on the
/// res grid (s up to smax); t_y is solved exactly from the per-point closed
/// intervals. Each subset is sorted.
std::set<std::vector<std::size_t>> grid_ranges(const ConvexPolygon& C, const std::vector<Point2>& P,
                                               const Rational& res, const Rational& smax);

}  // namespace oracle
