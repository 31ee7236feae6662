#pragma once

// JSON instance and cover files (rationals as "p/q" strings) and SVG output.

#include <map>
#include <string>
#include <vector>

#include "selfcover/gen_delaunay.hpp"
#include "selfcover/geometry.hpp"
#include "selfcover/lower_bounds.hpp"
#include "selfcover/polychromatic.hpp"
#include "selfcover/self_cover.hpp"

namespace selfcover {

struct InstanceFile {
  ConvexPolygon shape;
  std::vector<Point2> points;
  /// Only present in lower-bound instances.
  std::vector<Point2> dummies;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

struct CoverFile {
  InstanceFile instance;
  std::vector<Homothet> homothets;
  std::size_t bound = 0;

  friend bool operator==(const CoverFile&, const CoverFile&) = default;
};

/// Rationals may be given as integers or "p/q" strings. Throws ParseError
/// (with the byte position for malformed JSON) or GeometryError when the
/// shape is not a convex polygon.
InstanceFile parse_instance(const std::string& text);
CoverFile parse_cover(const std::string& text);
std::string emit_instance(const InstanceFile& inst);
std::string emit_cover(const CoverFile& cover);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Container, pieces, then points.
std::string render_cover(const ConvexPolygon& container, const std::vector<ConvexPolygon>& pieces,
                         const std::vector<Point2>& points);
/// Container, points, then dummies (drawn as hollow squares).
std::string render_lower_bound(const LBInstance& inst);
/// Points filled with a fixed palette by color.
std::string render_coloring(const ConvexPolygon& container, const std::vector<Point2>& points, const Coloring& col);
/// Container, witness homothets at 20% opacity, faces, then points.
std::string render_triangulation(const ConvexPolygon& container, const GDTriangulation& tri);

}  // namespace selfcover
