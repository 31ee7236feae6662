#pragma once

// Exact planar geometry kernel: points, strictly convex polygons, homothets,
// half-planes and affine maps. Every predicate is decided exactly.

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "selfcover/rational.hpp"

namespace selfcover {

struct Point2 {
  Rational x;
  Rational y;

  Point2() = default;
  Point2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  Point2(long x_, long y_) : x(x_), y(y_) {}

  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator-(const Point2& a) { return {-a.x, -a.y}; }
  friend Point2 operator*(const Rational& s, const Point2& a) { return {s * a.x, s * a.y}; }
  friend Point2 operator*(const Point2& a, const Rational& s) { return {s * a.x, s * a.y}; }
  friend Point2 operator/(const Point2& a, const Rational& s) { return {a.x / s, a.y / s}; }
  Point2& operator+=(const Point2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  /// Lexicographic (x, then y).
  friend bool operator<(const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

using Vec2 = Point2;

std::ostream& operator<<(std::ostream& os, const Point2& p);

inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
/// Twice the signed area of (a, b, c); positive for a left turn.
inline Rational orient(const Point2& a, const Point2& b, const Point2& c) { return cross(b - a, c - a); }

enum class Location { Interior, Boundary, Exterior };

std::ostream& operator<<(std::ostream& os, Location loc);

/// Closed strictly convex polygon, vertices stored counter-clockwise.
class ConvexPolygon {
 public:
  /// Accepts either orientation; throws GeometryError unless the vertices
  /// form a strictly convex polygon with at least three distinct vertices.
  explicit ConvexPolygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  /// Vertex with cyclic indexing.
  const Point2& vertex(std::ptrdiff_t i) const;
  /// vertex(i + 1) - vertex(i).
  Vec2 edge_vector(std::ptrdiff_t i) const;
  /// Outward (non-unit) normal of edge i.
  Vec2 outward_normal(std::ptrdiff_t i) const;
  /// outward_normal(i) . vertex(i); the polygon is { x : n_i . x <= h_i }.
  Rational support_offset(std::ptrdiff_t i) const;

  Point2 centroid_of_vertices() const;
  Rational min_x() const;
  Rational max_x() const;
  Rational min_y() const;
  Rational max_y() const;

  /// Same vertex cycle, regardless of which vertex is listed first.
  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b);

 private:
  std::vector<Point2> vertices_;
};

using ShapePtr = std::shared_ptr<const ConvexPolygon>;

inline ShapePtr make_shape(ConvexPolygon poly) { return std::make_shared<const ConvexPolygon>(std::move(poly)); }

/// offset + scale * shape, scale > 0.
class Homothet {
 public:
  Homothet(ShapePtr shape, Rational scale, Point2 offset);

  const ConvexPolygon& shape() const { return *shape_; }
  const ShapePtr& shape_ptr() const { return shape_; }
  const Rational& scale() const { return scale_; }
  const Point2& offset() const { return offset_; }

  Point2 vertex(std::ptrdiff_t i) const { return offset_ + scale_ * shape_->vertex(i); }
  ConvexPolygon realize() const;
  /// Support value of edge i: the homothet is { x : n_i . x <= support(i) }.
  Rational support(std::ptrdiff_t i) const;

  friend bool operator==(const Homothet& a, const Homothet& b) {
    return a.scale_ == b.scale_ && a.offset_ == b.offset_ &&
           (a.shape_ == b.shape_ || *a.shape_ == *b.shape_);
  }

 private:
  ShapePtr shape_;
  Rational scale_;
  Point2 offset_;
};

/// The points p with normal . p >= threshold.
struct HalfPlane {
  Vec2 normal;
  Rational threshold;

  HalfPlane(Vec2 normal_, Rational threshold_);
  bool contains(const Point2& p) const { return dot(normal, p) >= threshold; }
  Rational evaluate(const Point2& p) const { return dot(normal, p) - threshold; }
};

/// x -> linear * x + translation, with nonzero determinant.
class AffineMap {
 public:
  AffineMap(Rational a, Rational b, Rational c, Rational d, Point2 translation);
  static AffineMap identity();

  Point2 apply(const Point2& p) const;
  Vec2 apply_linear(const Vec2& v) const;
  AffineMap inverse() const;
  /// (this o other)(x) = this(other(x)).
  AffineMap compose(const AffineMap& other) const;
  Rational determinant() const { return a_ * d_ - b_ * c_; }
  bool is_identity() const;

  ConvexPolygon apply(const ConvexPolygon& poly) const;
  /// Image of a homothet; its shape is the image of the homothet's shape.
  Homothet apply(const Homothet& h, const ShapePtr& mapped_shape) const;

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  const Point2& translation() const { return translation_; }

 private:
  Rational a_, b_, c_, d_;
  Point2 translation_;
};

Location locate(const ConvexPolygon& region, const Point2& q);
Location locate(const Homothet& region, const Point2& q);

/// Intersection with a half-plane; nullopt when it has empty interior.
std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, const HalfPlane& h);
/// Intersection of two convex polygons; nullopt when it has empty interior.
std::optional<ConvexPolygon> clip_convex(const ConvexPolygon& subject, const ConvexPolygon& clip);

/// (0,0), (2,0), (1,1).
const ConvexPolygon& canonical_triangle();

/// Affine map sending t (starting at its lexicographically least vertex, in
/// counter-clockwise order) onto the canonical triangle.
AffineMap canonical_triangle_map(const ConvexPolygon& t);
/// Same, with vertex `start` sent to the origin.
AffineMap canonical_triangle_map(const ConvexPolygon& t, std::size_t start);

Rational polygon_area(const ConvexPolygon& poly);
Rational signed_area(std::span<const Point2> ring);

/// Counter-clockwise hull without collinear vertices; may have fewer than
/// three points for degenerate input.
std::vector<Point2> convex_hull(std::vector<Point2> points);

/// True when every vertex of inner lies in (the closed) outer.
bool contains(const ConvexPolygon& outer, const ConvexPolygon& inner);

}  // namespace selfcover
