#include "selfcover/geometry.hpp"

#include <algorithm>
#include <utility>

#include "selfcover/errors.hpp"

namespace selfcover {

std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << '(' << to_string(p.x) << ", " << to_string(p.y) << ')';
}

std::ostream& operator<<(std::ostream& os, Location loc) {
  switch (loc) {
    case Location::Interior: return os << "Interior";
    case Location::Boundary: return os << "Boundary";
    case Location::Exterior: return os << "Exterior";
  }
  return os;
}

Rational signed_area(std::span<const Point2> ring) {
  Rational twice = 0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(ring[i], ring[(i + 1) % n]);
  return twice / 2;
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw GeometryError("convex polygon needs at least 3 vertices");
  if (signed_area(vertices_) < 0) std::reverse(vertices_.begin(), vertices_.end());
  // Every vertex not on edge i must be strictly to its left; this rules out
  // repeated vertices, collinear triples and self-overlapping windings at once.
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % n];
    if (a == b) throw GeometryError("convex polygon has repeated vertices");
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (orient(a, b, vertices_[j]) <= 0) throw GeometryError("polygon is not strictly convex");
    }
  }
}

bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
  const std::size_t n = a.vertices_.size();
  if (n != b.vertices_.size()) return false;
  auto it = std::find(b.vertices_.begin(), b.vertices_.end(), a.vertices_[0]);
  if (it == b.vertices_.end()) return false;
  const std::size_t off = static_cast<std::size_t>(it - b.vertices_.begin());
  for (std::size_t i = 0; i < n; ++i)
    if (a.vertices_[i] != b.vertices_[(i + off) % n]) return false;
  return true;
}

const Point2& ConvexPolygon::vertex(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

Vec2 ConvexPolygon::edge_vector(std::ptrdiff_t i) const { return vertex(i + 1) - vertex(i); }

Vec2 ConvexPolygon::outward_normal(std::ptrdiff_t i) const {
  const Vec2 d = edge_vector(i);
  return {d.y, -d.x};
}

Rational ConvexPolygon::support_offset(std::ptrdiff_t i) const { return dot(outward_normal(i), vertex(i)); }

Point2 ConvexPolygon::centroid_of_vertices() const {
  Point2 sum(0, 0);
  for (const auto& v : vertices_) sum += v;
  return sum / Rational(static_cast<long>(vertices_.size()));
}

Rational ConvexPolygon::min_x() const {
  return std::min_element(vertices_.begin(), vertices_.end(), [](auto& a, auto& b) { return a.x < b.x; })->x;
}
Rational ConvexPolygon::max_x() const {
  return std::max_element(vertices_.begin(), vertices_.end(), [](auto& a, auto& b) { return a.x < b.x; })->x;
}
Rational ConvexPolygon::min_y() const {
  return std::min_element(vertices_.begin(), vertices_.end(), [](auto& a, auto& b) { return a.y < b.y; })->y;
}
Rational ConvexPolygon::max_y() const {
  return std::max_element(vertices_.begin(), vertices_.end(), [](auto& a, auto& b) { return a.y < b.y; })->y;
}

Homothet::Homothet(ShapePtr shape, Rational scale, Point2 offset)
    : shape_(std::move(shape)), scale_(std::move(scale)), offset_(std::move(offset)) {
  if (!shape_) throw GeometryError("homothet without a shape");
  if (scale_ <= 0) throw GeometryError("homothet scale must be positive");
}

ConvexPolygon Homothet::realize() const {
  std::vector<Point2> pts;
  pts.reserve(shape_->size());
  for (const auto& v : shape_->vertices()) pts.push_back(offset_ + scale_ * v);
  return ConvexPolygon(std::move(pts));
}

Rational Homothet::support(std::ptrdiff_t i) const {
  return dot(shape_->outward_normal(i), offset_) + scale_ * shape_->support_offset(i);
}

HalfPlane::HalfPlane(Vec2 normal_, Rational threshold_) : normal(std::move(normal_)), threshold(std::move(threshold_)) {
  if (normal.x == 0 && normal.y == 0) throw GeometryError("half-plane normal must be nonzero");
}

AffineMap::AffineMap(Rational a, Rational b, Rational c, Rational d, Point2 translation)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), translation_(std::move(translation)) {
  if (determinant() == 0) throw GeometryError("affine map is not invertible");
}

AffineMap AffineMap::identity() { return AffineMap(1, 0, 0, 1, Point2(0, 0)); }

Vec2 AffineMap::apply_linear(const Vec2& v) const { return {a_ * v.x + b_ * v.y, c_ * v.x + d_ * v.y}; }

Point2 AffineMap::apply(const Point2& p) const { return apply_linear(p) + translation_; }

AffineMap AffineMap::inverse() const {
  const Rational det = determinant();
  AffineMap inv(d_ / det, -b_ / det, -c_ / det, a_ / det, Point2(0, 0));
  inv.translation_ = -inv.apply_linear(translation_);
  return inv;
}

AffineMap AffineMap::compose(const AffineMap& o) const {
  AffineMap r(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_,
              Point2(0, 0));
  r.translation_ = apply(o.translation_);
  return r;
}

bool AffineMap::is_identity() const {
  return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1 && translation_ == Point2(0, 0);
}

ConvexPolygon AffineMap::apply(const ConvexPolygon& poly) const {
  std::vector<Point2> pts;
  pts.reserve(poly.size());
  for (const auto& v : poly.vertices()) pts.push_back(apply(v));
  return ConvexPolygon(std::move(pts));
}

Homothet AffineMap::apply(const Homothet& h, const ShapePtr& mapped_shape) const {
  // A(t + s y) = (L t + b - s b) + s A(y).
  Point2 offset = apply_linear(h.offset()) + translation_ - h.scale() * translation_;
  return Homothet(mapped_shape, h.scale(), std::move(offset));
}

Location locate(const ConvexPolygon& region, const Point2& q) {
  bool on_boundary = false;
  const auto n = static_cast<std::ptrdiff_t>(region.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const int s = sgn(orient(region.vertex(i), region.vertex(i + 1), q));
    if (s < 0) return Location::Exterior;
    if (s == 0) on_boundary = true;
  }
  return on_boundary ? Location::Boundary : Location::Interior;
}

Location locate(const Homothet& region, const Point2& q) {
  bool on_boundary = false;
  const auto& shape = region.shape();
  const Point2 rel = q - region.offset();
  const auto n = static_cast<std::ptrdiff_t>(shape.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const int s = sgn(region.scale() * shape.support_offset(i) - dot(shape.outward_normal(i), rel));
    if (s < 0) return Location::Exterior;
    if (s == 0) on_boundary = true;
  }
  return on_boundary ? Location::Boundary : Location::Interior;
}

namespace {

// Removes consecutive duplicates and collinear vertices from a closed ring.
std::vector<Point2> simplify_ring(std::vector<Point2> ring) {
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < ring.size() && ring.size() >= 3; ++i) {
      const std::size_t n = ring.size();
      const Point2& prev = ring[(i + n - 1) % n];
      const Point2& cur = ring[i];
      const Point2& next = ring[(i + 1) % n];
      if (cur == prev || orient(prev, cur, next) == 0) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return ring;
}

}  // namespace

std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& poly, const HalfPlane& h) {
  const auto& vs = poly.vertices();
  const std::size_t n = vs.size();
  std::vector<Rational> vals(n);
  bool all_in = true;
  for (std::size_t i = 0; i < n; ++i) {
    vals[i] = h.evaluate(vs[i]);
    if (vals[i] < 0) all_in = false;
  }
  if (all_in) return poly;
  std::vector<Point2> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (vals[i] >= 0) out.push_back(vs[i]);
    if ((vals[i] > 0 && vals[j] < 0) || (vals[i] < 0 && vals[j] > 0)) {
      const Rational t = vals[i] / (vals[i] - vals[j]);
      out.push_back(vs[i] + t * (vs[j] - vs[i]));
    }
  }
  out = simplify_ring(std::move(out));
  if (out.size() < 3 || signed_area(out) == 0) return std::nullopt;
  return ConvexPolygon(std::move(out));
}

std::optional<ConvexPolygon> clip_convex(const ConvexPolygon& subject, const ConvexPolygon& clip) {
  std::optional<ConvexPolygon> cur = subject;
  const auto n = static_cast<std::ptrdiff_t>(clip.size());
  for (std::ptrdiff_t i = 0; i < n && cur; ++i) {
    const Vec2 nrm = clip.outward_normal(i);
    cur = clip_halfplane(*cur, HalfPlane(-nrm, -clip.support_offset(i)));
  }
  return cur;
}

const ConvexPolygon& canonical_triangle() {
  static const ConvexPolygon tri({Point2(0, 0), Point2(2, 0), Point2(1, 1)});
  return tri;
}

AffineMap canonical_triangle_map(const ConvexPolygon& t) {
  if (t.size() != 3) throw DegeneracyError("canonical_triangle_map needs a triangle");
  const auto& vs = t.vertices();
  return canonical_triangle_map(t, static_cast<std::size_t>(std::min_element(vs.begin(), vs.end()) - vs.begin()));
}

AffineMap canonical_triangle_map(const ConvexPolygon& t, std::size_t start) {
  if (t.size() != 3 || start >= 3) throw DegeneracyError("canonical_triangle_map needs a triangle");
  // ConvexPolygon already rejects collinear triangles; this guards the API contract.
  const auto& vs = t.vertices();
  const Point2& v0 = vs[start];
  const Point2 e1 = vs[(start + 1) % 3] - v0;
  const Point2 e2 = vs[(start + 2) % 3] - v0;
  const Rational det = cross(e1, e2);
  if (det == 0) throw DegeneracyError("degenerate triangle");
  // L * [e1 e2] = [[2,1],[0,1]]  =>  L = [[2,1],[0,1]] * inv([e1 e2]).
  const Rational i00 = e2.y / det, i01 = -e2.x / det, i10 = -e1.y / det, i11 = e1.x / det;
  const Rational a = 2 * i00 + i10, b = 2 * i01 + i11, c = i10, d = i11;
  AffineMap m(a, b, c, d, Point2(0, 0));
  const Point2 shift = -m.apply_linear(v0);
  return AffineMap(a, b, c, d, shift);
}

Rational polygon_area(const ConvexPolygon& poly) { return signed_area(poly.vertices()); }

std::vector<Point2> convex_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = points[i];
    while (k >= lower && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

bool contains(const ConvexPolygon& outer, const ConvexPolygon& inner) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Point2& v) { return locate(outer, v) != Location::Exterior; });
}

}  // namespace selfcover
