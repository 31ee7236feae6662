#include <iomanip>
#include <sstream>

#include "selfcover/io.hpp"

namespace selfcover {
namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

// World coordinates are mapped into a 600-unit box with y pointing up.
class Canvas {
 public:
  explicit Canvas(const ConvexPolygon& frame) {
    x0_ = to_double(frame.min_x());
    y1_ = to_double(frame.max_y());
    const double w = to_double(frame.max_x()) - x0_, h = y1_ - to_double(frame.min_y());
    scale_ = 560.0 / std::max(w, h);
    width_ = w * scale_ + 40;
    height_ = h * scale_ + 40;
  }

  void polygon(const ConvexPolygon& poly, const std::string& fill, double fill_opacity, const std::string& stroke) {
    body_ << "<path d=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      body_ << (i == 0 ? "M" : " L");
      coord(poly.vertex(static_cast<std::ptrdiff_t>(i)));
    }
    body_ << " Z\" fill=\"" << fill << "\" fill-opacity=\"" << fill_opacity << "\" stroke=\"" << stroke
          << "\" stroke-width=\"1\"/>\n";
  }

  void dot(const Point2& p, const std::string& color) {
    const double r = 4;
    body_ << "<path d=\"M";
    coord(p, -r, 0);
    body_ << " a" << r << "," << r << " 0 1,0 " << 2 * r << ",0 a" << r << "," << r << " 0 1,0 " << -2 * r
          << ",0 Z\" fill=\"" << color << "\"/>\n";
  }

  void hollow_square(const Point2& p, const std::string& color) {
    body_ << "<path d=\"M";
    coord(p, -4, -4);
    body_ << " h8 v8 h-8 Z\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
  }

  std::string str() const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width_ << "\" height=\"" << height_
       << "\" viewBox=\"0 0 " << width_ << " " << height_ << "\">\n"
       << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  void coord(const Point2& p, double dx = 0, double dy = 0) {
    body_ << std::setprecision(12) << 20 + (to_double(p.x) - x0_) * scale_ + dx << ","
          << 20 + (y1_ - to_double(p.y)) * scale_ + dy;
  }

  double x0_, y1_, scale_, width_, height_;
  std::ostringstream body_;
};

}  // namespace

std::string render_cover(const ConvexPolygon& container, const std::vector<ConvexPolygon>& pieces,
                         const std::vector<Point2>& points) {
  Canvas c(container);
  c.polygon(container, "none", 0, "#000000");
  for (std::size_t i = 0; i < pieces.size(); ++i) c.polygon(pieces[i], kPalette[i % 10], 0.25, kPalette[i % 10]);
  for (const auto& p : points) c.dot(p, "#000000");
  return c.str();
}

std::string render_lower_bound(const LBInstance& inst) {
  Canvas c(inst.container);
  c.polygon(inst.container, "none", 0, "#000000");
  for (const auto& p : inst.pts) c.dot(p, "#000000");
  for (const auto& d : inst.dummies) c.hollow_square(d, "#d62728");
  return c.str();
}

std::string render_coloring(const ConvexPolygon& container, const std::vector<Point2>& points, const Coloring& col) {
  Canvas c(container);
  c.polygon(container, "none", 0, "#000000");
  for (std::size_t i = 0; i < points.size(); ++i) c.dot(points[i], kPalette[col.assignment.at(i) % 10]);
  return c.str();
}

std::string render_triangulation(const ConvexPolygon& container, const GDTriangulation& tri) {
  std::vector<Point2> frame = container.vertices();
  for (const auto& h : tri.witnesses) {
    const ConvexPolygon real = h.realize();
    frame.insert(frame.end(), real.vertices().begin(), real.vertices().end());
  }
  for (const auto& p : tri.points) frame.push_back(p);
  Canvas c(ConvexPolygon(convex_hull(frame)));
  c.polygon(container, "none", 0, "#000000");
  for (const auto& h : tri.witnesses) c.polygon(h.realize(), "#1f77b4", 0.2, "#1f77b4");
  for (const auto& f : tri.faces)
    c.polygon(ConvexPolygon({tri.points[f[0]], tri.points[f[1]], tri.points[f[2]]}), "none", 0, "#d62728");
  for (const auto& p : tri.points) c.dot(p, "#000000");
  return c.str();
}

}  // namespace selfcover
