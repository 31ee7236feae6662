#include "selfcover/gen_delaunay.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "selfcover/errors.hpp"
#include "selfcover/union_area.hpp"

namespace selfcover {
namespace {

// c0 + c1 * eps for an infinitesimal eps > 0.
struct Lin {
  Rational c0, c1;
};

int sign_of(const Lin& v) {
  const int s = sgn(v.c0);
  return s != 0 ? s : sgn(v.c1);
}

int compare(const Lin& a, const Lin& b) {
  const int s = cmp(a.c0, b.c0);
  return s != 0 ? s : cmp(a.c1, b.c1);
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Perturbation direction of a point, a function of its exact coordinates only
// so that relabeling the input does not change the triangulation.
Vec2 symbolic_direction(const Point2& p) {
  const std::uint64_t h1 = splitmix(fnv1a(to_string(p.x) + "," + to_string(p.y)));
  const std::uint64_t h2 = splitmix(h1);
  const long range = 1L << 20;
  return {static_cast<long>(h1 % (2 * range + 1)) - range, static_cast<long>(h2 % (2 * range + 1)) - range};
}

double dist2(const Point2& a, const Point2& b) {
  const double dx = to_double(a.x - b.x), dy = to_double(a.y - b.y);
  return dx * dx + dy * dy;
}

class Engine {
 public:
  struct Circ {
    Lin tx, ty, s;
  };

  Engine(const std::vector<Point2>& P, const ShapePtr& C, bool symbolic)
      : shape_(C), symbolic_(symbolic), base_(P) {
    const ConvexPolygon& poly = *C;
    m_ = poly.size();
    for (std::size_t i = 0; i < m_; ++i) {
      const auto e = static_cast<std::ptrdiff_t>(i);
      n_.push_back(poly.outward_normal(e));
      h_.push_back(poly.support_offset(e));
      v_.push_back(poly.vertex(e));
      d_.push_back(poly.edge_vector(e));
      dd_.push_back(dot(d_.back(), d_.back()));
      Rational lo = dot(n_.back(), poly.vertex(0));
      for (const auto& w : poly.vertices()) lo = std::min(lo, Rational(dot(n_.back(), w)));
      width_.push_back(h_.back() - lo);
    }
    dir_.resize(P.size(), Vec2(0, 0));
    if (symbolic_)
      for (std::size_t i = 0; i < P.size(); ++i) dir_[i] = symbolic_direction(P[i]);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j)
        for (std::size_t k = 0; k < m_; ++k) {
          Triple t;
          t.e = {i, j, k};
          if (invert(t)) triples_.push_back(std::move(t));
        }
  }

  std::size_t size() const { return base_.size(); }
  const Point2& point(std::size_t i) const { return base_[i]; }
  const Vec2& direction(std::size_t i) const { return dir_[i]; }
  bool symbolic() const { return symbolic_; }

  int orient(std::size_t a, std::size_t b, std::size_t c) const {
    const Vec2 u0 = base_[b] - base_[a], w0 = base_[c] - base_[a];
    const int s0 = sgn(cross(u0, w0));
    if (s0 != 0 || !symbolic_) return s0;
    const Vec2 u1 = dir_[b] - dir_[a], w1 = dir_[c] - dir_[a];
    const int s1 = sgn(cross(u1, w0) + cross(u0, w1));
    if (s1 != 0) return s1;
    const int s2 = sgn(cross(u1, w1));
    if (s2 == 0) throw DegeneracyError("symbolic orientation vanished identically");
    return s2;
  }

  // Homothets with a, b, c on their boundary (limit and first-order terms).
  std::vector<Circ> circumscribe(std::size_t a, std::size_t b, std::size_t c) const {
    const std::size_t pts[3] = {a, b, c};
    std::vector<Circ> out;
    for (const auto& tr : triples_) {
      Rational r0[3], r1[3];
      for (int r = 0; r < 3; ++r) {
        r0[r] = dot(n_[tr.e[r]], base_[pts[r]]);
        if (symbolic_) r1[r] = dot(n_[tr.e[r]], dir_[pts[r]]);
      }
      Circ h;
      h.s.c0 = tr.inv[2][0] * r0[0] + tr.inv[2][1] * r0[1] + tr.inv[2][2] * r0[2];
      if (sgn(h.s.c0) < 0) continue;
      if (symbolic_) h.s.c1 = tr.inv[2][0] * r1[0] + tr.inv[2][1] * r1[1] + tr.inv[2][2] * r1[2];
      if (sign_of(h.s) <= 0) continue;
      h.tx.c0 = tr.inv[0][0] * r0[0] + tr.inv[0][1] * r0[1] + tr.inv[0][2] * r0[2];
      h.ty.c0 = tr.inv[1][0] * r0[0] + tr.inv[1][1] * r0[1] + tr.inv[1][2] * r0[2];
      if (symbolic_) {
        h.tx.c1 = tr.inv[0][0] * r1[0] + tr.inv[0][1] * r1[1] + tr.inv[0][2] * r1[2];
        h.ty.c1 = tr.inv[1][0] * r1[0] + tr.inv[1][1] * r1[1] + tr.inv[1][2] * r1[2];
      }
      bool ok = true;
      for (int r = 0; r < 3 && ok; ++r) {
        const std::size_t e = tr.e[r];
        const Point2& p = base_[pts[r]];
        Lin along;
        along.c0 = (p.x - h.tx.c0 - h.s.c0 * v_[e].x) * d_[e].x + (p.y - h.ty.c0 - h.s.c0 * v_[e].y) * d_[e].y;
        if (symbolic_) {
          const Vec2& w = dir_[pts[r]];
          along.c1 = (w.x - h.tx.c1 - h.s.c1 * v_[e].x) * d_[e].x + (w.y - h.ty.c1 - h.s.c1 * v_[e].y) * d_[e].y;
        }
        const Lin rest{h.s.c0 * dd_[e] - along.c0, h.s.c1 * dd_[e] - along.c1};
        ok = sign_of(along) >= 0 && sign_of(rest) >= 0;
      }
      if (!ok) continue;
      const bool dup = std::any_of(out.begin(), out.end(), [&](const Circ& o) {
        return compare(o.s, h.s) == 0 && compare(o.tx, h.tx) == 0 && compare(o.ty, h.ty) == 0;
      });
      if (!dup) out.push_back(std::move(h));
    }
    return out;
  }

  bool interior(const Circ& h, std::size_t q) const {
    const Point2& p = base_[q];
    for (std::size_t e = 0; e < m_; ++e) {
      const Rational v0 = n_[e].x * (p.x - h.tx.c0) + n_[e].y * (p.y - h.ty.c0) - h.s.c0 * h_[e];
      const int s0 = sgn(v0);
      if (s0 > 0) return false;
      if (s0 < 0) continue;
      if (!symbolic_) return false;
      const Vec2& w = dir_[q];
      const Rational v1 = n_[e].x * (w.x - h.tx.c1) + n_[e].y * (w.y - h.ty.c1) - h.s.c1 * h_[e];
      const int s1 = sgn(v1);
      if (s1 > 0) return false;
      if (s1 == 0) throw DegeneracyError("a fourth point lies on a witness boundary under perturbation");
    }
    return true;
  }

  // Gauge of q - p for the difference body C - C: the minimum enclosing
  // scale of {p, q}.
  Lin gauge(std::size_t p, std::size_t q) const {
    const Vec2 w0 = base_[q] - base_[p], w1 = dir_[q] - dir_[p];
    Lin best{0, 0};
    for (std::size_t e = 0; e < m_; ++e) {
      Lin v{dot(n_[e], w0) / width_[e], dot(n_[e], w1) / width_[e]};
      if (sign_of(v) < 0) v = {-v.c0, -v.c1};
      if (compare(v, best) > 0) best = v;
    }
    return best;
  }

  bool empty(const Circ& h, std::size_t a, std::size_t b, std::size_t c) const {
    for (std::size_t q = 0; q < base_.size(); ++q) {
      if (q == a || q == b || q == c) continue;
      if (interior(h, q)) return false;
    }
    return true;
  }

  // The apex c of the face left of the Delaunay edge a -> b, with its witness.
  std::optional<std::pair<std::size_t, Circ>> find_left(std::size_t a, std::size_t b) const {
    std::vector<char> left(base_.size(), 0);
    std::optional<std::size_t> start;
    const Point2 mid = (base_[a] + base_[b]) / Rational(2);
    double best = 0;
    for (std::size_t q = 0; q < base_.size(); ++q) {
      if (q == a || q == b) continue;
      if (orient(a, b, q) <= 0) continue;
      left[q] = 1;
      const double d = dist2(base_[q], mid);
      if (!start || d < best) {
        start = q;
        best = d;
      }
    }
    if (!start) return std::nullopt;
    std::size_t c = *start;
    const std::size_t cap = base_.size() + 8;
    for (std::size_t iter = 0; iter < cap; ++iter) {
      const auto sols = circumscribe(a, b, c);
      std::optional<std::size_t> next;
      for (const auto& h : sols) {
        bool clean = true;
        for (std::size_t q = 0; q < base_.size() && !next; ++q) {
          if (q == a || q == b || q == c) continue;
          if (!interior(h, q)) continue;
          clean = false;
          if (left[q]) next = q;
        }
        if (clean) return std::make_pair(c, h);
        if (next) break;
      }
      if (!next) break;
      c = *next;
    }
    // The walk stalled; fall back to testing every candidate.
    for (std::size_t q = 0; q < base_.size(); ++q) {
      if (!left[q]) continue;
      for (const auto& h : circumscribe(a, b, q))
        if (empty(h, a, b, q)) return std::make_pair(q, h);
    }
    // a -> b borders the outer face, which need not be convex.
    return std::nullopt;
  }

  std::size_t nearest(std::size_t p) const {
    std::optional<std::size_t> first;
    Lin best;
    for (std::size_t q = 0; q < base_.size(); ++q) {
      if (q == p) continue;
      Lin g = gauge(p, q);
      if (!first || compare(g, best) < 0) {
        first = q;
        best = g;
      }
    }
    return *first;
  }

  Homothet limit_homothet(const Circ& h) const { return Homothet(shape_, h.s.c0, {h.tx.c0, h.ty.c0}); }

 private:
  struct Triple {
    std::array<std::size_t, 3> e;
    Rational inv[3][3];
  };

  bool invert(Triple& t) const {
    Rational m[3][3];
    for (int r = 0; r < 3; ++r) {
      m[r][0] = n_[t.e[r]].x;
      m[r][1] = n_[t.e[r]].y;
      m[r][2] = h_[t.e[r]];
    }
    const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (sgn(det) == 0) return false;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        // Cofactor of m[c][r] (transposed adjugate).
        const int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
        t.inv[r][c] = (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) / det;
      }
    return true;
  }

  ShapePtr shape_;
  bool symbolic_;
  std::size_t m_ = 0;
  std::vector<Vec2> n_, v_, d_;
  std::vector<Rational> h_, dd_, width_;
  std::vector<Point2> base_;
  std::vector<Vec2> dir_;
  std::vector<Triple> triples_;
};

void check_input(const std::vector<Point2>& P) {
  if (P.size() < 3) throw GeometryError("generalized Delaunay needs at least 3 points");
  std::vector<Point2> sorted = P;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw GeometryError("generalized Delaunay input has repeated points");
  if (convex_hull(sorted).size() < 3) throw GeometryError("generalized Delaunay input is collinear");
}

std::array<std::size_t, 3> sorted_triple(std::size_t a, std::size_t b, std::size_t c) {
  std::array<std::size_t, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

struct FaceSet {
  std::map<std::array<std::size_t, 3>, std::pair<std::array<std::size_t, 3>, Engine::Circ>> faces;

  void add(std::size_t a, std::size_t b, std::size_t c, const Engine::Circ& h) {
    faces.try_emplace(sorted_triple(a, b, c), std::array<std::size_t, 3>{a, b, c}, h);
  }
};

GDTriangulation finish(const Engine& eng, const ShapePtr& C, const FaceSet& fs, bool reject) {
  GDTriangulation out;
  for (std::size_t i = 0; i < eng.size(); ++i) out.points.push_back(eng.point(i));
  for (const auto& [key, val] : fs.faces) {
    const auto& [f, h] = val;
    if (sgn(orient(out.points[f[0]], out.points[f[1]], out.points[f[2]])) <= 0) continue;
    Homothet w = eng.limit_homothet(h);
    if (reject) {
      std::vector<std::size_t> extra;
      for (std::size_t q = 0; q < out.points.size(); ++q) {
        if (q == f[0] || q == f[1] || q == f[2]) continue;
        if (locate(w, out.points[q]) == Location::Boundary) extra.push_back(q);
      }
      if (!extra.empty()) {
        std::ostringstream msg;
        msg << "degenerate position: points";
        for (auto q : {f[0], f[1], f[2]}) msg << ' ' << out.points[q];
        for (auto q : extra) msg << ' ' << out.points[q];
        msg << " lie on one homothet boundary (scale " << to_string(w.scale()) << ", offset " << w.offset() << ")";
        throw DegeneracyError(msg.str());
      }
    }
    out.faces.push_back(f);
    out.witnesses.push_back(std::move(w));
  }
  std::map<Point2, std::size_t> index;
  for (std::size_t i = 0; i < out.points.size(); ++i) index.emplace(out.points[i], i);
  for (const auto& p : convex_hull(out.points)) out.hull.push_back(index.at(p));
  (void)C;
  return out;
}

}  // namespace

GDTriangulation gdt_build(const std::vector<Point2>& P, const ShapePtr& C, const GDOptions& opts) {
  check_input(P);
  const bool symbolic = opts.policy == DegeneracyPolicy::Symbolic;
  Engine eng(P, C, symbolic);
  const std::size_t n = P.size();

  // Nearest-neighbour pairs are always Delaunay edges (hull edges need not
  // be). Seeding from every point reaches face components that are joined
  // only through edges bordering no face.
  FaceSet fs;
  std::set<std::pair<std::size_t, std::size_t>> done;
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t q = eng.nearest(p);
    queue.emplace_back(p, q);
    queue.emplace_back(q, p);
  }
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    if (!done.insert({u, v}).second) continue;
    auto res = eng.find_left(u, v);
    if (!res) continue;
    const std::size_t w = res->first;
    fs.add(u, v, w, res->second);
    done.insert({v, w});
    done.insert({w, u});
    for (auto e : {std::make_pair(v, u), std::make_pair(w, v), std::make_pair(u, w)})
      if (!done.count(e)) queue.push_back(e);
  }
  return finish(eng, C, fs, !symbolic);
}

GDTriangulation gdt_build_stars(const std::vector<Point2>& P, const ShapePtr& C,
                                const std::vector<std::size_t>& centers, const GDOptions& opts) {
  check_input(P);
  const bool symbolic = opts.policy == DegeneracyPolicy::Symbolic;
  Engine eng(P, C, symbolic);
  const std::size_t n = P.size();
  FaceSet fs;
  for (std::size_t p : centers) {
    if (p >= n) throw GeometryError("star center out of range");
    // The nearest neighbour in the convex distance is always a Delaunay edge.
    const std::optional<std::size_t> first = eng.nearest(p);
    bool closed = false;
    std::size_t cur = *first;
    for (std::size_t iter = 0; iter <= n; ++iter) {
      auto res = eng.find_left(p, cur);
      if (!res) break;
      fs.add(p, cur, res->first, res->second);
      cur = res->first;
      if (cur == *first) {
        closed = true;
        break;
      }
    }
    if (closed) continue;
    cur = *first;
    for (std::size_t iter = 0; iter <= n; ++iter) {
      auto res = eng.find_left(cur, p);
      if (!res) break;
      fs.add(cur, p, res->first, res->second);
      cur = res->first;
    }
  }
  return finish(eng, C, fs, !symbolic);
}

ValidationReport gdt_validate(const GDTriangulation& T, const ConvexPolygon& C) {
  ValidationReport rep;
  const auto& pts = T.points;
  const std::size_t n = pts.size();
  if (T.witnesses.size() != T.faces.size()) {
    rep.witnesses_ok = false;
    rep.failures.push_back("witness count differs from face count");
  }
  for (std::size_t f = 0; f < T.faces.size() && f < T.witnesses.size(); ++f) {
    const auto& face = T.faces[f];
    const Homothet& w = T.witnesses[f];
    if (!(w.shape() == C)) {
      rep.witnesses_ok = false;
      rep.failures.push_back("witness " + std::to_string(f) + " is not a homothet of C");
      continue;
    }
    for (std::size_t q = 0; q < n; ++q) {
      const bool vertex = q == face[0] || q == face[1] || q == face[2];
      const Location loc = locate(w, pts[q]);
      if (vertex && loc != Location::Boundary) {
        rep.witnesses_ok = false;
        rep.failures.push_back("face " + std::to_string(f) + ": vertex " + std::to_string(q) + " not on witness boundary");
      } else if (!vertex && loc == Location::Interior) {
        rep.witnesses_ok = false;
        rep.failures.push_back("face " + std::to_string(f) + ": point " + std::to_string(q) + " inside witness");
      }
    }
  }

  const auto hull = convex_hull(pts);
  Rational hull_area = hull.size() >= 3 ? signed_area(hull) : Rational(0);
  Rational sum = 0;
  std::vector<ConvexPolygon> tris;
  for (const auto& f : T.faces) {
    const Rational a2 = orient(pts[f[0]], pts[f[1]], pts[f[2]]);
    if (sgn(a2) <= 0) {
      rep.tiles_hull = false;
      rep.failures.push_back("face is not counter-clockwise");
      continue;
    }
    sum += a2 / 2;
    tris.emplace_back(std::vector<Point2>{pts[f[0]], pts[f[1]], pts[f[2]]});
  }
  if (union_area(tris) != sum) {
    rep.disjoint = false;
    rep.failures.push_back("faces overlap");
  }
  if (sum != hull_area) {
    rep.tiles_hull = false;
    rep.failures.push_back("face areas sum to " + to_string(sum) + ", hull area " + to_string(hull_area));
  }

  // Edge graph, with edges split at points lying inside them.
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& f : T.faces)
    for (int i = 0; i < 3; ++i) edges.insert(std::minmax(f[i], f[(i + 1) % 3]));
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t edge_count = 0;
  for (const auto& [u, v] : edges) {
    std::size_t pieces = 1;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == u || q == v || sgn(orient(pts[u], pts[v], pts[q])) != 0) continue;
      const Rational t = dot(pts[q] - pts[u], pts[v] - pts[u]);
      if (sgn(t) > 0 && t < dot(pts[v] - pts[u], pts[v] - pts[u])) {
        ++pieces;
        parent[find(q)] = find(u);
      }
    }
    edge_count += pieces;
    parent[find(u)] = find(v);
  }
  for (std::size_t q = 1; q < n; ++q) {
    if (find(q) != find(0)) {
      rep.connected = false;
      rep.failures.push_back("edge graph is disconnected at point " + std::to_string(q));
      break;
    }
  }
  const long euler = static_cast<long>(n) - static_cast<long>(edge_count) + static_cast<long>(T.faces.size()) + 1;
  if (euler != 2) {
    rep.euler_ok = false;
    rep.failures.push_back("V - E + F = " + std::to_string(euler));
  }
  return rep;
}

std::vector<Point2> perturb(const std::vector<Point2>& P, std::uint64_t seed, const Rational& magnitude) {
  std::mt19937_64 rng(seed);
  const long range = 1L << 20;
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<Point2> out;
  out.reserve(P.size());
  for (const auto& p : P) {
    const Rational dx = magnitude * frac(d(rng), 2 * range);
    const Rational dy = magnitude * frac(d(rng), 2 * range);
    out.emplace_back(p.x + dx, p.y + dy);
  }
  return out;
}

}  // namespace selfcover
