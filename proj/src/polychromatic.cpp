#include "selfcover/polychromatic.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "selfcover/errors.hpp"

namespace selfcover {
namespace {

int ceil_log2(int k) {
  int e = 0;
  while ((1 << e) < k) ++e;
  return e;
}

struct Plane {
  std::size_t point;
  Rational a, b, c, rhs;  // a tx + b ty + c s = rhs on the plane; >= means inside
  Rational eval(const Rational& tx, const Rational& ty, const Rational& s) const { return a * tx + b * ty + c * s - rhs; }
};

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Cramer's rule; nullopt when singular.
std::optional<std::array<Rational, 3>> solve3(const std::array<std::array<Rational, 3>, 3>& m,
                                              const std::array<Rational, 3>& r) {
  const Rational d = det3(m);
  if (d == 0) return std::nullopt;
  std::array<Rational, 3> x;
  for (int col = 0; col < 3; ++col) {
    auto mc = m;
    for (int row = 0; row < 3; ++row) mc[row][col] = r[row];
    x[col] = det3(mc) / d;
  }
  return x;
}

std::vector<std::size_t> members(const Homothet& H, const std::vector<Point2>& P) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < P.size(); ++i)
    if (locate(H, P[i]) != Location::Exterior) out.push_back(i);
  return out;
}

// Rank of the gradients (a, b, c) of the chosen planes, at most three.
std::size_t rank(const std::vector<Plane>& planes, const std::vector<std::size_t>& idx) {
  std::vector<std::array<Rational, 3>> rows;
  for (std::size_t q : idx) rows.push_back({planes[q].a, planes[q].b, planes[q].c});
  std::size_t r = 0;
  for (int col = 0; col < 3 && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const Rational factor = rows[i][col] / rows[r][col];
      for (int c = col; c < 3; ++c) rows[i][c] -= factor * rows[r][c];
    }
    ++r;
  }
  return r;
}

Rational inf_norm(const Vec2& v) { return std::max(abs(v.x), abs(v.y)); }

}  // namespace

Integer mk_value(const Integer& m, int k, const BoundFunction& f) {
  if (m < 1 || k < 1) throw GeometryError("mk_value needs m >= 1 and k >= 1");
  if (k == 1) return m;
  const Integer base = f(m - 1);
  Integer out = m;
  for (int e = ceil_log2(k) - 1; e > 0; --e) out *= base;
  return out;
}

RangeFamily enumerate_ranges(const std::vector<Point2>& P, const ConvexPolygon& C) {
  const ShapePtr shape = make_shape(C);
  RangeFamily fam{C, {}};
  auto add = [&](const Homothet& H) { fam.ranges.emplace(members(H, P), H); };

  // Empty range: a copy beyond every point. Singletons: tiny copies.
  const Point2 c = C.centroid_of_vertices();
  {
    Rational right = C.max_x();
    for (const auto& p : P) right = std::max(right, p.x);
    add(Homothet(shape, 1, Point2(right + 1 - C.min_x(), 0)));
  }
  Rational radius = 0;
  for (const auto& v : C.vertices()) radius = std::max(radius, inf_norm(v - c));
  for (std::size_t i = 0; i < P.size(); ++i) {
    std::optional<Rational> gap;
    for (std::size_t j = 0; j < P.size(); ++j)
      if (j != i && (!gap || inf_norm(P[j] - P[i]) < *gap)) gap = inf_norm(P[j] - P[i]);
    const Rational s = gap ? *gap / (2 * radius) : Rational(1);
    add(Homothet(shape, s, P[i] - s * c));
  }

  std::vector<Plane> planes;
  for (std::size_t p = 0; p < P.size(); ++p)
    for (std::size_t e = 0; e < C.size(); ++e) {
      const Vec2 n = C.outward_normal(static_cast<std::ptrdiff_t>(e));
      planes.push_back({p, n.x, n.y, C.support_offset(static_cast<std::ptrdiff_t>(e)), dot(n, P[p])});
    }

  const std::size_t np = planes.size();
  std::vector<Rational> g(np);
  std::set<std::array<Rational, 3>> seen;
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = i + 1; j < np; ++j)
      for (std::size_t l = j + 1; l < np; ++l) {
        const std::array<std::size_t, 3> tri{i, j, l};
        std::array<std::array<Rational, 3>, 3> A;
        std::array<Rational, 3> r;
        for (int q = 0; q < 3; ++q) {
          const Plane& pl = planes[tri[q]];
          A[q] = {pl.a, pl.b, pl.c};
          r[q] = pl.rhs;
        }
        const auto v = solve3(A, r);
        if (!v || (*v)[2] <= 0) continue;
        if (!seen.insert(*v).second) continue;
        // Planes of points in the closed homothet decide membership nearby;
        // a point outside stays outside whatever its zero planes do.
        std::vector<bool> out_point(P.size(), false);
        for (std::size_t q = 0; q < np; ++q) {
          g[q] = planes[q].eval((*v)[0], (*v)[1], (*v)[2]);
          if (g[q] < 0) out_point[planes[q].point] = true;
        }
        std::vector<std::size_t> relevant, spare;
        for (std::size_t q = 0; q < np; ++q)
          if (g[q] == 0) (out_point[planes[q].point] ? spare : relevant).push_back(q);
        auto degenerate = [&] {
          std::ostringstream os;
          os << relevant.size() << " boundary constraints meet at one homothet; points are not in general position";
          return DegeneracyError(os.str());
        };
        if (relevant.size() > 3) throw degenerate();
        // Complete the relevant planes to a basis with spare ones.
        std::vector<std::size_t> basis = relevant;
        for (std::size_t q : spare) {
          if (basis.size() == 3) break;
          basis.push_back(q);
          if (rank(planes, basis) < basis.size()) basis.pop_back();
        }
        if (rank(planes, relevant) < relevant.size()) throw degenerate();
        if (basis.size() < 3) continue;
        for (int q = 0; q < 3; ++q) A[q] = {planes[basis[q]].a, planes[basis[q]].b, planes[basis[q]].c};

        for (int code = 0; code < 27; ++code) {
          const std::array<Rational, 3> sigma{code % 3 - 1, (code / 3) % 3 - 1, code / 9 - 1};
          const auto dir = solve3(A, sigma);
          Rational lambda = 1;
          for (std::size_t q = 0; q < np; ++q) {
            if (g[q] == 0) continue;
            const Rational rate = planes[q].a * (*dir)[0] + planes[q].b * (*dir)[1] + planes[q].c * (*dir)[2];
            if (rate != 0 && sgn(rate) != sgn(g[q])) lambda = std::min(lambda, Rational(abs(g[q]) / abs(rate) / 2));
          }
          if ((*dir)[2] < 0) lambda = std::min(lambda, Rational((*v)[2] / abs((*dir)[2]) / 2));
          add(Homothet(shape, (*v)[2] + lambda * (*dir)[2],
                       Point2((*v)[0] + lambda * (*dir)[0], (*v)[1] + lambda * (*dir)[1])));
        }
      }
  return fam;
}

std::optional<Coloring> oracle2_bruteforce(const std::vector<Point2>& P, const ConvexPolygon& C, int m) {
  const std::size_t n = P.size();
  if (n > 20) throw GeometryError("oracle2_bruteforce is limited to 20 points");
  if (n == 0) return Coloring{{}, 2};
  std::vector<std::uint32_t> big;
  for (const auto& [idx, h] : enumerate_ranges(P, C).ranges) {
    if (static_cast<int>(idx.size()) < m) continue;
    std::uint32_t mask = 0;
    for (std::size_t i : idx) mask |= 1u << i;
    big.push_back(mask);
  }
  const std::uint32_t total = 1u << (n - 1);
  // Descending, so the first candidate flips every point but point 0.
  for (std::uint32_t code = total; code-- > 0;) {
    const std::uint32_t colored = code << 1;
    bool good = true;
    for (std::uint32_t r : big)
      if ((colored & r) == 0 || (colored & r) == r) {
        good = false;
        break;
      }
    if (!good) continue;
    Coloring col{std::vector<int>(n), 2};
    for (std::size_t i = 0; i < n; ++i) col.assignment[i] = (colored >> i) & 1u;
    return col;
  }
  return std::nullopt;
}

namespace {

struct Composer {
  const std::vector<Point2>& P;
  const Oracle2& oracle2;
  const BoundFunction& f;
  const Integer& m;
  std::vector<AuditNode> audit;

  std::vector<int> run(const std::vector<std::size_t>& idx, int k, int parent) {
    const int node = static_cast<int>(audit.size());
    audit.push_back({k, idx, mk_value(m, k, f), parent});
    if (k == 1 || idx.empty()) return std::vector<int>(idx.size(), 0);
    if (k == 2) {
      std::vector<Point2> sub;
      for (std::size_t i : idx) sub.push_back(P[i]);
      auto col = oracle2(sub);
      if (!col || col->assignment.size() != idx.size()) {
        std::ostringstream os;
        os << "2-coloring oracle failed on a class of " << idx.size() << " points";
        throw CertificationError(os.str());
      }
      return col->assignment;
    }
    const int a = (k + 1) / 2;
    const std::vector<int> outer = run(idx, a, node);
    std::vector<int> out(idx.size());
    for (int c = 0; c < a; ++c) {
      std::vector<std::size_t> cls, pos;
      for (std::size_t i = 0; i < idx.size(); ++i)
        if (outer[i] == c) {
          cls.push_back(idx[i]);
          pos.push_back(i);
        }
      const std::vector<int> inner = run(cls, 2, node);
      for (std::size_t i = 0; i < cls.size(); ++i) out[pos[i]] = std::min(2 * c + inner[i], k - 1);
    }
    return out;
  }
};

}  // namespace

Composition compose_k_coloring(const std::vector<Point2>& P, int k, const Oracle2& oracle2, const BoundFunction& f,
                               const Integer& m) {
  if (k < 1) throw GeometryError("k must be positive");
  Composer comp{P, oracle2, f, m, {}};
  std::vector<std::size_t> all(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) all[i] = i;
  Composition out;
  out.coloring = {comp.run(all, k, -1), k};
  out.audit = std::move(comp.audit);
  return out;
}

ColoringReport verify_coloring(const RangeFamily& ranges, const Coloring& col, const Integer& threshold) {
  ColoringReport rep;
  for (const auto& [idx, h] : ranges.ranges) {
    if (Integer(static_cast<unsigned long>(idx.size())) < threshold) continue;
    ++rep.ranges_checked;
    std::vector<bool> seen(static_cast<std::size_t>(col.k), false);
    for (std::size_t i : idx) seen[static_cast<std::size_t>(col.assignment.at(i))] = true;
    std::vector<int> missing;
    for (int c = 0; c < col.k; ++c)
      if (!seen[static_cast<std::size_t>(c)]) missing.push_back(c);
    if (!missing.empty()) rep.violations.push_back({idx, h, std::move(missing)});
  }
  return rep;
}

ColoringReport verify_coloring(const std::vector<Point2>& P, const ConvexPolygon& C, const Coloring& col,
                               const Integer& threshold) {
  if (col.assignment.size() != P.size()) throw GeometryError("coloring does not match the point set");
  for (int c : col.assignment)
    if (c < 0 || c >= col.k) throw GeometryError("color out of range");
  return verify_coloring(enumerate_ranges(P, C), col, threshold);
}

}  // namespace selfcover
