#include "selfcover/lower_bounds.hpp"

#include <sstream>

#include "selfcover/errors.hpp"
#include "selfcover/lp.hpp"
#include "selfcover/self_cover.hpp"

namespace selfcover {
namespace {

constexpr int kMaxHalvings = 30;

LBInstance triangle_instance(int k, const Rational& eps) {
  LBInstance inst{canonical_triangle(), {}, {}, static_cast<std::size_t>(2 * k + 1), eps};
  Rational top = 0;
  for (int i = 1; i <= k; ++i) {
    const Rational y = frac(i, k + 1);
    inst.pts.push_back({1, y});
    inst.dummies.push_back({1 - 2 * eps, y - eps});
    inst.dummies.push_back({1 + 2 * eps, y - eps});
    top = y;
  }
  inst.dummies.push_back({1, top + eps});
  return inst;
}

LBInstance square_instance(int k, const Rational& eps) {
  LBInstance inst{ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), {}, {}, static_cast<std::size_t>(2 * k + 2), eps};
  for (int i = 1; i <= k; ++i) {
    const Rational c = 1 - pow2(-i);
    inst.pts.push_back({c, c});
    const Rational prev = 1 - pow2(-(i - 1));
    inst.dummies.push_back({prev + i * eps, 1 - eps});
    inst.dummies.push_back({1 - eps, prev + i * eps});
  }
  inst.dummies.push_back({eps, eps});
  inst.dummies.push_back({1 - eps, 1 - eps});
  return inst;
}

void check_interior(const LBInstance& inst) {
  for (const auto* set : {&inst.pts, &inst.dummies})
    for (const auto& q : *set)
      if (locate(inst.container, q) != Location::Interior) {
        std::ostringstream os;
        os << "construction point " << q << " is not interior; eps too large";
        throw GeometryError(os.str());
      }
}

// Halves eps until the dummies separate.
template <class Build>
LBInstance certified(Build build, Rational eps) {
  for (int attempt = 0; attempt <= kMaxHalvings; ++attempt, eps /= 2) {
    LBInstance inst = build(eps);
    check_interior(inst);
    if (verify_dummy_separation(inst).ok()) return inst;
  }
  throw CertificationError("dummy separation still fails after repeated halving of eps");
}

class Separation {
 public:
  Separation(const LBInstance& inst, SeparationReport& rep) : inst_(inst), rep_(rep) {
    const auto& C = inst.container;
    for (std::size_t i = 0; i < C.size(); ++i) {
      n_.push_back(C.outward_normal(static_cast<std::ptrdiff_t>(i)));
      h_.push_back(C.support_offset(static_cast<std::ptrdiff_t>(i)));
    }
  }

  // Variables: tx, ty (free), s >= 0, mu (free, at most 1). Maximizes mu.
  std::optional<Homothet> find(const Point2& d1, const Point2& d2) {
    std::vector<std::pair<std::size_t, std::size_t>> branch;
    return search(d1, d2, branch);
  }

 private:
  std::optional<Homothet> search(const Point2& d1, const Point2& d2,
                                 std::vector<std::pair<std::size_t, std::size_t>>& branch) {
    LinearProgram lp;
    lp.add_variable(true);
    lp.add_variable(true);
    lp.add_variable(false);
    lp.add_variable(true);
    const std::size_t m = n_.size();
    for (std::size_t j = 0; j < m; ++j) lp.add_row({n_[j].x, n_[j].y, h_[j], 0}, Sense::LessEq, h_[j]);
    for (const auto* d : {&d1, &d2})
      for (std::size_t j = 0; j < m; ++j)
        lp.add_row({-n_[j].x, -n_[j].y, -h_[j], 1}, Sense::LessEq, -dot(n_[j], *d));
    for (const auto& [p, j] : branch)
      lp.add_row({n_[j].x, n_[j].y, h_[j], 0}, Sense::LessEq, dot(n_[j], inst_.pts[p]));
    lp.add_row({0, 0, 0, 1}, Sense::LessEq, 1);
    ++rep_.lps_solved;
    const LPResult r = minimize(lp, {0, 0, 0, -1});
    if (!r.optimal() || r.x[3] <= 0) return std::nullopt;
    Homothet H(make_shape_cached(), r.x[2], Point2(r.x[0], r.x[1]));
    for (std::size_t p = 0; p < inst_.pts.size(); ++p) {
      if (locate(H, inst_.pts[p]) != Location::Interior) continue;
      for (std::size_t j = 0; j < m; ++j) {
        branch.emplace_back(p, j);
        auto found = search(d1, d2, branch);
        branch.pop_back();
        if (found) return found;
      }
      return std::nullopt;
    }
    return H;
  }

  ShapePtr make_shape_cached() {
    if (!shape_) shape_ = make_shape(inst_.container);
    return shape_;
  }

  const LBInstance& inst_;
  SeparationReport& rep_;
  std::vector<Vec2> n_;
  std::vector<Rational> h_;
  ShapePtr shape_;
};

}  // namespace

SeparationReport verify_dummy_separation(const LBInstance& inst) {
  SeparationReport rep;
  Separation sep(inst, rep);
  for (std::size_t a = 0; a < inst.dummies.size(); ++a)
    for (std::size_t b = a + 1; b < inst.dummies.size(); ++b) {
      ++rep.pairs_checked;
      if (auto H = sep.find(inst.dummies[a], inst.dummies[b])) rep.violations.push_back({a, b, *H});
    }
  return rep;
}

LBInstance lb_triangle(int k, std::optional<Rational> eps) {
  if (k < 0) throw GeometryError("k must be nonnegative");
  if (eps) {
    LBInstance inst = triangle_instance(k, *eps);
    check_interior(inst);
    return inst;
  }
  return certified([k](const Rational& e) { return triangle_instance(k, e); }, 1 / Rational(4 * (k + 1) * (k + 1)));
}

LBInstance lb_square(int k, std::optional<Rational> eps) {
  if (k < 0) throw GeometryError("k must be nonnegative");
  const Rational e = eps ? *eps : 1 / (pow2(k + 1) * (k + 1));
  if (eps || k == 0) {
    LBInstance inst = square_instance(k, e);
    check_interior(inst);
    return inst;
  }
  return certified([k](const Rational& x) { return square_instance(k, x); }, e);
}

TrapezoidInstance lb_trapezoid(const Rational& c, int k, std::optional<Rational> delta) {
  if (!(c > 1)) throw GeometryError("lb_trapezoid needs c > 1");
  if (k < 0) throw GeometryError("k must be nonnegative");
  const Rational half_bottom = 1 / (2 * c);
  const Rational left = frac(1, 2) - half_bottom;
  ConvexPolygon Q({{left, 0}, {frac(1, 2) + half_bottom, 0}, {1, 1}, {0, 1}});
  const Rational d = delta ? *delta : (k == 0 ? frac(1, 4) : 1 / (2 * c * k));
  if (!(0 < d && d < 1)) throw GeometryError("delta must lie in (0, 1)");
  const Integer need = ceil(c - 1);
  TrapezoidInstance t{LBInstance{Q, {}, {}, static_cast<std::size_t>(need.get_ui()) * static_cast<std::size_t>(k), d},
                      c, {}, d / c};
  if (t.inst.bound == 0) t.inst.bound = 1;
  for (int j = 0; j < k; ++j) {
    const Point2 p(left + frac(2 * j + 1, 2 * k) / c, d);
    const auto [pl, pr] = edge_shadow(Q, 0, p);
    t.inst.pts.push_back(p);
    t.segments.push_back({p, pl, pr});
  }
  return t;
}

std::optional<std::string> check_trapezoid_certificate(const TrapezoidInstance& t, const std::vector<Homothet>& cover) {
  const Rational base_y = t.inst.container.min_y();
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const ConvexPolygon poly = cover[i].realize();
    if (poly.min_y() != base_y) continue;
    // The bottom edge of a homothet of the trapezoid is its edge 0.
    const Point2 u = cover[i].vertex(0), v = cover[i].vertex(1);
    for (const auto& seg : t.segments) {
      if (!(u.x < seg.p_r.x && v.x > seg.p_l.x)) continue;
      if (v.x - u.x > t.max_bottom) {
        std::ostringstream os;
        os << "piece " << i << " meets the segment below " << seg.p << " with bottom " << (v.x - u.x)
           << " > " << t.max_bottom;
        return os.str();
      }
    }
  }
  return std::nullopt;
}

}  // namespace selfcover
