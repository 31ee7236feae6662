#pragma once

// Lower-bound constructions: a blocking set P plus dummy points that no
// admissible homothet can take two of at once, which forces `bound` pieces.

#include <optional>
#include <string>
#include <vector>

#include "selfcover/geometry.hpp"

namespace selfcover {

struct LBInstance {
  ConvexPolygon container;
  std::vector<Point2> pts;
  std::vector<Point2> dummies;
  std::size_t bound = 1;
  Rational eps;
};

/// Canonical triangle, P on the vertical line x = 1 at heights i/(k+1).
/// `eps` defaults to 1/(4(k+1)^2) and is halved until the dummies separate.
LBInstance lb_triangle(int k, std::optional<Rational> eps = std::nullopt);

/// Unit square, P on the diagonal at 1 - 2^-i. `eps` defaults to
/// 1/(2^(k+1)(k+1)). For k = 0 the two corner dummies are returned as stated
/// but cannot be separated (the square covers itself), so no certification
/// is attempted.
LBInstance lb_square(int k, std::optional<Rational> eps = std::nullopt);

/// Per-point certificate of the trapezoid bound: every piece of a cover that
/// meets the open segment (p_l, p_r) has height at most delta, hence bottom
/// edge at most delta / c, and the segment has length delta (1 - 1/c).
struct TrapezoidSegment {
  Point2 p, p_l, p_r;
};

struct TrapezoidInstance {
  LBInstance inst;
  Rational c;
  std::vector<TrapezoidSegment> segments;
  /// delta / c.
  Rational max_bottom;
};

/// Symmetric trapezoid with bottom 1/c, top 1 and height 1; k points at
/// height delta, one above the middle of each of k equal parts of the bottom
/// edge. delta defaults to 1/(2ck) so that neighbouring segments stay more
/// than delta/c apart. bound = ceil(c - 1) * k.
TrapezoidInstance lb_trapezoid(const Rational& c, int k, std::optional<Rational> delta = std::nullopt);

struct SeparationWitness {
  std::size_t first = 0, second = 0;
  Homothet homothet;
};

struct SeparationReport {
  std::size_t pairs_checked = 0;
  std::size_t lps_solved = 0;
  std::vector<SeparationWitness> violations;
  bool ok() const { return violations.empty(); }
};

/// For every pair of dummies, decides exactly whether some homothet inside
/// the container has both in its interior and no point of P in its interior.
/// Branch and bound over LPs: maximize the interior margin of the pair; if
/// the optimum swallows a point of P, branch on which edge keeps it out.
SeparationReport verify_dummy_separation(const LBInstance& inst);

/// Checks a trapezoid certificate against a concrete cover: every piece
/// meeting an open segment (p_l, p_r) has bottom edge at most max_bottom.
/// Returns a description of the first failure, if any.
std::optional<std::string> check_trapezoid_certificate(const TrapezoidInstance& t, const std::vector<Homothet>& cover);

}  // namespace selfcover
