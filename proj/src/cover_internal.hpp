#pragma once

#include "selfcover/self_cover.hpp"

namespace selfcover::detail {

/// Fills in the certification report of a finished solution.
void certify(CoverSolution& sol);

/// Axis-parallel square container: returns its lower-left corner and side.
/// Throws GeometryError for anything else.
std::pair<Point2, Rational> square_frame(const ConvexPolygon& S);

}  // namespace selfcover::detail
