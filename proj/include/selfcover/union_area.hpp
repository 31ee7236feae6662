#pragma once

#include <span>

#include "selfcover/geometry.hpp"

namespace selfcover {

/// Exact area of the union of convex polygons.
///
/// The plane is cut into vertical slabs at every vertex abscissa and every
/// crossing abscissa of two edges from different polygons. Inside a slab the
/// endpoints of all vertical sections are linear and never cross, so the
/// covered length is linear in x and the slab contributes
/// width * covered_length(mid).
Rational union_area(std::span<const ConvexPolygon> polys);

}  // namespace selfcover
