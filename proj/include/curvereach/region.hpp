#pragma once

#include <array>
#include <variant>

#include "curvereach/geometry.hpp"
#include "curvereach/polygon.hpp"

namespace curvereach {

/// Boundary element of an arc polygon: a line segment or a unit-circle arc.
using Element = std::variant<Segment, Arc>;

Point element_start(const Element& e);
Point element_end(const Element& e);
Point element_midpoint(const Element& e);
Vec2 element_tangent_start(const Element& e);
Vec2 element_tangent_end(const Element& e);
double element_length(const Element& e);
double distance_to_element(Point p, const Element& e);

/// Region bounded by cycles of segments and unit arcs. Outer cycles run
/// counterclockwise, holes clockwise. Cycles close within tolerance and
/// elements never cross (touching is allowed).
struct ArcPolygon {
    std::vector<std::vector<Element>> cycles;

    bool empty() const { return cycles.empty(); }
};

ArcPolygon region_from_polygon(const ConvexPolygon& poly);
ArcPolygon region_from_disk(const UnitDisk& d);

/// Point classification with a boundary band of width tol.band.
Side region_classify(const ArcPolygon& r, Point p, const Tolerance& tol = {});
/// Distance from p to the nearest boundary element.
double region_boundary_distance(const ArcPolygon& r, Point p);
/// Exact area: shoelace plus circular-segment corrections; holes subtract.
double region_area(const ArcPolygon& r);
/// Number of arc elements on the boundary.
int region_arc_count(const ArcPolygon& r);
/// Signed area of one cycle (positive for counterclockwise).
double cycle_signed_area(const std::vector<Element>& cycle);

/// Point-set union. Builds the arrangement of all boundary elements, splits
/// them at intersections, keeps the pieces adjacent to exactly one covered
/// side, and stitches the result back into cycles.
ArcPolygon region_union(const std::vector<ArcPolygon>& parts, const Tolerance& tol = {});

/// Mirror across the x axis, preserving the orientation convention.
ArcPolygon mirror_region(const ArcPolygon& r);

/// Checks cycle closure; throws InvalidRegion on failure.
void validate_region(const ArcPolygon& r, const Tolerance& tol = {});

/// Axis-aligned bounding box as {xmin, xmax, ymin, ymax}.
std::array<double, 4> region_bbox(const ArcPolygon& r);

}  // namespace curvereach
