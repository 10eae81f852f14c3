#pragma once

#include "curvereach/polygon.hpp"
#include "curvereach/region.hpp"

namespace curvereach {

/// The set of unit disks contained in a convex polygon: their centers form the
/// inward offset of the polygon by 1, and the union of the disks (fil) is the
/// Minkowski sum of that offset with the unit disk.
struct Filling {
    std::vector<Point> center_hull;      // ccw; may degenerate to 2 points or 1
    std::vector<UnitDisk> extreme_disks; // disks at the hull vertices
    ArcPolygon fil_region;               // union of all contained unit disks

    bool empty() const { return center_hull.empty(); }
    /// True when the unit disk centered at c is contained in the polygon,
    /// i.e. c lies in the center hull (within slack).
    bool center_contains(Point c, double slack) const;
};

/// Connected component of P minus fil(P): bounded by one arc of an extreme
/// disk and a connected chain of the polygon boundary.
struct Pocket {
    UnitDisk bounding_disk;
    Arc arc;                        // ccw portion of the fil boundary, mouth_in to mouth_out
    std::vector<Segment> chain;     // boundary chain ccw from mouth_in to mouth_out
    Point mouth_in;
    Point mouth_out;
};

/// Intersection of all filling disks (the unreachable core for boundary starts).
struct Core {
    ArcPolygon region;
    bool empty() const { return region.empty(); }
};

Filling compute_filling(const ConvexPolygon& poly, const Tolerance& tol = {});

std::vector<Pocket> compute_pockets(const ConvexPolygon& poly, const Filling& fil,
                                    const Tolerance& tol = {});

/// Intersection of the extreme disks only; the intersection over all of FIL
/// equals this because the disk set is closed under convex combinations of
/// centers.
Core core_intersection(const Filling& fil, const Tolerance& tol = {});

/// Intersection of a set of unit disks, bounded by unit arcs (empty when the
/// interior is empty).
ArcPolygon intersect_unit_disks(const std::vector<UnitDisk>& disks, const Tolerance& tol = {});

/// Boundary chain of the polygon walked counterclockwise from a to b (both on
/// the boundary).
std::vector<Segment> boundary_chain(const ConvexPolygon& poly, Point a, Point b,
                                    const Tolerance& tol = {});

/// The polygon with the core removed as a hole (the union of the complements
/// of the extreme disks inside P).
ArcPolygon polygon_minus_core(const ConvexPolygon& poly, const Core& core);

}  // namespace curvereach
