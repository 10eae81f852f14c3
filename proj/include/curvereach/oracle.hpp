#pragma once

#include <cstdint>
#include <string>

#include "curvereach/polygon.hpp"

namespace curvereach {

struct GridSpec {
    double dx = 0.02;               // spatial cell size
    double dtheta = kTwoPi / 360.0; // heading cell size
    double step = 0.02;             // straight-primitive arclength; arcs turn one heading cell
};

/// Occupancy over (x, y, theta) cells plus the (x, y) projection.
struct ReachGrid {
    double origin_x = 0.0;
    double origin_y = 0.0;
    double dx = 0.02;
    int width = 0;
    int height = 0;
    int thetas = 0;
    std::vector<uint64_t> bits;  // (theta * height + y) * width + x
    std::vector<uint8_t> xy;     // projection mask, y * width + x
    uint64_t occupied_cells = 0;

    bool cell_occupied(int ix, int iy, int it) const {
        uint64_t idx = (static_cast<uint64_t>(it) * height + iy) * width + ix;
        return bits[idx >> 6] & (1ull << (idx & 63));
    }
    bool xy_occupied(int ix, int iy) const { return xy[static_cast<size_t>(iy) * width + ix] != 0; }
    int cell_x(double x) const { return static_cast<int>(std::lround((x - origin_x) / dx)); }
    int cell_y(double y) const { return static_cast<int>(std::lround((y - origin_y) / dx)); }
    Point cell_center(int ix, int iy) const {
        return {origin_x + ix * dx, origin_y + iy * dx};
    }

    /// Portable text export of the projection (RLE rows) for regression diffs.
    std::string export_text() const;
};

/// Breadth-first reachability over the configuration grid. Expansion uses
/// exact motion primitives from the continuously tracked state of each cell
/// (max-left arc, straight, max-right arc), so every occupied cell is truly
/// reachable; the grid only under-approximates near the frontier.
ReachGrid oracle_reach(const ConvexPolygon& poly, const Configuration& s, const GridSpec& g = {},
                       const Tolerance& tol = {});

enum class OracleAnswer { Reachable, Unreachable, Uncertain };

/// Classifies t against the grid: uncertain within 2*dx of the
/// occupied/free frontier, reachable when an occupied cell lies within dx.
OracleAnswer oracle_query(const ReachGrid& grid, const ConvexPolygon& poly, Point t);

}  // namespace curvereach
