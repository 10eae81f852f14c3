#pragma once

#include <optional>

#include "curvereach/geometry.hpp"

namespace curvereach {

enum class Side { Inside, Boundary, Outside };

/// Strictly convex polygon, vertices in counterclockwise order.
class ConvexPolygon {
public:
    /// Validates and builds a polygon. Throws TooFewVertices, DuplicateVertex,
    /// CollinearVertices, NotConvex or CoordinateRange.
    static ConvexPolygon validate(std::vector<Point> vertices, const Tolerance& tol = {});

    const std::vector<Point>& vertices() const { return verts_; }
    int size() const { return static_cast<int>(verts_.size()); }
    Point vertex(int i) const { return verts_[wrap(i)]; }
    Segment edge(int i) const { return {verts_[wrap(i)], verts_[wrap(i + 1)]}; }
    Direction edge_dir(int i) const { return edge_dirs_[wrap(i)]; }
    /// Unit normal pointing into the polygon for edge i.
    Vec2 inward_normal(int i) const { return perp_ccw(edge_dirs_[wrap(i)].vec()); }
    /// Signed distance of p from the supporting line of edge i; positive inside.
    double signed_dist(Point p, int i) const {
        int k = wrap(i);
        return dot(p - verts_[k], perp_ccw(edge_dirs_[k].vec()));
    }
    /// Minimum over edges of the inward signed line distance (negative outside).
    double min_signed_dist(Point p) const;
    /// Exact distance from p to the polygon boundary.
    double boundary_distance(Point p) const;

    Side classify(Point p, const Tolerance& tol = {}) const;
    bool contains(Point p, double slack = 0.0) const { return min_signed_dist(p) >= -slack; }

    /// Whole unit disk inside the polygon (within slack on the line distances).
    bool contains_disk(const UnitDisk& d, double slack = 0.0) const {
        return min_signed_dist(d.center) >= 1.0 - slack;
    }

    double area() const;
    Point centroid() const;

    /// Clips the ray p + t*dir, t >= 0, against the polygon. Returns the exit
    /// parameter t_max (entry assumed at or before p; p must not be strictly
    /// outside). Returns 0 for rays that leave immediately.
    double clip_ray(Point p, Vec2 dir, const Tolerance& tol = {}) const;

    /// Index of the edge whose segment is nearest to p.
    int nearest_edge(Point p) const;

    /// Mirror across the x axis (y -> -y), reversing vertex order to stay ccw.
    ConvexPolygon mirrored() const;

    int wrap(int i) const {
        int n = size();
        i %= n;
        return i < 0 ? i + n : i;
    }

private:
    std::vector<Point> verts_;
    std::vector<Direction> edge_dirs_;
};

/// Configuration on the polygon boundary, heading along the indexed edge.
/// `forward` is true when dir equals the counterclockwise edge direction.
struct BoundaryConfiguration {
    int edge_index = 0;
    Point point;
    Direction dir;
    bool forward = true;

    Configuration config() const { return {point, dir}; }
};

/// Builds a boundary configuration at parameter t in (0,1) on edge i, oriented
/// counterclockwise (forward=true) or clockwise. Throws VertexStart if the
/// point coincides with a polygon vertex within tol.len.
BoundaryConfiguration boundary_config(const ConvexPolygon& poly, int edge_index, double t,
                                      bool forward = true, const Tolerance& tol = {});

/// Classifies an arbitrary configuration against the boundary: returns the
/// matching counterclockwise/clockwise boundary configuration if c.point lies
/// on an edge and c.dir is tangent to it (within tol), otherwise nullopt.
std::optional<BoundaryConfiguration> as_boundary_config(const ConvexPolygon& poly,
                                                        const Configuration& c,
                                                        const Tolerance& tol = {});

/// Longest counterclockwise boundary subchain from s accumulating exterior
/// turning at most pi.
struct ForwardChain {
    BoundaryConfiguration start;
    std::vector<Segment> elements;      // contiguous along the boundary from start
    std::vector<int> edge_indices;      // polygon edge of each element
    double total_turn = 0.0;            // sum of exterior angles at interior vertices

    /// Minimum distance from p to the chain; the first element is truncated at
    /// the start point.
    double distance(Point p) const;
};

ForwardChain forward_chain(const ConvexPolygon& poly, const BoundaryConfiguration& s,
                           const Tolerance& tol = {});

/// Medial axis edge of a convex polygon; the clearance (distance to the two
/// nearest edges) is linear along the segment.
struct MedialAxisEdge {
    Segment seg;
    double clearance_a = 0.0;
    double clearance_b = 0.0;
};

struct MedialAxis {
    std::vector<MedialAxisEdge> edges;
};

/// Medial axis of a convex polygon, built by iterative edge collapse of the
/// uniformly shrinking polygon (O(n^2)).
MedialAxis convex_medial_axis(const ConvexPolygon& poly, const Tolerance& tol = {});

inline Point mirror_point(Point p) { return {p.x, -p.y}; }
inline Direction mirror_direction(Direction d) {
    Direction m;
    m.ux = d.ux;
    m.uy = -d.uy;
    return m;
}
inline Configuration mirror_config(const Configuration& c) {
    return {mirror_point(c.point), mirror_direction(c.dir)};
}

}  // namespace curvereach
