#pragma once

#include <optional>

#include "curvereach/boundary_reach.hpp"

namespace curvereach {

/// Two tangent unit arcs from the start configuration, ending tangent to the
/// polygon boundary. RL starts turn right then left and end counterclockwise;
/// LR starts are the mirror image and end clockwise.
struct CanonicalStart {
    bool rl = true;
    int edge_index = 0;
    UnitDisk first_disk;
    UnitDisk second_disk;
    double sweep1 = 0.0;  // swept angle on the first disk
    double sweep2 = 0.0;  // swept angle on the second disk
    Configuration switch_config;
    BoundaryConfiguration end;
};

struct DaRegion {
    LdaRegion left;
    LdaRegion right;
    ArcPolygon union_region;
};

/// Region reachable by one arc plus one segment on either side disk.
DaRegion direct_access(const ConvexPolygon& poly, const Configuration& s,
                       const Tolerance& tol = {});

/// All canonical starts: for each edge and each kind at most two, validated by
/// sampling the two arcs inside the polygon at 1e-3 rad; sorted by
/// (edge_index, kind).
std::vector<CanonicalStart> canonical_starts(const ConvexPolygon& poly, const Configuration& s,
                                             const Tolerance& tol = {});

/// One boundary-machinery run, either directly from a boundary start or after
/// a canonical start. Mirrored bundles operate on the mirrored instance.
struct ReachBundle {
    std::optional<CanonicalStart> canonical;
    bool mirrored = false;
    BoundaryConfiguration end;  // counterclockwise, in machinery coordinates
    BoundaryReachParts parts;   // in machinery coordinates
};

struct ReachStats {
    bool da_covers = false;
    bool boundary_start = false;
    int canonical_start_count = 0;
    int bfil_size = 0;
    int arc_count = 0;
    double area = 0.0;
    double wall_ms = 0.0;
};

/// Reachable region from an arbitrary configuration, with the data needed to
/// answer membership queries and to build witness paths.
class ReachSet {
public:
    static ReachSet compute(const ConvexPolygon& poly, const Configuration& s,
                            const Tolerance& tol = {});

    const ArcPolygon& region() const { return region_; }
    Side classify(Point p) const { return region_classify(region_, p, tol_); }
    const ReachStats& stats() const { return stats_; }
    const ConvexPolygon& polygon() const { return poly_; }
    const ConvexPolygon& mirrored_polygon() const;
    const Configuration& start() const { return start_; }
    const std::vector<ReachBundle>& bundles() const { return bundles_; }
    const std::optional<DaRegion>& da() const { return da_; }
    const Tolerance& tolerance() const { return tol_; }

private:
    ReachSet(ConvexPolygon poly, Configuration s, Tolerance tol)
        : poly_(std::move(poly)), start_(s), tol_(tol) {}

    ConvexPolygon poly_;
    std::optional<ConvexPolygon> poly_mirror_;
    Configuration start_;
    Tolerance tol_;
    ArcPolygon region_;
    std::optional<DaRegion> da_;
    std::vector<ReachBundle> bundles_;
    ReachStats stats_;
};

inline ReachSet reach(const ConvexPolygon& poly, const Configuration& s,
                      const Tolerance& tol = {}) {
    return ReachSet::compute(poly, s, tol);
}

}  // namespace curvereach
