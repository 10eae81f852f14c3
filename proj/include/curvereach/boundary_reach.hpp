#pragma once

#include "curvereach/filling.hpp"

namespace curvereach {

/// Region reachable by one turning arc on the side disk followed by one
/// straight segment, both inside the polygon.
struct LdaRegion {
    Configuration source;
    bool left = true;           // turning sense of the sweep
    UnitDisk disk;              // the side disk
    double start_angle = 0.0;   // angle of source.point on the disk
    double sweep = 0.0;         // usable arc sweep; 2*pi when the disk fits in P
    double exit_arc_end = 0.0;  // absolute angle where the arc leaves P (or wraps)
    ArcPolygon region;

    bool full_sweep() const { return sweep >= kTwoPi - 1e-12; }
    /// Tangency sweep needed to aim at p (p outside the open disk), in [0, 2*pi).
    double sweep_to(Point p) const;
    /// Membership with a band of width `band`.
    Side classify(const ConvexPolygon& poly, Point p, double band) const;
};

LdaRegion lda(const ConvexPolygon& poly, const Configuration& c, bool left = true,
              const Tolerance& tol = {});

/// First configuration at or after s1 on its edge whose left disk touches the
/// forward chain beyond its own tangency point. `absent` marks edges where no
/// such position exists; the configuration then sits at the far endpoint.
struct BlockingConfig {
    BoundaryConfiguration config;
    bool absent = false;
};

BlockingConfig blocking_config(const ConvexPolygon& poly, const BoundaryConfiguration& s1,
                               const Tolerance& tol = {});

enum class CandidateKind { TwoEdgeTangent, OneEdgeThroughD };

/// Boundary configuration whose left disk fits in P union DL(s) and touches
/// the forward chain of s at a second point (or through a crossing point of
/// DL(s) with the boundary).
struct CandidateConfiguration {
    BoundaryConfiguration config;
    UnitDisk disk;
    CandidateKind kind;
};

std::vector<CandidateConfiguration> candidate_configurations(const ConvexPolygon& poly,
                                                             const BoundaryConfiguration& s,
                                                             const Tolerance& tol = {});

enum class BfilEntryKind { Start, FilExtreme, EdgeFirst, EdgeBlocking, EdgeCandidate };

struct BfilEntry {
    UnitDisk disk;
    BoundaryConfiguration config;
    BfilEntryKind kind = BfilEntryKind::Start;
};

/// The reduced disk set whose accessible regions union to reach(s).
struct Bfil {
    std::vector<BfilEntry> entries;
    bool pocket_case = false;        // forward chain cuts the interior of DL(s)
    bool start_disk_in_fil = false;  // DL(s) is itself contained in P
};

Bfil bfil(const ConvexPolygon& poly, const BoundaryConfiguration& s, const Filling& fil,
          const Tolerance& tol = {});

/// Everything reach-from-boundary needs, kept separate so the full pipeline
/// can reuse the pieces: the bfil set, the accessible regions of its non-FIL
/// entries, and whether the complement of the core contributes.
struct BoundaryReachParts {
    Bfil set;
    std::vector<LdaRegion> ldas;  // start + per-edge candidates whose disks poke out of P
    bool fil_complement = false;
};

BoundaryReachParts boundary_reach_parts(const ConvexPolygon& poly, const BoundaryConfiguration& s,
                                        const Filling& fil, const Tolerance& tol = {});

/// Reachable region from a boundary configuration. Clockwise configurations
/// are handled by mirroring the instance.
ArcPolygon reach_from_boundary(const ConvexPolygon& poly, const BoundaryConfiguration& s,
                               const Tolerance& tol = {});

/// True when the forward chain of s enters the open left disk of s.
bool chain_hits_disk_interior(const ForwardChain& chain, const UnitDisk& disk,
                              const Tolerance& tol = {});

/// Exact test: the unit disk centered at c fits inside P union the disk `dome`.
bool contained_in_polygon_or_disk(const ConvexPolygon& poly, Point c, const UnitDisk& dome,
                                  const Tolerance& tol = {});

}  // namespace curvereach
