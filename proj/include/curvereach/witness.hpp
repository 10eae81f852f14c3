#pragma once

#include "curvereach/canonical.hpp"

namespace curvereach {

enum class Turn { Left, Right };

/// A unit-radius arc (amount in radians) or a straight segment (amount is the
/// length). Amounts are nonnegative; zero-length primitives are legal and kept.
struct PathPrimitive {
    bool is_arc = false;
    Turn turn = Turn::Left;
    double amount = 0.0;

    static PathPrimitive arc(Turn t, double angle) { return {true, t, angle}; }
    static PathPrimitive straight(double len) { return {false, Turn::Left, len}; }
};

struct CurvaturePath {
    Configuration start;
    std::vector<PathPrimitive> primitives;

    double length() const;
    Configuration end_config() const;
};

/// Configuration after traversing a fraction of one primitive.
Configuration advance(const Configuration& c, const PathPrimitive& p, double fraction = 1.0);

struct PathValidation {
    double max_curvature_violation = 0.0;
    double max_polygon_violation = 0.0;
    double endpoint_error = 0.0;
};

/// Minimum-length free-space path among the six families LSL, RSR, LSR, RSL,
/// LRL, RLR; three-arc candidates whose middle arc is not longer than pi are
/// discarded.
CurvaturePath dubins_shortest(const Configuration& a, const Configuration& b);

/// Samples the path at the given arclength step and reports the worst signed
/// excursion outside the polygon and the endpoint mismatch against `target`.
PathValidation validate_path(const ConvexPolygon& poly, const CurvaturePath& path,
                             std::optional<Point> target = std::nullopt, double step = 1e-3);

/// Witness of reachability: a path of schema at most CCSCS from the start of
/// the reach set to t. Returns nullopt iff t is classified outside the set;
/// throws NoWitnessFound when the classification says reachable but no
/// candidate composition validates.
std::optional<CurvaturePath> witness_path(const ReachSet& rs, Point t);

/// Drops zero-length primitives.
CurvaturePath normalized_path(const CurvaturePath& p, double eps = 1e-12);

/// Mirror across the x axis: flips every turn.
CurvaturePath mirror_path(const CurvaturePath& p);

/// True when the primitive type sequence embeds into arc,arc,straight,arc,straight.
bool schema_within_ccscs(const CurvaturePath& p);

}  // namespace curvereach
