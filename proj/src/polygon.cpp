#include "curvereach/polygon.hpp"

#include <algorithm>
#include <limits>

namespace curvereach {

namespace {
constexpr double kCoordLimit = 1e6;
}

ConvexPolygon ConvexPolygon::validate(std::vector<Point> vertices, const Tolerance& tol) {
    if (vertices.size() < 3) throw Error("TooFewVertices", "a polygon needs at least 3 vertices");
    for (const Point& p : vertices) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || std::abs(p.x) > kCoordLimit ||
            std::abs(p.y) > kCoordLimit) {
            throw Error("CoordinateRange", "vertex coordinates must be finite and within 1e6");
        }
    }
    int n = static_cast<int>(vertices.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (distance(vertices[i], vertices[j]) <= tol.len)
                throw Error("DuplicateVertex", "vertices " + std::to_string(i) + " and " +
                                                   std::to_string(j) + " coincide");
        }
    }
    std::vector<Direction> dirs;
    dirs.reserve(n);
    for (int i = 0; i < n; ++i)
        dirs.push_back(Direction(normalized(vertices[(i + 1) % n] - vertices[i])));
    for (int i = 0; i < n; ++i) {
        Vec2 a = dirs[i].vec();
        Vec2 b = dirs[(i + 1) % n].vec();
        double c = cross(a, b);
        if (std::abs(c) <= tol.len && dot(a, b) > 0.0)
            throw Error("CollinearVertices",
                        "vertex " + std::to_string((i + 1) % n) + " is collinear");
        if (c <= tol.len)
            throw Error("NotConvex", "vertices must be strictly convex in counterclockwise order");
    }
    ConvexPolygon poly;
    poly.verts_ = std::move(vertices);
    poly.edge_dirs_ = std::move(dirs);
    return poly;
}

double ConvexPolygon::min_signed_dist(Point p) const {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < size(); ++i) m = std::min(m, signed_dist(p, i));
    return m;
}

double ConvexPolygon::boundary_distance(Point p) const {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < size(); ++i) m = std::min(m, distance_to_segment(p, edge(i)));
    return m;
}

Side ConvexPolygon::classify(Point p, const Tolerance& tol) const {
    if (boundary_distance(p) <= tol.band) return Side::Boundary;
    return min_signed_dist(p) > 0.0 ? Side::Inside : Side::Outside;
}

double ConvexPolygon::area() const {
    double a = 0.0;
    for (int i = 0; i < size(); ++i) a += cross(verts_[i], verts_[(i + 1) % size()]);
    return a / 2.0;
}

Point ConvexPolygon::centroid() const {
    Vec2 c{0.0, 0.0};
    double a = 0.0;
    for (int i = 0; i < size(); ++i) {
        double w = cross(verts_[i], verts_[(i + 1) % size()]);
        c = c + (verts_[i] + verts_[(i + 1) % size()]) * w;
        a += w;
    }
    return c * (1.0 / (3.0 * a));
}

double ConvexPolygon::clip_ray(Point p, Vec2 dir, const Tolerance& tol) const {
    double t_max = std::numeric_limits<double>::infinity();
    for (int i = 0; i < size(); ++i) {
        double a = signed_dist(p, i);
        double b = dot(dir, inward_normal(i));
        if (a < -tol.band && b <= 0.0) return 0.0;
        if (b < -1e-15) t_max = std::min(t_max, std::max(a, 0.0) / (-b));
    }
    return t_max;
}

int ConvexPolygon::nearest_edge(Point p) const {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < size(); ++i) {
        double d = distance_to_segment(p, edge(i));
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

ConvexPolygon ConvexPolygon::mirrored() const {
    std::vector<Point> v;
    v.reserve(verts_.size());
    for (auto it = verts_.rbegin(); it != verts_.rend(); ++it) v.push_back(mirror_point(*it));
    return validate(std::move(v));
}

BoundaryConfiguration boundary_config(const ConvexPolygon& poly, int edge_index, double t,
                                      bool forward, const Tolerance& tol) {
    Segment e = poly.edge(edge_index);
    Point p = e.point_at(t);
    if (distance(p, e.a) <= tol.len || distance(p, e.b) <= tol.len)
        throw Error("VertexStart", "boundary configurations on a polygon vertex are rejected");
    Direction d = poly.edge_dir(edge_index);
    return BoundaryConfiguration{poly.wrap(edge_index), p, forward ? d : d.reversed(), forward};
}

std::optional<BoundaryConfiguration> as_boundary_config(const ConvexPolygon& poly,
                                                        const Configuration& c,
                                                        const Tolerance& tol) {
    for (int i = 0; i < poly.size(); ++i) {
        Segment e = poly.edge(i);
        if (distance_to_segment(c.point, e) > tol.band) continue;
        Vec2 ed = poly.edge_dir(i).vec();
        if (std::abs(cross(c.dir.vec(), ed)) > tol.band) return std::nullopt;
        bool forward = dot(c.dir.vec(), ed) > 0.0;
        if (distance(c.point, e.a) <= tol.len || distance(c.point, e.b) <= tol.len)
            throw Error("VertexStart", "boundary configurations on a polygon vertex are rejected");
        return BoundaryConfiguration{i, c.point, c.dir, forward};
    }
    return std::nullopt;
}

double ForwardChain::distance(Point p) const {
    double m = std::numeric_limits<double>::infinity();
    for (const Segment& e : elements) m = std::min(m, distance_to_segment(p, e));
    return m;
}

ForwardChain forward_chain(const ConvexPolygon& poly, const BoundaryConfiguration& s,
                           const Tolerance& tol) {
    if (!s.forward)
        throw Error("ClockwiseStart", "forward chains are defined for counterclockwise starts");
    ForwardChain fc;
    fc.start = s;
    int i = s.edge_index;
    fc.elements.push_back({s.point, poly.edge(i).b});
    fc.edge_indices.push_back(i);
    double turn = 0.0;
    for (int k = 1; k < poly.size(); ++k) {
        int j = poly.wrap(i + k);
        Vec2 a = poly.edge_dir(poly.wrap(i + k - 1)).vec();
        Vec2 b = poly.edge_dir(j).vec();
        double ext = std::atan2(cross(a, b), dot(a, b));  // in (0, pi) for strict convexity
        if (turn + ext > kPi + tol.angle) break;
        turn += ext;
        fc.elements.push_back(poly.edge(j));
        fc.edge_indices.push_back(j);
    }
    fc.total_turn = turn;
    return fc;
}

namespace {

// Vertex of the uniformly shrinking polygon: position(t) = pos0 + vel * t,
// or a fixed terminal point when the flanking offset lines are antiparallel.
struct ShrinkVertex {
    Point pos0;
    Vec2 vel;
    bool terminal = false;
    Point birth_pos;
    double birth_t = 0.0;

    Point at(double t) const { return terminal ? pos0 : pos0 + vel * t; }
};

// Intersection of the two inward offset lines n.x = c + t as a trajectory.
std::optional<ShrinkVertex> make_vertex(Vec2 na, double ca, Vec2 nb, double cb, double t_birth) {
    double det = cross(na, nb);
    if (std::abs(det) < 1e-12) return std::nullopt;
    Point pos0{(ca * nb.y - cb * na.y) / det, (na.x * cb - nb.x * ca) / det};
    Vec2 vel{(nb.y - na.y) / det, (na.x - nb.x) / det};
    ShrinkVertex v{pos0, vel, false, pos0 + vel * t_birth, t_birth};
    return v;
}

}  // namespace

MedialAxis convex_medial_axis(const ConvexPolygon& poly, const Tolerance& tol) {
    int n = poly.size();
    std::vector<Vec2> normals(n);
    std::vector<double> offsets(n);
    for (int i = 0; i < n; ++i) {
        normals[i] = poly.inward_normal(i);
        offsets[i] = dot(normals[i], Vec2(poly.vertex(i)));
    }
    std::vector<int> edges(n);
    for (int i = 0; i < n; ++i) edges[i] = i;
    // verts[i] sits between edges[i] and edges[i+1].
    std::vector<ShrinkVertex> verts(n);
    for (int i = 0; i < n; ++i) {
        int a = edges[i], b = edges[(i + 1) % n];
        auto v = make_vertex(normals[a], offsets[a], normals[b], offsets[b], 0.0);
        verts[i] = *v;  // strictly convex: adjacent normals are never parallel
        verts[i].birth_pos = poly.vertex(i + 1);
        verts[i].pos0 = poly.vertex(i + 1);  // exact corner as the affine base
    }

    MedialAxis axis;
    auto emit = [&](const ShrinkVertex& v, Point end, double t_end) {
        if (distance(v.birth_pos, end) <= tol.len) return;
        axis.edges.push_back({{v.birth_pos, end}, v.birth_t, t_end});
    };

    double now = 0.0;
    while (edges.size() > 2) {
        int k = static_cast<int>(edges.size());
        // Vanish time of each active edge: its two endpoint vertices coincide.
        double best_t = std::numeric_limits<double>::infinity();
        int best_j = -1;
        for (int j = 0; j < k; ++j) {
            const ShrinkVertex& u = verts[(j + k - 1) % k];
            const ShrinkVertex& w = verts[j];
            Vec2 d = poly.edge_dir(edges[j]).vec();
            double g0 = dot(w.pos0 - u.pos0, d);
            double g1 = dot((w.terminal ? Vec2{0, 0} : w.vel) - (u.terminal ? Vec2{0, 0} : u.vel), d);
            double t;
            if (u.terminal && w.terminal) {
                t = now;  // both frozen: collapse immediately
            } else if (g1 >= -1e-12) {
                continue;
            } else {
                t = -g0 / g1;
            }
            if (t < now - tol.len) t = now;
            if (t < best_t - 1e-12) {
                best_t = t;
                best_j = j;
            }
        }
        if (best_j < 0) break;
        int k_prev = (best_j + k - 1) % k;
        ShrinkVertex u = verts[k_prev];
        ShrinkVertex w = verts[best_j];
        Point meet = u.terminal ? u.pos0 : u.at(best_t);
        emit(u, meet, best_t);
        emit(w, w.terminal ? w.pos0 : w.at(best_t), best_t);
        now = best_t;

        int ea = edges[k_prev];
        int eb = edges[(best_j + 1) % k];
        edges.erase(edges.begin() + best_j);
        verts.erase(verts.begin() + best_j);
        int pos = best_j % static_cast<int>(edges.size());
        int prev_pos = (pos + static_cast<int>(edges.size()) - 1) % static_cast<int>(edges.size());
        auto v = make_vertex(normals[ea], offsets[ea], normals[eb], offsets[eb], best_t);
        if (v) {
            v->birth_pos = meet;
            v->birth_t = best_t;
            verts[prev_pos] = *v;
        } else {
            verts[prev_pos] = ShrinkVertex{meet, {0, 0}, true, meet, best_t};
        }
    }
    // Two edges left: the surviving vertices close the axis (the spine for
    // parallel opposite edges, a single point otherwise).
    for (const ShrinkVertex& v : verts) emit(v, v.at(now), now);
    if (verts.size() == 2) {
        Point p1 = verts[0].at(now), p2 = verts[1].at(now);
        if (distance(p1, p2) > tol.len) axis.edges.push_back({{p1, p2}, now, now});
    }
    return axis;
}

}  // namespace curvereach
