#include "curvereach/region.hpp"

#include <algorithm>
#include <limits>
#include <cstdlib>
#include <cstdio>
#include <map>

namespace curvereach {

namespace {
constexpr double kEpsLen = 1e-8;    // absolute snapping length inside the arrangement
constexpr double kEpsOn = 1e-7;     // "on boundary" band used during classification
constexpr double kEpsMerge = 1e-6;  // endpoint clustering radius
}  // namespace

Point element_start(const Element& e) {
    if (const Segment* s = std::get_if<Segment>(&e)) return s->a;
    return std::get<Arc>(e).start();
}

Point element_end(const Element& e) {
    if (const Segment* s = std::get_if<Segment>(&e)) return s->b;
    return std::get<Arc>(e).end();
}

Point element_midpoint(const Element& e) {
    if (const Segment* s = std::get_if<Segment>(&e)) return s->midpoint();
    const Arc& a = std::get<Arc>(e);
    return a.point_at(a.angle_at(0.5));
}

Vec2 element_tangent_start(const Element& e) {
    if (const Segment* s = std::get_if<Segment>(&e)) return normalized(s->delta());
    const Arc& a = std::get<Arc>(e);
    return a.tangent_at(a.from_angle);
}

Vec2 element_tangent_end(const Element& e) {
    if (const Segment* s = std::get_if<Segment>(&e)) return normalized(s->delta());
    const Arc& a = std::get<Arc>(e);
    return a.tangent_at(a.to_angle);
}

double element_length(const Element& e) {
    if (const Segment* s = std::get_if<Segment>(&e)) return s->length();
    return std::get<Arc>(e).extent();
}

double distance_to_element(Point p, const Element& e) {
    if (const Segment* s = std::get_if<Segment>(&e)) return distance_to_segment(p, *s);
    const Arc& a = std::get<Arc>(e);
    Vec2 rel = p - a.center;
    double r = norm(rel);
    if (r > 1e-12 && a.spans_angle(std::atan2(rel.y, rel.x))) return std::abs(r - 1.0);
    return std::min(distance(p, a.start()), distance(p, a.end()));
}

ArcPolygon region_from_polygon(const ConvexPolygon& poly) {
    std::vector<Element> cycle;
    for (int i = 0; i < poly.size(); ++i) cycle.push_back(poly.edge(i));
    return ArcPolygon{{std::move(cycle)}};
}

ArcPolygon region_from_disk(const UnitDisk& d) {
    return ArcPolygon{{{Arc{d.center, 0.0, kPi, true}, Arc{d.center, kPi, 0.0, true}}}};
}

double cycle_signed_area(const std::vector<Element>& cycle) {
    double a = 0.0;
    for (const Element& e : cycle) {
        if (const Segment* s = std::get_if<Segment>(&e)) {
            a += cross(s->a, s->b) / 2.0;
        } else {
            const Arc& arc = std::get<Arc>(e);
            double sweep = (arc.ccw ? 1.0 : -1.0) * arc.extent();
            a += cross(arc.center, arc.end() - arc.start()) / 2.0 + sweep / 2.0;
        }
    }
    return a;
}

double region_area(const ArcPolygon& r) {
    double a = 0.0;
    for (const auto& c : r.cycles) a += cycle_signed_area(c);
    return a;
}

int region_arc_count(const ArcPolygon& r) {
    int n = 0;
    for (const auto& c : r.cycles)
        for (const Element& e : c)
            if (std::holds_alternative<Arc>(e)) ++n;
    return n;
}

double region_boundary_distance(const ArcPolygon& r, Point p) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& c : r.cycles)
        for (const Element& e : c) m = std::min(m, distance_to_element(p, e));
    return m;
}

namespace {

// Crossing count of the ray p + t*dir (t > 0) with one element.
// Returns nullopt when the ray passes too close to an endpoint, a tangency,
// or runs along the element, so the caller can retry with another direction.
std::optional<int> ray_crossings(Point p, Vec2 dir, const Element& e) {
    constexpr double kGuard = 1e-9;
    if (const Segment* s = std::get_if<Segment>(&e)) {
        Vec2 d2 = s->delta();
        double denom = cross(dir, d2);
        Vec2 rel = s->a - p;
        if (std::abs(denom) < 1e-12) {
            // Parallel: ambiguous only when the ray runs along the segment.
            if (std::abs(cross(dir, rel)) < kGuard &&
                (dot(rel, dir) > -kGuard || dot(s->b - p, dir) > -kGuard))
                return std::nullopt;
            return 0;
        }
        double t = cross(rel, d2) / denom;
        double u = cross(rel, dir) / denom;
        if (u < -kGuard || u > 1.0 + kGuard) return 0;  // misses the segment span
        if (std::abs(u) < kGuard || std::abs(u - 1.0) < kGuard) return std::nullopt;
        if (std::abs(t) < kGuard) return std::nullopt;  // starts on the segment
        return t > 0.0 ? 1 : 0;
    }
    const Arc& a = std::get<Arc>(e);
    Vec2 rel = a.center - p;
    double tf = dot(rel, dir);
    double h2 = sq_norm(rel - dir * tf);
    double disc = 1.0 - h2;
    double ext = a.extent();
    auto span_pos = [&](double t) {
        Point q = p + dir * t;
        double ang = std::atan2(q.y - a.center.y, q.x - a.center.x);
        return a.ccw ? ccw_sweep(a.from_angle, ang) : cw_sweep(a.from_angle, ang);
    };
    if (std::abs(disc) < 1e-9) {
        // Tangent ray: ambiguous only if the touch sits on the swept span.
        double sweep = span_pos(tf);
        if (sweep < ext + 1e-6 || sweep > kTwoPi - 1e-6) return std::nullopt;
        return 0;
    }
    if (disc < 0.0) return 0;
    double half = std::sqrt(disc);
    int count = 0;
    for (double t : {tf - half, tf + half}) {
        double sweep = span_pos(t);
        bool near_end =
            sweep < 1e-9 || std::abs(sweep - ext) < 1e-9 || kTwoPi - sweep < 1e-9;
        bool in_span = sweep < ext;
        if (!in_span && !near_end) continue;
        if (near_end) return std::nullopt;
        if (std::abs(t) < kGuard) return std::nullopt;  // starts on the arc
        if (t > 0.0) ++count;
    }
    return count;
}

}  // namespace

Side region_classify(const ArcPolygon& r, Point p, const Tolerance& tol) {
    if (r.empty()) return Side::Outside;
    if (region_boundary_distance(r, p) <= tol.band) return Side::Boundary;
    // Even-odd rule over all cycles; retry with rotated ray directions when a
    // cast is degenerate.
    for (int attempt = 0; attempt < 64; ++attempt) {
        Vec2 dir = rotated(Vec2{1.0, 0.0}, 0.7548776662 * (attempt + 1) * kTwoPi);
        int total = 0;
        bool ok = true;
        for (const auto& c : r.cycles) {
            for (const Element& e : c) {
                auto n = ray_crossings(p, dir, e);
                if (!n) {
                    ok = false;
                    break;
                }
                total += *n;
            }
            if (!ok) break;
        }
        if (ok) return (total % 2 == 1) ? Side::Inside : Side::Outside;
    }
    throw Error("DegenerateQuery", "could not classify point (" + std::to_string(p.x) + ", " +
                                       std::to_string(p.y) + ") against region");
}

void validate_region(const ArcPolygon& r, const Tolerance& tol) {
    double slack = std::max(tol.len * 1e3, kEpsMerge);
    for (const auto& c : r.cycles) {
        if (c.empty()) throw Error("InvalidRegion", "empty cycle");
        for (size_t i = 0; i < c.size(); ++i) {
            Point e0 = element_end(c[i]);
            Point s1 = element_start(c[(i + 1) % c.size()]);
            if (distance(e0, s1) > slack)
                throw Error("InvalidRegion", "cycle is not closed");
        }
    }
}

ArcPolygon mirror_region(const ArcPolygon& r) {
    ArcPolygon out;
    for (const auto& c : r.cycles) {
        std::vector<Element> cycle;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            if (const Segment* s = std::get_if<Segment>(&*it)) {
                cycle.push_back(Segment{mirror_point(s->b), mirror_point(s->a)});
            } else {
                const Arc& a = std::get<Arc>(*it);
                cycle.push_back(Arc{mirror_point(a.center), -a.to_angle, -a.from_angle, a.ccw});
            }
        }
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Union by arrangement
// ---------------------------------------------------------------------------

namespace {

struct SubEdge {
    Element geom;
    int part = 0;
    Point a, b;
    bool used = false;
    bool dropped = false;
};

Point param_point(const Element& e, double u) {
    if (const Segment* s = std::get_if<Segment>(&e)) return s->point_at(u);
    const Arc& a = std::get<Arc>(e);
    return a.point_at(a.angle_at(u));
}

Vec2 param_tangent(const Element& e, double u) {
    if (const Segment* s = std::get_if<Segment>(&e)) return normalized(s->delta());
    const Arc& a = std::get<Arc>(e);
    return a.tangent_at(a.angle_at(u));
}

Element sub_element(const Element& e, double u0, double u1) {
    if (const Segment* s = std::get_if<Segment>(&e))
        return Segment{s->point_at(u0), s->point_at(u1)};
    const Arc& a = std::get<Arc>(e);
    return Arc{a.center, a.angle_at(u0), a.angle_at(u1), a.ccw};
}

// Fraction of the arc sweep at which absolute angle `ang` sits, or nullopt.
std::optional<double> arc_param(const Arc& a, double ang, double slack) {
    double s = a.ccw ? ccw_sweep(a.from_angle, ang) : cw_sweep(a.from_angle, ang);
    double ext = a.extent();
    if (s <= ext + slack) return std::clamp(s / ext, 0.0, 1.0);
    if (s >= kTwoPi - slack) return 0.0;
    return std::nullopt;
}

struct BBox {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool overlaps(const BBox& o, double pad) const {
        return xmin <= o.xmax + pad && o.xmin <= xmax + pad && ymin <= o.ymax + pad &&
               o.ymin <= ymax + pad;
    }
};

BBox element_bbox(const Element& e) {
    if (const Segment* s = std::get_if<Segment>(&e)) {
        return {std::min(s->a.x, s->b.x), std::max(s->a.x, s->b.x), std::min(s->a.y, s->b.y),
                std::max(s->a.y, s->b.y)};
    }
    const Arc& a = std::get<Arc>(e);
    Point p0 = a.start(), p1 = a.end();
    BBox b{std::min(p0.x, p1.x), std::max(p0.x, p1.x), std::min(p0.y, p1.y),
           std::max(p0.y, p1.y)};
    // Extend over any axis extreme the sweep covers.
    const double axes[4] = {0.0, kPi / 2.0, kPi, -kPi / 2.0};
    for (double ang : axes) {
        if (a.spans_angle(ang)) {
            Point q = a.point_at(ang);
            b.xmin = std::min(b.xmin, q.x);
            b.xmax = std::max(b.xmax, q.x);
            b.ymin = std::min(b.ymin, q.y);
            b.ymax = std::max(b.ymax, q.y);
        }
    }
    return b;
}

// Collects mutual split parameters for a pair of elements.
void collect_splits(const Element& e1, const Element& e2, std::vector<double>& out1,
                    std::vector<double>& out2, const Tolerance& tol) {
    const Segment* s1 = std::get_if<Segment>(&e1);
    const Segment* s2 = std::get_if<Segment>(&e2);
    double len1 = element_length(e1);
    double len2 = element_length(e2);
    if (len1 < kEpsLen || len2 < kEpsLen) return;
    double slack1 = kEpsLen / len1;
    double slack2 = kEpsLen / len2;
    if (s1 && s2) {
        Vec2 d1 = s1->delta(), d2 = s2->delta();
        double denom = cross(d1, d2);
        if (std::abs(denom) / (len1 * len2) < 1e-9) {
            // Parallel: split only when the supporting lines coincide.
            if (std::abs(cross(normalized(d1), s2->a - s1->a)) > kEpsLen) return;
            Vec2 u = normalized(d1);
            for (Point p : {s2->a, s2->b}) {
                double t = dot(p - s1->a, u) / len1;
                if (t > slack1 && t < 1.0 - slack1) out1.push_back(t);
            }
            for (Point p : {s1->a, s1->b}) {
                double t = dot(p - s2->a, normalized(d2)) / len2;
                if (t > slack2 && t < 1.0 - slack2) out2.push_back(t);
            }
            return;
        }
        double t1 = cross(s2->a - s1->a, d2) / denom;
        double t2 = cross(s2->a - s1->a, d1) / denom;
        if (t1 >= -slack1 && t1 <= 1.0 + slack1 && t2 >= -slack2 && t2 <= 1.0 + slack2) {
            out1.push_back(std::clamp(t1, 0.0, 1.0));
            out2.push_back(std::clamp(t2, 0.0, 1.0));
        }
        return;
    }
    if (s1 && !s2) {
        collect_splits(e2, e1, out2, out1, tol);
        return;
    }
    const Arc& a1 = std::get<Arc>(e1);
    double ang_slack = 10.0 * kEpsLen;
    if (!s1 && s2) {
        for (const auto& [t, p] : intersect_circle_line(UnitDisk{a1.center}, *s2, tol)) {
            if (t < -slack2 || t > 1.0 + slack2) continue;
            auto u1 = arc_param(a1, std::atan2(p.y - a1.center.y, p.x - a1.center.x), ang_slack);
            if (!u1) continue;
            out1.push_back(*u1);
            out2.push_back(std::clamp(t, 0.0, 1.0));
        }
        return;
    }
    const Arc& a2 = std::get<Arc>(e2);
    if (distance(a1.center, a2.center) < tol.len) {
        // Same supporting circle: split each at the other's endpoints.
        for (double ang : {a2.from_angle, a2.to_angle}) {
            auto u = arc_param(a1, ang, 0.0);
            if (u && *u > slack1 && *u < 1.0 - slack1) out1.push_back(*u);
        }
        for (double ang : {a1.from_angle, a1.to_angle}) {
            auto u = arc_param(a2, ang, 0.0);
            if (u && *u > slack2 && *u < 1.0 - slack2) out2.push_back(*u);
        }
        return;
    }
    for (Point p : intersect_circles(UnitDisk{a1.center}, UnitDisk{a2.center}, tol)) {
        auto u1 = arc_param(a1, std::atan2(p.y - a1.center.y, p.x - a1.center.x), ang_slack);
        auto u2 = arc_param(a2, std::atan2(p.y - a2.center.y, p.x - a2.center.x), ang_slack);
        if (u1 && u2) {
            out1.push_back(*u1);
            out2.push_back(*u2);
        }
    }
}

bool same_carrier(const Element& a, const Element& b) {
    const Segment* sa = std::get_if<Segment>(&a);
    const Segment* sb = std::get_if<Segment>(&b);
    if (sa && sb) {
        Vec2 ua = normalized(sa->delta()), ub = normalized(sb->delta());
        return std::abs(cross(ua, ub)) < 1e-7 && dot(ua, ub) > 0.0 &&
               std::abs(cross(ua, sb->a - sa->a)) < kEpsMerge;
    }
    const Arc* aa = std::get_if<Arc>(&a);
    const Arc* ab = std::get_if<Arc>(&b);
    if (aa && ab) return aa->ccw == ab->ccw && distance(aa->center, ab->center) < kEpsMerge;
    return false;
}

// Curvature rank at the start of an element: left-turning arcs bend the most
// to the left, straights are flat, right-turning arcs bend right.
int curvature_rank(const Element& e) {
    if (std::holds_alternative<Segment>(e)) return 1;
    return std::get<Arc>(e).ccw ? 0 : 2;
}

class VertexIndex {
public:
    int id_for(Point p) {
        long kx = static_cast<long>(std::floor(p.x / kEpsMerge));
        long ky = static_cast<long>(std::floor(p.y / kEpsMerge));
        for (long dx = -1; dx <= 1; ++dx) {
            for (long dy = -1; dy <= 1; ++dy) {
                auto it = grid_.find({kx + dx, ky + dy});
                if (it == grid_.end()) continue;
                for (int id : it->second) {
                    if (distance(points_[id], p) <= 1.5 * kEpsMerge) return id;
                }
            }
        }
        int id = static_cast<int>(points_.size());
        points_.push_back(p);
        grid_[{kx, ky}].push_back(id);
        return id;
    }
    Point point(int id) const { return points_[id]; }

private:
    std::map<std::pair<long, long>, std::vector<int>> grid_;
    std::vector<Point> points_;
};

std::vector<Element> normalized_elements(const ArcPolygon& r) {
    std::vector<Element> out;
    for (const auto& c : r.cycles) {
        double total = 0.0;
        for (const Element& e : c) total += element_length(e);
        if (total < 1e-3) continue;  // degenerate sliver cycle
        for (const Element& e : c) {
            if (const Arc* a = std::get_if<Arc>(&e)) {
                double ext = a->extent();
                if (ext > kPi + 1e-12) {
                    double mid = a->angle_at(0.5);
                    out.push_back(Arc{a->center, a->from_angle, mid, a->ccw});
                    out.push_back(Arc{a->center, mid, a->to_angle, a->ccw});
                    continue;
                }
            }
            if (element_length(e) < kEpsLen) continue;
            out.push_back(e);
        }
    }
    return out;
}

// Union of exactly two regions.
ArcPolygon union2(const ArcPolygon& ra, const ArcPolygon& rb, const Tolerance& tol) {
    const ArcPolygon* parts[2] = {&ra, &rb};
    std::vector<Element> elems;
    std::vector<int> owner;
    for (int p = 0; p < 2; ++p) {
        for (Element& e : normalized_elements(*parts[p])) {
            elems.push_back(std::move(e));
            owner.push_back(p);
        }
    }
    // Split at every contact, including touches between elements of the same
    // part, so coincident boundary pieces share their endpoints.
    std::vector<std::vector<double>> splits(elems.size());
    std::vector<BBox> boxes;
    boxes.reserve(elems.size());
    for (const Element& e : elems) boxes.push_back(element_bbox(e));
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = i + 1; j < elems.size(); ++j) {
            if (!boxes[i].overlaps(boxes[j], kEpsMerge)) continue;
            collect_splits(elems[i], elems[j], splits[i], splits[j], tol);
        }
    }

    std::vector<SubEdge> subs;
    for (size_t i = 0; i < elems.size(); ++i) {
        auto& ts = splits[i];
        ts.push_back(0.0);
        ts.push_back(1.0);
        std::sort(ts.begin(), ts.end());
        double min_gap = kEpsLen / element_length(elems[i]);
        for (size_t k = 0; k + 1 < ts.size(); ++k) {
            if (ts[k + 1] - ts[k] < min_gap) continue;
            Element g = sub_element(elems[i], ts[k], ts[k + 1]);
            subs.push_back({g, owner[i], element_start(g), element_end(g), false, false});
        }
    }

    // Keep sub-edges not strictly inside the other part.
    Tolerance on_tol = tol;
    on_tol.band = kEpsOn;
    for (SubEdge& s : subs) {
        Point m = param_point(s.geom, 0.5);
        Side side = region_classify(*parts[1 - s.part], m, on_tol);
        if (side == Side::Inside) s.dropped = true;
    }

    // Overlapping boundary pieces: identical orientation keeps one copy,
    // opposite orientation means the union covers both sides, so drop both.
    auto same_geometry = [](const SubEdge& x, const SubEdge& y) {
        if (std::holds_alternative<Arc>(x.geom) != std::holds_alternative<Arc>(y.geom))
            return false;
        if (const Arc* ax = std::get_if<Arc>(&x.geom)) {
            if (distance(ax->center, std::get<Arc>(y.geom).center) > kEpsMerge) return false;
        }
        bool fwd = distance(x.a, y.a) < kEpsMerge && distance(x.b, y.b) < kEpsMerge;
        bool rev = distance(x.a, y.b) < kEpsMerge && distance(x.b, y.a) < kEpsMerge;
        return fwd || rev;
    };
    for (size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].dropped) continue;
        for (size_t j = i + 1; j < subs.size(); ++j) {
            if (subs[j].dropped || subs[i].part == subs[j].part) continue;
            if (distance(param_point(subs[i].geom, 0.5), param_point(subs[j].geom, 0.5)) >
                kEpsMerge)
                continue;
            if (!same_geometry(subs[i], subs[j])) continue;
            if (dot(param_tangent(subs[i].geom, 0.5), param_tangent(subs[j].geom, 0.5)) > 0.0) {
                subs[j].dropped = true;  // duplicate, keep the first
            } else {
                subs[i].dropped = true;  // interior on both sides
                subs[j].dropped = true;
                break;
            }
        }
    }

    if (std::getenv("CURVEREACH_UNION_DEBUG")) {
        for (size_t i = 0; i < subs.size(); ++i) {
            const SubEdge& se = subs[i];
            std::fprintf(stderr, "sub %zu part %d %s (%.9f,%.9f)-(%.9f,%.9f) len %.3g %s\n", i,
                         se.part, std::holds_alternative<Arc>(se.geom) ? "arc" : "seg", se.a.x,
                         se.a.y, se.b.x, se.b.y, element_length(se.geom),
                         se.dropped ? "DROP" : "keep");
        }
    }

    // Stitch the kept pieces into cycles.
    VertexIndex verts;
    std::vector<int> va(subs.size(), -1), vb(subs.size(), -1);
    std::vector<std::vector<int>> out_edges;
    for (size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].dropped) continue;
        va[i] = verts.id_for(subs[i].a);
        vb[i] = verts.id_for(subs[i].b);
        if (va[i] == vb[i] && element_length(subs[i].geom) < 10.0 * kEpsMerge) {
            subs[i].dropped = true;  // splinter collapsed by vertex snapping
            continue;
        }
        if (static_cast<size_t>(std::max(va[i], vb[i])) >= out_edges.size())
            out_edges.resize(std::max(va[i], vb[i]) + 1);
        out_edges[va[i]].push_back(static_cast<int>(i));
    }

    ArcPolygon result;
    for (size_t start = 0; start < subs.size(); ++start) {
        if (subs[start].dropped || subs[start].used) continue;
        std::vector<Element> cycle;
        int cur = static_cast<int>(start);
        int start_vertex = va[start];
        for (size_t guard = 0; guard <= subs.size(); ++guard) {
            subs[cur].used = true;
            cycle.push_back(subs[cur].geom);
            int v = vb[cur];
            if (v == start_vertex ||
                distance(subs[cur].b, verts.point(start_vertex)) <= 3.0 * kEpsMerge)
                break;
            Vec2 u = param_tangent(subs[cur].geom, 1.0);
            int next = -1;
            double best_key = std::numeric_limits<double>::infinity();
            bool best_carrier = false;
            for (int cand : out_edges[v]) {
                if (subs[cand].used || subs[cand].dropped) continue;
                bool carrier = same_carrier(subs[cur].geom, subs[cand].geom);
                Vec2 w = param_tangent(subs[cand].geom, 0.0);
                double key = normalize_angle_2pi(std::atan2(w.y, w.x) - std::atan2(u.y, u.x));
                if (key < 1e-9) key = 0.0;
                key = key * 10.0 + curvature_rank(subs[cand].geom);
                if (carrier && !best_carrier) {
                    next = cand;
                    best_key = key;
                    best_carrier = true;
                } else if (carrier == best_carrier && key < best_key) {
                    next = cand;
                    best_key = key;
                }
            }
            if (next < 0)
                throw Error("UnionStitch", "open boundary while stitching union at (" +
                                               std::to_string(subs[cur].b.x) + ", " +
                                               std::to_string(subs[cur].b.y) + ")");
            cur = next;
        }
        if (cycle.empty()) continue;

        // Merge consecutive same-carrier pieces (including across the wrap).
        std::vector<Element> merged;
        for (const Element& e : cycle) {
            if (!merged.empty() && same_carrier(merged.back(), e) &&
                distance(element_end(merged.back()), element_start(e)) < kEpsMerge) {
                if (Segment* s = std::get_if<Segment>(&merged.back())) {
                    s->b = std::get<Segment>(e).b;
                } else {
                    Arc& a = std::get<Arc>(merged.back());
                    a.to_angle = std::get<Arc>(e).to_angle;
                }
            } else {
                merged.push_back(e);
            }
        }
        while (merged.size() > 1 && same_carrier(merged.back(), merged.front()) &&
               distance(element_end(merged.back()), element_start(merged.front())) < kEpsMerge) {
            if (Segment* s = std::get_if<Segment>(&merged.back())) {
                s->b = std::get<Segment>(merged.front()).b;
            } else {
                std::get<Arc>(merged.back()).to_angle = std::get<Arc>(merged.front()).to_angle;
            }
            merged.front() = merged.back();
            merged.pop_back();
        }
        double len = 0.0;
        for (const Element& e : merged) len += element_length(e);
        if (len > 10.0 * kEpsMerge) result.cycles.push_back(std::move(merged));
    }

    // Deterministic ordering: rotate each cycle to its lexicographically
    // smallest start point, then sort cycles.
    auto key_of = [](const std::vector<Element>& c) {
        std::pair<double, double> best{std::numeric_limits<double>::infinity(),
                                       std::numeric_limits<double>::infinity()};
        size_t idx = 0;
        for (size_t i = 0; i < c.size(); ++i) {
            Point p = element_start(c[i]);
            std::pair<double, double> k{p.x, p.y};
            if (k < best) {
                best = k;
                idx = i;
            }
        }
        return std::pair{best, idx};
    };
    for (auto& c : result.cycles) {
        size_t idx = key_of(c).second;
        std::rotate(c.begin(), c.begin() + idx, c.end());
    }
    std::sort(result.cycles.begin(), result.cycles.end(),
              [&](const auto& c1, const auto& c2) { return key_of(c1).first < key_of(c2).first; });
    return result;
}

// True if every cycle of `part` has a representative strictly inside `acc`
// and no hole of `acc` has a representative inside `part`.
bool covered_by(const ArcPolygon& part, const ArcPolygon& acc, const Tolerance& tol) {
    Tolerance on_tol = tol;
    on_tol.band = kEpsOn;
    for (const auto& c : part.cycles) {
        if (region_classify(acc, element_midpoint(c.front()), on_tol) != Side::Inside)
            return false;
    }
    for (const auto& c : acc.cycles) {
        if (cycle_signed_area(c) >= 0.0) continue;
        if (region_classify(part, element_midpoint(c.front()), on_tol) != Side::Outside)
            return false;
    }
    return true;
}

bool boundaries_touch(const ArcPolygon& a, const ArcPolygon& b, const Tolerance& tol) {
    std::vector<Element> ea = normalized_elements(a);
    std::vector<Element> eb = normalized_elements(b);
    std::vector<BBox> boxes;
    boxes.reserve(eb.size());
    for (const Element& e : eb) boxes.push_back(element_bbox(e));
    for (const Element& e1 : ea) {
        BBox b1 = element_bbox(e1);
        for (size_t j = 0; j < eb.size(); ++j) {
            if (!b1.overlaps(boxes[j], kEpsMerge)) continue;
            std::vector<double> t1, t2;
            collect_splits(e1, eb[j], t1, t2, tol);
            if (!t1.empty() || !t2.empty()) return true;
            // Endpoint-only contacts leave no interior split but still matter.
            if (distance_to_element(element_start(e1), eb[j]) < kEpsMerge ||
                distance_to_element(element_end(e1), eb[j]) < kEpsMerge)
                return true;
        }
    }
    return false;
}

}  // namespace

std::array<double, 4> region_bbox(const ArcPolygon& r) {
    std::array<double, 4> out{1e18, -1e18, 1e18, -1e18};
    for (const auto& c : r.cycles) {
        for (const Element& e : c) {
            BBox b = element_bbox(e);
            out[0] = std::min(out[0], b.xmin);
            out[1] = std::max(out[1], b.xmax);
            out[2] = std::min(out[2], b.ymin);
            out[3] = std::max(out[3], b.ymax);
        }
    }
    return out;
}

ArcPolygon region_union(const std::vector<ArcPolygon>& parts, const Tolerance& tol) {
    ArcPolygon acc;
    for (const ArcPolygon& part : parts) {
        if (part.empty()) continue;
        double perimeter = 0.0;
        for (const auto& c : part.cycles)
            for (const Element& e : c) perimeter += element_length(e);
        if (perimeter < 1e-3) continue;  // degenerate sliver
        if (acc.empty()) {
            acc = part;
            continue;
        }
        if (!boundaries_touch(acc, part, tol) && covered_by(part, acc, tol)) continue;
        acc = union2(acc, part, tol);
    }
    validate_region(acc, tol);
    return acc;
}

}  // namespace curvereach
