#include <doctest.h>

#include "fixtures.hpp"

using namespace curvereach;
using fixtures::rectangle;
using fixtures::square;

TEST_CASE("direct access covers the whole polygon when both disks fit") {
    ConvexPolygon sq = square(10);
    DaRegion da = direct_access(sq, {{5, 5}, Direction{1, 0}});
    CHECK(region_area(da.union_region) == doctest::Approx(100.0).epsilon(1e-9));
    CHECK(region_arc_count(da.union_region) == 0);
}

TEST_CASE("direct access in SQ3 matches a swept-path grid sample") {
    ConvexPolygon sq3 = square(3);
    Configuration s{{1.5, 1.5}, Direction{1, 0}};
    DaRegion da = direct_access(sq3, s);

    // Grid sampling of arc+segment paths on both sides.
    const double res = 1e-2;
    int n = static_cast<int>(3.0 / res) + 1;
    std::vector<uint8_t> hit(static_cast<size_t>(n) * n, 0);
    auto mark = [&](Point p) {
        int ix = static_cast<int>(std::lround(p.x / res));
        int iy = static_cast<int>(std::lround(p.y / res));
        if (ix >= 0 && iy >= 0 && ix < n && iy < n) hit[static_cast<size_t>(iy) * n + ix] = 1;
    };
    for (const LdaRegion* l : {&da.left, &da.right}) {
        const int sweeps = 6000;
        for (int i = 0; i <= sweeps; ++i) {
            double d = l->sweep * i / sweeps;
            Configuration t =
                tangent_ray_from_disk(l->disk, l->start_angle + (l->left ? d : -d), l->left);
            mark(t.point);
            double tmax = sq3.clip_ray(t.point, t.dir.vec());
            int steps = static_cast<int>(tmax / (res / 2)) + 1;
            for (int k = 0; k <= steps; ++k) mark(t.point + t.dir.vec() * (tmax * k / steps));
        }
    }
    double grid_area = 0.0;
    for (uint8_t h : hit) grid_area += h;
    grid_area *= res * res;
    CHECK(region_area(da.union_region) == doctest::Approx(grid_area).epsilon(0.02));
    // A point deep inside the left disk is in neither sweep.
    CHECK(region_classify(da.union_region, {1.5, 2.6}) == Side::Outside);
    CHECK(region_classify(da.union_region, {2.4, 1.5}) == Side::Inside);
}

TEST_CASE("direct access in a thin rectangle is a proper subset of it") {
    ConvexPolygon rect = rectangle(10, 1.5);
    DaRegion da = direct_access(rect, {{5, 0.75}, Direction{1, 0}});
    CHECK(region_area(da.union_region) < 15.0 - 0.5);
    CHECK(region_area(da.union_region) > 1.0);
    CHECK(region_classify(da.union_region, {6, 0.75}) == Side::Inside);
}

TEST_CASE("canonical starts of a square-center configuration") {
    ConvexPolygon sq = square(10);
    auto starts = canonical_starts(sq, {{5, 5}, Direction{1, 0}});
    CHECK(starts.size() <= 16);
    int per_edge_kind[4][2] = {};
    for (const CanonicalStart& cs : starts) {
        ++per_edge_kind[cs.edge_index][cs.rl ? 0 : 1];
        // Tangency chain: the disks touch, the end sits on the edge.
        CHECK(distance(cs.first_disk.center, cs.second_disk.center) == doctest::Approx(2.0));
        CHECK(std::abs(sq.signed_dist(cs.second_disk.center, cs.edge_index) - 1.0) <= 1e-9);
        CHECK(distance_to_segment(cs.end.point, sq.edge(cs.edge_index)) <= 1e-9);
        CHECK(cs.end.forward == cs.rl);
    }
    for (int e = 0; e < 4; ++e) {
        CHECK(per_edge_kind[e][0] <= 2);
        CHECK(per_edge_kind[e][1] <= 2);
    }

    auto near_edge = canonical_starts(sq, {{5, 1.5}, Direction{1, 0}});
    CHECK(!near_edge.empty());
    CHECK(near_edge.size() <= 16);
    int count_per[4][2] = {};
    for (const CanonicalStart& cs : near_edge) ++count_per[cs.edge_index][cs.rl ? 0 : 1];
    for (int e = 0; e < 4; ++e) {
        CHECK(count_per[e][0] <= 2);
        CHECK(count_per[e][1] <= 2);
    }
}

TEST_CASE("a boundary-tangent start yields the degenerate canonical start") {
    ConvexPolygon sq = square(10);
    auto starts = canonical_starts(sq, {{5, 0}, Direction{1, 0}});
    bool degenerate = false;
    for (const CanonicalStart& cs : starts) {
        if (cs.rl && cs.edge_index == 0 && cs.sweep1 == 0.0 && cs.sweep2 == 0.0) degenerate = true;
    }
    CHECK(degenerate);
}

namespace {

// Independent sweep oracle: counts canonical starts per (edge, kind) as sign
// changes of dist(second disk center, edge line) - 1 over a dense grid of the
// first-arc sweep, keeping only crossings whose arcs fit inside the polygon.
int sweep_oracle_count(const ConvexPolygon& poly, const Configuration& s, bool rl, int edge) {
    UnitDisk first = rl ? right_disk(s) : left_disk(s);
    Point c1 = first.center;
    double a_s = std::atan2(s.point.y - c1.y, s.point.x - c1.x);
    Vec2 nin = poly.inward_normal(edge);
    double coff = dot(nin, Vec2(poly.edge(edge).a)) + 1.0;

    auto second_center = [&](double phi1) {
        double ang = a_s + (rl ? -phi1 : phi1);
        Point sw{c1.x + std::cos(ang), c1.y + std::sin(ang)};
        return Point{2 * sw.x - c1.x, 2 * sw.y - c1.y};
    };
    auto arc_ok = [&](Point center, double from, double sweep, bool ccw) {
        int steps = std::max(2, static_cast<int>(sweep / 1e-3));
        for (int k = 0; k <= steps; ++k) {
            double a = from + (ccw ? 1.0 : -1.0) * sweep * k / steps;
            if (poly.min_signed_dist({center.x + std::cos(a), center.y + std::sin(a)}) < -1e-9)
                return false;
        }
        return true;
    };
    auto residual = [&](double phi1) { return dot(nin, Vec2(second_center(phi1))) - coff; };

    int count = 0;
    const int N = 6284;
    double prev = residual(0.0);
    for (int i = 1; i <= N; ++i) {
        double phi = kTwoPi * i / N;
        double cur = residual(phi);
        if (std::signbit(cur) != std::signbit(prev)) {
            double lo = kTwoPi * (i - 1) / N, hi = phi;
            for (int it = 0; it < 60; ++it) {
                double mid = (lo + hi) / 2;
                if (std::signbit(residual(mid)) == std::signbit(residual(lo))) lo = mid;
                else hi = mid;
            }
            double phi1 = (lo + hi) / 2;
            Point c2 = second_center(phi1);
            Point end = c2 - nin;
            double te = dot(end - poly.edge(edge).a, poly.edge_dir(edge).vec());
            if (te > 1e-7 && te < poly.edge(edge).length() - 1e-7) {
                Point m{(c1.x + c2.x) / 2, (c1.y + c2.y) / 2};
                double am2 = std::atan2(m.y - c2.y, m.x - c2.x);
                double ae = std::atan2(end.y - c2.y, end.x - c2.x);
                double phi2 = rl ? ccw_sweep(am2, ae) : cw_sweep(am2, ae);
                if (arc_ok(c1, a_s, phi1, !rl) && arc_ok(c2, am2, phi2, rl)) ++count;
            }
        }
        prev = cur;
    }
    return count;
}

}  // namespace

TEST_CASE("canonical start counts match the dense sweep oracle on SQ3") {
    ConvexPolygon sq3 = square(3);
    Configuration s{{1.5, 1.5}, Direction{1, 0}};
    auto starts = canonical_starts(sq3, s);
    for (int edge = 0; edge < 4; ++edge) {
        for (bool rl : {true, false}) {
            int expected = sweep_oracle_count(sq3, s, rl, edge);
            int got = 0;
            for (const CanonicalStart& cs : starts)
                if (cs.edge_index == edge && cs.rl == rl) ++got;
            CHECK(got == expected);
        }
    }
}

TEST_CASE("reach of a square-center start is the whole square") {
    ConvexPolygon sq = square(10);
    ReachSet rs = reach(sq, {{5, 5}, Direction{1, 0}});
    CHECK(rs.stats().da_covers);
    CHECK(std::abs(region_area(rs.region()) - 100.0) <= 1e-9);
    CHECK(rs.stats().arc_count == 0);
    CHECK(rs.classify({1, 1}) == Side::Inside);
}

TEST_CASE("reach of the SQ3 center start covers only the right-hand side") {
    // Both side disks poke out of the square and the only tangential boundary
    // contacts sit on the right edge with pocket-trapped forward chains, so
    // the attainable set stays on the right (the grid oracle agrees).
    ConvexPolygon sq3 = square(3);
    ReachSet rs = reach(sq3, {{1.5, 1.5}, Direction{1, 0}});
    CHECK(rs.classify({2.8, 0.2}) == Side::Inside);   // bottom-right corner pocket
    CHECK(rs.classify({1.65, 1.5}) == Side::Inside);  // straight ahead
    CHECK(rs.classify({0.2, 0.2}) == Side::Outside);  // behind-left corner
    CHECK(rs.classify({0.5, 1.5}) == Side::Outside);
    CHECK(rs.classify({1.4, 1.5}) == Side::Outside);  // just behind the start
    double area = region_area(rs.region());
    DaRegion da = direct_access(sq3, {{1.5, 1.5}, Direction{1, 0}});
    CHECK(area >= region_area(da.union_region) - 1e-9);
    Core core = core_intersection(compute_filling(sq3));
    CHECK(area < 9.0 - region_area(core.region));
}

TEST_CASE("reach in a thin rectangle lies strictly between direct access and the polygon") {
    ConvexPolygon rect = rectangle(10, 1.5);
    Configuration s{{5, 0.75}, Direction{1, 0}};
    ReachSet rs = reach(rect, s);
    DaRegion da = direct_access(rect, s);
    double a_reach = region_area(rs.region());
    CHECK(a_reach >= region_area(da.union_region) - 1e-9);
    CHECK(a_reach < 15.0 - 1e-6);
    // Direct-access membership implies reach membership.
    std::mt19937_64 rng(83);
    for (int i = 0; i < 2000; ++i) {
        Point p = fixtures::sample_in_polygon(rect, rng);
        if (region_classify(da.union_region, p) != Side::Inside) continue;
        if (region_boundary_distance(rs.region(), p) <= 1e-6) continue;
        CHECK(rs.classify(p) == Side::Inside);
    }
}

TEST_CASE("reach regions satisfy the arc-count bound") {
    std::mt19937_64 rng(89);
    for (int n : {8, 16, 32}) {
        ConvexPolygon poly = fixtures::random_convex(n, 3.0, rng);
        // Start near the boundary, heading roughly along it.
        Point mid = poly.edge(0).midpoint();
        Configuration s{mid + poly.inward_normal(0) * 0.4, poly.edge_dir(0)};
        ReachSet rs = reach(poly, s);
        CHECK(rs.stats().arc_count <= 8 * poly.size());
        // Each unit circle contributes one arc: group by center.
        std::vector<Point> centers;
        for (const auto& c : rs.region().cycles) {
            for (const Element& e : c) {
                if (const Arc* a = std::get_if<Arc>(&e)) {
                    for (const Point& q : centers) CHECK(distance(q, a->center) > 1e-7);
                    centers.push_back(a->center);
                }
            }
        }
    }
}

TEST_CASE("reach grows monotonically with the polygon") {
    ConvexPolygon small = square(3);
    ConvexPolygon big = square(5, {-1, -1});
    Configuration s{{1.5, 1.5}, Direction{1, 0}};
    ReachSet inner = reach(small, s);
    ReachSet outer = reach(big, s);
    std::mt19937_64 rng(97);
    for (int i = 0; i < 2000; ++i) {
        Point p = fixtures::sample_in_polygon(small, rng);
        if (inner.classify(p) != Side::Inside) continue;
        if (region_boundary_distance(outer.region(), p) <= 1e-6) continue;
        CHECK(outer.classify(p) == Side::Inside);
    }
}

TEST_CASE("boundary starts flow through the boundary machinery") {
    ConvexPolygon sq3 = square(3);
    ReachSet rs = reach(sq3, {{1.5, 0}, Direction{1, 0}});
    CHECK(rs.stats().boundary_start);
    Core core = core_intersection(compute_filling(sq3));
    CHECK(region_area(rs.region()) ==
          doctest::Approx(9.0 - region_area(core.region)).epsilon(1e-9));
    CHECK(rs.classify({1.5, 1.5}) == Side::Outside);
}

TEST_CASE("reach rejects outside starts and outward boundary headings") {
    ConvexPolygon sq = square(3);
    CHECK_THROWS_AS(reach(sq, {{5, 5}, Direction{1, 0}}), Error);
    CHECK_THROWS_AS(reach(sq, {{1.5, 0}, Direction{0, -1}}), Error);
}
