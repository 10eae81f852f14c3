#include <doctest.h>

#include "fixtures.hpp"

using namespace curvereach;
using fixtures::rectangle;
using fixtures::square;
using fixtures::triangle;

TEST_CASE("polygon validation accepts squares and rejects bad input") {
    CHECK_NOTHROW(square(10));
    CHECK_THROWS_AS(ConvexPolygon::validate({{0, 0}, {10, 0}}), Error);
    CHECK_THROWS_AS(ConvexPolygon::validate({{0, 0}, {10, 0}, {5, 0}}), Error);
    // Clockwise listing fails the orientation check.
    try {
        ConvexPolygon::validate({{0, 0}, {0, 10}, {10, 10}, {10, 0}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == "NotConvex");
    }
    try {
        ConvexPolygon::validate({{0, 0}, {5, 0}, {10, 0}, {10, 10}, {0, 10}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == "CollinearVertices");
    }
    try {
        ConvexPolygon::validate({{0, 0}, {10, 0}, {10, 10}, {0, 0}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == "DuplicateVertex");
    }
}

TEST_CASE("containment classification with boundary band") {
    ConvexPolygon sq = square(10);
    CHECK(sq.classify({5, 5}) == Side::Inside);
    CHECK(sq.classify({0, 5}) == Side::Boundary);
    CHECK(sq.classify({-1, 5}) == Side::Outside);
    CHECK(sq.area() == doctest::Approx(100.0));
}

TEST_CASE("boundary configurations reject vertex starts") {
    ConvexPolygon sq = square(10);
    CHECK_NOTHROW(boundary_config(sq, 0, 0.5));
    CHECK_THROWS_AS(boundary_config(sq, 0, 0.0), Error);
    CHECK_THROWS_AS(boundary_config(sq, 0, 1.0), Error);
}

TEST_CASE("forward chain of a square turns exactly pi") {
    ConvexPolygon sq = square(10);
    BoundaryConfiguration s = boundary_config(sq, 0, 0.5);  // (5,0) heading +x
    ForwardChain fc = forward_chain(sq, s);
    REQUIRE(fc.elements.size() == 3);
    CHECK(fc.elements[0].a.x == doctest::Approx(5.0));
    CHECK(fc.elements[0].b.x == doctest::Approx(10.0));
    CHECK(fc.elements[2].b.x == doctest::Approx(0.0));
    CHECK(fc.elements[2].b.y == doctest::Approx(10.0));
    CHECK(fc.total_turn == doctest::Approx(kPi));

    BoundaryConfiguration left = boundary_config(sq, 3, 0.5);  // (0,5) heading -y? edge 3 runs down
    ForwardChain fc2 = forward_chain(sq, left);
    CHECK(fc2.total_turn == doctest::Approx(kPi));
    CHECK(fc2.elements.size() == 3);
}

TEST_CASE("forward chain of the triangle accumulates 3*pi/4") {
    ConvexPolygon tri = triangle();
    BoundaryConfiguration s = boundary_config(tri, 0, 0.5);  // (6,0) heading +x
    ForwardChain fc = forward_chain(tri, s);
    REQUIRE(fc.elements.size() == 2);
    CHECK(fc.elements[0].b.x == doctest::Approx(12.0));
    CHECK(fc.elements[1].b.x == doctest::Approx(0.0));
    CHECK(fc.elements[1].b.y == doctest::Approx(12.0));
    // Independent angle sum from the edge directions.
    Vec2 d0 = normalized(Point{12, 0} - Point{0, 0});
    Vec2 d1 = normalized(Point{0, 12} - Point{12, 0});
    double expected = std::atan2(cross(d0, d1), dot(d0, d1));
    CHECK(fc.total_turn == doctest::Approx(expected));
    CHECK(fc.total_turn == doctest::Approx(3.0 * kPi / 4.0));
}

TEST_CASE("forward chain turn equals the sum of exterior angles and starts at s") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        ConvexPolygon poly = fixtures::random_convex(5 + static_cast<int>(rng() % 8), 4.0, rng);
        std::uniform_real_distribution<double> u(0.1, 0.9);
        BoundaryConfiguration s =
            boundary_config(poly, static_cast<int>(rng() % poly.size()), u(rng));
        ForwardChain fc = forward_chain(poly, s);
        CHECK(fc.total_turn <= kPi + 1e-9);
        CHECK(distance(fc.elements.front().a, s.point) <= 1e-12);
        double sum = 0.0;
        for (size_t k = 1; k < fc.edge_indices.size(); ++k) {
            Vec2 a = poly.edge_dir(fc.edge_indices[k - 1]).vec();
            Vec2 b = poly.edge_dir(fc.edge_indices[k]).vec();
            sum += std::atan2(cross(a, b), dot(a, b));
        }
        CHECK(fc.total_turn == doctest::Approx(sum).epsilon(1e-9));
    }
}

TEST_CASE("clip_ray finds the exit point") {
    ConvexPolygon sq = square(10);
    CHECK(sq.clip_ray({5, 5}, {1, 0}) == doctest::Approx(5.0));
    CHECK(sq.clip_ray({5, 0}, {1, 0}) == doctest::Approx(5.0));  // along the edge
    CHECK(sq.clip_ray({5, 5}, normalized({1, 1})) == doctest::Approx(5.0 * std::sqrt(2.0)));
}

TEST_CASE("medial axis of squares and rectangles") {
    // Square: four diagonal spokes meeting in the center, clearance 5.
    MedialAxis axis = convex_medial_axis(square(10));
    REQUIRE(axis.edges.size() == 4);
    for (const auto& e : axis.edges) {
        CHECK(distance(e.seg.b, {5, 5}) <= 1e-9);
        CHECK(e.clearance_b == doctest::Approx(5.0));
        CHECK(e.clearance_a == doctest::Approx(0.0));
    }
    MedialAxis small = convex_medial_axis(square(3));
    bool center_found = false;
    for (const auto& e : small.edges) {
        if (distance(e.seg.b, {1.5, 1.5}) <= 1e-9 && std::abs(e.clearance_b - 1.5) <= 1e-9)
            center_found = true;
    }
    CHECK(center_found);

    // Long rectangle: spine y=1 from (1,1) to (9,1) at clearance 1.
    MedialAxis rect = convex_medial_axis(rectangle(10, 2));
    bool spine_found = false;
    for (const auto& e : rect.edges) {
        Point lo = e.seg.a, hi = e.seg.b;
        if (lo.x > hi.x) std::swap(lo, hi);
        if (distance(lo, {1, 1}) <= 1e-9 && distance(hi, {9, 1}) <= 1e-9) {
            spine_found = true;
            CHECK(e.clearance_a == doctest::Approx(1.0));
            CHECK(e.clearance_b == doctest::Approx(1.0));
        }
    }
    CHECK(spine_found);
}

TEST_CASE("square medial axis matches a brute-force ridge field") {
    // Ridge oracle: grid points where the two smallest edge distances agree.
    ConvexPolygon sq = square(10);
    MedialAxis axis = convex_medial_axis(sq);
    int ridge_pts = 0, matched = 0;
    for (double x = 0.25; x < 10.0; x += 0.25) {
        for (double y = 0.25; y < 10.0; y += 0.25) {
            std::vector<double> d;
            for (int i = 0; i < 4; ++i) d.push_back(distance_to_segment({x, y}, sq.edge(i)));
            std::sort(d.begin(), d.end());
            if (d[1] - d[0] > 1e-9) continue;
            ++ridge_pts;
            double best = 1e18;
            for (const auto& e : axis.edges) best = std::min(best, distance_to_segment({x, y}, e.seg));
            if (best <= 1e-6) ++matched;
        }
    }
    CHECK(ridge_pts > 20);
    CHECK(matched == ridge_pts);
}

TEST_CASE("random points on medial axis edges are equidistant from two edges") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Tolerance tol;
    for (int trial = 0; trial < 10; ++trial) {
        ConvexPolygon poly = fixtures::random_convex(6 + static_cast<int>(rng() % 6), 4.0, rng);
        MedialAxis axis = convex_medial_axis(poly);
        REQUIRE(!axis.edges.empty());
        for (int k = 0; k < 100; ++k) {
            const MedialAxisEdge& e = axis.edges[rng() % axis.edges.size()];
            double t = u(rng);
            Point p = e.seg.point_at(t);
            std::vector<double> d;
            for (int i = 0; i < poly.size(); ++i)
                d.push_back(distance_to_segment(p, poly.edge(i)));
            std::sort(d.begin(), d.end());
            CHECK(d[1] - d[0] <= 10.0 * tol.len + 1e-7);
            double expected = e.clearance_a + (e.clearance_b - e.clearance_a) * t;
            CHECK(d[0] == doctest::Approx(expected).epsilon(1e-6));
        }
    }
}

TEST_CASE("mirroring preserves convexity and containment") {
    ConvexPolygon tri = triangle();
    ConvexPolygon m = tri.mirrored();
    CHECK(m.area() == doctest::Approx(tri.area()));
    CHECK(m.classify({5, -2}) == tri.classify({5, 2}));
}
