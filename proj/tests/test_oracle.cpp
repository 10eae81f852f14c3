#include <doctest.h>

#include "curvereach/oracle.hpp"
#include "fixtures.hpp"

using namespace curvereach;
using fixtures::rectangle;
using fixtures::square;

TEST_CASE("grid spec validation") {
    ConvexPolygon sq = square(3);
    GridSpec bad;
    bad.step = 0.1;  // larger than dx
    CHECK_THROWS_AS(oracle_reach(sq, {{1.5, 1.5}, Direction{1, 0}}, bad), Error);
    CHECK_THROWS_AS(oracle_reach(sq, {{9, 9}, Direction{1, 0}}, {}), Error);
}

TEST_CASE("oracle covers almost all of SQ10 from the center") {
    ConvexPolygon sq = square(10);
    GridSpec g;
    g.dx = 0.05;
    g.dtheta = kTwoPi / 180.0;
    g.step = 0.05;
    ReachGrid grid = oracle_reach(sq, {{5, 5}, Direction{1, 0}}, g);
    // Count cells whose centers sit at least dx inside the square.
    long total = 0, occ = 0;
    for (int iy = 0; iy < grid.height; ++iy) {
        for (int ix = 0; ix < grid.width; ++ix) {
            Point c = grid.cell_center(ix, iy);
            if (sq.min_signed_dist(c) < g.dx) continue;
            ++total;
            if (grid.xy_occupied(ix, iy)) ++occ;
        }
    }
    CHECK(total > 10000);
    CHECK(static_cast<double>(occ) / total >= 0.99);
    CHECK(oracle_query(grid, sq, {1, 1}) == OracleAnswer::Reachable);
}

TEST_CASE("oracle from a near-boundary rectangle start brackets the accessible region") {
    ConvexPolygon rect = rectangle(10, 1.5);
    Configuration s{{0.5, 0.02}, Direction{1, 0}};
    ReachGrid grid = oracle_reach(rect, s, {});
    LdaRegion l = lda(rect, s, true);

    long occupied = 0, sound = 0, deep = 0, covered = 0;
    for (int iy = 0; iy < grid.height; ++iy) {
        for (int ix = 0; ix < grid.width; ++ix) {
            Point c = grid.cell_center(ix, iy);
            if (grid.xy_occupied(ix, iy)) {
                ++occupied;
                // One-sided soundness: occupied cells lie in the accessible
                // region up to one cell plus the tolerance band.
                if (l.classify(rect, c, grid.dx + 1e-6) != Side::Outside) ++sound;
            }
            if (rect.min_signed_dist(c) > 0.0 &&
                l.classify(rect, c, 1e-6) == Side::Inside &&
                region_boundary_distance(l.region, c) > 3.0 * grid.dx) {
                ++deep;
                if (grid.xy_occupied(ix, iy)) ++covered;
            }
        }
    }
    CHECK(occupied > 1000);
    CHECK(sound == occupied);
    CHECK(deep > 1000);
    CHECK(static_cast<double>(covered) / deep >= 0.98);

    // Projected area against the accessible region, as a sanity cross-check.
    double proj_area = occupied * grid.dx * grid.dx;
    CHECK(proj_area == doctest::Approx(region_area(l.region)).epsilon(0.05));
}

TEST_CASE("oracle confirms the unreachable core for a boundary start in SQ3") {
    ConvexPolygon sq3 = square(3);
    Configuration s{{1.5, 0}, Direction{1, 0}};
    ReachGrid grid = oracle_reach(sq3, s, {});
    Core core = core_intersection(compute_filling(sq3));
    REQUIRE(!core.empty());
    for (int iy = 0; iy < grid.height; ++iy) {
        for (int ix = 0; ix < grid.width; ++ix) {
            if (!grid.xy_occupied(ix, iy)) continue;
            Point c = grid.cell_center(ix, iy);
            if (region_classify(core.region, c) != Side::Inside) continue;
            CHECK(region_boundary_distance(core.region, c) <= 2.0 * grid.dx);
        }
    }
    CHECK(oracle_query(grid, sq3, {1.5, 1.5}) == OracleAnswer::Unreachable);
    CHECK(oracle_query(grid, sq3, {0.2, 0.2}) == OracleAnswer::Reachable);
}

TEST_CASE("oracle agrees with the analytic region for the SQ3 center start") {
    ConvexPolygon sq3 = square(3);
    Configuration s{{1.5, 1.5}, Direction{1, 0}};
    ReachGrid grid = oracle_reach(sq3, s, {});
    ReachSet rs = reach(sq3, s);
    std::mt19937_64 rng(109);
    int considered = 0, agree = 0;
    for (int i = 0; i < 4000; ++i) {
        Point p = fixtures::sample_in_polygon(sq3, rng);
        OracleAnswer oa = oracle_query(grid, sq3, p);
        Side side = rs.classify(p);
        if (oa == OracleAnswer::Uncertain || side == Side::Boundary) continue;
        if (region_boundary_distance(rs.region(), p) <= 2.0 * (grid.dx + 1e-6)) continue;
        ++considered;
        if ((oa == OracleAnswer::Reachable) == (side == Side::Inside)) ++agree;
    }
    CHECK(considered > 2000);
    CHECK(static_cast<double>(agree) / considered >= 0.98);
    // Straight ahead of the start the core of the filling is attainable.
    CHECK(oracle_query(grid, sq3, {1.7, 1.5}) != OracleAnswer::Unreachable);
}

TEST_CASE("oracle grids are deterministic") {
    ConvexPolygon sq3 = square(3);
    Configuration s{{1.5, 0.8}, Direction::from_angle(0.4)};
    ReachGrid a = oracle_reach(sq3, s, {});
    ReachGrid b = oracle_reach(sq3, s, {});
    CHECK(a.occupied_cells == b.occupied_cells);
    CHECK(a.bits == b.bits);
    CHECK(a.export_text() == b.export_text());
}

TEST_CASE("grid export is a well-formed run-length encoding") {
    ConvexPolygon sq3 = square(3);
    ReachGrid g = oracle_reach(sq3, {{1.5, 0.8}, Direction{1, 0}}, {});
    std::string text = g.export_text();
    CHECK(text.find("reachgrid 1") == 0);
    CHECK(text.find("width " + std::to_string(g.width)) != std::string::npos);
    // Each row's run lengths sum to the width.
    size_t pos = text.find("dx ");
    pos = text.find('\n', pos) + 1;
    int rows = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string row = text.substr(pos, eol - pos);
        long sum = 0;
        for (size_t i = 0; i < row.size();) {
            size_t j = row.find(' ', i);
            if (j == std::string::npos) j = row.size();
            sum += std::stol(row.substr(i, j - i));
            i = j + 1;
        }
        CHECK(sum == g.width);
        ++rows;
        pos = eol + 1;
    }
    CHECK(rows == g.height);
}
