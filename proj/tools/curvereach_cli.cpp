// curvereach: reachable regions for a forward-only unit-turning-radius vehicle
// inside a convex polygon.
//
// Exit codes: 0 ok, 2 input error, 3 witness requested for an unreachable
// point, 4 verification below threshold.

#include <cstdio>
#include <random>

#include <CLI11.hpp>

#include "curvereach/io.hpp"
#include "curvereach/oracle.hpp"
#include "curvereach/svg.hpp"

using namespace curvereach;

namespace {

struct CommonOpts {
    std::string instance_path;
    double scale = 1.0;
    double tol_len = 0.0;   // 0 = keep instance/file default
    double tol_band = 0.0;
};

Instance load(const CommonOpts& c) {
    Instance inst = load_instance(c.instance_path, c.scale);
    if (c.tol_len > 0.0) inst.tol.len = c.tol_len;
    if (c.tol_band > 0.0) inst.tol.band = c.tol_band;
    return inst;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("instance", c.instance_path, "instance file (JSON)")->required();
    cmd->add_option("--scale", c.scale, "uniform rescale applied on load");
    cmd->add_option("--tol", c.tol_len, "length tolerance override");
    cmd->add_option("--band", c.tol_band, "classification band override");
}

std::vector<Point> sample_points(const ConvexPolygon& poly, int count, uint64_t seed) {
    // Fan triangulation with area-weighted triangle choice.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> areas;
    double total = 0.0;
    for (int i = 1; i + 1 < poly.size(); ++i) {
        double a = cross(poly.vertex(i) - poly.vertex(0), poly.vertex(i + 1) - poly.vertex(0)) / 2;
        total += a;
        areas.push_back(total);
    }
    std::vector<Point> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        double r = unit(rng) * total;
        size_t t = std::lower_bound(areas.begin(), areas.end(), r) - areas.begin();
        Point a = poly.vertex(0), b = poly.vertex(static_cast<int>(t) + 1),
              c = poly.vertex(static_cast<int>(t) + 2);
        double u = unit(rng), v = unit(rng);
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        out.push_back(a + (b - a) * u + (c - a) * v);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reachable regions under a curvature bound in a convex polygon"};
    app.require_subcommand(1);

    CommonOpts reach_c, query_c, verify_c, svg_c;
    std::string reach_out, svg_out;
    double qx = 0.0, qy = 0.0;
    bool want_witness = false, show_witness = false;
    int samples = 10000;
    double grid_dx = 0.02, grid_dtheta = kTwoPi / 360.0, threshold = 0.98;
    uint64_t seed = 20177;
    double svg_qx = 0.0, svg_qy = 0.0;
    bool svg_has_query = false;

    CLI::App* creach = app.add_subcommand("reach", "compute the reachable region");
    add_common(creach, reach_c);
    creach->add_option("output", reach_out, "region file to write")->required();

    CLI::App* cquery = app.add_subcommand("query", "classify a point");
    add_common(cquery, query_c);
    cquery->add_option("x", qx, "query x")->required();
    cquery->add_option("y", qy, "query y")->required();
    cquery->add_flag("--witness", want_witness, "emit a witness path for reachable points");

    CLI::App* cverify = app.add_subcommand("verify", "compare against the grid oracle");
    add_common(cverify, verify_c);
    cverify->add_option("--samples", samples, "number of sample points");
    cverify->add_option("--grid-dx", grid_dx, "oracle cell size");
    cverify->add_option("--grid-dtheta", grid_dtheta, "oracle heading cell size");
    cverify->add_option("--threshold", threshold, "required agreement fraction");
    cverify->add_option("--seed", seed, "sampling seed");

    CLI::App* csvg = app.add_subcommand("svg", "render the instance and region");
    add_common(csvg, svg_c);
    csvg->add_option("output", svg_out, "svg file to write")->required();
    csvg->add_option("--query-x", svg_qx, "overlay query point x");
    csvg->add_option("--query-y", svg_qy, "overlay query point y")
        ->needs(csvg->get_option("--query-x"));
    csvg->add_flag("--show-witness", show_witness, "overlay the witness path for the query");

    CLI11_PARSE(app, argc, argv);

    try {
        if (creach->parsed()) {
            Instance inst = load(reach_c);
            ReachSet rs = ReachSet::compute(inst.polygon, inst.start, inst.tol);
            write_file(reach_out, region_to_json(rs.region(), &rs.stats()));
            std::printf("region: %zu cycles, %d arcs, area %.9f (polygon %.9f)\n",
                        rs.region().cycles.size(), rs.stats().arc_count, rs.stats().area,
                        inst.polygon.area());
            std::printf("bfil disks: %d, canonical starts: %d, wall %.1f ms\n",
                        rs.stats().bfil_size, rs.stats().canonical_start_count,
                        rs.stats().wall_ms);
            std::printf("note: candidate search is O(n^2) per boundary start (up to O(n^3) "
                        "overall), traded against the linear-time medial-axis construction\n");
            return 0;
        }
        if (cquery->parsed()) {
            Instance inst = load(query_c);
            ReachSet rs = ReachSet::compute(inst.polygon, inst.start, inst.tol);
            Point t{qx, qy};
            if (inst.polygon.classify(t, inst.tol) == Side::Outside)
                throw Error("TargetOutsidePolygon", "query point lies outside the polygon");
            Side side = rs.classify(t);
            const char* name = side == Side::Inside
                                   ? "inside"
                                   : (side == Side::Boundary ? "boundary_band" : "outside");
            std::printf("%s\n", name);
            std::fflush(stdout);
            if (want_witness) {
                auto w = witness_path(rs, t);
                if (!w) {
                    std::fprintf(stderr, "no witness: point is not reachable\n");
                    return 3;
                }
                std::fputs(path_to_json(normalized_path(*w)).c_str(), stdout);
            }
            return 0;
        }
        if (cverify->parsed()) {
            Instance inst = load(verify_c);
            ReachSet rs = ReachSet::compute(inst.polygon, inst.start, inst.tol);
            GridSpec g;
            g.dx = grid_dx;
            g.dtheta = grid_dtheta;
            g.step = grid_dx;
            ReachGrid grid = oracle_reach(inst.polygon, inst.start, g, inst.tol);
            int agree = 0, considered = 0, uncertain = 0;
            for (Point p : sample_points(inst.polygon, samples, seed)) {
                OracleAnswer oa = oracle_query(grid, inst.polygon, p);
                Side side = rs.classify(p);
                if (oa == OracleAnswer::Uncertain || side == Side::Boundary ||
                    region_boundary_distance(rs.region(), p) <=
                        2.0 * (grid.dx + inst.tol.band)) {
                    ++uncertain;
                    continue;
                }
                ++considered;
                if ((oa == OracleAnswer::Reachable) == (side == Side::Inside)) ++agree;
            }
            double frac = considered > 0 ? static_cast<double>(agree) / considered : 1.0;
            std::printf("samples %d, band-excluded %d, considered %d, agree %d, fraction %.6f\n",
                        samples, uncertain, considered, agree, frac);
            if (frac < threshold) {
                std::fprintf(stderr, "agreement %.6f below threshold %.6f\n", frac, threshold);
                return 4;
            }
            return 0;
        }
        if (csvg->parsed()) {
            Instance inst = load(svg_c);
            ReachSet rs = ReachSet::compute(inst.polygon, inst.start, inst.tol);
            SvgOptions opts;
            svg_has_query = csvg->count("--query-x") > 0;
            std::optional<CurvaturePath> w;
            if (svg_has_query) {
                opts.query = Point{svg_qx, svg_qy};
                if (show_witness) {
                    w = witness_path(rs, *opts.query);
                    if (w) opts.witness = &*w;
                }
            }
            write_file(svg_out, render_svg(inst, rs, opts));
            std::printf("wrote %s\n", svg_out.c_str());
            return 0;
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
