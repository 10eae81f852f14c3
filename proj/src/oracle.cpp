#include "curvereach/oracle.hpp"

#include <cmath>
#include <deque>
#include <limits>

namespace curvereach {

std::string ReachGrid::export_text() const {
    std::string out = "reachgrid 1\n";
    out += "width " + std::to_string(width) + "\n";
    out += "height " + std::to_string(height) + "\n";
    char buf[96];
    std::snprintf(buf, sizeof buf, "origin %.9f %.9f\ndx %.9f\n", origin_x, origin_y, dx);
    out += buf;
    // Each row: run lengths alternating free/occupied, starting with free.
    for (int iy = 0; iy < height; ++iy) {
        int run = 0;
        uint8_t cur = 0;
        std::string row;
        for (int ix = 0; ix < width; ++ix) {
            uint8_t v = xy[static_cast<size_t>(iy) * width + ix] ? 1 : 0;
            if (v == cur) {
                ++run;
            } else {
                row += std::to_string(run) + " ";
                cur = v;
                run = 1;
            }
        }
        row += std::to_string(run);
        out += row + "\n";
    }
    return out;
}

ReachGrid oracle_reach(const ConvexPolygon& poly, const Configuration& s, const GridSpec& g,
                       const Tolerance& tol) {
    if (g.dx <= 0.0 || g.dtheta <= 0.0 || g.step <= 0.0 || g.step > g.dx + 1e-12)
        throw Error("BadGrid", "grid spec requires positive sizes and step <= dx");
    if (poly.min_signed_dist(s.point) < -tol.band)
        throw Error("StartOutsidePolygon", "oracle start lies outside the polygon");

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Point& v : poly.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    ReachGrid grid;
    grid.dx = g.dx;
    grid.origin_x = xmin - 2.0 * g.dx;
    grid.origin_y = ymin - 2.0 * g.dx;
    grid.width = static_cast<int>(std::ceil((xmax - xmin + 4.0 * g.dx) / g.dx)) + 1;
    grid.height = static_cast<int>(std::ceil((ymax - ymin + 4.0 * g.dx) / g.dx)) + 1;
    grid.thetas = std::max(4, static_cast<int>(std::lround(kTwoPi / g.dtheta)));
    uint64_t cells = static_cast<uint64_t>(grid.width) * grid.height * grid.thetas;
    grid.bits.assign((cells + 63) / 64, 0);

    // Heading after k arc primitives is exactly theta0 + k*dtheta, so headings
    // live on a fixed table of rotations of the start direction.
    int T = grid.thetas;
    double dtheta = kTwoPi / T;
    double theta0 = s.dir.angle();
    std::vector<Vec2> dir_table(T);
    for (int i = 0; i < T; ++i)
        dir_table[i] = {std::cos(theta0 + i * dtheta), std::sin(theta0 + i * dtheta)};
    int theta_base = static_cast<int>(std::lround(theta0 / dtheta));
    auto theta_cell = [&](int i) {
        int c = (theta_base + i) % T;
        return c < 0 ? c + T : c;
    };

    int n = poly.size();
    std::vector<double> enx(n), eny(n), ec(n);
    for (int i = 0; i < n; ++i) {
        Vec2 nv = poly.inward_normal(i);
        enx[i] = nv.x;
        eny[i] = nv.y;
        ec[i] = dot(nv, Vec2(poly.vertex(i)));
    }
    auto inside = [&](double x, double y) {
        for (int i = 0; i < n; ++i) {
            if (enx[i] * x + eny[i] * y < ec[i] - 1e-7) return false;
        }
        return true;
    };

    struct State {
        double x, y;
        int k;  // net signed number of arc primitives (heading index offset)
    };

    const double ca = std::cos(dtheta), sa = std::sin(dtheta);
    const double ch = std::cos(dtheta / 2.0), sh = std::sin(dtheta / 2.0);

    auto try_visit = [&](const State& st, std::deque<State>& queue) {
        int ix = grid.cell_x(st.x);
        int iy = grid.cell_y(st.y);
        if (ix < 0 || iy < 0 || ix >= grid.width || iy >= grid.height) return;
        int it = theta_cell(st.k);
        uint64_t idx = (static_cast<uint64_t>(it) * grid.height + iy) * grid.width + ix;
        uint64_t mask = 1ull << (idx & 63);
        if (grid.bits[idx >> 6] & mask) return;
        grid.bits[idx >> 6] |= mask;
        ++grid.occupied_cells;
        queue.push_back(st);
    };

    std::deque<State> queue;
    try_visit({s.point.x, s.point.y, 0}, queue);
    while (!queue.empty()) {
        State st = queue.front();
        queue.pop_front();
        int ti = ((st.k % T) + T) % T;
        Vec2 d = dir_table[ti];

        // Straight primitive of arclength step.
        {
            double mx = st.x + d.x * (g.step / 2.0), my = st.y + d.y * (g.step / 2.0);
            double nx2 = st.x + d.x * g.step, ny2 = st.y + d.y * g.step;
            if (inside(mx, my) && inside(nx2, ny2)) try_visit({nx2, ny2, st.k}, queue);
        }
        // Left and right arcs of one heading cell (arclength dtheta, curvature 1).
        {
            double ox = st.x - d.y, oy = st.y + d.x;
            double rx = st.x - ox, ry = st.y - oy;
            double mx = ox + ch * rx - sh * ry, my = oy + sh * rx + ch * ry;
            double nx2 = ox + ca * rx - sa * ry, ny2 = oy + sa * rx + ca * ry;
            if (inside(mx, my) && inside(nx2, ny2)) try_visit({nx2, ny2, st.k + 1}, queue);
        }
        {
            double ox = st.x + d.y, oy = st.y - d.x;
            double rx = st.x - ox, ry = st.y - oy;
            double mx = ox + ch * rx + sh * ry, my = oy - sh * rx + ch * ry;
            double nx2 = ox + ca * rx + sa * ry, ny2 = oy - sa * rx + ca * ry;
            if (inside(mx, my) && inside(nx2, ny2)) try_visit({nx2, ny2, st.k - 1}, queue);
        }
    }

    grid.xy.assign(static_cast<size_t>(grid.width) * grid.height, 0);
    for (int it = 0; it < T; ++it) {
        for (int iy = 0; iy < grid.height; ++iy) {
            for (int ix = 0; ix < grid.width; ++ix) {
                if (grid.cell_occupied(ix, iy, it)) grid.xy[static_cast<size_t>(iy) * grid.width + ix] = 1;
            }
        }
    }
    return grid;
}

OracleAnswer oracle_query(const ReachGrid& grid, const ConvexPolygon& poly, Point t) {
    int cx = grid.cell_x(t.x);
    int cy = grid.cell_y(t.y);
    bool occ_1 = false, occ_2 = false, free_2 = false;
    int r = 2;
    for (int dy = -r; dy <= r; ++dy) {
        for (int dxc = -r; dxc <= r; ++dxc) {
            int ix = cx + dxc, iy = cy + dy;
            if (ix < 0 || iy < 0 || ix >= grid.width || iy >= grid.height) continue;
            Point c = grid.cell_center(ix, iy);
            double dist = distance(c, t);
            bool occ = grid.xy_occupied(ix, iy);
            if (occ && dist <= grid.dx + 1e-12) occ_1 = true;
            if (dist <= 2.0 * grid.dx + 1e-12) {
                if (occ) occ_2 = true;
                else if (poly.min_signed_dist(c) > 0.0) free_2 = true;
            }
        }
    }
    if (occ_2 && free_2) return OracleAnswer::Uncertain;
    if (occ_1) return OracleAnswer::Reachable;
    return occ_2 ? OracleAnswer::Uncertain : OracleAnswer::Unreachable;
}

}  // namespace curvereach
