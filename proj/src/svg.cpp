#include "curvereach/svg.hpp"

#include <cmath>

#include "curvereach/filling.hpp"

namespace curvereach {

namespace {

std::string fmt(double v) {
    char buf[40];
    if (std::abs(v) < 5e-7) v = 0.0;  // avoid "-0.000000"
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string xy(Point p) { return fmt(p.x) + " " + fmt(p.y); }

void append_arc_cmd(std::string& d, const Arc& a) {
    double ext = a.extent();
    int pieces = ext > kPi + 1e-9 ? 2 : 1;
    if (ext >= kTwoPi - 1e-9) pieces = 2;
    for (int k = 1; k <= pieces; ++k) {
        double ang = a.from_angle + (a.ccw ? 1.0 : -1.0) * ext * k / pieces;
        bool large = (ext / pieces) > kPi;
        d += " A 1 1 0 " + std::string(large ? "1 " : "0 ") + (a.ccw ? "1 " : "0 ") +
             xy(a.point_at(ang));
    }
}

std::string cycle_path_d(const std::vector<Element>& cycle) {
    std::string d = "M " + xy(element_start(cycle.front()));
    for (const Element& e : cycle) {
        if (const Segment* s = std::get_if<Segment>(&e)) {
            d += " L " + xy(s->b);
        } else {
            append_arc_cmd(d, std::get<Arc>(e));
        }
    }
    d += " Z";
    return d;
}

}  // namespace

std::string render_svg(const Instance& inst, const ReachSet& rs, const SvgOptions& opts) {
    const ConvexPolygon& poly = inst.polygon;
    double xmin = 1e18, xmax = -1e18, ymin = 1e18, ymax = -1e18;
    for (const Point& v : poly.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    double margin = 1.5;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(xmin - margin) + " " +
           fmt(-(ymax + margin)) + " " + fmt(xmax - xmin + 2 * margin) + " " +
           fmt(ymax - ymin + 2 * margin) + "\">\n";
    svg += "<g transform=\"scale(1,-1)\" stroke-linecap=\"round\">\n";

    for (const auto& cyc : rs.region().cycles) {
        svg += "<path class=\"reach\" fill-rule=\"evenodd\" fill=\"#9ecae1\" fill-opacity=\"0.6\" "
               "stroke=\"#3182bd\" stroke-width=\"0.03\" d=\"" +
               cycle_path_d(cyc) + "\"/>\n";
    }

    std::string pts;
    for (const Point& v : poly.vertices()) {
        if (!pts.empty()) pts += " ";
        pts += fmt(v.x) + "," + fmt(v.y);
    }
    svg += "<polygon class=\"boundary\" points=\"" + pts +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"0.04\"/>\n";

    if (opts.show_core || opts.show_bfil) {
        Filling fil = compute_filling(poly, inst.tol);
        if (opts.show_core && !fil.empty()) {
            Core core = core_intersection(fil, inst.tol);
            for (const auto& cyc : core.region.cycles) {
                svg += "<path class=\"core\" fill=\"#fdae6b\" fill-opacity=\"0.7\" "
                       "stroke=\"#e6550d\" stroke-width=\"0.02\" d=\"" +
                       cycle_path_d(cyc) + "\"/>\n";
            }
        }
    }
    if (opts.show_bfil) {
        std::vector<Point> centers;
        for (const ReachBundle& b : rs.bundles()) {
            for (const BfilEntry& e : b.parts.set.entries) {
                Point c = b.mirrored ? mirror_point(e.disk.center) : e.disk.center;
                bool dup = false;
                for (const Point& q : centers)
                    if (distance(q, c) <= 1e-6) dup = true;
                if (!dup) centers.push_back(c);
            }
        }
        for (const Point& c : centers) {
            svg += "<circle class=\"bfil\" cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) +
                   "\" r=\"1\" fill=\"none\" stroke=\"#31a354\" stroke-width=\"0.02\" "
                   "stroke-dasharray=\"0.1 0.08\"/>\n";
        }
    }

    // Start arrow.
    Point s = rs.start().point;
    Vec2 d = rs.start().dir.vec();
    Point tip = s + d * 0.6;
    Vec2 side = perp_ccw(d) * 0.12;
    svg += "<path class=\"start\" d=\"M " + xy(s) + " L " + xy(tip) + "\" stroke=\"#000000\" "
           "stroke-width=\"0.05\" fill=\"none\"/>\n";
    svg += "<polygon class=\"start-head\" points=\"" + fmt(tip.x + d.x * 0.2) + "," +
           fmt(tip.y + d.y * 0.2) + " " + fmt(tip.x - side.x) + "," + fmt(tip.y - side.y) + " " +
           fmt(tip.x + side.x) + "," + fmt(tip.y + side.y) + "\" fill=\"#000000\"/>\n";

    if (opts.witness) {
        std::string dstr = "M " + xy(opts.witness->start.point);
        Configuration c = opts.witness->start;
        for (const PathPrimitive& prim : opts.witness->primitives) {
            Configuration nc = advance(c, prim);
            if (prim.amount > 1e-12) {
                if (!prim.is_arc) {
                    dstr += " L " + xy(nc.point);
                } else {
                    bool ccw = prim.turn == Turn::Left;
                    Point o = c.point + (ccw ? perp_ccw(c.dir.vec()) : perp_cw(c.dir.vec()));
                    double a0 = std::atan2(c.point.y - o.y, c.point.x - o.x);
                    Arc a{o, a0,
                          a0 + (ccw ? 1.0 : -1.0) * std::min(prim.amount, kTwoPi - 1e-9), ccw};
                    append_arc_cmd(dstr, a);
                }
            }
            c = nc;
        }
        svg += "<path class=\"witness\" d=\"" + dstr +
               "\" fill=\"none\" stroke=\"#756bb1\" stroke-width=\"0.06\"/>\n";
    }
    if (opts.query) {
        svg += "<circle class=\"query\" cx=\"" + fmt(opts.query->x) + "\" cy=\"" +
               fmt(opts.query->y) + "\" r=\"0.1\" fill=\"#de2d26\"/>\n";
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace curvereach
