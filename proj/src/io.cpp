#include "curvereach/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace curvereach {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotFound", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("FileWrite", "cannot write " + path);
    out << content;
}

namespace {

json point_json(Point p) { return json::array({p.x, p.y}); }

Point parse_point(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error("ParseError", "expected a [x, y] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

// Fixed-width float formatting keeps outputs byte-identical across runs.
json num(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

Instance parse_instance(const std::string& text, double scale) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error("ParseError", e.what());
    }
    if (!j.contains("polygon") || !j["polygon"].is_array())
        throw Error("ParseError", "instance needs a polygon array");
    if (!j.contains("start") || !j["start"].is_object())
        throw Error("ParseError", "instance needs a start object");
    if (scale <= 0.0) throw Error("ParseError", "scale must be positive");

    std::vector<Point> verts;
    for (const auto& v : j["polygon"]) {
        Point p = parse_point(v);
        verts.push_back({p.x * scale, p.y * scale});
    }
    Tolerance tol;
    if (j.contains("tolerance")) {
        const auto& t = j["tolerance"];
        if (t.contains("tol_len")) tol.len = t["tol_len"].get<double>();
        if (t.contains("tol_angle")) tol.angle = t["tol_angle"].get<double>();
        if (t.contains("tol_band")) tol.band = t["tol_band"].get<double>();
        if (tol.len <= 0.0 || tol.angle <= 0.0 || tol.band <= 0.0)
            throw Error("ParseError", "tolerances must be strictly positive");
    }
    ConvexPolygon poly = ConvexPolygon::validate(std::move(verts), tol);

    const auto& st = j["start"];
    if (!st.contains("point") || !st.contains("heading_radians"))
        throw Error("ParseError", "start needs point and heading_radians");
    Point p = parse_point(st["point"]);
    p = {p.x * scale, p.y * scale};
    double heading = st["heading_radians"].get<double>();
    Configuration start{p, Direction::from_angle(heading)};
    if (poly.classify(start.point, tol) == Side::Outside)
        throw Error("StartOutsidePolygon", "start point lies outside the polygon");
    return Instance{std::move(poly), start, tol};
}

Instance load_instance(const std::string& path, double scale) {
    return parse_instance(read_file(path), scale);
}

std::string region_to_json(const ArcPolygon& region, const ReachStats* stats) {
    json j;
    if (stats) {
        j["metadata"] = {
            {"area", stats->area},
            {"arc_count", stats->arc_count},
            {"bfil_size", stats->bfil_size},
            {"canonical_starts", stats->canonical_start_count},
            {"boundary_start", stats->boundary_start},
            {"da_covers_polygon", stats->da_covers},
            {"wall_time_ms", stats->wall_ms},
            {"complexity_note",
             "candidate search solves tangency equations per (edge, chain-edge) pair: "
             "O(n^2) per boundary start and up to O(n^3) over all canonical starts, "
             "versus the O(n^2) bound attainable with linear-time medial axes"},
        };
    }
    json cycles = json::array();
    for (const auto& cyc : region.cycles) {
        json c = json::array();
        for (const Element& e : cyc) {
            if (const Segment* s = std::get_if<Segment>(&e)) {
                c.push_back({{"type", "segment"}, {"a", point_json(s->a)}, {"b", point_json(s->b)}});
            } else {
                const Arc& a = std::get<Arc>(e);
                c.push_back({{"type", "arc"},
                             {"center", point_json(a.center)},
                             {"from_angle", num(a.from_angle)},
                             {"to_angle", num(a.to_angle)},
                             {"ccw", a.ccw}});
            }
        }
        cycles.push_back(std::move(c));
    }
    j["cycles"] = std::move(cycles);
    return j.dump(2) + "\n";
}

ArcPolygon region_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error("ParseError", e.what());
    }
    ArcPolygon out;
    for (const auto& cyc : j.at("cycles")) {
        std::vector<Element> cycle;
        for (const auto& e : cyc) {
            std::string type = e.at("type").get<std::string>();
            if (type == "segment") {
                cycle.push_back(Segment{parse_point(e.at("a")), parse_point(e.at("b"))});
            } else if (type == "arc") {
                cycle.push_back(Arc{parse_point(e.at("center")), e.at("from_angle").get<double>(),
                                    e.at("to_angle").get<double>(), e.at("ccw").get<bool>()});
            } else {
                throw Error("ParseError", "unknown element type " + type);
            }
        }
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

std::string path_to_json(const CurvaturePath& path) {
    json j;
    j["start"] = {{"point", point_json(path.start.point)},
                  {"heading_radians", path.start.dir.angle()}};
    json prims = json::array();
    for (const PathPrimitive& p : path.primitives) {
        if (p.is_arc) {
            prims.push_back({{"type", "arc"},
                             {"turn", p.turn == Turn::Left ? "L" : "R"},
                             {"angle", p.amount}});
        } else {
            prims.push_back({{"type", "straight"}, {"length", p.amount}});
        }
    }
    j["primitives"] = std::move(prims);
    return j.dump(2) + "\n";
}

CurvaturePath path_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error("ParseError", e.what());
    }
    CurvaturePath path;
    Point p = parse_point(j.at("start").at("point"));
    path.start = {p, Direction::from_angle(j.at("start").at("heading_radians").get<double>())};
    for (const auto& e : j.at("primitives")) {
        std::string type = e.at("type").get<std::string>();
        if (type == "arc") {
            Turn t = e.at("turn").get<std::string>() == "L" ? Turn::Left : Turn::Right;
            path.primitives.push_back(PathPrimitive::arc(t, e.at("angle").get<double>()));
        } else {
            path.primitives.push_back(PathPrimitive::straight(e.at("length").get<double>()));
        }
    }
    return path;
}

}  // namespace curvereach
