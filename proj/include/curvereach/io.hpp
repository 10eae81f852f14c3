#pragma once

#include <string>

#include "curvereach/canonical.hpp"
#include "curvereach/witness.hpp"

namespace curvereach {

/// Problem instance: polygon, start configuration, tolerance overrides.
struct Instance {
    ConvexPolygon polygon;
    Configuration start;
    Tolerance tol;
};

/// Parses an instance file (JSON: polygon, start, optional tolerance), with an
/// optional uniform rescale applied before validation so instances posed with
/// an arbitrary turning radius can be normalized to radius 1.
Instance load_instance(const std::string& path, double scale = 1.0);
Instance parse_instance(const std::string& text, double scale = 1.0);

std::string region_to_json(const ArcPolygon& region, const ReachStats* stats = nullptr);
ArcPolygon region_from_json(const std::string& text);

std::string path_to_json(const CurvaturePath& path);
CurvaturePath path_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace curvereach
