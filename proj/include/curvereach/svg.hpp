#pragma once

#include <optional>
#include <string>

#include "curvereach/io.hpp"

namespace curvereach {

struct SvgOptions {
    std::optional<Point> query;
    const CurvaturePath* witness = nullptr;
    bool show_core = true;
    bool show_bfil = true;
};

/// Deterministic SVG: polygon outline, reach region fill, core lens, bfil
/// disks (dashed), start arrow, and optionally a query point with its witness.
std::string render_svg(const Instance& inst, const ReachSet& rs, const SvgOptions& opts = {});

}  // namespace curvereach
