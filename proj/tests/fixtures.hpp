#pragma once

#include <functional>
#include <random>

#include "curvereach/canonical.hpp"
#include "curvereach/witness.hpp"

namespace fixtures {

using namespace curvereach;

ConvexPolygon square(double side, Point origin = {0, 0});
ConvexPolygon rectangle(double w, double h, Point origin = {0, 0});
ConvexPolygon triangle();                       // (0,0) (12,0) (0,12)
ConvexPolygon regular_gon(int k, double circumradius, Point center = {0, 0});
ConvexPolygon random_convex(int n, double radius, std::mt19937_64& rng);

/// Uniform sample inside a convex polygon.
Point sample_in_polygon(const ConvexPolygon& poly, std::mt19937_64& rng);

/// Monte Carlo area of an arbitrary membership predicate over the polygon
/// bounding box.
double mc_area(const ConvexPolygon& poly, int samples, std::mt19937_64& rng,
               const std::function<bool(Point)>& inside);

/// Monte Carlo area of a region.
double mc_region_area(const ArcPolygon& region, int samples, std::mt19937_64& rng);

/// Independent Dubins length oracle: dense sweep over the first-arc angle per
/// family, refined locally; lengths agree with the analytic solution to ~1e-8.
double dubins_length_oracle(const Configuration& a, const Configuration& b);

}  // namespace fixtures
