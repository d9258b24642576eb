#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kernel2d/arc_cover.hpp"
#include "kernel2d/geom.hpp"

namespace kernel2d {

struct AngularInterval {
    CircularArc arc;
    std::size_t point = 0;
};

// Intersection of the (1-eps)-shrunken slabs over all directions. Degenerate
// results (segment or single point) are returned as 2- or 1-vertex polygons.
ConvexPolygon compute_core(std::span<const Point2> points, double eps);

// Directions v with inner inside the halfplane <x,v> <= <p,v>.
AngularInterval angular_interval(Point2 p, const ConvexPolygon& inner, std::size_t index = 0);

// Smallest subset whose hull contains `inner`; indices into points.
std::vector<std::size_t> min_containing_subset(std::span<const Point2> points, const ConvexPolygon& inner);

// core(P, eps/4) followed by min_containing_subset.
std::vector<std::size_t> fast_kernel(std::span<const Point2> points, double eps);

// Intersection of halfplanes <x, u_k> <= g_k; empty when infeasible.
ConvexPolygon intersect_halfplanes(std::span<const Point2> normals, std::span<const double> offsets);

// O(log n) test for p in the interior of a CCW convex polygon, shrunk by tol.
bool strictly_inside(const ConvexPolygon& poly, Point2 p, double tol);

}  // namespace kernel2d
