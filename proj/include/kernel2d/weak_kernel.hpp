#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kernel2d/arc_cover.hpp"
#include "kernel2d/geom.hpp"

namespace kernel2d {

// Piece of e(theta) = w(u(theta/2)) on which the width is realized by points i, j.
struct WidthPiece {
    double start = 0.0;  // theta, CCW to the next piece
    std::size_t i = 0;
    std::size_t j = 0;
};

struct WidthFunction {
    std::vector<Point2> points;
    ConvexPolygon hull;
    NormalDiagram diagram;
    std::vector<WidthPiece> pieces;

    double operator()(double theta) const;
};

WidthFunction width_function(std::span<const Point2> points);

// Directions (in theta) where pair (i, j) keeps a (1-eps) fraction of the width.
struct LabeledArc {
    CircularArc arc;
    bool full = false;
    std::size_t i = 0;
    std::size_t j = 0;
};

std::optional<LabeledArc> interval_Iij(const WidthFunction& wf, std::size_t i, std::size_t j, double eps);

// All nonempty intervals over pairs of distinct points.
std::vector<LabeledArc> all_intervals(const WidthFunction& wf, double eps);

std::vector<std::size_t> weak_kernel_2approx(std::span<const Point2> points, double eps);
std::vector<std::size_t> weak_kernel_exact(std::span<const Point2> points, double eps);

bool is_weak_eps_kernel(std::span<const Point2> points, std::span<const std::size_t> subset, double eps);

}  // namespace kernel2d
