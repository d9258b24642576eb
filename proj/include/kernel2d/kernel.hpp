#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kernel2d/geom.hpp"
#include "kernel2d/star_blocking.hpp"

namespace kernel2d {

// Polarity <p, x> = 1 about the origin.
Line2 polar_point_to_line(Point2 p, std::size_t id = 0);
Point2 polar_line_to_point(const Line2& line);

// Star polygon bounded by the polars of the shifted antipodal combinations.
// The hull must already be translated so the origin is inside its eps-core.
StarPolygon build_shifted_star(const ConvexPolygon& hull, const NormalDiagram& diagram, double eps);

// Candidates hit direction v when <q, v> >= h(v) - (eps/2) w(v). Works in
// direction space, so no origin is needed.
class ThresholdTarget : public PiecewiseTarget {
public:
    ThresholdTarget(const ConvexPolygon& hull, const NormalDiagram& diagram, double eps,
                    std::vector<Point2> candidates, std::vector<std::size_t> ids);

    std::size_t candidate_count() const override { return points_.size(); }
    std::size_t candidate_id(std::size_t k) const override { return ids_[k]; }
    std::vector<double> crossing_directions(std::size_t a, std::size_t b) const override;

protected:
    void blocked_in_piece(std::size_t k, std::size_t piece, std::vector<Span>& out) const override;

private:
    std::vector<Point2> shifted_;  // s_gamma per piece
    std::vector<double> starts_;
    std::vector<Point2> points_;
    std::vector<std::size_t> ids_;
    double slack_;
};

// Minimum eps-kernel; sorted point indices.
std::vector<std::size_t> optimal_kernel(std::span<const Point2> points, double eps);

// proj(C) contains (1-eps) proj(P) in every direction.
bool is_eps_kernel(std::span<const Point2> points, std::span<const std::size_t> subset, double eps);

}  // namespace kernel2d
