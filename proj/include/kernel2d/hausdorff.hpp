#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kernel2d/geom.hpp"
#include "kernel2d/star_blocking.hpp"

namespace kernel2d {

// Point (a, b) is dual to the line y = a*x - b, so the value of the dual line
// at x is the projection onto the direction (x, -1).
struct EnvelopePiece {
    double x_lo = 0.0;  // piece covers [x_lo, x_hi]
    double x_hi = 0.0;
    double m = 0.0;  // dual line y = m*x + b
    double b = 0.0;
    std::size_t source = 0;  // index of the point
};

// Upper curve u(x) = U(x) - eps*sqrt(1+x^2), lower curve l(x) = L(x) + eps*sqrt(1+x^2).
struct EnvelopeCurve {
    bool upper = true;
    double eps = 0.0;
    std::vector<EnvelopePiece> pieces;  // increasing x, first starts at -inf, last ends at +inf

    std::size_t locate(double x) const;
    double raw(double x) const;  // U or L
    double operator()(double x) const;
};

std::pair<EnvelopeCurve, EnvelopeCurve> build_envelopes(std::span<const Point2> points, double eps);

// First parameter t >= 0 at which origin + t*dir meets the curve, starting
// above an upper curve (below a lower curve); nullopt if it never does.
std::optional<double> envelope_shoot(const EnvelopeCurve& curve, Point2 origin, Point2 dir);

// Candidate q blocks direction v when <q, v> >= h_P(v) - eps.
class HausdorffTarget : public PiecewiseTarget {
public:
    HausdorffTarget(const ConvexPolygon& hull, const NormalDiagram& diagram, double eps,
                    std::vector<Point2> candidates, std::vector<std::size_t> ids);

    std::size_t candidate_count() const override { return points_.size(); }
    std::size_t candidate_id(std::size_t k) const override { return ids_[k]; }
    std::vector<double> crossing_directions(std::size_t a, std::size_t b) const override;

protected:
    void blocked_in_piece(std::size_t k, std::size_t piece, std::vector<Span>& out) const override;

private:
    std::vector<Point2> anchor_;  // support vertex per piece
    std::vector<double> starts_;
    std::vector<Point2> points_;
    std::vector<std::size_t> ids_;
    double reach_;
};

// Minimum subset whose hull is within Hausdorff distance eps (absolute) of the hull of P.
std::vector<std::size_t> optimal_hausdorff_subset(std::span<const Point2> points, double eps);

// Two-sided Hausdorff distance between convex polygons.
double hausdorff_distance(const ConvexPolygon& a, const ConvexPolygon& b);

// hausdorff_distance(CH(P), CH(subset)) <= eps, with relative tolerance 1e-9.
bool is_hausdorff_within(std::span<const Point2> points, std::span<const std::size_t> subset, double eps);

}  // namespace kernel2d
