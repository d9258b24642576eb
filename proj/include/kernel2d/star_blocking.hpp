#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kernel2d/arc_cover.hpp"
#include "kernel2d/geom.hpp"

namespace kernel2d {

// Line a*x + b*y = c with unit normal (a,b) and c > 0, so the origin lies
// strictly on the inner side.
struct Line2 {
    double a = 1.0;
    double b = 0.0;
    double c = 1.0;
    std::size_t id = 0;

    Point2 normal() const { return {a, b}; }
    double eval(Point2 p) const { return a * p.x + b * p.y - c; }
};

// Normalizes to a unit normal with c > 0; throws ThroughOrigin when c == 0.
Line2 make_line(double a, double b, double c, std::size_t id);

// Blocked directions of a candidate: either the whole circle or a set of
// closed arcs (the blocking segments of a line).
struct BlockedArcs {
    bool full = false;
    std::vector<CircularArc> arcs;
};

// Anything the blocking-set solver can query: a family of candidates, each
// blocking a closed subset of directions.
class BlockingTarget {
public:
    virtual ~BlockingTarget() = default;

    virtual std::size_t candidate_count() const = 0;
    virtual std::size_t candidate_id(std::size_t k) const = 0;
    virtual bool blocks(std::size_t k, double u) const = 0;
    // CCW angular distance from u to where candidate k stops blocking, or
    // nullopt if it does not block u; kTwoPi when it blocks every direction.
    virtual std::optional<double> exit_ccw(std::size_t k, double u) const = 0;
    virtual std::optional<double> exit_cw(std::size_t k, double u) const = 0;
    virtual BlockedArcs segments(std::size_t k) const = 0;
    // Directions at which the blocking segments of a and b may meet.
    virtual std::vector<double> crossing_directions(std::size_t a, std::size_t b) const = 0;
};

// Target whose direction circle is cut into pieces, with the blocked part of
// each piece given in closed form.
class PiecewiseTarget : public BlockingTarget {
public:
    bool blocks(std::size_t k, double u) const override;
    std::optional<double> exit_ccw(std::size_t k, double u) const override;
    std::optional<double> exit_cw(std::size_t k, double u) const override;
    BlockedArcs segments(std::size_t k) const override;

    std::size_t piece_count() const { return piece_start_.size(); }

protected:
    using Span = std::pair<double, double>;  // offsets inside a piece

    // Piece boundaries as CCW offsets from `base`; the last piece ends at base + 2pi.
    void set_pieces(double base, std::vector<double> offsets);
    virtual void blocked_in_piece(std::size_t k, std::size_t piece, std::vector<Span>& out) const = 0;

    double piece_length(std::size_t piece) const;
    std::pair<std::size_t, double> locate(double u) const;

private:
    double base_ = 0.0;
    std::vector<double> piece_start_;
};

// Up to two sub-ranges of [0, len] covered by the arc of `arc_len` starting
// `arc_start - piece_start` CCW.
void clip_arc_to_piece(double arc_start, double arc_len, double piece_start, double len,
                       std::vector<std::pair<double, double>>& out);

// Polygon star-shaped about the origin, CCW vertices.
struct StarPolygon {
    std::vector<Point2> vertices;
};

class RayShooter {
public:
    explicit RayShooter(StarPolygon poly);

    const StarPolygon& polygon() const { return poly_; }
    std::size_t size() const { return poly_.vertices.size(); }
    double angle(std::size_t i) const { return angles_[i]; }
    double offset(std::size_t i) const { return offsets_[i]; }
    double scale() const { return scale_; }

    // Boundary point hit by the ray from the origin in direction u.
    Point2 radial_point(double u) const;
    // Piece k runs from vertex k to vertex k+1.
    std::size_t locate(double u) const;

private:
    StarPolygon poly_;
    std::vector<double> angles_;
    std::vector<double> offsets_;  // CCW offsets from angles_[0], increasing
    double scale_ = 1.0;
};

RayShooter build_shooter(StarPolygon poly);

// CCW-first exit direction of the blocking segment of `line` crossing the
// radial segment o-Z(u); nullopt when the line misses it.
std::optional<DirectionAngle> shoot(const RayShooter& shooter, DirectionAngle u, const Line2& line);

// Star polygon plus candidate lines, as a blocking target.
class PolygonTarget : public PiecewiseTarget {
public:
    PolygonTarget(const RayShooter& shooter, std::vector<Line2> lines);

    std::size_t candidate_count() const override { return lines_.size(); }
    std::size_t candidate_id(std::size_t k) const override { return lines_[k].id; }
    std::vector<double> crossing_directions(std::size_t a, std::size_t b) const override;

    const Line2& line(std::size_t k) const { return lines_[k]; }

protected:
    void blocked_in_piece(std::size_t k, std::size_t piece, std::vector<Span>& out) const override;

private:
    const RayShooter& shooter_;
    std::vector<Line2> lines_;
    double slack_;
};

// Candidate positions (0..candidate_count) chosen by the CCW greedy.
std::vector<std::size_t> greedy_blocking_positions(const BlockingTarget& target);
// Exact minimum from the pruned candidate arcs.
std::vector<std::size_t> optimal_blocking_positions(const BlockingTarget& target);
// Exact minimum from every blocking segment of every candidate.
std::vector<std::size_t> optimal_blocking_positions_full(const BlockingTarget& target);

// Pruned candidate arcs for the exact step; arc ids index the returned owner list.
struct CandidateArcs {
    std::vector<CircularArc> arcs;
    std::vector<std::size_t> owner;
};
CandidateArcs pruned_candidate_arcs(const BlockingTarget& target, std::span<const std::size_t> greedy);

std::vector<std::size_t> greedy_blocking_set(const StarPolygon& poly, std::span<const Line2> lines);
std::vector<std::size_t> optimal_blocking_set(const StarPolygon& poly, std::span<const Line2> lines);

}  // namespace kernel2d
