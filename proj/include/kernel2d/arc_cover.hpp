#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kernel2d/geom.hpp"

namespace kernel2d {

// Closed arc of the unit circle, CCW from start to end.
struct CircularArc {
    DirectionAngle start;
    DirectionAngle end;
    std::size_t id = 0;

    CircularArc() = default;
    CircularArc(double start_theta, double end_theta, std::size_t arc_id)
        : start(start_theta), end(end_theta), id(arc_id) {}

    static CircularArc from_length(double start_theta, double length, std::size_t arc_id) {
        return CircularArc(start_theta, start_theta + length, arc_id);
    }

    double length() const { return ccw_delta(start.theta(), end.theta()); }
    bool contains(double theta, double tol = 0.0) const;
};

enum class ArcLengthPolicy {
    BelowPi,          // every arc shorter than pi
    BelowFullCircle,  // any arc shorter than the whole circle
};

struct Atom {
    double start = 0.0;  // CCW range [start, end] of the atomic interval
    double end = 0.0;
    std::size_t depth = 0;
    std::size_t cw_max = 0;  // position in AtomicIntervalIndex::arcs; valid when depth > 0
};

// Atomic intervals cut by all arc endpoints, with per-atom depth and the
// covering arc that reaches furthest counterclockwise.
struct AtomicIntervalIndex {
    std::vector<CircularArc> arcs;
    std::vector<Atom> atoms;
    std::vector<std::size_t> first_atom;  // per arc: atom starting at the arc's start
    std::vector<std::size_t> span;        // per arc: number of atoms covered
    std::vector<std::size_t> rho;         // per arc: atom starting at the arc's end

    bool covers_circle() const;
    std::size_t least_covered_atom() const;
    bool arc_covers_atom(std::size_t arc_pos, std::size_t atom) const;
};

AtomicIntervalIndex build_index(std::span<const CircularArc> arcs,
                                ArcLengthPolicy policy = ArcLengthPolicy::BelowPi);

// Greedy cover starting from the arc with id `start_id`; returns arc ids.
std::vector<std::size_t> greedy_cover_from(const AtomicIntervalIndex& index, std::size_t start_id);

// Exact minimum cover; returns arc ids in cover order.
std::vector<std::size_t> min_arc_cover(std::span<const CircularArc> arcs,
                                       ArcLengthPolicy policy = ArcLengthPolicy::BelowPi);

}  // namespace kernel2d
