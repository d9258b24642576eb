#include "kernel2d/kernel.hpp"

#include <algorithm>
#include <numeric>

#include "kernel2d/core.hpp"

namespace kernel2d {

Line2 polar_point_to_line(Point2 p, std::size_t id) {
    if (p.x == 0.0 && p.y == 0.0) throw Error(ErrorKind::AtOrigin, "polar of the origin");
    return make_line(p.x, p.y, 1.0, id);
}

Point2 polar_line_to_point(const Line2& line) {
    if (line.c == 0.0) throw Error(ErrorKind::ThroughOrigin, "polar of a line through the origin");
    return (1.0 / line.c) * Point2{line.a, line.b};
}

namespace {

Point2 shifted_point(const ConvexPolygon& hull, const DiagramInterval& iv, double eps) {
    return (1.0 - 0.5 * eps) * hull[iv.support] + (0.5 * eps) * hull[iv.antipodal];
}

}  // namespace

StarPolygon build_shifted_star(const ConvexPolygon& hull, const NormalDiagram& diagram, double eps) {
    require_relative_eps(eps);
    if (hull.size() < 3) throw Error(ErrorKind::DegenerateHull, "shifted star needs a 2D hull");
    StarPolygon star;
    const std::size_t m = diagram.intervals.size();
    for (std::size_t k = 0; k < m; ++k) {
        const auto& iv = diagram.intervals[k];
        const Point2 u = DirectionAngle(iv.start).unit();
        const double g = dot(shifted_point(hull, iv, eps), u);
        if (!(g > 0.0)) throw Error(ErrorKind::DegenerateHull, "origin is not inside the core");
        star.vertices.push_back((1.0 / g) * u);
    }
    return star;
}

ThresholdTarget::ThresholdTarget(const ConvexPolygon& hull, const NormalDiagram& diagram, double eps,
                                 std::vector<Point2> candidates, std::vector<std::size_t> ids)
    : points_(std::move(candidates)), ids_(std::move(ids)) {
    const double base = diagram.intervals.front().start;
    std::vector<double> offs;
    for (const auto& iv : diagram.intervals) {
        offs.push_back(ccw_delta(base, iv.start));
        starts_.push_back(iv.start);
        shifted_.push_back(shifted_point(hull, iv, eps));
    }
    slack_ = 1e-12 * std::max(diameter(hull), 1e-300);
    set_pieces(base, std::move(offs));
}

void ThresholdTarget::blocked_in_piece(std::size_t k, std::size_t piece, std::vector<Span>& out) const {
    const Point2 w = points_[k] - shifted_[piece];
    const double r = norm(w);
    const double len = piece_length(piece);
    if (r <= slack_) {
        out.emplace_back(0.0, len);
        return;
    }
    const double beta = std::acos(std::clamp(-slack_ / r, -1.0, 1.0));
    clip_arc_to_piece(angle_of(w) - beta, 2.0 * beta, starts_[piece], len, out);
}

std::vector<double> ThresholdTarget::crossing_directions(std::size_t a, std::size_t b) const {
    const Point2 d = points_[a] - points_[b];
    if (d.x == 0.0 && d.y == 0.0) return {};
    const double t = angle_of(d);
    return {t + 0.5 * kPi, t - 0.5 * kPi};
}

namespace {

std::vector<std::size_t> distinct_indices(std::span<const Point2> points, const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> order = idx;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (points[i].x != points[j].x) return points[i].x < points[j].x;
        if (points[i].y != points[j].y) return points[i].y < points[j].y;
        return i < j;
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t i, std::size_t j) { return points[i] == points[j]; }),
                order.end());
    return order;
}

std::vector<std::size_t> run_threshold(std::span<const Point2> points, const ConvexPolygon& hull,
                                       const NormalDiagram& diagram, double eps,
                                       const std::vector<std::size_t>& cand) {
    std::vector<Point2> pts;
    for (auto i : cand) pts.push_back(points[i]);
    const ThresholdTarget target(hull, diagram, eps, std::move(pts), cand);
    std::vector<std::size_t> out;
    for (auto p : optimal_blocking_positions(target)) out.push_back(target.candidate_id(p));
    return out;
}

}  // namespace

std::vector<std::size_t> optimal_kernel(std::span<const Point2> points, double eps) {
    require_relative_eps(eps);
    const ConvexPolygon hull = convex_hull(points);
    if (hull.size() <= 2) {
        auto out = hull.source;
        std::sort(out.begin(), out.end());
        return out;
    }
    const NormalDiagram diagram = refined_normal_diagram(hull);
    const ConvexPolygon core = compute_core(points, eps);

    std::vector<std::size_t> all(points.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::size_t> result;
    if (core.size() >= 3) {
        // points strictly inside the core never reach a shifted supporting line
        std::vector<std::size_t> cand;
        for (auto i : all) {
            if (!strictly_inside(core, points[i], 0.0)) cand.push_back(i);
        }
        cand = distinct_indices(points, cand);

        const Point2 o = area_centroid(core);
        ConvexPolygon moved = hull;
        for (auto& v : moved.vertices) v = v - o;
        std::vector<Line2> lines;
        lines.reserve(cand.size());
        for (auto i : cand) lines.push_back(polar_point_to_line(points[i] - o, i));
        const RayShooter shooter(build_shifted_star(moved, diagram, eps));
        const PolygonTarget target(shooter, std::move(lines));
        for (auto p : optimal_blocking_positions(target)) result.push_back(target.candidate_id(p));
    } else {
        result = run_threshold(points, hull, diagram, eps, distinct_indices(points, all));
    }
    std::sort(result.begin(), result.end());
    return result;
}

bool is_eps_kernel(std::span<const Point2> points, std::span<const std::size_t> subset, double eps) {
    require_relative_eps(eps);
    if (points.empty()) return subset.empty();
    if (subset.empty()) return false;
    for (auto i : subset) {
        if (i >= points.size()) throw Error(ErrorKind::DegenerateInput, "subset index out of range");
    }
    const ConvexPolygon hp = convex_hull(points);
    if (hp.size() == 1) return true;
    const auto sub = gather(points, subset);
    const ConvexPolygon hc = convex_hull(sub);

    std::vector<double> dirs;
    for (const auto& iv : refined_normal_diagram(hp).intervals) dirs.push_back(iv.start);
    if (hc.size() >= 2) {
        for (const auto& iv : refined_normal_diagram(hc).intervals) dirs.push_back(iv.start);
    }
    std::sort(dirs.begin(), dirs.end());
    const std::size_t k = dirs.size();
    for (std::size_t i = 0; i < k; ++i) {
        const double next = i + 1 < k ? dirs[i + 1] : dirs[0] + kTwoPi;
        dirs.push_back(0.5 * (dirs[i] + next));
    }
    const double tol = tolerance_for(diameter(hp));
    for (double t : dirs) {
        const DirectionAngle dir(t);
        const ProjectionInterval jp = projection_interval(hp, dir).shrunk(eps);
        const ProjectionInterval jc = projection_interval(hc, dir);
        if (jc.hi < jp.hi - tol || jc.lo > jp.lo + tol) return false;
    }
    return true;
}

}  // namespace kernel2d
