#include "kernel2d/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace kernel2d {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_abs_eps(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw Error(ErrorKind::InvalidEps, "eps must be a positive distance, got " + std::to_string(eps));
    }
}

struct DualLine {
    double m;
    double b;
    std::size_t source;
};

// upper envelope of lines over the whole x axis
std::vector<EnvelopePiece> upper_envelope(std::vector<DualLine> lines) {
    std::sort(lines.begin(), lines.end(), [](const DualLine& p, const DualLine& q) {
        if (p.m != q.m) return p.m < q.m;
        if (p.b != q.b) return p.b > q.b;
        return p.source < q.source;
    });
    std::vector<DualLine> hull;
    auto meet = [](const DualLine& p, const DualLine& q) { return (p.b - q.b) / (q.m - p.m); };
    for (const auto& l : lines) {
        if (!hull.empty() && hull.back().m == l.m) continue;  // same slope, lower or equal
        while (hull.size() >= 2 && meet(hull[hull.size() - 2], l) <= meet(hull[hull.size() - 2], hull.back())) {
            hull.pop_back();
        }
        hull.push_back(l);
    }
    std::vector<EnvelopePiece> out;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        EnvelopePiece p;
        p.x_lo = i == 0 ? -kInf : meet(hull[i - 1], hull[i]);
        p.x_hi = i + 1 == hull.size() ? kInf : meet(hull[i], hull[i + 1]);
        p.m = hull[i].m;
        p.b = hull[i].b;
        p.source = hull[i].source;
        out.push_back(p);
    }
    return out;
}

}  // namespace

std::size_t EnvelopeCurve::locate(double x) const {
    auto it = std::upper_bound(pieces.begin(), pieces.end(), x,
                               [](double v, const EnvelopePiece& p) { return v < p.x_lo; });
    if (it == pieces.begin()) return 0;
    return static_cast<std::size_t>(it - pieces.begin()) - 1;
}

double EnvelopeCurve::raw(double x) const {
    const auto& p = pieces[locate(x)];
    return p.m * x + p.b;
}

double EnvelopeCurve::operator()(double x) const {
    const double shift = eps * std::sqrt(1.0 + x * x);
    return upper ? raw(x) - shift : raw(x) + shift;
}

std::pair<EnvelopeCurve, EnvelopeCurve> build_envelopes(std::span<const Point2> points, double eps) {
    require_abs_eps(eps);
    bool two = false;
    for (const auto& p : points) two = two || !(p == points[0]);
    if (!two) throw Error(ErrorKind::DegenerateInput, "envelopes need two distinct points");

    std::vector<DualLine> up, down;
    for (std::size_t i = 0; i < points.size(); ++i) {
        up.push_back({points[i].x, -points[i].y, i});
        down.push_back({-points[i].x, points[i].y, i});
    }
    EnvelopeCurve u, l;
    u.upper = true;
    u.eps = eps;
    u.pieces = upper_envelope(std::move(up));
    l.upper = false;
    l.eps = eps;
    l.pieces = upper_envelope(std::move(down));
    for (auto& p : l.pieces) {
        p.m = -p.m;
        p.b = -p.b;
    }
    return {u, l};
}

std::optional<double> envelope_shoot(const EnvelopeCurve& curve, Point2 origin, Point2 dir) {
    const double sigma = curve.upper ? -1.0 : 1.0;
    const double eps = curve.eps;
    std::optional<double> best;
    auto offer = [&](double t) {
        if (t >= 0.0 && (!best || t < *best)) best = t;
    };
    if (dir.x == 0.0) {
        if (dir.y == 0.0) return std::nullopt;
        offer((curve(origin.x) - origin.y) / dir.y);
        return best;
    }
    // ray as y = k*x + c, restricted to the side dir.x points to
    const double k = dir.y / dir.x;
    const double c = origin.y - k * origin.x;
    const std::size_t n = curve.pieces.size();
    for (std::size_t step = 0; step < n; ++step) {
        const auto& p = curve.pieces[dir.x > 0.0 ? step : n - 1 - step];
        if (dir.x > 0.0 && p.x_hi < origin.x) continue;
        if (dir.x < 0.0 && p.x_lo > origin.x) continue;
        // (alpha*x + beta) = sigma*eps*sqrt(1+x^2), squared to a quadratic
        const double alpha = k - p.m, beta = c - p.b;
        const double qa = alpha * alpha - eps * eps, qb = 2.0 * alpha * beta, qc = beta * beta - eps * eps;
        double roots[2];
        int count = 0;
        if (std::abs(qa) <= 1e-15 * (alpha * alpha + eps * eps)) {
            if (qb != 0.0) roots[count++] = -qc / qb;
        } else {
            const double disc = qb * qb - 4.0 * qa * qc;
            if (disc < 0.0) continue;
            const double sq = std::sqrt(disc);
            const double q = -0.5 * (qb + (qb >= 0.0 ? sq : -sq));
            if (q != 0.0) roots[count++] = qc / q;
            roots[count++] = q / qa;
        }
        for (int r = 0; r < count; ++r) {
            const double x = roots[r];
            if (!(x >= p.x_lo && x <= p.x_hi)) continue;
            // reject the root of the mirrored equation
            const double lhs = alpha * x + beta, rhs = sigma * eps * std::sqrt(1.0 + x * x);
            if (std::abs(lhs - rhs) > 1e-9 * (std::abs(rhs) + std::abs(beta) + 1.0)) continue;
            offer((x - origin.x) / dir.x);
        }
        if (best) break;  // pieces are visited in ray order
    }
    return best;
}

HausdorffTarget::HausdorffTarget(const ConvexPolygon& hull, const NormalDiagram& diagram, double eps,
                                 std::vector<Point2> candidates, std::vector<std::size_t> ids)
    : points_(std::move(candidates)), ids_(std::move(ids)) {
    const double base = diagram.intervals.front().start;
    std::vector<double> offs;
    for (const auto& iv : diagram.intervals) {
        offs.push_back(ccw_delta(base, iv.start));
        starts_.push_back(iv.start);
        anchor_.push_back(hull[iv.support]);
    }
    reach_ = eps + 1e-12 * std::max(diameter(hull), 1e-300);
    set_pieces(base, std::move(offs));
}

void HausdorffTarget::blocked_in_piece(std::size_t k, std::size_t piece, std::vector<Span>& out) const {
    const Point2 w = points_[k] - anchor_[piece];
    const double r = norm(w);
    const double len = piece_length(piece);
    if (r <= reach_) {
        out.emplace_back(0.0, len);
        return;
    }
    const double beta = std::acos(std::clamp(-reach_ / r, -1.0, 1.0));
    clip_arc_to_piece(angle_of(w) - beta, 2.0 * beta, starts_[piece], len, out);
}

std::vector<double> HausdorffTarget::crossing_directions(std::size_t a, std::size_t b) const {
    const Point2 d = points_[a] - points_[b];
    if (d.x == 0.0 && d.y == 0.0) return {};
    const double t = angle_of(d);
    return {t + 0.5 * kPi, t - 0.5 * kPi};
}

std::vector<std::size_t> optimal_hausdorff_subset(std::span<const Point2> points, double eps) {
    require_abs_eps(eps);
    if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points");
    const ConvexPolygon hull = convex_hull(points);
    if (hull.size() == 1) return {hull.source[0]};
    const NormalDiagram diagram = refined_normal_diagram(hull);

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (points[i].x != points[j].x) return points[i].x < points[j].x;
        if (points[i].y != points[j].y) return points[i].y < points[j].y;
        return i < j;
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t i, std::size_t j) { return points[i] == points[j]; }),
                order.end());
    std::vector<Point2> cand;
    for (auto i : order) cand.push_back(points[i]);

    const HausdorffTarget target(hull, diagram, eps, std::move(cand), order);
    std::vector<std::size_t> out;
    for (auto p : optimal_blocking_positions(target)) out.push_back(target.candidate_id(p));
    std::sort(out.begin(), out.end());
    return out;
}

double hausdorff_distance(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.size() == 0 || b.size() == 0) throw Error(ErrorKind::EmptyInput, "empty polygon");
    // distance to a convex set is convex, so the max over a polygon sits at a vertex
    double d = 0.0;
    for (const auto& v : a.vertices) d = std::max(d, distance_to_polygon(b, v));
    for (const auto& v : b.vertices) d = std::max(d, distance_to_polygon(a, v));
    return d;
}

bool is_hausdorff_within(std::span<const Point2> points, std::span<const std::size_t> subset, double eps) {
    if (points.empty()) return subset.empty();
    if (subset.empty()) return false;
    for (auto i : subset) {
        if (i >= points.size()) throw Error(ErrorKind::DegenerateInput, "subset index out of range");
    }
    const auto sub = gather(points, subset);
    return hausdorff_distance(convex_hull(points), convex_hull(sub)) <= eps * (1.0 + 1e-9);
}

}  // namespace kernel2d
