#include "kernel2d/geom.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace kernel2d {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::DegenerateHull: return "DegenerateHull";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::InvalidEps: return "InvalidEps";
        case ErrorKind::ArcTooLong: return "ArcTooLong";
        case ErrorKind::NotCoverable: return "NotCoverable";
        case ErrorKind::NotStarShaped: return "NotStarShaped";
        case ErrorKind::NoBlockingSet: return "NoBlockingSet";
        case ErrorKind::AtOrigin: return "AtOrigin";
        case ErrorKind::ThroughOrigin: return "ThroughOrigin";
        case ErrorKind::PointInsideInner: return "PointInsideInner";
        case ErrorKind::NotContained: return "NotContained";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

void require_relative_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw Error(ErrorKind::InvalidEps, "eps must lie in (0,1), got " + std::to_string(eps));
    }
}

double normalize_angle(double theta) {
    double t = std::fmod(theta + kPi, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    t -= kPi;
    // fmod can round up to exactly pi
    if (t >= kPi) t -= kTwoPi;
    return t;
}

double ccw_delta(double from, double to) {
    double d = std::fmod(to - from, kTwoPi);
    if (d < 0.0) d += kTwoPi;
    if (d >= kTwoPi) d -= kTwoPi;
    return d;
}

double DiagramInterval::length() const { return ccw_delta(start, end); }
double DiagramInterval::midpoint() const { return normalize_angle(start + 0.5 * length()); }

std::size_t NormalDiagram::locate(double theta) const {
    const double base = intervals.front().start;
    const double d = ccw_delta(base, theta);
    std::size_t lo = 0;
    std::size_t hi = intervals.size();
    // last k with offset(start_k) <= d; offset(start_0) = 0
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (ccw_delta(base, intervals[mid].start) <= d) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

bool Halfplane::contains(Point2 p, double tol) const {
    const double v = a * p.x + b * p.y;
    return side == Side::Inner ? v <= c + tol : v >= c - tol;
}

ConvexPolygon convex_hull(std::span<const Point2> points) {
    if (points.empty()) throw Error(ErrorKind::EmptyInput, "convex_hull of no points");
    for (const auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw Error(ErrorKind::DegenerateInput, "non-finite coordinate");
        }
    }
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const auto& a = points[i];
        const auto& b = points[j];
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return i < j;
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t i, std::size_t j) { return points[i] == points[j]; }),
                order.end());

    ConvexPolygon hull;
    if (order.size() == 1) {
        hull.vertices.push_back(points[order[0]]);
        hull.source.push_back(order[0]);
        return hull;
    }

    std::vector<std::size_t> chain(2 * order.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        while (k >= 2 && cross(points[chain[k - 2]], points[chain[k - 1]], points[order[i]]) <= 0.0) --k;
        chain[k++] = order[i];
    }
    for (std::size_t i = order.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(points[chain[k - 2]], points[chain[k - 1]], points[order[i]]) <= 0.0) --k;
        chain[k++] = order[i];
    }
    chain.resize(k - 1);
    for (auto idx : chain) {
        hull.vertices.push_back(points[idx]);
        hull.source.push_back(idx);
    }
    return hull;
}

namespace {

double edge_normal(const ConvexPolygon& hull, std::size_t i) {
    const Point2 a = hull[i];
    const Point2 b = hull[(i + 1) % hull.size()];
    return angle_of({b.y - a.y, a.x - b.x});
}

}  // namespace

std::size_t extremal_vertex(const ConvexPolygon& hull, DirectionAngle dir) {
    const std::size_t h = hull.size();
    if (h == 1) return 0;
    const double base = edge_normal(hull, 0);
    const double d = ccw_delta(base, dir.theta());
    // number of edge normals at CCW offset <= d, at least 1 (edge 0 itself)
    std::size_t lo = 1;
    std::size_t hi = h;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (ccw_delta(base, edge_normal(hull, mid)) <= d) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    // theta lies in [n_{lo-1}, n_lo): support is the vertex after edge lo-1
    return lo % h;
}

NormalDiagram refined_normal_diagram(const ConvexPolygon& hull) {
    const std::size_t h = hull.size();
    if (h < 2) throw Error(ErrorKind::DegenerateHull, "normal diagram needs at least 2 hull vertices");

    std::vector<double> ends;
    ends.reserve(2 * h);
    for (std::size_t i = 0; i < h; ++i) {
        const double n = edge_normal(hull, i);
        ends.push_back(normalize_angle(n));
        ends.push_back(normalize_angle(n + kPi));
    }
    std::sort(ends.begin(), ends.end());
    constexpr double kMerge = 1e-12;
    std::vector<double> uniq;
    for (double e : ends) {
        if (uniq.empty() || e - uniq.back() > kMerge) uniq.push_back(e);
    }
    if (uniq.size() > 1 && ccw_delta(uniq.back(), uniq.front()) <= kMerge) uniq.pop_back();

    NormalDiagram diagram;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        DiagramInterval iv;
        iv.start = uniq[i];
        iv.end = uniq[(i + 1) % uniq.size()];
        const double mid = iv.midpoint();
        iv.support = extremal_vertex(hull, DirectionAngle(mid));
        iv.antipodal = extremal_vertex(hull, DirectionAngle(mid + kPi));
        diagram.intervals.push_back(iv);
    }
    return diagram;
}

ProjectionInterval projection_interval(std::span<const Point2> points, Point2 u) {
    ProjectionInterval J{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& p : points) {
        const double v = dot(u, p);
        J.lo = std::min(J.lo, v);
        J.hi = std::max(J.hi, v);
    }
    return J;
}

ProjectionInterval projection_interval(const ConvexPolygon& hull, DirectionAngle dir) {
    const Point2 u = dir.unit();
    const std::size_t top = extremal_vertex(hull, dir);
    const std::size_t bottom = extremal_vertex(hull, dir.opposite());
    return {dot(u, hull[bottom]), dot(u, hull[top])};
}

Halfplane shifted_supporting_line(const ConvexPolygon& hull, DirectionAngle dir, double eps) {
    const Point2 u = dir.unit();
    const ProjectionInterval J = projection_interval(hull, dir);
    Halfplane hp;
    hp.a = u.x;
    hp.b = u.y;
    hp.c = J.hi - 0.5 * eps * J.width();
    hp.side = Halfplane::Side::Outer;
    return hp;
}

double bbox_diameter(std::span<const Point2> points) {
    if (points.empty()) return 0.0;
    double x0 = points[0].x, x1 = x0, y0 = points[0].y, y1 = y0;
    for (const auto& p : points) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return std::hypot(x1 - x0, y1 - y0);
}

double diameter(const ConvexPolygon& hull) {
    double best = 0.0;
    const std::size_t h = hull.size();
    if (h < 2) return 0.0;
    // rotating calipers over antipodal pairs
    std::size_t j = 1;
    for (std::size_t i = 0; i < h; ++i) {
        const Point2 a = hull[i];
        const Point2 b = hull[(i + 1) % h];
        while (std::abs(cross(a, b, hull[(j + 1) % h])) > std::abs(cross(a, b, hull[j]))) j = (j + 1) % h;
        best = std::max({best, norm(hull[j] - a), norm(hull[j] - b)});
    }
    return best;
}

double signed_area(std::span<const Point2> ring) {
    double s = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) s += cross(ring[i], ring[(i + 1) % ring.size()]);
    return 0.5 * s;
}

Point2 vertex_centroid(const ConvexPolygon& hull) {
    Point2 c;
    for (const auto& p : hull.vertices) c = c + p;
    return (1.0 / static_cast<double>(hull.size())) * c;
}

Point2 area_centroid(const ConvexPolygon& hull) {
    const std::size_t h = hull.size();
    if (h < 3) return vertex_centroid(hull);
    const Point2 o = hull[0];
    double area = 0.0;
    Point2 acc;
    for (std::size_t i = 1; i + 1 < h; ++i) {
        const double a = cross(hull[i] - o, hull[i + 1] - o);
        area += a;
        acc = acc + a * (o + hull[i] + hull[i + 1]);
    }
    if (area <= 0.0) return vertex_centroid(hull);
    return (1.0 / (3.0 * area)) * acc;
}

double distance_to_segment(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return norm(p - a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return norm(p - (a + t * ab));
}

bool contains(const ConvexPolygon& poly, Point2 p, double tol) {
    const std::size_t h = poly.size();
    if (h == 0) return false;
    if (h == 1) return norm(p - poly[0]) <= tol;
    if (h == 2) return distance_to_segment(p, poly[0], poly[1]) <= tol;
    for (std::size_t i = 0; i < h; ++i) {
        const Point2 a = poly[i];
        const Point2 b = poly[(i + 1) % h];
        const double len = norm(b - a);
        if (cross(a, b, p) < -tol * len) return false;
    }
    return true;
}

double distance_to_polygon(const ConvexPolygon& poly, Point2 p) {
    if (contains(poly, p, 0.0)) return 0.0;
    const std::size_t h = poly.size();
    if (h == 1) return norm(p - poly[0]);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < h; ++i) best = std::min(best, distance_to_segment(p, poly[i], poly[(i + 1) % h]));
    return best;
}

std::vector<Point2> gather(std::span<const Point2> points, std::span<const std::size_t> indices) {
    std::vector<Point2> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(points[i]);
    return out;
}

}  // namespace kernel2d
