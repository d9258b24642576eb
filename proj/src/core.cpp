#include "kernel2d/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace kernel2d {

namespace {

struct Hp {
    Point2 u;
    double g;
    double angle;
};

bool meet(const Hp& a, const Hp& b, Point2& out) {
    const double det = cross(a.u, b.u);
    if (std::abs(det) < 1e-15) return false;
    out = {(a.g * b.u.y - b.g * a.u.y) / det, (a.u.x * b.g - b.u.x * a.g) / det};
    return true;
}

bool outside(const Hp& h, Point2 p, double tol) { return dot(h.u, p) > h.g + tol; }

ConvexPolygon drop_close_vertices(const std::vector<Point2>& pts, double tol) {
    ConvexPolygon poly;
    for (const auto& p : pts) {
        if (!poly.vertices.empty() && norm(p - poly.vertices.back()) <= tol) continue;
        poly.vertices.push_back(p);
    }
    while (poly.vertices.size() > 1 && norm(poly.vertices.back() - poly.vertices.front()) <= tol) {
        poly.vertices.pop_back();
    }
    return poly;
}

bool strictly_convex_ccw(const ConvexPolygon& poly) {
    const std::size_t k = poly.size();
    if (k < 3) return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (!(cross(poly[i], poly[(i + 1) % k], poly[(i + 2) % k]) > 0.0)) return false;
    }
    return true;
}

}  // namespace

ConvexPolygon intersect_halfplanes(std::span<const Point2> normals, std::span<const double> offsets) {
    std::vector<Hp> hs;
    double scale = 0.0;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        const double n = norm(normals[i]);
        if (!(n > 0.0)) continue;
        const Point2 u = (1.0 / n) * normals[i];
        hs.push_back({u, offsets[i] / n, angle_of(u)});
        scale = std::max(scale, std::abs(offsets[i] / n));
    }
    const double tol = 1e-12 * std::max(scale, 1e-300);
    std::sort(hs.begin(), hs.end(), [](const Hp& a, const Hp& b) {
        if (a.angle != b.angle) return a.angle < b.angle;
        return a.g < b.g;
    });
    // keep the tighter of parallel same-side constraints
    std::vector<Hp> uniq;
    for (const auto& h : hs) {
        if (!uniq.empty() && std::abs(h.angle - uniq.back().angle) < 1e-14) continue;
        uniq.push_back(h);
    }
    if (uniq.size() < 3) return {};

    std::deque<Hp> dq;
    auto back_point = [&](Point2& p) { return meet(dq[dq.size() - 2], dq[dq.size() - 1], p); };
    auto front_point = [&](Point2& p) { return meet(dq[0], dq[1], p); };
    for (const auto& h : uniq) {
        Point2 p;
        while (dq.size() >= 2 && (!back_point(p) || outside(h, p, tol))) dq.pop_back();
        while (dq.size() >= 2 && (!front_point(p) || outside(h, p, tol))) dq.pop_front();
        dq.push_back(h);
    }
    Point2 p;
    while (dq.size() >= 3 && (!back_point(p) || outside(dq.front(), p, tol))) dq.pop_back();
    while (dq.size() >= 3 && (!front_point(p) || outside(dq.back(), p, tol))) dq.pop_front();
    if (dq.size() < 3) return {};

    std::vector<Point2> verts;
    for (std::size_t i = 0; i < dq.size(); ++i) {
        Point2 q;
        if (!meet(dq[i], dq[(i + 1) % dq.size()], q)) return {};
        verts.push_back(q);
    }
    ConvexPolygon poly = drop_close_vertices(verts, 1e-12 * std::max(scale, 1.0));
    if (poly.size() >= 3 && signed_area(poly.vertices) <= 0.0) return {};
    // reject garbage from an infeasible system; full check for moderate sizes
    if (uniq.size() * poly.size() <= 20'000'000) {
        for (const auto& h : uniq) {
            for (const auto& v : poly.vertices) {
                if (outside(h, v, 1e-9 * std::max(scale, 1.0))) return {};
            }
        }
    }
    return poly;
}

bool strictly_inside(const ConvexPolygon& poly, Point2 p, double tol) {
    const std::size_t k = poly.size();
    if (k < 3) return false;
    auto inside_edge = [&](std::size_t i, std::size_t j) {
        const Point2 e = poly[j] - poly[i];
        return cross(e, p - poly[i]) > tol * norm(e);
    };
    if (!inside_edge(0, 1) || !inside_edge(k - 1, 0)) return false;
    // wedge at vertex 0 holding p
    std::size_t lo = 1;
    std::size_t hi = k - 1;
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (cross(poly[mid] - poly[0], p - poly[0]) >= 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return inside_edge(lo, lo + 1);
}

ConvexPolygon compute_core(std::span<const Point2> points, double eps) {
    require_relative_eps(eps);
    const ConvexPolygon hull = convex_hull(points);
    if (hull.size() == 1) return {{hull[0]}, {}};
    if (hull.size() == 2) {
        const Point2 m = 0.5 * (hull[0] + hull[1]);
        return {{m + (1.0 - eps) * (hull[0] - m), m + (1.0 - eps) * (hull[1] - m)}, {}};
    }
    const NormalDiagram diagram = refined_normal_diagram(hull);
    std::vector<Point2> normals;
    std::vector<double> offsets;
    for (const auto& iv : diagram.intervals) {
        const DirectionAngle dir(iv.start);
        const ProjectionInterval J = projection_interval(hull, dir);
        normals.push_back(dir.unit());
        offsets.push_back(J.hi - 0.5 * eps * J.width());
    }
    ConvexPolygon core = intersect_halfplanes(normals, offsets);
    if (strictly_convex_ccw(core)) return core;

    // empty or degenerate: shrink eps until the slabs meet; at the critical
    // value the region collapses to the deepest point
    std::vector<double> his, widths;
    for (const auto& iv : diagram.intervals) {
        const ProjectionInterval J = projection_interval(hull, DirectionAngle(iv.start));
        his.push_back(J.hi);
        widths.push_back(J.width());
    }
    std::vector<double> relaxed(offsets.size());
    auto region_at = [&](double e) {
        for (std::size_t i = 0; i < offsets.size(); ++i) relaxed[i] = his[i] - 0.5 * e * widths[i];
        return intersect_halfplanes(normals, relaxed);
    };
    ConvexPolygon region = core;
    if (region.empty()) {
        double lo = 0.0;
        double hi = eps;
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (region_at(mid).empty()) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        region = region_at(lo);
        if (region.empty()) throw Error(ErrorKind::Internal, "core relaxation failed");
    }
    if (region.size() == 2) return region;
    return {{vertex_centroid(region)}, {}};
}

AngularInterval angular_interval(Point2 p, const ConvexPolygon& inner, std::size_t index) {
    if (inner.empty()) throw Error(ErrorKind::EmptyInput, "empty inner polygon");
    double base = 0.0;
    bool have_base = false;
    double lo = 0.0;
    double hi = 0.0;
    for (const auto& q : inner.vertices) {
        if (q == p) continue;
        const double phi = angle_of(p - q);
        if (!have_base) {
            base = phi;
            have_base = true;
        }
        const double d = normalize_angle(phi - base);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    if (!have_base) {
        throw Error(ErrorKind::PointInsideInner, "point coincides with the inner polygon");
    }
    const double span = hi - lo;
    if (span > kPi + 1e-12) throw Error(ErrorKind::PointInsideInner, "point lies inside the inner polygon");
    const double len = std::max(0.0, kPi - span);
    return {CircularArc::from_length(base + hi - 0.5 * kPi, len, index), index};
}

std::vector<std::size_t> min_containing_subset(std::span<const Point2> points, const ConvexPolygon& inner) {
    if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points");
    if (inner.empty()) throw Error(ErrorKind::EmptyInput, "empty inner polygon");
    const ConvexPolygon hull = convex_hull(points);
    const double scale = std::max(bbox_diameter(points), 1e-300);
    const double tol = tolerance_for(scale);
    for (const auto& v : inner.vertices) {
        if (!contains(hull, v, tol)) throw Error(ErrorKind::NotContained, "inner polygon leaves the hull");
    }
    if (hull.size() == 1) return {hull.source[0]};

    std::vector<CircularArc> arcs;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (inner.size() >= 3 && strictly_inside(inner, points[i], 0.0)) continue;
        AngularInterval ai;
        try {
            ai = angular_interval(points[i], inner, i);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::PointInsideInner) continue;
            throw;
        }
        if (ai.arc.length() < 1e-13) continue;
        arcs.push_back(ai.arc);
    }
    if (arcs.empty()) throw Error(ErrorKind::NotContained, "no point sees the inner polygon");
    try {
        return min_arc_cover(arcs, ArcLengthPolicy::BelowFullCircle);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotCoverable) throw Error(ErrorKind::NotContained, "angular intervals leave a gap");
        throw;
    }
}

std::vector<std::size_t> fast_kernel(std::span<const Point2> points, double eps) {
    require_relative_eps(eps);
    const ConvexPolygon hull = convex_hull(points);
    if (hull.size() <= 2) return hull.source;
    const ConvexPolygon core = compute_core(points, 0.25 * eps);
    return min_containing_subset(points, core);
}

}  // namespace kernel2d
