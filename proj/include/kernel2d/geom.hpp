#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "kernel2d/error.hpp"

namespace kernel2d {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double cross(Point2 o, Point2 a, Point2 b) { return cross(a - o, b - o); }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double angle_of(Point2 a) { return std::atan2(a.y, a.x); }

// Maps any real angle to [-pi, pi).
double normalize_angle(double theta);

// CCW angular distance from `from` to `to`, in [0, 2pi).
double ccw_delta(double from, double to);

// Unit direction on the circle, stored as an angle in [-pi, pi).
class DirectionAngle {
public:
    DirectionAngle() = default;
    explicit DirectionAngle(double theta) : theta_(normalize_angle(theta)) {}

    double theta() const { return theta_; }
    Point2 unit() const { return {std::cos(theta_), std::sin(theta_)}; }
    DirectionAngle opposite() const { return DirectionAngle(theta_ + kPi); }

    friend bool operator==(DirectionAngle a, DirectionAngle b) { return a.theta_ == b.theta_; }

private:
    double theta_ = 0.0;
};

struct ProjectionInterval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    // (1-eps)J: both ends pulled inward by (eps/2)|J|.
    ProjectionInterval shrunk(double eps) const {
        const double d = 0.5 * eps * width();
        return {lo + d, hi - d};
    }
};

// CCW convex polygon; `source[i]` is the index of vertices[i] in the point
// sequence the hull was built from.
struct ConvexPolygon {
    std::vector<Point2> vertices;
    std::vector<std::size_t> source;

    std::size_t size() const { return vertices.size(); }
    bool empty() const { return vertices.empty(); }
    const Point2& operator[](std::size_t i) const { return vertices[i]; }
};

struct DiagramInterval {
    double start = 0.0;  // CCW from start to end
    double end = 0.0;
    std::size_t support = 0;    // vertex id extremal in u(theta)
    std::size_t antipodal = 0;  // vertex id extremal in -u(theta)

    double length() const;
    double midpoint() const;
};

// Refined normal diagram: arcs partition the circle, each with a fixed
// antipodal vertex pair. Intervals are in CCW order.
struct NormalDiagram {
    std::vector<DiagramInterval> intervals;

    // Index of the interval whose half-open range [start, end) holds theta.
    std::size_t locate(double theta) const;
};

struct Halfplane {
    enum class Side { Inner, Outer };
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    Side side = Side::Inner;  // Inner: ax+by <= c, Outer: ax+by >= c

    bool contains(Point2 p, double tol = 0.0) const;
};

ConvexPolygon convex_hull(std::span<const Point2> points);
NormalDiagram refined_normal_diagram(const ConvexPolygon& hull);
ProjectionInterval projection_interval(const ConvexPolygon& hull, DirectionAngle dir);
ProjectionInterval projection_interval(std::span<const Point2> points, Point2 u);
std::size_t extremal_vertex(const ConvexPolygon& hull, DirectionAngle dir);
Halfplane shifted_supporting_line(const ConvexPolygon& hull, DirectionAngle dir, double eps);

// Helpers shared by the algorithm modules.
double bbox_diameter(std::span<const Point2> points);
double diameter(const ConvexPolygon& hull);
double signed_area(std::span<const Point2> ring);
Point2 area_centroid(const ConvexPolygon& hull);
Point2 vertex_centroid(const ConvexPolygon& hull);
bool contains(const ConvexPolygon& poly, Point2 p, double tol);
double distance_to_segment(Point2 p, Point2 a, Point2 b);
double distance_to_polygon(const ConvexPolygon& poly, Point2 p);
std::vector<Point2> gather(std::span<const Point2> points, std::span<const std::size_t> indices);

// Tolerance used for orientation and containment tests on a point set.
inline double tolerance_for(double scale) { return 1e-9 * (scale > 0.0 ? scale : 1.0); }

}  // namespace kernel2d
