#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kernel2d/geom.hpp"
#include "test_main.hpp"

using namespace kernel2d;

namespace {

// linear scan argmax, ties to the CCW-later vertex
std::size_t scan_argmax(const ConvexPolygon& hull, double theta) {
    const Point2 u{std::cos(theta), std::sin(theta)};
    std::size_t best = 0;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        if (dot(u, hull[i]) > dot(u, hull[best])) best = i;
    }
    return best;
}

}  // namespace

TEST_CASE("hull drops interior and collinear points") {
    std::vector<Point2> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}};
    const auto hull = convex_hull(pts);
    CHECK(hull.size() == 4);
    CHECK(signed_area(hull.vertices) == doctest::Approx(1.0));

    std::vector<Point2> line{{0, 0}, {1, 1}, {2, 2}};
    const auto seg = convex_hull(line);
    REQUIRE(seg.size() == 2);
    CHECK(seg[0] == Point2{0, 0});
    CHECK(seg[1] == Point2{2, 2});

    std::vector<Point2> dup{{1, 1}, {1, 1}, {1, 1}};
    CHECK(convex_hull(dup).size() == 1);
    CHECK(convex_hull(dup).source[0] == 0);

    std::vector<Point2> none;
    CHECK_THROWS_AS(convex_hull(none), Error);
}

TEST_CASE("hull of random disk contains every point") {
    const auto pts = testutil::random_disk(1000, 7);
    const auto hull = convex_hull(pts);
    const double tol = tolerance_for(bbox_diameter(pts));
    for (std::size_t i = 0; i < hull.size(); ++i) CHECK(hull[i] == pts[hull.source[i]]);
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point2 a = hull[i];
        const Point2 b = hull[(i + 1) % hull.size()];
        CHECK(cross(a, b, hull[(i + 2) % hull.size()]) > 0.0);
        for (const auto& p : pts) CHECK(cross(a, b, p) >= -tol);
    }
}

TEST_CASE("normal diagram of square, segment and heptagon") {
    const auto sq = convex_hull(testutil::unit_square());
    // normals and their antipodes coincide for the square
    CHECK(refined_normal_diagram(sq).intervals.size() == 4);

    std::vector<Point2> segpts{{0, 0}, {2, 2}};
    const auto seg = refined_normal_diagram(convex_hull(segpts));
    REQUIRE(seg.intervals.size() == 2);
    CHECK(seg.intervals[0].support == seg.intervals[1].antipodal);
    CHECK(seg.intervals[0].antipodal == seg.intervals[1].support);
    CHECK(seg.intervals[0].length() == doctest::Approx(kPi));

    const auto hept = convex_hull(testutil::regular_polygon(7));
    const auto diag = refined_normal_diagram(hept);
    CHECK(diag.intervals.size() == 14);
    double total = 0.0;
    for (const auto& iv : diag.intervals) total += iv.length();
    CHECK(total == doctest::Approx(kTwoPi).epsilon(1e-12));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> th(-kPi, kPi);
    for (int s = 0; s < 10000; ++s) {
        const double t = th(rng);
        const auto& iv = diag.intervals[diag.locate(t)];
        // skip samples within rounding of an interval endpoint
        if (ccw_delta(iv.start, t) < 1e-9 || ccw_delta(t, iv.end) < 1e-9) continue;
        CHECK(iv.support == scan_argmax(hept, t));
        CHECK(iv.antipodal == scan_argmax(hept, t + kPi));
    }
    for (const auto& iv : diag.intervals) {
        const auto& opp = diag.intervals[diag.locate(iv.midpoint() + kPi)];
        CHECK(opp.support == iv.antipodal);
        CHECK(opp.antipodal == iv.support);
        CHECK(extremal_vertex(hept, DirectionAngle(iv.midpoint())) == iv.support);
    }

    std::vector<Point2> one{{1, 2}};
    CHECK_THROWS_AS(refined_normal_diagram(convex_hull(one)), Error);
}

TEST_CASE("projection intervals and extremal vertices") {
    const auto sq = convex_hull(testutil::unit_square());
    auto J = projection_interval(sq, DirectionAngle(0.0));
    CHECK(J.lo == doctest::Approx(0.0));
    CHECK(J.width() == doctest::Approx(1.0));
    J = projection_interval(sq, DirectionAngle(kPi / 4));
    CHECK(J.width() == doctest::Approx(std::sqrt(2.0)));

    CHECK(sq[extremal_vertex(sq, DirectionAngle(kPi / 4))] == Point2{1, 1});
    CHECK(sq[extremal_vertex(sq, DirectionAngle(0.0))] == Point2{1, 1});

    const auto pts = testutil::random_disk(200, 11);
    const auto hull = convex_hull(pts);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> th(-kPi, kPi);
    for (int s = 0; s < 1000; ++s) {
        const double t = th(rng);
        const std::size_t v = extremal_vertex(hull, DirectionAngle(t));
        const Point2 u = DirectionAngle(t).unit();
        CHECK(dot(u, hull[v]) == doctest::Approx(dot(u, hull[scan_argmax(hull, t)])).epsilon(1e-14));
        const double w0 = projection_interval(hull, DirectionAngle(t)).width();
        const double w1 = projection_interval(hull, DirectionAngle(t + kPi)).width();
        CHECK(std::abs(w0 - w1) <= 1e-12);
    }
}

TEST_CASE("shifted supporting lines pass through the shifted antipodal combination") {
    const auto sq = convex_hull(testutil::unit_square());
    auto hp = shifted_supporting_line(sq, DirectionAngle(0.0), 0.2);
    CHECK(hp.a == doctest::Approx(1.0));
    CHECK(hp.c == doctest::Approx(0.9));
    hp = shifted_supporting_line(sq, DirectionAngle(kPi / 2), 0.2);
    CHECK(hp.b == doctest::Approx(1.0));
    CHECK(hp.c == doctest::Approx(0.9));

    const auto nine = convex_hull(testutil::regular_polygon(9, 2.0, 0.1));
    const auto diag = refined_normal_diagram(nine);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> th(-kPi, kPi), ee(0.01, 0.99);
    for (int s = 0; s < 100; ++s) {
        const double t = th(rng);
        const double eps = ee(rng);
        const auto& iv = diag.intervals[diag.locate(t)];
        const Point2 s_pt = (1.0 - eps / 2) * nine[iv.support] + (eps / 2) * nine[iv.antipodal];
        const auto line = shifted_supporting_line(nine, DirectionAngle(t), eps);
        CHECK(std::abs(line.a * s_pt.x + line.b * s_pt.y - line.c) <= 1e-12);
    }
}

TEST_CASE("eps validation and angles") {
    CHECK_THROWS_AS(require_relative_eps(0.0), Error);
    CHECK_THROWS_AS(require_relative_eps(1.0), Error);
    CHECK_NOTHROW(require_relative_eps(0.5));
    CHECK(DirectionAngle(kPi).theta() == doctest::Approx(-kPi));
    CHECK(DirectionAngle(3 * kPi).theta() < kPi);
    CHECK(ccw_delta(1.0, 1.0) == 0.0);
}
