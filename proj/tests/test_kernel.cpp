#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kernel2d/core.hpp"
#include "kernel2d/kernel.hpp"
#include "test_main.hpp"

using namespace kernel2d;

namespace {

// independent check: argmax sets only change at directions perpendicular to a
// pair of points, so those directions and the midpoints between them suffice
bool oracle_is_kernel(const std::vector<Point2>& pts, const std::vector<std::size_t>& sub, double eps) {
    std::vector<double> dirs;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Point2 d = pts[j] - pts[i];
            if (d.x == 0 && d.y == 0) continue;
            dirs.push_back(normalize_angle(angle_of(d) + kPi / 2));
            dirs.push_back(normalize_angle(angle_of(d) - kPi / 2));
        }
    }
    if (dirs.empty()) return !sub.empty();
    std::sort(dirs.begin(), dirs.end());
    const std::size_t k = dirs.size();
    for (std::size_t i = 0; i < k; ++i) dirs.push_back(0.5 * (dirs[i] + (i + 1 < k ? dirs[i + 1] : dirs[0] + kTwoPi)));
    double diam = 0.0;
    for (auto& a : pts) {
        for (auto& b : pts) diam = std::max(diam, norm(a - b));
    }
    for (double t : dirs) {
        const Point2 u{std::cos(t), std::sin(t)};
        double lo = 1e300, hi = -1e300, clo = 1e300, chi = -1e300;
        for (auto& p : pts) {
            lo = std::min(lo, dot(u, p));
            hi = std::max(hi, dot(u, p));
        }
        for (auto i : sub) {
            clo = std::min(clo, dot(u, pts[i]));
            chi = std::max(chi, dot(u, pts[i]));
        }
        const double s = 0.5 * eps * (hi - lo);
        if (chi < hi - s - 1e-9 * diam || clo > lo + s + 1e-9 * diam) return false;
    }
    return true;
}

std::vector<Point2> random_instance(std::mt19937_64& rng, int kind, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = kTwoPi * u(rng);
        if (kind == 0) {
            const double r = std::sqrt(u(rng));
            pts.push_back({r * std::cos(a), r * std::sin(a)});
        } else if (kind == 1) {
            pts.push_back({std::cos(a), std::sin(a)});
        } else if (kind == 2) {
            pts.push_back({2.0 * std::cos(a), 0.7 * std::sin(a)});
        } else {
            const double cx = (i % 3) * 1.5, cy = (i % 2) * 0.8;
            pts.push_back({cx + 0.2 * u(rng), cy + 0.2 * u(rng)});
        }
    }
    return pts;
}

std::size_t threshold_size(const std::vector<Point2>& pts, double eps) {
    const auto hull = convex_hull(pts);
    const auto diag = refined_normal_diagram(hull);
    std::vector<std::size_t> ids(pts.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    const ThresholdTarget target(hull, diag, eps, pts, ids);
    return optimal_blocking_positions(target).size();
}

}  // namespace

TEST_CASE("polarity") {
    const auto l = polar_point_to_line({2, 0});
    CHECK(l.a == doctest::Approx(1.0));
    CHECK(l.c == doctest::Approx(0.5));
    const auto p = polar_line_to_point(make_line(1, 0, 2, 0));
    CHECK(p.x == doctest::Approx(0.5));
    CHECK(p.y == doctest::Approx(0.0));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-5, 5);
    for (int i = 0; i < 1000; ++i) {
        const Point2 q{d(rng), d(rng)};
        const Point2 back = polar_line_to_point(polar_point_to_line(q));
        CHECK(norm(back - q) <= 1e-12 * std::max(1.0, norm(q)));
        const auto line = polar_point_to_line(q);
        const Point2 closest = line.c * line.normal();
        CHECK(norm(closest - (1.0 / dot(q, q)) * q) <= 1e-12);
    }
    CHECK_THROWS_AS(polar_point_to_line({0, 0}), Error);
}

TEST_CASE("shifted star of a centered square") {
    std::vector<Point2> sq{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    const auto hull = convex_hull(sq);
    const auto star = build_shifted_star(hull, refined_normal_diagram(hull), 0.2);
    const RayShooter shooter(star);
    // shifted line x = 1 - 0.1*2 = 0.8
    CHECK(norm(shooter.radial_point(0.0) - Point2{1.25, 0}) <= 1e-12);
    CHECK(norm(shooter.radial_point(kPi / 2) - Point2{0, 1.25}) <= 1e-12);
}

TEST_CASE("shifted star strictly contains the polar body") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> th(-kPi, kPi);
    for (int trial = 0; trial < 30; ++trial) {
        auto pts = random_instance(rng, trial % 3, 30);
        const auto core = compute_core(pts, 0.3);
        const Point2 o = area_centroid(core);
        for (auto& p : pts) p = p - o;
        const auto hull = convex_hull(pts);
        // cores shrink as eps grows, so the origin stays inside for eps <= 0.3
        for (double eps : {0.3, 0.01}) {
            const RayShooter shooter(build_shifted_star(hull, refined_normal_diagram(hull), eps));
            for (int s = 0; s < 200; ++s) {
                const double t = th(rng);
                const Point2 u{std::cos(t), std::sin(t)};
                double h = -1e300;
                for (auto& p : pts) h = std::max(h, dot(p, u));
                CHECK(norm(shooter.radial_point(t)) > 1.0 / h);
            }
        }
    }
}

TEST_CASE("square, collinear and single point kernels") {
    const auto sq = testutil::unit_square();
    const auto k = optimal_kernel(sq, 0.1);
    CHECK(k.size() == 4);
    std::vector<std::size_t> three{0, 1, 2};
    CHECK_FALSE(is_eps_kernel(sq, three, 0.1));
    std::vector<std::size_t> all{0, 1, 2, 3};
    CHECK(is_eps_kernel(sq, all, 0.1));
    CHECK(is_eps_kernel(sq, all, 0.9));

    std::vector<Point2> line{{0, 0}, {1, 0}, {2, 0}};
    CHECK(optimal_kernel(line, 0.3) == std::vector<std::size_t>{0, 2});
    std::vector<Point2> one{{3, 3}, {3, 3}};
    CHECK(optimal_kernel(one, 0.3) == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(optimal_kernel(sq, 0.0), Error);
    CHECK_THROWS_AS(optimal_kernel(sq, 1.5), Error);
}

TEST_CASE("validity predicate agrees with the pairwise oracle") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto pts = random_instance(rng, trial % 4, 8);
        std::vector<std::size_t> sub;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (coin(rng)) sub.push_back(i);
        }
        if (sub.empty()) sub.push_back(0);
        for (double eps : {0.05, 0.2, 0.5}) CHECK(is_eps_kernel(pts, sub, eps) == oracle_is_kernel(pts, sub, eps));
    }
}

TEST_CASE("optimal kernel matches exhaustive search") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> nn(5, 11);
    for (int trial = 0; trial < 80; ++trial) {
        const auto pts = random_instance(rng, trial % 4, nn(rng));
        for (double eps : {0.05, 0.1, 0.2, 0.5, 0.8}) {
            const auto k = optimal_kernel(pts, eps);
            CHECK(oracle_is_kernel(pts, k, eps));
            const auto best = testutil::brute_min(pts.size(), [&](const std::vector<std::size_t>& s) {
                return is_eps_kernel(pts, s, eps);
            });
            CHECK(k.size() == best.size());
            CHECK(threshold_size(pts, eps) == best.size());
        }
    }
}

TEST_CASE("circle points respect the size bound") {
    std::vector<Point2> circle = testutil::regular_polygon(64);
    const auto k = optimal_kernel(circle, 0.05);
    CHECK(is_eps_kernel(circle, k, 0.05));
    CHECK(static_cast<double>(k.size()) <= std::ceil(8.0 / std::sqrt(0.05)));

    std::vector<Point2> sub(circle.begin(), circle.begin() + 10);
    for (std::size_t i = 0; i < 10; ++i) sub[i] = circle[i * 6];
    const auto ks = optimal_kernel(sub, 0.05);
    const auto best = testutil::brute_min(sub.size(), [&](const std::vector<std::size_t>& s) {
        return is_eps_kernel(sub, s, 0.05);
    });
    CHECK(ks.size() == best.size());
}

TEST_CASE("affine invariance and monotonicity") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto pts = random_instance(rng, trial % 4, 25);
        double m[6];
        testutil::random_affine(rng, m);
        std::vector<Point2> moved;
        for (auto& p : pts) moved.push_back(testutil::apply_affine(m, p));
        std::size_t prev = pts.size() + 1;
        for (double eps : {0.02, 0.1, 0.3, 0.6}) {
            const auto k = optimal_kernel(pts, eps);
            CHECK(is_eps_kernel(moved, k, eps));
            CHECK(optimal_kernel(moved, eps).size() == k.size());
            CHECK(k.size() <= prev);
            prev = k.size();
        }
    }
}

TEST_CASE("fast kernel stays within the quarter-eps optimum") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const auto pts = random_instance(rng, trial % 4, 9 + trial % 4);
        for (double eps : {0.2, 0.4}) {
            const auto k = fast_kernel(pts, eps);
            CHECK(is_eps_kernel(pts, k, eps));
            const auto best = testutil::brute_min(pts.size(), [&](const std::vector<std::size_t>& s) {
                return is_eps_kernel(pts, s, eps / 4);
            });
            CHECK(k.size() <= best.size());
        }
    }
    const auto sq = testutil::unit_square();
    const auto k = fast_kernel(sq, 0.4);
    CHECK(k.size() == 4);
    std::vector<Point2> line{{0, 0}, {1, 0}, {2, 0}};
    auto kl = fast_kernel(line, 0.3);
    std::sort(kl.begin(), kl.end());
    CHECK(kl == std::vector<std::size_t>{0, 2});
}
