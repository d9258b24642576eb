#include "kernel2d/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "kernel2d/hausdorff.hpp"
#include "kernel2d/kernel.hpp"
#include "kernel2d/weak_kernel.hpp"

namespace kernel2d {

bool is_valid_subset(std::span<const Point2> points, std::span<const std::size_t> subset, double eps,
                     ValidityKind kind) {
    switch (kind) {
        case ValidityKind::Strong: return is_eps_kernel(points, subset, eps);
        case ValidityKind::Weak: return is_weak_eps_kernel(points, subset, eps);
        case ValidityKind::Hausdorff: return is_hausdorff_within(points, subset, eps);
    }
    return false;
}

namespace {

// calls fn on every k-subset of 0..n-1 in lexicographic order until it returns true
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (fn(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<std::size_t> brute_min_subset(std::span<const Point2> points, double eps, ValidityKind kind) {
    if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points");
    if (points.size() > 16) throw Error(ErrorKind::TooLarge, "brute force limited to 16 points");
    if (kind == ValidityKind::Hausdorff) {
        if (!(eps > 0.0)) throw Error(ErrorKind::InvalidEps, "eps must be positive");
    } else {
        require_relative_eps(eps);
    }
    std::vector<std::size_t> found;
    for (std::size_t k = 1; k <= points.size(); ++k) {
        const bool ok = for_each_subset(points.size(), k, [&](const std::vector<std::size_t>& s) {
            if (!is_valid_subset(points, s, eps, kind)) return false;
            found = s;
            return true;
        });
        if (ok) return found;
    }
    throw Error(ErrorKind::Internal, "the full set failed its own validity check");
}

bool arcs_cover_circle(std::span<const CircularArc> arcs) {
    if (arcs.empty()) return false;
    std::vector<double> ends;
    for (const auto& a : arcs) {
        ends.push_back(ccw_delta(0.0, a.start.theta()));
        ends.push_back(ccw_delta(0.0, a.end.theta()));
    }
    std::sort(ends.begin(), ends.end());
    // any gap is open, so it contains a midpoint between consecutive endpoints
    for (std::size_t i = 0; i < ends.size(); ++i) {
        const double a = ends[i];
        const double b = i + 1 < ends.size() ? ends[i + 1] : ends[0] + kTwoPi;
        if (b - a <= 0.0) continue;
        const double mid = 0.5 * (a + b);
        bool hit = false;
        for (const auto& arc : arcs) {
            if (ccw_delta(arc.start.theta(), mid) <= arc.length()) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

std::vector<std::size_t> brute_min_arc_cover(std::span<const CircularArc> arcs) {
    if (arcs.size() > 16) throw Error(ErrorKind::TooLarge, "brute force limited to 16 arcs");
    std::vector<std::size_t> found;
    std::vector<CircularArc> pick;
    for (std::size_t k = 1; k <= arcs.size(); ++k) {
        const bool ok = for_each_subset(arcs.size(), k, [&](const std::vector<std::size_t>& s) {
            pick.clear();
            for (auto i : s) pick.push_back(arcs[i]);
            if (!arcs_cover_circle(pick)) return false;
            found.clear();
            for (auto i : s) found.push_back(arcs[i].id);
            return true;
        });
        if (ok) return found;
    }
    throw Error(ErrorKind::NotCoverable, "arcs do not cover the circle");
}

namespace {

// chord of c*(x^2+1) between x1 and x2
SlopeLine chord(double c, double x1, double x2, SlopeLine::Family fam) {
    return {c * (x1 + x2), c * (1.0 - x1 * x2), fam};
}

double envelope_of(const std::vector<SlopeLine>& lines, double eps, double x) {
    double hi = -INFINITY, lo = INFINITY;
    for (const auto& l : lines) {
        hi = std::max(hi, l(x));
        lo = std::min(lo, l(x));
    }
    return 0.5 * eps * hi + (1.0 - 0.5 * eps) * lo;
}

}  // namespace

LowerBoundInstance lower_bound_instance(std::size_t n, double eps) {
    require_relative_eps(eps);
    if (n < 2) throw Error(ErrorKind::DegenerateInput, "lower-bound construction needs n >= 2");
    LowerBoundInstance inst;
    inst.n = n;
    inst.eps = eps;
    const double step = 1.0 / static_cast<double>(2 * n);
    const double cf = 2.0 / eps, cg = -1.0 / (1.0 - 0.5 * eps);
    for (std::size_t i = 0; i + 2 <= 2 * n; i += 2) {
        inst.lines.push_back(chord(cf, i * step, (i + 2) * step, SlopeLine::F));
    }
    for (std::size_t i = 1; i + 2 <= 2 * n - 1; i += 2) {
        inst.lines.push_back(chord(cg, i * step, (i + 2) * step, SlopeLine::G));
    }
    // horizontal replicas of the x-axis, all closer to it than the envelope is at the grid
    double gap = INFINITY;
    for (std::size_t i = 1; i < 2 * n; ++i) gap = std::min(gap, std::abs(envelope_of(inst.lines, eps, i * step)));
    const double delta = gap / static_cast<double>(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        const double c = (static_cast<double>(j) - 0.5 * static_cast<double>(n - 1)) * delta;
        inst.lines.push_back({0.0, c, SlopeLine::Axis});
    }
    return inst;
}

double lower_bound_envelope(const LowerBoundInstance& inst, double x) {
    return envelope_of(inst.lines, inst.eps, x);
}

std::size_t lower_bound_sign_changes(const LowerBoundInstance& inst) {
    const double step = 1.0 / static_cast<double>(2 * inst.n);
    std::size_t changes = 0;
    int prev = 0;
    for (std::size_t i = 1; i < 2 * inst.n; ++i) {
        const double v = lower_bound_envelope(inst, i * step);
        const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

std::size_t lower_bound_intersections(const LowerBoundInstance& inst) {
    const double lo = 1.0 / static_cast<double>(2 * inst.n), hi = 1.0 - lo;
    // the envelope is linear between consecutive pairwise crossings of the lines
    std::vector<double> xs{lo, hi};
    const auto& L = inst.lines;
    for (std::size_t a = 0; a < L.size(); ++a) {
        for (std::size_t b = a + 1; b < L.size(); ++b) {
            if (L[a].m == L[b].m) continue;
            const double x = (L[b].k - L[a].k) / (L[a].m - L[b].m);
            if (x > lo && x < hi) xs.push_back(x);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<double> env;
    env.reserve(xs.size());
    for (double x : xs) env.push_back(lower_bound_envelope(inst, x));

    std::size_t count = 0;
    for (const auto& l : L) {
        int prev = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double v = env[i] - l(xs[i]);
            const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
            if (s != 0) {
                if (prev != 0 && s != prev) ++count;
                prev = s;
            }
        }
    }
    return count;
}

std::vector<Point2> lower_bound_points(const LowerBoundInstance& inst) {
    std::vector<Point2> out;
    for (const auto& l : inst.lines) out.push_back({l.m, -l.k});
    return out;
}

GeneratorKind parse_generator_kind(const std::string& name) {
    if (name == "uniform-disk") return GeneratorKind::UniformDisk;
    if (name == "on-circle") return GeneratorKind::OnCircle;
    if (name == "convex-position") return GeneratorKind::ConvexPosition;
    if (name == "clustered") return GeneratorKind::Clustered;
    if (name == "collinear") return GeneratorKind::Collinear;
    if (name == "lower-bound") return GeneratorKind::LowerBound;
    throw Error(ErrorKind::Parse, "unknown generator kind '" + name + "'");
}

std::string to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::UniformDisk: return "uniform-disk";
        case GeneratorKind::OnCircle: return "on-circle";
        case GeneratorKind::ConvexPosition: return "convex-position";
        case GeneratorKind::Clustered: return "clustered";
        case GeneratorKind::Collinear: return "collinear";
        case GeneratorKind::LowerBound: return "lower-bound";
    }
    return "unknown";
}

std::vector<Point2> generate(const InstanceSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> turn(0.0, kTwoPi);
    std::vector<Point2> pts;
    pts.reserve(spec.n);
    switch (spec.kind) {
        case GeneratorKind::UniformDisk:
            for (std::size_t i = 0; i < spec.n; ++i) {
                const double r = std::sqrt(unit(rng)), a = turn(rng);
                pts.push_back({r * std::cos(a), r * std::sin(a)});
            }
            break;
        case GeneratorKind::OnCircle:
            for (std::size_t i = 0; i < spec.n; ++i) {
                const double a = turn(rng);
                pts.push_back({std::cos(a), std::sin(a)});
            }
            break;
        case GeneratorKind::ConvexPosition: {
            // rotated ellipse
            const double ry = 0.3 + 0.7 * unit(rng), rot = turn(rng);
            const double c = std::cos(rot), s = std::sin(rot);
            for (std::size_t i = 0; i < spec.n; ++i) {
                const double a = turn(rng);
                const double x = std::cos(a), y = ry * std::sin(a);
                pts.push_back({c * x - s * y, s * x + c * y});
            }
            break;
        }
        case GeneratorKind::Clustered: {
            const std::size_t k = std::clamp<std::size_t>(spec.n / 4, 1, 5);
            std::vector<Point2> centers;
            for (std::size_t i = 0; i < k; ++i) {
                const double r = std::sqrt(unit(rng)), a = turn(rng);
                centers.push_back({r * std::cos(a), r * std::sin(a)});
            }
            std::normal_distribution<double> jitter(0.0, 0.08);
            std::uniform_int_distribution<std::size_t> pick(0, k - 1);
            for (std::size_t i = 0; i < spec.n; ++i) {
                const Point2 c = centers[pick(rng)];
                pts.push_back({c.x + jitter(rng), c.y + jitter(rng)});
            }
            break;
        }
        case GeneratorKind::Collinear: {
            // dyadic parameters and slopes keep the points exactly collinear
            const double slopes[] = {0.0, 0.5, 2.0, -1.0, 1.0, -0.25};
            const double slope = slopes[rng() % 6];
            std::int64_t range = 1024;
            while (range < 4 * static_cast<std::int64_t>(spec.n)) range *= 2;
            std::uniform_int_distribution<std::int64_t> pick(-range, range);
            std::set<std::int64_t> used;
            while (used.size() < spec.n) {
                const std::int64_t k = pick(rng);
                if (!used.insert(k).second) continue;
                const double t = static_cast<double>(k) / static_cast<double>(range);
                pts.push_back({t, slope * t});
            }
            break;
        }
        case GeneratorKind::LowerBound:
            return lower_bound_points(lower_bound_instance(std::max<std::size_t>(spec.n, 2), spec.eps));
    }
    return pts;
}

}  // namespace kernel2d
