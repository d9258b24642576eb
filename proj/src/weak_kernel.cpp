#include "kernel2d/weak_kernel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "kernel2d/star_blocking.hpp"

namespace kernel2d {

namespace {

constexpr double kGapMerge = 1e-9;
constexpr double kReachTol = 1e-12;

std::vector<std::size_t> distinct_points(std::span<const Point2> points) {
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
    std::sort(order.begin(), order.end());
    return order;
}

// pair (i,j) keeps direction phi when |<p_i - p_j, u>| >= (1-eps) w(u); on a
// diagram piece w(u) = <s - a, u>, so this is a union of two half-circles
class PairTarget : public PiecewiseTarget {
public:
    PairTarget(const WidthFunction& wf, double eps, std::vector<std::pair<std::size_t, std::size_t>> pairs)
        : wf_(wf), keep_(1.0 - eps), pairs_(std::move(pairs)) {
        const double base = wf.diagram.intervals.front().start;
        std::vector<double> offs;
        for (const auto& iv : wf.diagram.intervals) {
            offs.push_back(ccw_delta(base, iv.start));
            starts_.push_back(iv.start);
            widths_.push_back(wf.hull[iv.support] - wf.hull[iv.antipodal]);
        }
        slack_ = 1e-12 * std::max(diameter(wf.hull), 1e-300);
        set_pieces(base, std::move(offs));
    }

    std::size_t candidate_count() const override { return pairs_.size(); }
    std::size_t candidate_id(std::size_t k) const override { return k; }
    std::vector<double> crossing_directions(std::size_t, std::size_t) const override { return {}; }

protected:
    void blocked_in_piece(std::size_t k, std::size_t piece, std::vector<Span>& out) const override {
        const Point2 d = wf_.points[pairs_[k].first] - wf_.points[pairs_[k].second];
        const double len = piece_length(piece);
        const std::size_t before = out.size();
        for (double s : {1.0, -1.0}) {
            const Point2 v = s * d - keep_ * widths_[piece];
            const double r = norm(v);
            if (r <= slack_) {
                out.emplace_back(0.0, len);
                continue;
            }
            const double beta = std::acos(std::clamp(-slack_ / r, -1.0, 1.0));
            clip_arc_to_piece(angle_of(v) - beta, 2.0 * beta, starts_[piece], len, out);
        }
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(before), out.end());
    }

private:
    const WidthFunction& wf_;
    double keep_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<double> starts_;
    std::vector<Point2> widths_;
    double slack_;
};

struct ThetaSpan {
    double lo;
    double hi;
};

// union of arcs on the theta circle; returns full=true or merged spans
std::vector<ThetaSpan> circular_union(std::vector<ThetaSpan> spans, bool& full) {
    full = false;
    for (auto& s : spans) {
        const double len = s.hi - s.lo;
        s.lo = ccw_delta(0.0, s.lo);
        s.hi = s.lo + len;
        if (len >= kTwoPi - kGapMerge) full = true;
    }
    if (full || spans.empty()) return {};
    std::sort(spans.begin(), spans.end(), [](const ThetaSpan& a, const ThetaSpan& b) { return a.lo < b.lo; });
    std::vector<ThetaSpan> merged;
    for (const auto& s : spans) {
        if (!merged.empty() && s.lo <= merged.back().hi + kGapMerge) {
            merged.back().hi = std::max(merged.back().hi, s.hi);
        } else {
            merged.push_back(s);
        }
    }
    // wrap: spans running past 2pi may swallow the first ones
    while (merged.size() > 1 && merged.back().hi + kGapMerge >= merged.front().lo + kTwoPi) {
        merged.back().hi = std::max(merged.back().hi, merged.front().hi + kTwoPi);
        merged.erase(merged.begin());
    }
    for (const auto& s : merged) {
        if (s.hi - s.lo >= kTwoPi - kGapMerge) full = true;
    }
    if (merged.size() == 1 && merged[0].hi - merged[0].lo >= kTwoPi - kGapMerge) full = true;
    return merged;
}

std::optional<LabeledArc> pair_interval(const PairTarget& target, std::size_t k, std::size_t i, std::size_t j) {
    const BlockedArcs segs = target.segments(k);
    LabeledArc out;
    out.i = std::min(i, j);
    out.j = std::max(i, j);
    if (segs.full) {
        out.full = true;
        return out;
    }
    std::vector<ThetaSpan> spans;
    for (const auto& a : segs.arcs) {
        const double s = 2.0 * a.start.theta();
        spans.push_back({s, s + 2.0 * a.length()});
    }
    bool full = false;
    const auto merged = circular_union(std::move(spans), full);
    if (full) {
        out.full = true;
        return out;
    }
    if (merged.empty()) return std::nullopt;
    if (merged.size() > 1) throw Error(ErrorKind::Internal, "pair interval is not a single arc");
    const double len = merged[0].hi - merged[0].lo;
    if (len < 1e-14) return std::nullopt;
    out.arc = CircularArc::from_length(merged[0].lo, len, 0);
    return out;
}

}  // namespace

double WidthFunction::operator()(double theta) const {
    return projection_interval(hull, DirectionAngle(0.5 * theta)).width();
}

WidthFunction width_function(std::span<const Point2> points) {
    WidthFunction wf;
    wf.points.assign(points.begin(), points.end());
    wf.hull = convex_hull(points);
    if (wf.hull.size() < 2) throw Error(ErrorKind::DegenerateInput, "width function needs two distinct points");
    wf.diagram = refined_normal_diagram(wf.hull);
    std::vector<double> cuts;
    for (const auto& iv : wf.diagram.intervals) cuts.push_back(ccw_delta(0.0, 2.0 * iv.start));
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> uniq;
    for (double c : cuts) {
        if (uniq.empty() || c - uniq.back() > 1e-12) uniq.push_back(c);
    }
    if (uniq.size() > 1 && kTwoPi - uniq.back() + uniq.front() <= 1e-12) uniq.pop_back();
    for (std::size_t k = 0; k < uniq.size(); ++k) {
        const double next = k + 1 < uniq.size() ? uniq[k + 1] : uniq[0] + kTwoPi;
        const double mid = normalize_angle(0.5 * (uniq[k] + next));
        const auto& iv = wf.diagram.intervals[wf.diagram.locate(0.5 * mid)];
        wf.pieces.push_back({normalize_angle(uniq[k]), wf.hull.source[iv.support], wf.hull.source[iv.antipodal]});
    }
    return wf;
}

std::optional<LabeledArc> interval_Iij(const WidthFunction& wf, std::size_t i, std::size_t j, double eps) {
    require_relative_eps(eps);
    if (i >= wf.points.size() || j >= wf.points.size() || wf.points[i] == wf.points[j]) return std::nullopt;
    const PairTarget target(wf, eps, {{i, j}});
    return pair_interval(target, 0, i, j);
}

std::vector<LabeledArc> all_intervals(const WidthFunction& wf, double eps) {
    require_relative_eps(eps);
    const auto ids = distinct_points(wf.points);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < ids.size(); ++a) {
        for (std::size_t b = a + 1; b < ids.size(); ++b) pairs.emplace_back(ids[a], ids[b]);
    }
    const PairTarget target(wf, eps, pairs);
    std::vector<LabeledArc> out;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto arc = pair_interval(target, k, pairs[k].first, pairs[k].second);
        if (arc) out.push_back(*arc);
    }
    return out;
}

std::vector<std::size_t> weak_kernel_2approx(std::span<const Point2> points, double eps) {
    require_relative_eps(eps);
    if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points");
    const auto ids = distinct_points(points);
    if (ids.size() == 1) return {ids[0]};
    const WidthFunction wf = width_function(points);
    const auto labeled = all_intervals(wf, eps);
    std::vector<CircularArc> arcs;
    for (std::size_t k = 0; k < labeled.size(); ++k) {
        if (labeled[k].full) return {labeled[k].i, labeled[k].j};
        arcs.push_back(CircularArc::from_length(labeled[k].arc.start.theta(), labeled[k].arc.length(), k));
    }
    std::vector<std::size_t> out;
    for (auto id : min_arc_cover(arcs, ArcLengthPolicy::BelowFullCircle)) {
        out.push_back(labeled[id].i);
        out.push_back(labeled[id].j);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> weak_kernel_exact(std::span<const Point2> points, double eps) {
    require_relative_eps(eps);
    if (points.empty()) throw Error(ErrorKind::EmptyInput, "no points");
    const auto ids = distinct_points(points);
    if (ids.size() == 1) return {ids[0]};
    const WidthFunction wf = width_function(points);
    const auto labeled = all_intervals(wf, eps);

    // labels are positions in ids
    const std::size_t m = ids.size();
    std::vector<std::size_t> pos(points.size(), 0);
    for (std::size_t a = 0; a < m; ++a) pos[ids[a]] = a;
    std::vector<char> has(m * m, 0);
    std::vector<double> start(m * m, 0.0), len(m * m, 0.0);
    std::vector<CircularArc> arcs;
    for (std::size_t k = 0; k < labeled.size(); ++k) {
        const auto& la = labeled[k];
        if (la.full) return {la.i, la.j};
        const std::size_t a = pos[la.i], b = pos[la.j];
        for (std::size_t s : {a * m + b, b * m + a}) {
            has[s] = 1;
            start[s] = la.arc.start.theta();
            len[s] = la.arc.length();
        }
        arcs.push_back(CircularArc::from_length(la.arc.start.theta(), la.arc.length(), k));
    }

    const AtomicIntervalIndex index = build_index(arcs, ArcLengthPolicy::BelowFullCircle);
    if (!index.covers_circle()) throw Error(ErrorKind::Internal, "pair intervals leave a gap");
    const std::size_t pivot_atom = index.least_covered_atom();
    const Atom& pa = index.atoms[pivot_atom];
    const double pivot = pa.start + 0.5 * ccw_delta(pa.start, pa.end);

    // reach after appending arc s, using its latest lap that starts by r
    auto advance = [&](double r, std::size_t s) {
        const double lap = start[s] + kTwoPi * std::floor((r - start[s] + kReachTol) / kTwoPi);
        const double end = lap + len[s];
        return end >= r - kReachTol ? std::max(r, end) : r;
    };

    const double neg = -std::numeric_limits<double>::infinity();
    std::size_t best_size = m + 1;
    std::vector<std::size_t> best_labels;
    for (std::size_t p = 0; p < index.arcs.size(); ++p) {
        if (!index.arc_covers_atom(p, pivot_atom)) continue;
        const auto& la = labeled[index.arcs[p].id];
        for (int order = 0; order < 2; ++order) {
            const std::size_t t0 = order == 0 ? pos[la.i] : pos[la.j];
            const std::size_t b0 = order == 0 ? pos[la.j] : pos[la.i];
            const std::size_t s0 = t0 * m + b0;
            const double origin = pivot - ccw_delta(start[s0], pivot);
            const double goal = origin + kTwoPi - kReachTol;

            std::vector<double> dp(m * m, neg);
            dp[s0] = origin + len[s0];
            std::vector<std::vector<std::size_t>> parent;
            std::vector<double> row_best(m), col_best(m);
            std::vector<std::size_t> row_arg(m), col_arg(m);
            // each layer swaps one label; reaching (b0, t0) with T layers uses T labels
            for (std::size_t layer = 1; layer < best_size; ++layer) {
                std::fill(row_best.begin(), row_best.end(), neg);
                std::fill(col_best.begin(), col_best.end(), neg);
                for (std::size_t t = 0; t < m; ++t) {
                    for (std::size_t b = 0; b < m; ++b) {
                        const double v = dp[t * m + b];
                        if (v > col_best[b]) {
                            col_best[b] = v;
                            col_arg[b] = t;
                        }
                        if (v > row_best[t]) {
                            row_best[t] = v;
                            row_arg[t] = b;
                        }
                    }
                }
                std::vector<double> next(m * m, neg);
                std::vector<std::size_t> par(m * m, 0);
                for (std::size_t t = 0; t < m; ++t) {
                    for (std::size_t b = 0; b < m; ++b) {
                        const std::size_t s = t * m + b;
                        if (!has[s]) continue;
                        if (col_best[b] > neg) {
                            const double v = advance(col_best[b], s);
                            if (v > next[s]) {
                                next[s] = v;
                                par[s] = col_arg[b] * m + b;
                            }
                        }
                        if (row_best[t] > neg) {
                            const double v = advance(row_best[t], s);
                            if (v > next[s]) {
                                next[s] = v;
                                par[s] = t * m + row_arg[t];
                            }
                        }
                    }
                }
                dp = std::move(next);
                parent.push_back(std::move(par));
                const std::size_t fin = b0 * m + t0;
                if (dp[fin] >= goal) {
                    std::vector<std::size_t> labels;
                    std::size_t cur = fin;
                    for (std::size_t l = parent.size(); l-- > 0;) {
                        labels.push_back(cur / m);
                        labels.push_back(cur % m);
                        cur = parent[l][cur];
                    }
                    labels.push_back(cur / m);
                    labels.push_back(cur % m);
                    std::sort(labels.begin(), labels.end());
                    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
                    if (labels.size() < best_size) {
                        best_size = labels.size();
                        best_labels = labels;
                    }
                    break;
                }
            }
        }
    }
    if (best_labels.empty()) throw Error(ErrorKind::Internal, "no admissible cover found");
    std::vector<std::size_t> out;
    for (auto l : best_labels) out.push_back(ids[l]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_weak_eps_kernel(std::span<const Point2> points, std::span<const std::size_t> subset, double eps) {
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

    // both widths are linear in u between merged breakpoints; a sign check at
    // the breakpoints and midpoints is exact since every piece is below pi
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
        const double wp = projection_interval(hp, dir).width();
        const double wc = projection_interval(hc, dir).width();
        if (wc < (1.0 - eps) * wp - tol) return false;
    }
    return true;
}

}  // namespace kernel2d
