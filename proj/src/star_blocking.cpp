#include "kernel2d/star_blocking.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace kernel2d {

namespace {

constexpr double kAngleTol = 1e-12;
constexpr double kMinArc = 1e-14;

}  // namespace

Line2 make_line(double a, double b, double c, std::size_t id) {
    const double n = std::hypot(a, b);
    if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(c)) {
        throw Error(ErrorKind::DegenerateInput, "line needs a finite nonzero normal");
    }
    if (c == 0.0) throw Error(ErrorKind::ThroughOrigin, "line passes through the origin");
    const double s = (c < 0.0 ? -1.0 : 1.0) / n;
    return {a * s, b * s, c * s, id};
}

void clip_arc_to_piece(double arc_start, double arc_len, double piece_start, double len,
                       std::vector<std::pair<double, double>>& out) {
    if (arc_len >= kTwoPi) {
        out.emplace_back(0.0, len);
        return;
    }
    const double o = ccw_delta(piece_start, arc_start);
    for (double c : {o - kTwoPi, o}) {
        const double lo = std::max(0.0, c);
        const double hi = std::min(len, c + arc_len);
        if (hi >= lo) out.emplace_back(lo, hi);
    }
}

// ---- piecewise targets ----

void PiecewiseTarget::set_pieces(double base, std::vector<double> offsets) {
    base_ = base;
    piece_start_ = std::move(offsets);
}

double PiecewiseTarget::piece_length(std::size_t piece) const {
    const double next = piece + 1 < piece_start_.size() ? piece_start_[piece + 1] : kTwoPi;
    return next - piece_start_[piece];
}

std::pair<std::size_t, double> PiecewiseTarget::locate(double u) const {
    const double d = ccw_delta(base_, u);
    auto it = std::upper_bound(piece_start_.begin(), piece_start_.end(), d);
    const std::size_t p = it == piece_start_.begin() ? 0 : static_cast<std::size_t>(it - piece_start_.begin()) - 1;
    const double o = std::clamp(d - piece_start_[p], 0.0, piece_length(p));
    return {p, o};
}

bool PiecewiseTarget::blocks(std::size_t k, double u) const {
    const auto [p, o] = locate(u);
    std::vector<Span> spans;
    blocked_in_piece(k, p, spans);
    for (const auto& s : spans) {
        if (s.first - kAngleTol <= o && o <= s.second + kAngleTol) return true;
    }
    // a direction on a piece boundary also belongs to the previous piece
    if (o <= kAngleTol) {
        const std::size_t q = (p + piece_count() - 1) % piece_count();
        spans.clear();
        blocked_in_piece(k, q, spans);
        const double len = piece_length(q);
        for (const auto& s : spans) {
            if (s.second >= len - kAngleTol) return true;
        }
    }
    return false;
}

std::optional<double> PiecewiseTarget::exit_ccw(std::size_t k, double u) const {
    if (!blocks(k, u)) return std::nullopt;
    const std::size_t m = piece_count();
    const auto [p, o] = locate(u);
    std::vector<Span> spans;
    blocked_in_piece(k, p, spans);
    double len = piece_length(p);
    double total = 0.0;
    bool found = false;
    for (const auto& s : spans) {
        if (s.first - kAngleTol <= o && o <= s.second + kAngleTol) {
            total = std::max(0.0, s.second - o);
            found = true;
            if (s.second < len - kAngleTol) return total;
        }
    }
    // blocked only through the boundary with the previous piece
    if (!found) return 0.0;
    for (std::size_t step = 1; step <= m; ++step) {
        const std::size_t q = (p + step) % m;
        spans.clear();
        blocked_in_piece(k, q, spans);
        len = piece_length(q);
        const Span* first = nullptr;
        for (const auto& s : spans) {
            if (s.first <= kAngleTol) first = &s;
        }
        if (first == nullptr) return total;
        total += first->second;
        if (total >= kTwoPi - kAngleTol) return kTwoPi;
        if (first->second < len - kAngleTol) return total;
    }
    return kTwoPi;
}

std::optional<double> PiecewiseTarget::exit_cw(std::size_t k, double u) const {
    if (!blocks(k, u)) return std::nullopt;
    const std::size_t m = piece_count();
    auto [p, o] = locate(u);
    std::vector<Span> spans;
    blocked_in_piece(k, p, spans);
    double total = 0.0;
    bool found = false;
    for (const auto& s : spans) {
        if (s.first - kAngleTol <= o && o <= s.second + kAngleTol) {
            total = std::max(0.0, o - s.first);
            found = true;
            if (s.first > kAngleTol) return total;
            break;
        }
    }
    if (!found && o > kAngleTol) return 0.0;
    for (std::size_t step = 1; step <= m; ++step) {
        const std::size_t q = (p + m - step % m) % m;
        spans.clear();
        blocked_in_piece(k, q, spans);
        const double len = piece_length(q);
        const Span* last = nullptr;
        for (const auto& s : spans) {
            if (s.second >= len - kAngleTol && last == nullptr) last = &s;
        }
        if (last == nullptr) return total;
        total += len - last->first;
        if (total >= kTwoPi - kAngleTol) return kTwoPi;
        if (last->first > kAngleTol) return total;
    }
    return kTwoPi;
}

BlockedArcs PiecewiseTarget::segments(std::size_t k) const {
    std::vector<Span> merged;
    std::vector<Span> spans;
    for (std::size_t p = 0; p < piece_count(); ++p) {
        spans.clear();
        blocked_in_piece(k, p, spans);
        for (const auto& s : spans) {
            const Span g{piece_start_[p] + s.first, piece_start_[p] + s.second};
            if (!merged.empty() && g.first <= merged.back().second + kAngleTol) {
                merged.back().second = std::max(merged.back().second, g.second);
            } else {
                merged.push_back(g);
            }
        }
    }
    BlockedArcs out;
    if (merged.empty()) return out;
    if (merged.size() == 1 && merged[0].first <= kAngleTol && merged[0].second >= kTwoPi - kAngleTol) {
        out.full = true;
        return out;
    }
    if (merged.size() > 1 && merged.front().first <= kAngleTol && merged.back().second >= kTwoPi - kAngleTol) {
        merged.front().first = merged.back().first - kTwoPi;
        merged.pop_back();
    }
    for (const auto& g : merged) {
        const double len = g.second - g.first;
        if (len < kMinArc) continue;
        if (len >= kTwoPi - kAngleTol) {
            out.full = true;
            out.arcs.clear();
            return out;
        }
        out.arcs.push_back(CircularArc::from_length(base_ + g.first, len, k));
    }
    return out;
}

// ---- star polygon ----

RayShooter::RayShooter(StarPolygon poly) : poly_(std::move(poly)) {
    const auto& v = poly_.vertices;
    const std::size_t m = v.size();
    if (m < 3) throw Error(ErrorKind::NotStarShaped, "star polygon needs at least 3 vertices");
    angles_.resize(m);
    offsets_.resize(m);
    scale_ = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (!(norm(v[i]) > 0.0)) throw Error(ErrorKind::NotStarShaped, "vertex at the center");
        angles_[i] = angle_of(v[i]);
        scale_ = std::max(scale_, norm(v[i]));
    }
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = (i + 1) % m;
        if (!(cross(v[i], v[j]) > 0.0)) {
            throw Error(ErrorKind::NotStarShaped, "vertices are not in strict CCW angular order");
        }
        offsets_[i] = total;
        total += ccw_delta(angles_[i], angles_[j]);
    }
    if (std::abs(total - kTwoPi) > 1e-9) {
        throw Error(ErrorKind::NotStarShaped, "vertices wind more than once around the center");
    }
}

RayShooter build_shooter(StarPolygon poly) { return RayShooter(std::move(poly)); }

std::size_t RayShooter::locate(double u) const {
    const double d = ccw_delta(angles_[0], u);
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), d);
    return it == offsets_.begin() ? 0 : static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

Point2 RayShooter::radial_point(double u) const {
    const std::size_t k = locate(u);
    const Point2 a = poly_.vertices[k];
    const Point2 e = poly_.vertices[(k + 1) % size()] - a;
    const Point2 w{std::cos(u), std::sin(u)};
    const double den = cross(w, e);
    const double t = den == 0.0 ? 0.0 : std::clamp(-cross(w, a) / den, 0.0, 1.0);
    return a + t * e;
}

PolygonTarget::PolygonTarget(const RayShooter& shooter, std::vector<Line2> lines)
    : shooter_(shooter), lines_(std::move(lines)), slack_(1e-12 * shooter.scale()) {
    std::vector<double> offs(shooter.size());
    for (std::size_t i = 0; i < shooter.size(); ++i) offs[i] = shooter.offset(i);
    set_pieces(shooter.angle(0), std::move(offs));
}

void PolygonTarget::blocked_in_piece(std::size_t k, std::size_t piece, std::vector<Span>& out) const {
    const auto& v = shooter_.polygon().vertices;
    const Point2 a = v[piece];
    const Point2 b = v[(piece + 1) % v.size()];
    const double f0 = lines_[k].eval(a) + slack_;
    const double f1 = lines_[k].eval(b) + slack_;
    const double len = piece_length(piece);
    if (f0 < 0.0 && f1 < 0.0) return;
    auto offset_at = [&](double t) {
        if (t <= 0.0) return 0.0;
        if (t >= 1.0) return len;
        const double d = ccw_delta(shooter_.angle(piece), angle_of(a + t * (b - a)));
        // rounding can push a point just before the piece start around the circle
        if (d > len) return d > 0.5 * (len + kTwoPi) ? 0.0 : len;
        return d;
    };
    if (f0 >= 0.0 && f1 >= 0.0) {
        out.emplace_back(0.0, len);
        return;
    }
    const double t = f0 / (f0 - f1);
    if (f0 >= 0.0) {
        out.emplace_back(0.0, offset_at(t));
    } else {
        out.emplace_back(offset_at(t), len);
    }
}

std::vector<double> PolygonTarget::crossing_directions(std::size_t a, std::size_t b) const {
    const Line2& p = lines_[a];
    const Line2& q = lines_[b];
    const double det = p.a * q.b - q.a * p.b;
    if (std::abs(det) < 1e-15) return {};
    const double x = (p.c * q.b - q.c * p.b) / det;
    const double y = (p.a * q.c - q.a * p.c) / det;
    return {angle_of({x, y})};
}

std::optional<DirectionAngle> shoot(const RayShooter& shooter, DirectionAngle u, const Line2& line) {
    const PolygonTarget target(shooter, {line});
    const auto d = target.exit_ccw(0, u.theta());
    if (!d) return std::nullopt;
    return DirectionAngle(u.theta() + *d);
}

// ---- generic solver ----

namespace {

struct Best {
    std::size_t k;
    double delta;
};

std::optional<Best> furthest_exit(const BlockingTarget& target, double u) {
    std::optional<Best> best;
    for (std::size_t k = 0; k < target.candidate_count(); ++k) {
        const auto d = target.exit_ccw(k, u);
        if (d && (!best || *d > best->delta)) best = Best{k, *d};
    }
    return best;
}

std::vector<std::size_t> cover_to_positions(const std::vector<std::size_t>& arc_ids,
                                            const std::vector<std::size_t>& owner) {
    std::vector<std::size_t> out;
    for (auto id : arc_ids) {
        const std::size_t k = owner[id];
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
    return out;
}

}  // namespace

std::vector<std::size_t> greedy_blocking_positions(const BlockingTarget& target) {
    const std::size_t n = target.candidate_count();
    if (n == 0) throw Error(ErrorKind::NoBlockingSet, "no candidates");
    const auto first = furthest_exit(target, 0.0);
    if (!first) throw Error(ErrorKind::NoBlockingSet, "direction 0 is not blocked by any candidate");
    if (first->delta >= kTwoPi) return {first->k};

    const double cw = target.exit_cw(first->k, 0.0).value_or(0.0);
    const double goal = kTwoPi - cw;
    double reach = first->delta;
    std::vector<std::size_t> chosen{first->k};
    for (std::size_t iter = 0; reach < goal - kAngleTol; ++iter) {
        if (iter > 2 * n + 2) throw Error(ErrorKind::Internal, "greedy blocking did not terminate");
        const auto next = furthest_exit(target, reach);
        if (!next || next->delta <= kMinArc) {
            throw Error(ErrorKind::NoBlockingSet, "a direction is left unblocked");
        }
        reach += next->delta;
        if (std::find(chosen.begin(), chosen.end(), next->k) == chosen.end()) chosen.push_back(next->k);
    }
    return chosen;
}

CandidateArcs pruned_candidate_arcs(const BlockingTarget& target, std::span<const std::size_t> greedy) {
    CandidateArcs out;
    std::set<std::pair<std::size_t, long long>> seen;
    auto push = [&](std::size_t k, double start, double len) {
        if (len < kMinArc) return;
        const auto key = std::make_pair(k, std::llround(normalize_angle(start) * 1e9));
        if (!seen.insert(key).second) return;
        out.arcs.push_back(CircularArc::from_length(start, std::min(len, kTwoPi - 1e-9), out.arcs.size()));
        out.owner.push_back(k);
    };
    for (auto g : greedy) {
        for (const auto& arc : target.segments(g).arcs) push(g, arc.start.theta(), arc.length());
    }
    for (std::size_t k = 0; k < target.candidate_count(); ++k) {
        for (auto g : greedy) {
            if (g == k) continue;
            for (double d : target.crossing_directions(k, g)) {
                const auto ccw = target.exit_ccw(k, d);
                if (!ccw) continue;
                const double cw = target.exit_cw(k, d).value_or(0.0);
                push(k, d - cw, cw + *ccw);
            }
        }
    }
    return out;
}

std::vector<std::size_t> optimal_blocking_positions(const BlockingTarget& target) {
    const auto greedy = greedy_blocking_positions(target);
    if (greedy.size() <= 1) return greedy;
    const auto cand = pruned_candidate_arcs(target, greedy);
    const auto cover = min_arc_cover(cand.arcs, ArcLengthPolicy::BelowFullCircle);
    auto best = cover_to_positions(cover, cand.owner);
    return best.size() <= greedy.size() ? best : greedy;
}

std::vector<std::size_t> optimal_blocking_positions_full(const BlockingTarget& target) {
    CandidateArcs cand;
    for (std::size_t k = 0; k < target.candidate_count(); ++k) {
        const auto segs = target.segments(k);
        if (segs.full) return {k};
        for (const auto& arc : segs.arcs) {
            cand.arcs.push_back(CircularArc::from_length(arc.start.theta(), arc.length(), cand.arcs.size()));
            cand.owner.push_back(k);
        }
    }
    if (cand.arcs.empty()) throw Error(ErrorKind::NoBlockingSet, "no candidate blocks any direction");
    try {
        const auto cover = min_arc_cover(cand.arcs, ArcLengthPolicy::BelowFullCircle);
        return cover_to_positions(cover, cand.owner);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotCoverable) throw Error(ErrorKind::NoBlockingSet, "a direction is left unblocked");
        throw;
    }
}

namespace {

std::vector<std::size_t> positions_to_ids(const PolygonTarget& t, const std::vector<std::size_t>& pos) {
    std::vector<std::size_t> ids;
    for (auto p : pos) ids.push_back(t.candidate_id(p));
    return ids;
}

}  // namespace

std::vector<std::size_t> greedy_blocking_set(const StarPolygon& poly, std::span<const Line2> lines) {
    const RayShooter shooter(poly);
    const PolygonTarget target(shooter, {lines.begin(), lines.end()});
    return positions_to_ids(target, greedy_blocking_positions(target));
}

std::vector<std::size_t> optimal_blocking_set(const StarPolygon& poly, std::span<const Line2> lines) {
    const RayShooter shooter(poly);
    const PolygonTarget target(shooter, {lines.begin(), lines.end()});
    return positions_to_ids(target, optimal_blocking_positions(target));
}

}  // namespace kernel2d
