#include "kernel2d/arc_cover.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace kernel2d {

namespace {

constexpr double kSnap = 1e-12;

double to_unit_range(double theta) {
    double t = normalize_angle(theta);
    return t < 0.0 ? t + kTwoPi : t;
}

}  // namespace

bool CircularArc::contains(double theta, double tol) const {
    const double len = length();
    const double d = ccw_delta(start.theta(), theta);
    return d <= len + tol || d >= kTwoPi - tol;
}

bool AtomicIntervalIndex::covers_circle() const {
    return std::all_of(atoms.begin(), atoms.end(), [](const Atom& a) { return a.depth > 0; });
}

std::size_t AtomicIntervalIndex::least_covered_atom() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < atoms.size(); ++k) {
        if (atoms[k].depth < atoms[best].depth) best = k;
    }
    return best;
}

bool AtomicIntervalIndex::arc_covers_atom(std::size_t arc_pos, std::size_t atom) const {
    const std::size_t m = atoms.size();
    return (atom + m - first_atom[arc_pos]) % m < span[arc_pos];
}

AtomicIntervalIndex build_index(std::span<const CircularArc> arcs, ArcLengthPolicy policy) {
    AtomicIntervalIndex index;
    index.arcs.assign(arcs.begin(), arcs.end());
    const std::size_t n = arcs.size();
    if (n == 0) return index;

    struct Endpoint {
        double pos;
        std::size_t arc;
        bool is_start;
    };
    std::vector<Endpoint> ends;
    ends.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double len = arcs[i].length();
        if (!(len > 0.0)) throw Error(ErrorKind::DegenerateInput, "zero-length arc");
        if (policy == ArcLengthPolicy::BelowPi && len >= kPi) {
            throw Error(ErrorKind::ArcTooLong, "arc of length " + std::to_string(len) + " is not below pi");
        }
        const double s = to_unit_range(arcs[i].start.theta());
        ends.push_back({s, i, true});
        ends.push_back({to_unit_range(s + len), i, false});
    }
    std::sort(ends.begin(), ends.end(), [](const Endpoint& a, const Endpoint& b) { return a.pos < b.pos; });

    // cluster nearly equal endpoints into one cut
    std::vector<double> cuts;
    std::vector<std::size_t> start_cut(n), end_cut(n);
    for (const auto& e : ends) {
        if (cuts.empty() || e.pos - cuts.back() > kSnap) cuts.push_back(e.pos);
        (e.is_start ? start_cut : end_cut)[e.arc] = cuts.size() - 1;
    }
    if (cuts.size() > 1 && kTwoPi - cuts.back() + cuts.front() <= kSnap) {
        const std::size_t last = cuts.size() - 1;
        cuts.pop_back();
        for (auto& c : start_cut) c = (c == last) ? 0 : c;
        for (auto& c : end_cut) c = (c == last) ? 0 : c;
    }

    const std::size_t m = cuts.size();
    index.atoms.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        index.atoms[k].start = normalize_angle(cuts[k]);
        index.atoms[k].end = normalize_angle(k + 1 < m ? cuts[k + 1] : cuts[0] + kTwoPi);
    }
    index.first_atom = start_cut;
    index.rho = end_cut;
    index.span.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t s = (end_cut[i] + m - start_cut[i]) % m;
        // an arc longer than pi whose ends snapped together covers every atom
        if (s == 0 && arcs[i].length() > kPi) s = m;
        index.span[i] = s;
    }

    // depth via a cyclic difference array
    std::vector<long long> diff(m + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t a = start_cut[i];
        const std::size_t s = index.span[i];
        if (s == 0) continue;
        if (a + s <= m) {
            diff[a] += 1;
            diff[a + s] -= 1;
        } else {
            diff[a] += 1;
            diff[m] -= 1;
            diff[0] += 1;
            diff[a + s - m] -= 1;
        }
    }
    long long run = 0;
    for (std::size_t k = 0; k < m; ++k) {
        run += diff[k];
        index.atoms[k].depth = static_cast<std::size_t>(run);
    }

    // furthest-reaching covering arc per atom: sweep unwrapped copies of each arc
    struct Copy {
        long long begin;
        long long end;
        std::size_t arc;
    };
    std::vector<Copy> copies;
    copies.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = static_cast<long long>(index.span[i]);
        if (s == 0) continue;
        const auto a = static_cast<long long>(start_cut[i]);
        copies.push_back({a, a + s, i});
        copies.push_back({a - static_cast<long long>(m), a - static_cast<long long>(m) + s, i});
    }
    std::sort(copies.begin(), copies.end(), [](const Copy& x, const Copy& y) { return x.begin < y.begin; });
    using Key = std::tuple<long long, std::size_t, std::size_t>;  // (end, id, position)
    std::priority_queue<Key> active;
    std::size_t next = 0;
    for (std::size_t k = 0; k < m; ++k) {
        const auto kk = static_cast<long long>(k);
        while (next < copies.size() && copies[next].begin <= kk) {
            const auto& c = copies[next++];
            active.emplace(c.end, arcs[c.arc].id, c.arc);
        }
        while (!active.empty() && std::get<0>(active.top()) <= kk) active.pop();
        if (!active.empty()) index.atoms[k].cw_max = std::get<2>(active.top());
    }
    return index;
}

namespace {

std::vector<std::size_t> greedy_from_position(const AtomicIntervalIndex& index, std::size_t start) {
    const std::size_t m = index.atoms.size();
    const std::size_t n = index.arcs.size();
    std::vector<std::size_t> cover{start};
    const std::size_t target = index.first_atom[start] + m;
    std::size_t reach = index.first_atom[start] + index.span[start];
    // each step covers at least one new atom; 2n bounds any valid run
    for (std::size_t step = 0; reach < target; ++step) {
        if (step > 2 * n) throw Error(ErrorKind::Internal, "greedy arc cover did not terminate");
        const std::size_t k = reach % m;
        const Atom& atom = index.atoms[k];
        if (atom.depth == 0) throw Error(ErrorKind::NotCoverable, "arcs leave a gap in the circle");
        const std::size_t j = atom.cw_max;
        const std::size_t ahead = (index.first_atom[j] + index.span[j] + m - k) % m;
        reach += (ahead == 0 ? m : ahead);
        // an arc picked again on the wrap-around adds nothing to the union
        if (std::find(cover.begin(), cover.end(), j) != cover.end()) return cover;
        cover.push_back(j);
    }
    // the chain after the start arc may already wrap past the start arc's end;
    // the start arc is then redundant (keeps greedy within opt+1 for nested starts)
    if (cover.size() > 1 && reach >= index.first_atom[start] + index.span[start] + m) {
        cover.erase(cover.begin());
    }
    return cover;
}

std::vector<std::size_t> to_ids(const AtomicIntervalIndex& index, const std::vector<std::size_t>& pos) {
    std::vector<std::size_t> ids;
    ids.reserve(pos.size());
    for (auto p : pos) ids.push_back(index.arcs[p].id);
    return ids;
}

}  // namespace

std::vector<std::size_t> greedy_cover_from(const AtomicIntervalIndex& index, std::size_t start_id) {
    if (!index.covers_circle() || index.atoms.empty()) {
        throw Error(ErrorKind::NotCoverable, "arcs do not cover the circle");
    }
    for (std::size_t p = 0; p < index.arcs.size(); ++p) {
        if (index.arcs[p].id == start_id) return to_ids(index, greedy_from_position(index, p));
    }
    throw Error(ErrorKind::Internal, "unknown start arc id");
}

std::vector<std::size_t> min_arc_cover(std::span<const CircularArc> arcs, ArcLengthPolicy policy) {
    const AtomicIntervalIndex index = build_index(arcs, policy);
    if (index.atoms.empty() || !index.covers_circle()) {
        throw Error(ErrorKind::NotCoverable, "arcs do not cover the circle");
    }
    const std::size_t pivot = index.least_covered_atom();
    std::vector<std::size_t> best;
    for (std::size_t p = 0; p < index.arcs.size(); ++p) {
        if (!index.arc_covers_atom(p, pivot)) continue;
        auto cover = greedy_from_position(index, p);
        if (best.empty() || cover.size() < best.size()) best = std::move(cover);
    }
    return to_ids(index, best);
}

}  // namespace kernel2d
