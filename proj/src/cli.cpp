#include "kernel2d/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kernel2d/arc_cover.hpp"
#include "kernel2d/core.hpp"
#include "kernel2d/hausdorff.hpp"
#include "kernel2d/io.hpp"
#include "kernel2d/kernel.hpp"
#include "kernel2d/oracles.hpp"
#include "kernel2d/weak_kernel.hpp"

namespace kernel2d {

namespace {

using json = nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

struct Options {
    std::string input;
    std::string out;
    double eps = 0.1;
    bool approx2 = false;
    bool emit_points = false;
    std::string kind;
    std::size_t n = 100;
    std::uint64_t seed = 1;
    std::string subset;
    std::vector<std::string> overlays;
    std::vector<std::size_t> sizes;
    std::size_t repeat = 1;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::InvalidEps:
            return 2;
        case ErrorKind::Internal:
            return 1;
        default:
            return 3;
    }
}

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

json result_document(const std::string& command, std::optional<double> eps, std::size_t n,
                     const std::vector<std::size_t>& subset, bool validity, double elapsed,
                     const std::vector<Point2>* points) {
    json doc;
    doc["command"] = command;
    doc["eps"] = eps ? json(*eps) : json(nullptr);
    doc["n"] = n;
    doc["subset_indices"] = subset;
    doc["subset_size"] = subset.size();
    doc["validity"] = validity;
    doc["elapsed_ms"] = elapsed;
    doc["tool_version"] = kToolVersion;
    if (points) {
        json pts = json::array();
        for (auto i : subset) pts.push_back({(*points)[i].x, (*points)[i].y});
        doc["points"] = pts;
    }
    return doc;
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : target_(&fallback) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
            target_ = &file_;
        }
    }
    std::ostream& stream() { return *target_; }

private:
    std::ofstream file_;
    std::ostream* target_;
};

std::vector<Point2> load_points(const Options& o) {
    if (o.input.empty() || o.input == "-") return read_points(std::cin);
    return read_points_file(o.input);
}

// subset commands share the same document; validity is recomputed before emission
int emit_subset(const std::string& command, const Options& o, std::optional<double> eps,
                const std::vector<Point2>& pts, std::vector<std::size_t> subset, bool validity,
                clock_type::time_point t0, std::ostream& out, std::ostream& err) {
    subset = sorted_unique(std::move(subset));
    const json doc = result_document(command, eps, pts.size(), subset, validity, ms_since(t0),
                                     o.emit_points ? &pts : nullptr);
    Output dst(o.out, out);
    dst.stream() << doc.dump(2) << "\n";
    if (!validity) {
        err << "error: result failed its validity check\n";
        return 1;
    }
    return 0;
}

ValidityKind parse_validity(const std::string& s) {
    if (s == "strong") return ValidityKind::Strong;
    if (s == "weak") return ValidityKind::Weak;
    if (s == "hausdorff") return ValidityKind::Hausdorff;
    throw Error(ErrorKind::Parse, "unknown check kind '" + s + "' (strong, weak, hausdorff)");
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out, std::ostream& err) {
    const auto t0 = clock_type::now();
    if (cmd == "hull") {
        const auto pts = load_points(o);
        if (pts.empty()) throw Error(ErrorKind::EmptyInput, "no points");
        const ConvexPolygon hull = convex_hull(pts);
        const double tol = tolerance_for(bbox_diameter(pts));
        bool ok = true;
        for (const auto& p : pts) ok = ok && contains(hull, p, tol);
        return emit_subset(cmd, o, std::nullopt, pts, hull.source, ok, t0, out, err);
    }
    if (cmd == "kernel" || cmd == "kernel-fast") {
        const auto pts = load_points(o);
        auto sub = cmd == "kernel" ? optimal_kernel(pts, o.eps) : fast_kernel(pts, o.eps);
        return emit_subset(cmd, o, o.eps, pts, sub, is_eps_kernel(pts, sub, o.eps), t0, out, err);
    }
    if (cmd == "weak-kernel") {
        const auto pts = load_points(o);
        auto sub = o.approx2 ? weak_kernel_2approx(pts, o.eps) : weak_kernel_exact(pts, o.eps);
        return emit_subset(cmd, o, o.eps, pts, sub, is_weak_eps_kernel(pts, sub, o.eps), t0, out, err);
    }
    if (cmd == "hausdorff") {
        const auto pts = load_points(o);
        auto sub = optimal_hausdorff_subset(pts, o.eps);
        return emit_subset(cmd, o, o.eps, pts, sub, is_hausdorff_within(pts, sub, o.eps), t0, out, err);
    }
    if (cmd == "core") {
        const auto pts = load_points(o);
        const ConvexPolygon core = compute_core(pts, o.eps);
        Output dst(o.out, out);
        write_points(dst.stream(), core.vertices);
        return 0;
    }
    if (cmd == "arc-cover") {
        const auto arcs = o.input.empty() || o.input == "-" ? read_arcs(std::cin) : read_arcs_file(o.input);
        if (arcs.empty()) throw Error(ErrorKind::EmptyInput, "no arcs");
        auto ids = min_arc_cover(arcs, ArcLengthPolicy::BelowFullCircle);
        std::vector<CircularArc> chosen;
        for (auto i : ids) chosen.push_back(arcs[i]);
        const bool ok = arcs_cover_circle(chosen);
        ids = sorted_unique(std::move(ids));
        const json doc = result_document(cmd, std::nullopt, arcs.size(), ids, ok, ms_since(t0), nullptr);
        Output dst(o.out, out);
        dst.stream() << doc.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    if (cmd == "gen") {
        InstanceSpec spec;
        spec.kind = parse_generator_kind(o.kind.empty() ? "uniform-disk" : o.kind);
        spec.n = o.n;
        spec.seed = o.seed;
        spec.eps = o.eps;
        Output dst(o.out, out);
        write_points(dst.stream(), generate(spec));
        return 0;
    }
    if (cmd == "check") {
        const auto pts = load_points(o);
        const auto sub = sorted_unique(parse_index_list(o.subset));
        for (auto i : sub) {
            if (i >= pts.size()) throw Error(ErrorKind::Parse, "subset index " + std::to_string(i) + " out of range");
        }
        const bool ok = is_valid_subset(pts, sub, o.eps, parse_validity(o.kind.empty() ? "strong" : o.kind));
        json doc = result_document(cmd, o.eps, pts.size(), sub, ok, ms_since(t0), o.emit_points ? &pts : nullptr);
        Output dst(o.out, out);
        dst.stream() << doc.dump(2) << "\n";
        if (!ok) err << "error: subset fails the " << (o.kind.empty() ? "strong" : o.kind) << " check\n";
        return ok ? 0 : 3;
    }
    if (cmd == "plot") {
        const auto pts = load_points(o);
        SvgOverlays ov;
        auto overlays = o.overlays;
        if (overlays.empty()) overlays.push_back("hull");
        for (const auto& name : overlays) {
            if (name == "hull") {
                ov.hull = true;
            } else if (name == "core") {
                ov.core = compute_core(pts, o.eps);
            } else if (name == "kernel") {
                ov.kernel = o.subset.empty() ? optimal_kernel(pts, o.eps) : parse_index_list(o.subset);
            } else if (name == "spokes") {
                ov.spokes = true;
            } else {
                throw Error(ErrorKind::Parse, "unknown overlay '" + name + "' (hull, core, kernel, spokes)");
            }
        }
        Output dst(o.out, out);
        dst.stream() << render_svg(pts, ov);
        return 0;
    }
    if (cmd == "bench") {
        InstanceSpec spec;
        spec.kind = parse_generator_kind(o.kind.empty() ? "uniform-disk" : o.kind);
        spec.seed = o.seed;
        spec.eps = o.eps;
        auto sizes = o.sizes;
        if (sizes.empty()) sizes = {1000, 10000, 100000};
        Output dst(o.out, out);
        dst.stream() << "n,eps,size,elapsed_ms\n";
        for (auto n : sizes) {
            spec.n = n;
            const auto pts = generate(spec);
            std::vector<double> times;
            std::size_t size = 0;
            for (std::size_t r = 0; r < std::max<std::size_t>(o.repeat, 1); ++r) {
                const auto t = clock_type::now();
                size = optimal_kernel(pts, o.eps).size();
                times.push_back(ms_since(t));
            }
            std::sort(times.begin(), times.end());
            dst.stream() << pts.size() << "," << o.eps << "," << size << "," << times[times.size() / 2] << "\n";
        }
        return 0;
    }
    throw Error(ErrorKind::Parse, "unknown command '" + cmd + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum eps-kernels, weak kernels, cores and Hausdorff subsets of planar point sets"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* sub, const char* what) { sub->add_option("input", o.input, what); };
    auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output file (default stdout)"); };
    auto emit = [&](CLI::App* sub) { sub->add_flag("--emit-points", o.emit_points, "include subset coordinates"); };
    auto rel_eps = [&](CLI::App* sub) { sub->add_option("--eps", o.eps, "relative eps in (0,1)"); };

    auto* hull = app.add_subcommand("hull", "convex hull vertex indices");
    input(hull, "point file");
    out_opt(hull);
    emit(hull);
    for (const char* name : {"kernel", "kernel-fast"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "kernel" ? "minimum eps-kernel"
                                                                            : "eps-kernel of size at most opt(eps/4)");
        input(sub, "point file");
        rel_eps(sub);
        out_opt(sub);
        emit(sub);
    }
    auto* weak = app.add_subcommand("weak-kernel", "minimum weak eps-kernel");
    input(weak, "point file");
    rel_eps(weak);
    weak->add_flag("--approx2", o.approx2, "2-approximation instead of the exact minimum");
    out_opt(weak);
    emit(weak);
    auto* core = app.add_subcommand("core", "eps-core polygon as a point list");
    input(core, "point file");
    rel_eps(core);
    out_opt(core);
    auto* haus = app.add_subcommand("hausdorff", "minimum subset within Hausdorff distance eps");
    input(haus, "point file");
    haus->add_option("--eps", o.eps, "absolute distance > 0");
    out_opt(haus);
    emit(haus);
    auto* arcs = app.add_subcommand("arc-cover", "minimum cover of the circle by arcs");
    input(arcs, "arc file, one 'start end' pair per line in radians");
    out_opt(arcs);
    auto* gen = app.add_subcommand("gen", "generate a point set");
    gen->add_option("--kind", o.kind, "uniform-disk, on-circle, convex-position, clustered, collinear, lower-bound");
    gen->add_option("--n", o.n, "number of points (construction size for lower-bound)");
    gen->add_option("--seed", o.seed, "random seed");
    gen->add_option("--eps", o.eps, "eps for the lower-bound kind");
    out_opt(gen);
    auto* check = app.add_subcommand("check", "validate a subset");
    input(check, "point file");
    check->add_option("--kind", o.kind, "strong, weak or hausdorff");
    check->add_option("--eps", o.eps, "eps (absolute for hausdorff)");
    check->add_option("--subset", o.subset, "comma separated indices")->required();
    out_opt(check);
    emit(check);
    auto* plot = app.add_subcommand("plot", "SVG drawing");
    input(plot, "point file");
    rel_eps(plot);
    plot->add_option("--overlay", o.overlays, "hull, core, kernel, spokes")->delimiter(',');
    plot->add_option("--subset", o.subset, "kernel markers (default: computed kernel)");
    out_opt(plot);
    auto* bench = app.add_subcommand("bench", "CSV timings of the optimal kernel over a size sweep");
    bench->add_option("--kind", o.kind, "generator kind");
    bench->add_option("--eps", o.eps, "relative eps");
    bench->add_option("--sizes", o.sizes, "comma separated sizes")->delimiter(',');
    bench->add_option("--seed", o.seed, "random seed");
    bench->add_option("--repeat", o.repeat, "runs per size, median reported");
    out_opt(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: Internal: " << e.what() << "\n";
        return 1;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"kernel2d"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace kernel2d
