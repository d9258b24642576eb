#include "kernel2d/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace kernel2d {

namespace {

double parse_real(const std::string& tok, std::size_t line_no) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || errno == ERANGE || !std::isfinite(v)) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad number '" + tok + "'");
    }
    return v;
}

// reads lines of exactly two reals
std::vector<std::pair<double, double>> read_pairs(std::istream& in) {
    std::vector<std::pair<double, double>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string t;
        while (ss >> t) toks.push_back(t);
        if (toks.size() != 2) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected two numbers");
        }
        out.emplace_back(parse_real(toks[0], line_no), parse_real(toks[1], line_no));
    }
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    return f;
}

}  // namespace

std::vector<Point2> read_points(std::istream& in) {
    std::vector<Point2> pts;
    for (auto [x, y] : read_pairs(in)) pts.push_back({x, y});
    return pts;
}

std::vector<Point2> read_points_file(const std::string& path) {
    auto f = open_input(path);
    return read_points(f);
}

void write_points(std::ostream& out, const std::vector<Point2>& points) {
    char buf[80];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x, p.y);
        out << buf;
    }
}

std::vector<CircularArc> read_arcs(std::istream& in) {
    std::vector<CircularArc> arcs;
    for (auto [s, e] : read_pairs(in)) arcs.emplace_back(s, e, arcs.size());
    return arcs;
}

std::vector<CircularArc> read_arcs_file(const std::string& path) {
    auto f = open_input(path);
    return read_arcs(f);
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
            throw Error(ErrorKind::Parse, "bad index '" + tok + "' in subset list");
        }
        out.push_back(static_cast<std::size_t>(std::stoull(tok)));
    }
    if (out.empty()) throw Error(ErrorKind::Parse, "empty subset list");
    return out;
}

std::string render_svg(const std::vector<Point2>& points, const SvgOverlays& overlays) {
    constexpr double canvas = 800.0, margin = 0.05 * canvas;
    double minx = INFINITY, miny = INFINITY, maxx = -INFINITY, maxy = -INFINITY;
    for (const auto& p : points) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    if (points.empty()) minx = miny = maxx = maxy = 0.0;
    const double extent = std::max(maxx - minx, maxy - miny);
    const double s = extent > 0.0 ? (canvas - 2.0 * margin) / extent : 1.0;
    // centre the data in the drawable square
    const double ox = margin + 0.5 * ((canvas - 2.0 * margin) - (maxx - minx) * s);
    const double oy = margin + 0.5 * ((canvas - 2.0 * margin) - (maxy - miny) * s);
    auto px = [&](double x) { return ox + (x - minx) * s; };
    auto py = [&](double y) { return canvas - (oy + (y - miny) * s); };

    std::string out;
    char buf[256];
    auto emit = [&](const char* fmt, auto... args) {
        std::snprintf(buf, sizeof buf, fmt, args...);
        out += buf;
    };
    auto path = [&](const ConvexPolygon& poly, const char* cls) {
        if (poly.size() < 2) return;
        out += "<path class=\"";
        out += cls;
        out += "\" d=\"";
        for (std::size_t i = 0; i < poly.size(); ++i) {
            emit("%s%.3f %.3f ", i == 0 ? "M" : "L", px(poly[i].x), py(poly[i].y));
        }
        out += "Z\"/>\n";
    };

    emit("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" viewBox=\"0 0 %d %d\">\n", 800, 800,
         800, 800);
    out += "<style>.point{fill:#222}.hull{fill:none;stroke:#1f5fbf;stroke-width:1.5}"
           ".core{fill:#f2b134;fill-opacity:0.35;stroke:#c07a00}"
           ".kernel{fill:none;stroke:#c0392b;stroke-width:2}.spoke{stroke:#999;stroke-width:0.7}</style>\n";
    const ConvexPolygon hull = points.empty() ? ConvexPolygon{} : convex_hull(points);
    if (overlays.spokes && hull.size() >= 2) {
        const Point2 c = vertex_centroid(hull);
        const double r = 0.5 * extent;
        for (const auto& iv : refined_normal_diagram(hull).intervals) {
            const Point2 u = DirectionAngle(iv.start).unit();
            emit("<line class=\"spoke\" x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\"/>\n", px(c.x), py(c.y),
                 px(c.x + r * u.x), py(c.y + r * u.y));
        }
    }
    for (const auto& p : points) emit("<circle class=\"point\" cx=\"%.3f\" cy=\"%.3f\" r=\"3\"/>\n", px(p.x), py(p.y));
    if (overlays.hull) path(hull, "hull");
    if (overlays.core) {
        if (overlays.core->size() == 1) {
            const Point2 c = (*overlays.core)[0];
            emit("<circle class=\"core\" cx=\"%.3f\" cy=\"%.3f\" r=\"4\"/>\n", px(c.x), py(c.y));
        } else {
            path(*overlays.core, "core");
        }
    }
    for (auto i : overlays.kernel) {
        if (i >= points.size()) continue;
        emit("<rect class=\"kernel\" x=\"%.3f\" y=\"%.3f\" width=\"12\" height=\"12\"/>\n", px(points[i].x) - 6.0,
             py(points[i].y) - 6.0);
    }
    out += "</svg>\n";
    return out;
}

}  // namespace kernel2d
