#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kernel2d/arc_cover.hpp"
#include "kernel2d/geom.hpp"

namespace kernel2d {

// One point per line, two reals; '#' comments and blank lines skipped.
std::vector<Point2> read_points(std::istream& in);
std::vector<Point2> read_points_file(const std::string& path);
// 17 significant digits, so reading back gives the same doubles.
void write_points(std::ostream& out, const std::vector<Point2>& points);

// One "start end" pair per line, radians; arc ids are the arc order.
std::vector<CircularArc> read_arcs(std::istream& in);
std::vector<CircularArc> read_arcs_file(const std::string& path);

// Comma separated indices, e.g. "0,2,5".
std::vector<std::size_t> parse_index_list(const std::string& text);

struct SvgOverlays {
    bool hull = false;
    std::optional<ConvexPolygon> core;
    std::vector<std::size_t> kernel;
    bool spokes = false;
};

// Fixed 800x800 canvas, data fit with a 5% margin. Layers bottom to top:
// spokes, points, hull, core, kernel markers.
std::string render_svg(const std::vector<Point2>& points, const SvgOverlays& overlays);

}  // namespace kernel2d
