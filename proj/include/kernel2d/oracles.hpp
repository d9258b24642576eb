#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kernel2d/arc_cover.hpp"
#include "kernel2d/geom.hpp"

namespace kernel2d {

enum class ValidityKind { Strong, Weak, Hausdorff };

// Validity of a subset under the chosen predicate; eps is relative for
// Strong/Weak and absolute for Hausdorff.
bool is_valid_subset(std::span<const Point2> points, std::span<const std::size_t> subset, double eps,
                     ValidityKind kind);

// Smallest passing subset, by size then lexicographic. n <= 16.
std::vector<std::size_t> brute_min_subset(std::span<const Point2> points, double eps, ValidityKind kind);

// Closed-arc coverage test, independent of the atom index.
bool arcs_cover_circle(std::span<const CircularArc> arcs);

// Exhaustive minimum cover, arc ids; at most 16 arcs.
std::vector<std::size_t> brute_min_arc_cover(std::span<const CircularArc> arcs);

// Line y = m*x + k of the lower-bound construction.
struct SlopeLine {
    enum Family { F, G, Axis };
    double m = 0.0;
    double k = 0.0;
    Family family = F;

    double operator()(double x) const { return m * x + k; }
};

struct LowerBoundInstance {
    std::size_t n = 0;
    double eps = 0.0;
    std::vector<SlopeLine> lines;  // chords of f, chords of g, then the axis replicas
};

LowerBoundInstance lower_bound_instance(std::size_t n, double eps);

// (eps/2) U(x) + (1 - eps/2) L(x) over the chord lines; crosses zero between grid points.
double lower_bound_envelope(const LowerBoundInstance& inst, double x);
// Sign changes of the envelope over the grid i/2n, i = 1..2n-1.
std::size_t lower_bound_sign_changes(const LowerBoundInstance& inst);
// Crossings between the envelope and every line of the instance on [1/2n, 1 - 1/2n].
std::size_t lower_bound_intersections(const LowerBoundInstance& inst);
// Points dual to the lines: y = m*x + k  <->  (m, -k).
std::vector<Point2> lower_bound_points(const LowerBoundInstance& inst);

enum class GeneratorKind { UniformDisk, OnCircle, ConvexPosition, Clustered, Collinear, LowerBound };

struct InstanceSpec {
    GeneratorKind kind = GeneratorKind::UniformDisk;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double eps = 0.1;  // only used by the lower-bound kind
};

GeneratorKind parse_generator_kind(const std::string& name);
std::string to_string(GeneratorKind kind);

std::vector<Point2> generate(const InstanceSpec& spec);

}  // namespace kernel2d
