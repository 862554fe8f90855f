#pragma once

#include <array>
#include <optional>

#include "sap/geom.hpp"

namespace sap {

/// A boundary edge reaching into the half-strip of another edge.
struct StripWitness {
    Segment strip;     // edge owning the half-strip, counter-clockwise
    Segment boundary;  // offending edge, counter-clockwise
    Point point;       // on boundary, strictly inside the strip
};

struct DecisionReport {
    bool yes = true;
    std::optional<StripWitness> witness;
    /// Chain elements examined in each traversal: two counter-clockwise
    /// laps, then two clockwise laps.
    std::array<std::size_t, 4> tests_per_pass{};
};

/// Point of s strictly inside the open half-strip right of edge (shrunk by
/// eps on every side), if any.
std::optional<Point> strip_hit(const Segment& edge, const Segment& s, double eps = kGeomEps);

/// Hourglass sweep: two laps in each direction, testing each new edge
/// against the right chain of the union of visited half-strips.
DecisionReport is_self_approaching_polygon(const Polygon& P, double eps = kGeomEps);

/// Every edge against every other edge's half-strip.
DecisionReport half_strip_brute_force(const Polygon& P, double eps = kGeomEps);

/// Connected components of disk intersect P on a resolution x resolution
/// raster of the disk's bounding box. A cell is set when its center lies in
/// the region or the region's boundary passes through it; cells join
/// 4-connected.
int disk_component_count(const Polygon& P, Point center, double radius, int resolution = 1024);

}  // namespace sap
