#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sap/geom.hpp"

namespace sap {

struct Instance {
    std::string name;
    std::vector<Point> vertices;
    std::optional<Point> s;
    std::optional<Point> t;
    std::optional<std::uint64_t> seed;
};

/// Points on a circle at sorted random angles.
Instance gen_convex(int n, std::uint64_t seed);
/// Simple polygon by recursive space partitioning; retried until valid.
Instance gen_random(int n, std::uint64_t seed);
/// U-shaped comb with (n - 4) / 4 notches; n = 8 is the basic U.
Instance gen_comb(int n);
/// Square spiral corridor winding inward, t at its center.
/// s_pos in [0, 1] slides s from the center (0) to the outer mouth (1).
Instance gen_spiral(int n, double s_pos = 1.0);
/// Centerline length of the spiral corridor (s sits at s_pos * (len - 0.5) + 0.25).
double spiral_length(int n);
/// Corridor ending in a thin hook that forces arcs around t.
Instance gen_hook(int n, std::uint64_t seed);

Instance generate(const std::string& kind, int n, std::uint64_t seed);

}  // namespace sap
