#pragma once

#include <array>
#include <vector>

#include "sap/geom.hpp"

namespace sap::detail {

// Ear-clipping triangulation of a validated polygon with the dual adjacency.
// Internal: used by ray shooting and the funnel machinery.
struct Triangle {
    std::array<int, 3> v;    // CCW vertex indices
    std::array<int, 3> nbr;  // nbr[k] shares edge (v[k], v[k+1]); -1 on the boundary
};

class Triangulation {
public:
    explicit Triangulation(const Polygon& P);

    const Polygon& polygon() const { return *poly_; }
    const std::vector<Triangle>& triangles() const { return tris_; }
    Point corner(int tri, int k) const { return (*poly_)[tris_[tri].v[k]]; }

    /// Triangle containing q (closed, eps band); -1 when outside.
    int locate(Point q, double eps = kGeomEps) const;
    /// Triangles incident to polygon vertex i.
    const std::vector<int>& incident(int vertex) const { return incident_[vertex]; }

    /// Dual-tree path of triangle ids from a to b (inclusive).
    std::vector<int> sleeve(int a, int b) const;

private:
    const Polygon* poly_;
    std::vector<Triangle> tris_;
    std::vector<std::vector<int>> incident_;
};

}  // namespace sap::detail
