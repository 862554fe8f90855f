#pragma once

#include <vector>

#include "sap/geom.hpp"

namespace sap {

/// Node id of the tree root when it is not itself a polygon vertex.
inline constexpr int kRootNode = -1;

struct ShortestPathTree {
    Point root;
    int root_vertex = -1;       // vertex coinciding with root, if any
    std::vector<Point> points;  // polygon vertices
    std::vector<int> parent;    // per vertex: parent vertex or kRootNode
    std::vector<double> dist;   // geodesic distance to root

    Point point(int node) const { return node == kRootNode ? root : points[node]; }
    bool contains(int node) const {
        return node == kRootNode || (node >= 0 && node < static_cast<int>(parent.size()));
    }
};

struct GeodesicPath {
    std::vector<Point> points;  // s, interior polygon vertices, t
    std::vector<int> vertex;    // polygon vertex index per point, -1 for free endpoints

    double length() const;
};

/// Funnel over the triangulation sleeve. Endpoints may lie on the boundary.
GeodesicPath geodesic(const Polygon& P, Point s, Point t);

/// Geodesics from root to every vertex.
ShortestPathTree build_spt(const Polygon& P, Point root);

/// Node ids from the root down to node (inclusive).
std::vector<int> root_path(const ShortestPathTree& spt, int node);

struct LcaResult {
    int node = kRootNode;
    std::vector<int> chain_u;  // lca .. u
    std::vector<int> chain_v;  // lca .. v
};

LcaResult lca(const ShortestPathTree& spt, int u, int v);

/// Last vertex of each maximal run of equal turn direction, excluding the
/// final run (whose end is not followed by a turn change).
std::vector<Point> inflection_points(const GeodesicPath& g);

}  // namespace sap
