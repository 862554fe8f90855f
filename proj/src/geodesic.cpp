#include "sap/geodesic.hpp"

#include <algorithm>
#include <queue>

#include "sap/detail/triangulation.hpp"

namespace sap {

namespace {

constexpr int kFreeS = -10;
constexpr int kFreeT = -20;

struct Node {
    Point p;
    int id;
};

int snap_vertex(const Polygon& P, Point q) {
    for (std::size_t i = 0; i < P.size(); ++i)
        if (dist(P[i], q) <= kGeomEps) return static_cast<int>(i);
    return -1;
}

class Funnel {
public:
    explicit Funnel(const Polygon& P) : P_(P), tri_(P) {}

    GeodesicPath query(Point s, Point t) const {
        const int sv = snap_vertex(P_, s), tv = snap_vertex(P_, t);
        if (sv >= 0) s = P_[sv];
        if (tv >= 0) t = P_[tv];
        GeodesicPath out;
        if ((sv >= 0 && sv == tv) || dist(s, t) == 0.0) {
            out.points = {s};
            out.vertex = {sv};
            return out;
        }
        const std::vector<int> sleeve = find_sleeve(candidates(s, sv), candidates(t, tv));
        const Node S{s, sv >= 0 ? sv : kFreeS}, T{t, tv >= 0 ? tv : kFreeT};

        std::vector<std::pair<Node, Node>> portals{{S, S}};
        for (std::size_t i = 0; i + 1 < sleeve.size(); ++i) {
            const detail::Triangle& A = tri_.triangles()[sleeve[i]];
            for (int k = 0; k < 3; ++k) {
                if (A.nbr[k] != sleeve[i + 1]) continue;
                const int r = A.v[k], l = A.v[(k + 1) % 3];
                portals.push_back({Node{P_[l], l}, Node{P_[r], r}});
                break;
            }
        }
        portals.push_back({T, T});

        std::vector<Node> path{S};
        Node apex = S, left = S, right = S;
        std::size_t apex_i = 0, left_i = 0, right_i = 0;
        for (std::size_t i = 1; i < portals.size(); ++i) {
            const Node& l = portals[i].first;
            const Node& r = portals[i].second;
            if (cross(right.p - apex.p, r.p - apex.p) >= 0.0) {
                if (apex.id == right.id || cross(left.p - apex.p, r.p - apex.p) < 0.0) {
                    right = r;
                    right_i = i;
                } else {
                    path.push_back(left);
                    apex = left;
                    apex_i = left_i;
                    right = left = apex;
                    right_i = left_i = apex_i;
                    i = apex_i;
                    continue;
                }
            }
            if (cross(left.p - apex.p, l.p - apex.p) <= 0.0) {
                if (apex.id == left.id || cross(right.p - apex.p, l.p - apex.p) > 0.0) {
                    left = l;
                    left_i = i;
                } else {
                    path.push_back(right);
                    apex = right;
                    apex_i = right_i;
                    right = left = apex;
                    right_i = left_i = apex_i;
                    i = apex_i;
                    continue;
                }
            }
        }
        path.push_back(T);

        // drop repeats and straight-through vertices
        std::vector<Node> clean;
        for (const Node& n : path) {
            if (!clean.empty() && clean.back().id == n.id) continue;
            while (clean.size() >= 2 &&
                   orientation(clean[clean.size() - 2].p, clean.back().p, n.p, 1e-12) ==
                       Orientation::Collinear &&
                   dot(clean.back().p - clean[clean.size() - 2].p, n.p - clean.back().p) >= 0)
                clean.pop_back();
            clean.push_back(n);
        }
        for (const Node& n : clean) {
            out.points.push_back(n.p);
            out.vertex.push_back(n.id >= 0 ? n.id : -1);
        }
        return out;
    }

private:
    std::vector<int> candidates(Point q, int vertex) const {
        if (vertex >= 0) return tri_.incident(vertex);
        const int t = tri_.locate(q, kGeomEps);
        if (t < 0) throw Error(ErrorCode::EndpointOutside, "point not in any triangle");
        return {t};
    }

    // multi-source BFS in the dual tree; shortest sleeve between the sets
    std::vector<int> find_sleeve(const std::vector<int>& from, const std::vector<int>& to) const {
        std::vector<int> parent(tri_.triangles().size(), -2);
        std::queue<int> q;
        for (int f : from) {
            parent[f] = -1;
            q.push(f);
        }
        std::vector<bool> goal(tri_.triangles().size(), false);
        for (int t : to) goal[t] = true;
        int hit = -1;
        while (!q.empty()) {
            const int cur = q.front();
            q.pop();
            if (goal[cur]) {
                hit = cur;
                break;
            }
            for (int nb : tri_.triangles()[cur].nbr)
                if (nb >= 0 && parent[nb] == -2) {
                    parent[nb] = cur;
                    q.push(nb);
                }
        }
        if (hit < 0) throw Error(ErrorCode::EndpointOutside, "disconnected triangulation");
        std::vector<int> path;
        for (int c = hit; c != -1; c = parent[c]) path.push_back(c);
        std::reverse(path.begin(), path.end());
        return path;
    }

    const Polygon& P_;
    detail::Triangulation tri_;
};

void check_inside(const Polygon& P, Point q, const char* what) {
    if (!q.finite() || point_in_polygon(P, q) == Location::Outside)
        throw Error(ErrorCode::EndpointOutside, std::string(what) + " is outside the polygon");
}

}  // namespace

double GeodesicPath::length() const {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) s += dist(points[i], points[i + 1]);
    return s;
}

GeodesicPath geodesic(const Polygon& P, Point s, Point t) {
    check_inside(P, s, "source");
    check_inside(P, t, "target");
    return Funnel(P).query(s, t);
}

ShortestPathTree build_spt(const Polygon& P, Point root) {
    if (!root.finite() || point_in_polygon(P, root) == Location::Outside)
        throw Error(ErrorCode::RootOutside, "tree root is outside the polygon");
    const Funnel F(P);
    ShortestPathTree spt;
    spt.root = root;
    spt.root_vertex = snap_vertex(P, root);
    spt.points = P.vertices();
    spt.parent.assign(P.size(), kRootNode);
    spt.dist.assign(P.size(), 0.0);
    for (std::size_t v = 0; v < P.size(); ++v) {
        if (static_cast<int>(v) == spt.root_vertex) continue;
        const GeodesicPath g = F.query(root, P[v]);
        spt.dist[v] = g.length();
        const int prev = g.vertex.size() >= 2 ? g.vertex[g.vertex.size() - 2] : -1;
        spt.parent[v] = prev >= 0 ? prev : kRootNode;
    }
    return spt;
}

std::vector<int> root_path(const ShortestPathTree& spt, int node) {
    if (!spt.contains(node)) throw Error(ErrorCode::NodeNotInTree, "node " + std::to_string(node));
    std::vector<int> out;
    for (int c = node; c != kRootNode; c = spt.parent[c]) {
        out.push_back(c);
        if (out.size() > spt.parent.size() + 1)
            throw Error(ErrorCode::NodeNotInTree, "parent links form a cycle");
    }
    out.push_back(kRootNode);
    std::reverse(out.begin(), out.end());
    return out;
}

LcaResult lca(const ShortestPathTree& spt, int u, int v) {
    const std::vector<int> pu = root_path(spt, u), pv = root_path(spt, v);
    std::size_t k = 0;
    while (k < pu.size() && k < pv.size() && pu[k] == pv[k]) ++k;
    LcaResult r;
    r.node = pu[k - 1];
    r.chain_u.assign(pu.begin() + static_cast<long>(k - 1), pu.end());
    r.chain_v.assign(pv.begin() + static_cast<long>(k - 1), pv.end());
    return r;
}

std::vector<Point> inflection_points(const GeodesicPath& g) {
    std::vector<Point> out;
    const auto& p = g.points;
    if (p.size() < 4) return out;
    auto turn = [&](std::size_t i) { return orientation(p[i - 1], p[i], p[i + 1]); };
    for (std::size_t i = 1; i + 2 < p.size(); ++i)
        if (turn(i) != turn(i + 1)) out.push_back(p[i]);
    return out;
}

}  // namespace sap
