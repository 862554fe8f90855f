#include "sap/detail/triangulation.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace sap::detail {

namespace {

bool in_triangle(Point q, Point a, Point b, Point c, double eps) {
    const double s = std::max({1.0, dist(a, b), dist(b, c), dist(c, a)});
    return cross(b - a, q - a) >= -eps * s && cross(c - b, q - b) >= -eps * s &&
           cross(a - c, q - c) >= -eps * s;
}

}  // namespace

Triangulation::Triangulation(const Polygon& P) : poly_(&P), incident_(P.size()) {
    const int n = static_cast<int>(P.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;

    auto is_ear = [&](std::size_t k) {
        const std::size_t m = idx.size();
        const int ia = idx[(k + m - 1) % m], ib = idx[k], ic = idx[(k + 1) % m];
        const Point a = P[ia], b = P[ib], c = P[ic];
        if (cross(b - a, c - b) <= 0.0) return false;
        for (int j : idx) {
            if (j == ia || j == ib || j == ic) continue;
            const Point q = P[j];
            // strict containment, except vertices coinciding with the ear's
            // diagonal endpoints are already excluded above
            if (cross(b - a, q - a) > 0.0 && cross(c - b, q - b) > 0.0 &&
                cross(a - c, q - c) > 0.0)
                return false;
            // a reflex vertex lying on the new diagonal blocks the ear
            if (std::abs(cross(c - a, q - a)) <= 1e-14 * (1.0 + (c - a).norm2()) &&
                dot(q - a, c - a) > 0.0 && dot(q - c, a - c) > 0.0)
                return false;
        }
        return true;
    };

    std::vector<std::array<int, 3>> raw;
    while (idx.size() > 3) {
        bool clipped = false;
        // pick the ear with the best minimum angle among candidates for
        // well-shaped triangles; scanning all keeps the output deterministic
        std::size_t best = idx.size();
        double best_q = -1.0;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (!is_ear(k)) continue;
            const std::size_t m = idx.size();
            const Point a = P[idx[(k + m - 1) % m]], b = P[idx[k]], c = P[idx[(k + 1) % m]];
            const double area = std::abs(cross(b - a, c - a));
            const double qual = area / std::max({(b - a).norm2(), (c - b).norm2(), (a - c).norm2()});
            if (qual > best_q) {
                best_q = qual;
                best = k;
            }
        }
        if (best < idx.size()) {
            const std::size_t m = idx.size();
            raw.push_back({idx[(best + m - 1) % m], idx[best], idx[(best + 1) % m]});
            idx.erase(idx.begin() + static_cast<long>(best));
            clipped = true;
        }
        if (!clipped)
            throw Error(ErrorCode::SelfIntersecting, "triangulation found no ear");
    }
    raw.push_back({idx[0], idx[1], idx[2]});

    std::map<std::pair<int, int>, std::pair<int, int>> edge_owner;
    tris_.reserve(raw.size());
    for (const auto& t : raw) tris_.push_back({t, {-1, -1, -1}});
    for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti) {
        for (int k = 0; k < 3; ++k) {
            const int a = tris_[ti].v[k], b = tris_[ti].v[(k + 1) % 3];
            auto it = edge_owner.find({b, a});
            if (it != edge_owner.end()) {
                tris_[ti].nbr[k] = it->second.first;
                tris_[it->second.first].nbr[it->second.second] = ti;
            } else {
                edge_owner[{a, b}] = {ti, k};
            }
            incident_[a].push_back(ti);
        }
    }
}

int Triangulation::locate(Point q, double eps) const {
    for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti)
        if (in_triangle(q, corner(ti, 0), corner(ti, 1), corner(ti, 2), 0.0)) return ti;
    for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti)
        if (in_triangle(q, corner(ti, 0), corner(ti, 1), corner(ti, 2), eps)) return ti;
    return -1;
}

std::vector<int> Triangulation::sleeve(int a, int b) const {
    std::vector<int> parent(tris_.size(), -2);
    std::queue<int> bfs;
    parent[a] = -1;
    bfs.push(a);
    while (!bfs.empty()) {
        const int cur = bfs.front();
        bfs.pop();
        if (cur == b) break;
        for (int nb : tris_[cur].nbr)
            if (nb >= 0 && parent[nb] == -2) {
                parent[nb] = cur;
                bfs.push(nb);
            }
    }
    std::vector<int> path;
    for (int cur = b; cur != -1; cur = parent[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace sap::detail
