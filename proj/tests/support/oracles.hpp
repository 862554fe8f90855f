#pragma once

// Independent reference computations used by the tests. Nothing here
// calls into the library beyond the plain value types.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <vector>

#include "sap/geom.hpp"

namespace oracle {

using sap::Point;

inline double cr(Point o, Point a, Point b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// closed segments share a point (exact-ish, small band)
inline bool seg_touch(Point a, Point b, Point c, Point d, double eps = 1e-12) {
    auto on = [&](Point p, Point q, Point r) {
        return std::abs(cr(p, q, r)) <= eps && std::min(p.x, q.x) - eps <= r.x &&
               r.x <= std::max(p.x, q.x) + eps && std::min(p.y, q.y) - eps <= r.y &&
               r.y <= std::max(p.y, q.y) + eps;
    };
    const double d1 = cr(a, b, c), d2 = cr(a, b, d), d3 = cr(c, d, a), d4 = cr(c, d, b);
    if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
        ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
        return true;
    return on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b);
}

inline bool simple_cycle(const std::vector<Point>& v) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (seg_touch(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return false;
        }
    return true;
}

struct BruteHit {
    double t;
    Point p;
    std::size_t edge;
};

// nearest intersection of a ray with any polygon edge, t > tmin
inline std::optional<BruteHit> brute_ray(const std::vector<Point>& v, Point o, Point d,
                                         double tmin = 1e-9) {
    std::optional<BruteHit> best;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = v[i], b = v[(i + 1) % n];
        const Point e{b.x - a.x, b.y - a.y};
        const double den = d.x * e.y - d.y * e.x;
        if (std::abs(den) < 1e-15) continue;
        const Point w{a.x - o.x, a.y - o.y};
        const double t = (w.x * e.y - w.y * e.x) / den;
        const double s = (w.x * d.y - w.y * d.x) / den;
        if (t > tmin && s >= -1e-12 && s <= 1 + 1e-12 && (!best || t < best->t - 1e-12))
            best = BruteHit{t, {o.x + t * d.x, o.y + t * d.y}, i};
    }
    return best;
}

inline bool inside_strict(const std::vector<Point>& v, Point q) {
    bool in = false;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        if ((v[i].y > q.y) != (v[j].y > q.y) &&
            q.x < (v[j].x - v[i].x) * (q.y - v[i].y) / (v[j].y - v[i].y) + v[i].x)
            in = !in;
    }
    return in;
}

// segment pq stays in the closed polygon (dense sampling, for small tests)
inline bool visible(const std::vector<Point>& v, Point p, Point q) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = v[i], b = v[(i + 1) % n];
        const double d1 = cr(p, q, a), d2 = cr(p, q, b), d3 = cr(a, b, p), d4 = cr(a, b, q);
        if (((d1 > 1e-12 && d2 < -1e-12) || (d1 < -1e-12 && d2 > 1e-12)) &&
            ((d3 > 1e-12 && d4 < -1e-12) || (d3 < -1e-12 && d4 > 1e-12)))
            return false;
    }
    for (int k = 1; k < 200; ++k) {
        const double s = k / 200.0;
        const Point m{p.x + s * (q.x - p.x), p.y + s * (q.y - p.y)};
        bool on_edge = false;
        for (std::size_t i = 0; i < n && !on_edge; ++i) {
            const Point a = v[i], b = v[(i + 1) % n];
            const double len = std::hypot(b.x - a.x, b.y - a.y);
            if (std::abs(cr(a, b, m)) / len < 1e-9 &&
                (m.x - a.x) * (b.x - a.x) + (m.y - a.y) * (b.y - a.y) >= -1e-12 &&
                (m.x - b.x) * (a.x - b.x) + (m.y - b.y) * (a.y - b.y) >= -1e-12)
                on_edge = true;
        }
        if (!on_edge && !inside_strict(v, m)) return false;
    }
    return true;
}

struct VisResult {
    std::vector<double> dist;  // per node: vertices 0..n-1, then s, t
    std::vector<int> prev;
};

// Dijkstra over the visibility graph of vertices plus extra points
inline VisResult visibility_dijkstra(const std::vector<Point>& v, const std::vector<Point>& extra,
                                     int source) {
    std::vector<Point> nodes = v;
    nodes.insert(nodes.end(), extra.begin(), extra.end());
    const int m = static_cast<int>(nodes.size());
    VisResult r{std::vector<double>(m, std::numeric_limits<double>::infinity()),
                std::vector<int>(m, -1)};
    std::vector<bool> done(m, false);
    r.dist[source] = 0.0;
    for (int it = 0; it < m; ++it) {
        int u = -1;
        for (int i = 0; i < m; ++i)
            if (!done[i] && (u < 0 || r.dist[i] < r.dist[u])) u = i;
        if (u < 0 || !std::isfinite(r.dist[u])) break;
        done[u] = true;
        for (int w = 0; w < m; ++w) {
            if (done[w]) continue;
            if (!visible(v, nodes[u], nodes[w])) continue;
            const double nd = r.dist[u] + std::hypot(nodes[u].x - nodes[w].x, nodes[u].y - nodes[w].y);
            if (nd < r.dist[w] - 1e-12) {
                r.dist[w] = nd;
                r.prev[w] = u;
            }
        }
    }
    return r;
}

// adaptive Simpson
template <class F>
double simpson(F f, double a, double b, double tol = 1e-12, int depth = 40) {
    auto rec = [&](auto&& self, double a0, double b0, double fa, double fm, double fb, double whole,
                   double tl, int d) -> double {
        const double m = 0.5 * (a0 + b0);
        const double lm = 0.5 * (a0 + m), rm = 0.5 * (m + b0);
        const double flm = f(lm), frm = f(rm);
        const double left = (m - a0) / 6 * (fa + 4 * flm + fm);
        const double right = (b0 - m) / 6 * (fm + 4 * frm + fb);
        if (d <= 0 || std::abs(left + right - whole) <= 15 * tl)
            return left + right + (left + right - whole) / 15;
        return self(self, a0, m, fa, flm, fm, left, tl / 2, d - 1) +
               self(self, m, b0, fm, frm, fb, right, tl / 2, d - 1);
    };
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return rec(rec, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), tol, depth);
}

}  // namespace oracle
