#include "sap/sa_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sap {

namespace {

Vec2 right_normal(const Segment& e) {
    const Vec2 d = e.b - e.a;
    return Vec2{d.y, -d.x} / d.norm();
}

// element of the right chain: a segment, or a ray when open
struct Elem {
    Point a;
    Point b;  // far end, or a point along the ray
    bool ray = false;
    std::size_t owner = 0;  // edge whose end normal carries it
};

// e crosses the element, endpoints strictly apart
bool crosses(const Segment& e, const Elem& c, double eps) {
    const Vec2 d = c.b - c.a;
    const double dn = d.norm();
    const double s1 = cross(d, e.a - c.a) / dn, s2 = cross(d, e.b - c.a) / dn;
    if (!((s1 > eps && s2 < -eps) || (s1 < -eps && s2 > eps))) return false;
    const Vec2 f = e.b - e.a;
    const double fn = f.norm();
    const double t1 = cross(f, c.a - e.a) / fn;
    if (c.ray) {
        // the ray's origin and direction must straddle e's line
        const double dt = cross(f, d) / fn;
        return (t1 > eps && dt < 0) || (t1 < -eps && dt > 0);
    }
    const double t2 = cross(f, c.b - e.a) / fn;
    return (t1 > eps && t2 < -eps) || (t1 < -eps && t2 > eps);
}

// ray o + t n (t > eps) meets the element
std::optional<Point> ray_meets(Point o, Vec2 n, const Elem& c, double eps) {
    const Vec2 d = c.b - c.a;
    const double den = cross(n, d);
    if (std::abs(den) <= 1e-15 * d.norm()) return std::nullopt;
    const Vec2 w = c.a - o;
    const double t = cross(w, d) / den;
    const double s = cross(w, n) / den;
    if (t <= eps) return std::nullopt;
    if (s < 0.0 || (!c.ray && s > 1.0)) return std::nullopt;
    return o + n * t;
}

Point mirror(Point p) { return {-p.x, p.y}; }

class Sweep {
public:
    Sweep(const std::vector<Point>& v, double eps) : v_(v), eps_(eps) {}

    Segment edge(std::size_t i) const { return {v_[i % v_.size()], v_[(i + 1) % v_.size()]}; }

    // one lap; chain persists between calls
    std::optional<StripWitness> lap(std::size_t& tests) {
        const std::size_t n = v_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Segment e = edge(i);
            const Vec2 nr = right_normal(e);
            if (chain_.empty()) {
                chain_.push_back({e.b, e.b + nr, true, i});
                continue;
            }
            bool replaced = false;
            for (std::size_t k = chain_.size(); k-- > 0;) {
                ++tests;
                const Elem c = chain_[k];
                if (k + 1 == chain_.size()) {
                    // leaving the shared vertex straight into the previous strip
                    if (auto w = witness(c.owner, e)) return w;
                }
                if (crosses(e, c, eps_))
                    if (auto w = witness(c.owner, e)) return w;
                if (auto hit = ray_meets(e.b, nr, c, eps_)) {
                    chain_.resize(k);
                    chain_.push_back({*hit, c.b, c.ray, c.owner});
                    chain_.push_back({e.b, *hit, false, i});
                    replaced = true;
                    break;
                }
            }
            if (!replaced) chain_.assign(1, Elem{e.b, e.b + nr, true, i});
        }
        return std::nullopt;
    }

private:
    std::optional<StripWitness> witness(std::size_t owner, const Segment& e) const {
        const Segment s = edge(owner);
        if (auto p = strip_hit(s, e, eps_)) return StripWitness{s, e, *p};
        // crossing near a strip corner: any strip will do
        for (std::size_t k = 0; k < v_.size(); ++k)
            if (auto p = strip_hit(edge(k), e, eps_)) return StripWitness{edge(k), e, *p};
        return std::nullopt;
    }

    const std::vector<Point>& v_;
    double eps_;
    std::vector<Elem> chain_;  // first element at the back
};

}  // namespace

std::optional<Point> strip_hit(const Segment& edge, const Segment& s, double eps) {
    const Vec2 d = edge.b - edge.a;
    const double len = d.norm();
    if (!(len > 2 * eps)) return std::nullopt;
    const Vec2 u = d / len;
    const Vec2 nr{u.y, -u.x};
    const Vec2 f = s.b - s.a;
    double lo = 0.0, hi = 1.0;
    // keep t with c0 + c1 t >= 0
    auto clip = [&](double c0, double c1) {
        if (c1 == 0.0) {
            if (c0 < 0.0) hi = -1.0;
        } else if (c1 > 0.0) {
            lo = std::max(lo, -c0 / c1);
        } else {
            hi = std::min(hi, -c0 / c1);
        }
    };
    const double a0 = dot(s.a - edge.a, u), a1 = dot(f, u);
    const double r0 = dot(s.a - edge.a, nr), r1 = dot(f, nr);
    clip(a0 - eps, a1);
    clip(len - eps - a0, -a1);
    clip(r0 - eps, r1);
    if (lo > hi) return std::nullopt;
    return s.a + f * (0.5 * (lo + hi));
}

DecisionReport is_self_approaching_polygon(const Polygon& P, double eps) {
    DecisionReport out;
    const std::vector<Point>& v = P.vertices();

    Sweep ccw(v, eps);
    for (int lap = 0; lap < 2; ++lap)
        if (auto w = ccw.lap(out.tests_per_pass[lap])) {
            out.yes = false;
            out.witness = w;
            return out;
        }

    // clockwise laps run counter-clockwise on the mirror image
    std::vector<Point> m;
    for (std::size_t i = v.size(); i-- > 0;) m.push_back(mirror(v[i]));
    Sweep cw(m, eps);
    for (int lap = 0; lap < 2; ++lap)
        if (auto w = cw.lap(out.tests_per_pass[2 + lap])) {
            out.yes = false;
            out.witness = StripWitness{{mirror(w->strip.b), mirror(w->strip.a)},
                                       {mirror(w->boundary.b), mirror(w->boundary.a)},
                                       mirror(w->point)};
            return out;
        }
    return out;
}

DecisionReport half_strip_brute_force(const Polygon& P, double eps) {
    DecisionReport out;
    const std::size_t n = P.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t f = 0; f < n; ++f) {
            if (f == k) continue;
            if (auto p = strip_hit(P.edge(k), P.edge(f), eps)) {
                out.yes = false;
                out.witness = StripWitness{P.edge(k), P.edge(f), *p};
                return out;
            }
        }
    return out;
}

int disk_component_count(const Polygon& P, Point center, double radius, int resolution) {
    if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
    if (resolution < 2) throw Error(ErrorCode::InvalidArgument, "resolution must be at least 2");
    if (point_in_polygon(P, center) == Location::Outside)
        throw Error(ErrorCode::CenterOutside, "disk center lies outside the polygon");

    const int R = resolution;
    const double cell = 2 * radius / R;
    // per row, runs of set cells [i0, i1]
    std::vector<std::vector<std::pair<int, int>>> rows(R);
    const auto& v = P.vertices();
    std::vector<double> xs;
    for (int j = 0; j < R; ++j) {
        const double y = center.y - radius + (j + 0.5) * cell;
        // scanline crossings, half-open in y
        xs.clear();
        for (std::size_t k = 0; k < v.size(); ++k) {
            const Point a = v[k], b = v[(k + 1) % v.size()];
            if ((a.y > y) != (b.y > y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
        }
        std::sort(xs.begin(), xs.end());
        const double half = std::sqrt(std::max(0.0, radius * radius - (y - center.y) * (y - center.y)));
        for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
            const double x0 = std::max(xs[k], center.x - half), x1 = std::min(xs[k + 1], center.x + half);
            const int i0 = std::max(0, static_cast<int>(std::ceil((x0 - center.x + radius) / cell - 0.5)));
            const int i1 = std::min(R - 1, static_cast<int>(std::floor((x1 - center.x + radius) / cell - 0.5)));
            if (i0 <= i1) rows[j].push_back({i0, i1});
        }
    }

    // cells crossed by the boundary of D n P, traced 4-connected, so thin
    // wedges whose cell centers fall outside stay attached
    auto set = [&](int i, int j) {
        if (i >= 0 && i < R && j >= 0 && j < R) rows[j].push_back({i, i});
    };
    auto trace = [&](auto&& at, int m) {
        int pi = 0, pj = 0;
        for (int s = 0; s <= m; ++s) {
            const Point q = at(s);
            const int i = static_cast<int>(std::floor((q.x - center.x + radius) / cell));
            const int j = static_cast<int>(std::floor((q.y - center.y + radius) / cell));
            if (s > 0 && i != pi && j != pj) set(i, pj);
            set(i, j);
            pi = i, pj = j;
        }
    };
    const double step = cell / 8;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Point a = v[k], b = v[(k + 1) % v.size()];
        const Vec2 d = b - a, f = a - center;
        const double A = dot(d, d), B = dot(f, d), C = dot(f, f) - radius * radius;
        const double disc = B * B - A * C;
        if (A == 0.0 || disc <= 0.0) continue;
        const double t0 = std::max(0.0, (-B - std::sqrt(disc)) / A), t1 = std::min(1.0, (-B + std::sqrt(disc)) / A);
        if (t0 > t1) continue;
        const int m = static_cast<int>(std::ceil((t1 - t0) * std::sqrt(A) / step)) + 1;
        trace([&](int s) { return a + d * (t0 + (t1 - t0) * s / m); }, m);
    }
    // arcs of the circle inside P
    const int m = static_cast<int>(std::ceil(2 * std::numbers::pi * radius / step));
    auto on_circle = [&](int s) {
        const double th = 2 * std::numbers::pi * s / m;
        return Point{center.x + radius * std::cos(th), center.y + radius * std::sin(th)};
    };
    // plain crossing parity; cells on the boundary are covered by the edge trace
    auto inside = [&](Point q) {
        bool odd = false;
        for (std::size_t k = 0, l = v.size() - 1; k < v.size(); l = k++)
            if ((v[k].y > q.y) != (v[l].y > q.y) &&
                q.x < v[k].x + (q.y - v[k].y) * (v[l].x - v[k].x) / (v[l].y - v[k].y))
                odd = !odd;
        return odd;
    };
    for (int s = 0; s < m;) {
        if (!inside(on_circle(s))) {
            ++s;
            continue;
        }
        int e = s;
        while (e + 1 < m && inside(on_circle(e + 1))) ++e;
        trace([&](int k) { return on_circle(s + k); }, e - s);
        s = e + 1;
    }

    // merge runs within a row, then join runs overlapping across rows
    std::vector<std::size_t> first(R + 1, 0);
    for (int j = 0; j < R; ++j) {
        auto& r = rows[j];
        std::sort(r.begin(), r.end());
        std::size_t w = 0;
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (w > 0 && r[k].first <= r[w - 1].second + 1)
                r[w - 1].second = std::max(r[w - 1].second, r[k].second);
            else
                r[w++] = r[k];
        }
        r.resize(w);
        first[j + 1] = first[j] + w;
    }
    std::vector<std::size_t> parent(first[R]);
    for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = static_cast<int>(parent.size());
    for (int j = 0; j + 1 < R; ++j) {
        const auto &lo = rows[j], &hi = rows[j + 1];
        for (std::size_t a = 0, b = 0; a < lo.size() && b < hi.size();) {
            if (std::max(lo[a].first, hi[b].first) <= std::min(lo[a].second, hi[b].second)) {
                const std::size_t x = find(first[j] + a), y = find(first[j + 1] + b);
                if (x != y) parent[x] = y, --components;
            }
            (lo[a].second < hi[b].second) ? ++a : ++b;
        }
    }
    return components;
}

}  // namespace sap
