#include "sap/geom.hpp"

#include <algorithm>

#include "sap/detail/triangulation.hpp"

namespace sap {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::SelfIntersecting: return "SelfIntersecting";
        case ErrorCode::TooFewVertices: return "TooFewVertices";
        case ErrorCode::ZeroArea: return "ZeroArea";
        case ErrorCode::OriginOutside: return "OriginOutside";
        case ErrorCode::ThetaOutOfRange: return "ThetaOutOfRange";
        case ErrorCode::NoTangent: return "NoTangent";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::BranchOutOfRange: return "BranchOutOfRange";
        case ErrorCode::RootOutside: return "RootOutside";
        case ErrorCode::EndpointOutside: return "EndpointOutside";
        case ErrorCode::NodeNotInTree: return "NodeNotInTree";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::DegenerateEndpoints: return "DegenerateEndpoints";
        case ErrorCode::TangentFailure: return "TangentFailure";
        case ErrorCode::SolverFailure: return "SolverFailure";
        case ErrorCode::CenterOutside: return "CenterOutside";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Orientation orientation(Point a, Point b, Point c, double eps) {
    const Vec2 u = b - a, v = c - a;
    const double cr = cross(u, v);
    const double scale = std::max(1.0, u.norm() * v.norm());
    if (cr > eps * scale) return Orientation::Left;
    if (cr < -eps * scale) return Orientation::Right;
    return Orientation::Collinear;
}

double point_segment_distance(Point q, const Segment& s) {
    const Vec2 d = s.b - s.a;
    const double len2 = d.norm2();
    if (len2 == 0.0) return dist(q, s.a);
    const double t = std::clamp(dot(q - s.a, d) / len2, 0.0, 1.0);
    return dist(q, s.a + d * t);
}

bool segments_intersect(const Segment& s, const Segment& t, double eps) {
    if (point_segment_distance(s.a, t) <= eps || point_segment_distance(s.b, t) <= eps ||
        point_segment_distance(t.a, s) <= eps || point_segment_distance(t.b, s) <= eps)
        return true;
    return segments_cross_properly(s, t, eps);
}

bool segments_cross_properly(const Segment& s, const Segment& t, double eps) {
    const Orientation o1 = orientation(s.a, s.b, t.a, eps);
    const Orientation o2 = orientation(s.a, s.b, t.b, eps);
    const Orientation o3 = orientation(t.a, t.b, s.a, eps);
    const Orientation o4 = orientation(t.a, t.b, s.b, eps);
    if (o1 == Orientation::Collinear || o2 == Orientation::Collinear ||
        o3 == Orientation::Collinear || o4 == Orientation::Collinear)
        return false;
    return o1 != o2 && o3 != o4;
}

std::optional<Point> line_intersection(Point p, Vec2 d, Point q, Vec2 e) {
    const double den = cross(d, e);
    if (std::abs(den) < 1e-300) return std::nullopt;
    const double t = cross(q - p, e) / den;
    return p + d * t;
}

double signed_area(std::span<const Point> pts) {
    double a = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& p = pts[i];
        const Point& q = pts[(i + 1) % pts.size()];
        a += cross(p, q);
    }
    return 0.5 * a;
}

double Polygon::signed_area() const { return sap::signed_area(v_); }

double Polygon::perimeter() const {
    double s = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i) s += edge(i).length();
    return s;
}

Polygon validate_polygon(std::span<const Point> raw, double eps) {
    if (raw.size() < 3) throw Error(ErrorCode::TooFewVertices, "need at least 3 vertices");
    for (const Point& p : raw)
        if (!p.finite()) throw Error(ErrorCode::InvalidArgument, "non-finite coordinate");

    std::vector<Point> v;
    for (const Point& p : raw)
        if (v.empty() || dist(v.back(), p) > eps) v.push_back(p);
    while (v.size() > 1 && dist(v.front(), v.back()) <= eps) v.pop_back();

    // merge collinear runs (including back-tracking spikes) until stable
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
            const std::size_t n = v.size();
            const Point& a = v[(i + n - 1) % n];
            const Point& b = v[i];
            const Point& c = v[(i + 1) % n];
            if (orientation(a, b, c, eps) == Orientation::Collinear || dist(a, b) <= eps) {
                v.erase(v.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    if (v.size() < 3) throw Error(ErrorCode::ZeroArea, "vertices are collinear");

    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Segment ei{v[i], v[(i + 1) % n]};
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Segment ej{v[j], v[(j + 1) % n]};
            if (adjacent) {
                // adjacent edges may only share their common vertex
                const Point other_i = (j == i + 1) ? ei.a : ei.b;
                const Point other_j = (j == i + 1) ? ej.b : ej.a;
                if (point_segment_distance(other_j, ei) <= eps ||
                    point_segment_distance(other_i, ej) <= eps)
                    throw Error(ErrorCode::SelfIntersecting, "adjacent edges overlap");
                continue;
            }
            if (segments_intersect(ei, ej, eps))
                throw Error(ErrorCode::SelfIntersecting,
                            "edges " + std::to_string(i) + " and " + std::to_string(j) + " meet");
        }
    }
    const double area = sap::signed_area(v);
    if (std::abs(area) <= eps) throw Error(ErrorCode::ZeroArea, "polygon has zero area");
    if (area < 0) std::reverse(v.begin(), v.end());
    return Polygon(std::move(v));
}

Location point_in_polygon(const Polygon& P, Point q, double eps) {
    const std::size_t n = P.size();
    for (std::size_t i = 0; i < n; ++i)
        if (point_segment_distance(q, P.edge(i)) <= eps) return Location::Boundary;
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = P[i];
        const Point& b = P[j];
        if ((a.y > q.y) != (b.y > q.y)) {
            const double x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (q.x < x) inside = !inside;
        }
    }
    return inside ? Location::Inside : Location::Outside;
}

RayHit ray_shoot(const Polygon& P, const Ray& r, double eps) {
    const detail::Triangulation tri(P);
    const Vec2 u = r.dir.unit();
    const int n = static_cast<int>(P.size());
    double scale = 1.0;
    for (const Point& p : P.vertices()) scale = std::max(scale, std::max(std::abs(p.x), std::abs(p.y)));

    int cur = -1;
    if (point_in_polygon(P, r.origin, eps) == Location::Inside) {
        cur = tri.locate(r.origin, eps);
    } else if (point_in_polygon(P, r.origin, eps) == Location::Boundary) {
        const Point probe = r.origin + u * (1e-7 * scale);
        if (point_in_polygon(P, probe, 0.0) == Location::Inside) cur = tri.locate(probe, 0.0);
    }
    if (cur < 0) throw Error(ErrorCode::OriginOutside, "ray origin is not inside the polygon");

    auto vertex_hit = [&](int vi) {
        const int e = std::min((vi + n - 1) % n, vi);
        return RayHit{P[vi], static_cast<std::size_t>(e)};
    };

    double t_in = 0.0;
    for (std::size_t guard = 0; guard <= tri.triangles().size() + 2; ++guard) {
        const detail::Triangle& T = tri.triangles()[cur];
        double best_t = std::numeric_limits<double>::infinity();
        int best_k = -1;
        for (int k = 0; k < 3; ++k) {
            const Point a = tri.corner(cur, k), b = tri.corner(cur, (k + 1) % 3);
            const double den = cross(b - a, u);
            if (den >= 0.0) continue;  // not leaving through this edge
            const double t = cross(b - a, a - r.origin) / den;
            if (t < best_t) {
                best_t = t;
                best_k = k;
            }
        }
        if (best_k < 0) break;
        best_t = std::max(best_t, t_in);
        const Point x = r.origin + u * best_t;
        for (int k = 0; k < 3; ++k)
            if (dist(x, tri.corner(cur, k)) <= eps * std::max(1.0, best_t) && best_t > eps)
                return vertex_hit(T.v[k]);
        if (T.nbr[best_k] < 0) return RayHit{x, static_cast<std::size_t>(T.v[best_k])};
        cur = T.nbr[best_k];
        t_in = best_t;
    }
    throw Error(ErrorCode::OriginOutside, "ray walk left the triangulation");
}

bool segment_inside(const Polygon& P, const Segment& s, double eps) {
    const std::size_t n = P.size();
    const Vec2 d = s.b - s.a;
    const double len2 = d.norm2();
    std::vector<double> cuts{0.0, 1.0};
    for (std::size_t i = 0; i < n; ++i) {
        const Segment e = P.edge(i);
        if (segments_cross_properly(s, e, eps)) return false;
        if (len2 > 0.0) {
            const double t = dot(e.a - s.a, d) / len2;
            if (t > 0.0 && t < 1.0 && point_segment_distance(e.a, s) <= eps) cuts.push_back(t);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] - cuts[i] <= 1e-12) continue;
        const Point m = s.a + d * (0.5 * (cuts[i] + cuts[i + 1]));
        if (point_in_polygon(P, m, eps) == Location::Outside) return false;
    }
    return point_in_polygon(P, s.a, eps) != Location::Outside &&
           point_in_polygon(P, s.b, eps) != Location::Outside;
}

}  // namespace sap
