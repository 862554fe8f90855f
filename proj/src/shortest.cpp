#include <algorithm>
#include <cmath>
#include <limits>

#include "sap/detail/roots.hpp"
#include "sap/shortest.hpp"

namespace sap {

namespace {

Vec2 unit(Vec2 v) {
    const double n = v.norm();
    return n > 0 ? v / n : Vec2{};
}

double poly_scale(const Polygon& P) {
    double s = 1.0;
    for (const Point& p : P.vertices()) s = std::max({s, std::abs(p.x), std::abs(p.y)});
    return s;
}

// hull tangents at the anchor: along the boundary counter-clockwise and clockwise
std::pair<Vec2, Vec2> anchor_tangents(const SuffixHull& h) {
    const std::size_t n = h.size();
    return {start_tangent(h.boundary[h.anchor]), -end_tangent(h.boundary[(h.anchor + n - 1) % n])};
}

// first parameter along chord a->b touching segment e
std::optional<double> chord_hit(Point a, Point b, const Segment& e) {
    if (!segments_intersect({a, b}, e)) return std::nullopt;
    const Vec2 r = b - a, s = e.b - e.a;
    const double den = cross(r, s);
    if (std::abs(den) > 1e-14 * r.norm() * s.norm()) {
        return std::clamp(cross(e.a - a, s) / den, 0.0, 1.0);
    }
    // parallel overlap: nearest shared point
    const double rr = std::max(r.norm2(), 1e-300);
    const double u0 = dot(e.a - a, r) / rr, u1 = dot(e.b - a, r) / rr;
    return std::clamp(std::min(u0, u1), 0.0, 1.0);
}

// where the piece first meets the boundary of P; the start may sit on it
std::optional<double> boundary_cut(const Polygon& P, const InvolutePiece& c, bool from_anchor, double scale) {
    const double t0 = c.theta_start(), t1 = c.theta_end();
    const double len = piece_length(c);
    const int N = std::clamp(std::max({32, static_cast<int>(std::ceil(std::abs(t1 - t0) / 0.004)),
                                       static_cast<int>(std::ceil(len / (1e-3 * scale)))}),
                             32, 20000);
    Point prev = eval(c, t0);
    double tp = t0;
    for (int j = 1; j <= N; ++j) {
        const double tc = j == N ? t1 : t0 + (t1 - t0) * j / N;
        const Point cur = eval(c, tc);
        const bool first = from_anchor && j == 1;
        if (first && point_in_polygon(P, cur) == Location::Outside) return t0;
        double best = std::numeric_limits<double>::infinity();
        std::size_t edge = 0;
        for (std::size_t i = 0; i < P.size(); ++i) {
            const auto u = chord_hit(prev, cur, P.edge(i));
            if (!u) continue;
            if (first && *u * dist(prev, cur) <= 1e-9 * scale) continue;
            if (*u < best) {
                best = *u;
                edge = i;
            }
        }
        if (best <= 1.0) {
            const Segment e = P.edge(edge);
            auto f = [&](double t) { return cross(e.b - e.a, eval(c, t) - e.a); };
            double a = tp, b = tc, fa = f(a), fb = f(b);
            if (fa != 0.0 && fb != 0.0 && (fa > 0) != (fb > 0)) {
                for (int it = 0; it < 200; ++it) {
                    const double m = 0.5 * (a + b);
                    if (m == a || m == b) break;
                    const double fm = f(m);
                    if ((fm > 0) == (fa > 0)) {
                        a = m;
                        fa = fm;
                    } else {
                        b = m;
                    }
                }
                return 0.5 * (a + b);
            }
            return tp + best * (tc - tp);
        }
        prev = cur;
        tp = tc;
    }
    return std::nullopt;
}

struct ChainPoly {
    std::vector<Point> pts;
};

ChainPoly sample_chain(const DeadRegionBoundary& d) {
    ChainPoly out;
    for (const auto& c : d.chain) {
        const double t0 = c.theta_start(), t1 = c.theta_end();
        const int n = std::max(16, static_cast<int>(std::ceil(std::abs(t1 - t0) / 0.01)));
        if (out.pts.empty()) out.pts.push_back(eval(c, t0));
        for (int j = 1; j <= n; ++j) out.pts.push_back(eval(c, j == n ? t1 : t0 + (t1 - t0) * j / n));
    }
    return out;
}

// polyline meets the chain, ignoring chain chords within r of skip
std::optional<Point> hits_chain(const std::vector<Point>& poly, const ChainPoly& ch,
                                std::optional<Point> skip, double r) {
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        const Segment s{poly[i], poly[i + 1]};
        const double lox = std::min(s.a.x, s.b.x) - r, hix = std::max(s.a.x, s.b.x) + r;
        const double loy = std::min(s.a.y, s.b.y) - r, hiy = std::max(s.a.y, s.b.y) + r;
        for (std::size_t j = 0; j + 1 < ch.pts.size(); ++j) {
            const Point a = ch.pts[j], b = ch.pts[j + 1];
            if (std::max(a.x, b.x) < lox || std::min(a.x, b.x) > hix || std::max(a.y, b.y) < loy ||
                std::min(a.y, b.y) > hiy)
                continue;
            if (skip && point_segment_distance(*skip, {a, b}) <= r) continue;
            if (segments_intersect(s, {a, b})) {
                const auto x = line_intersection(s.a, s.b - s.a, a, b - a);
                return x ? *x : a;
            }
        }
    }
    return std::nullopt;
}

bool on_or_inside_hull(const SuffixHull& h, Point q, double tol) {
    std::vector<Point> ring;
    for (const auto& pp : h.boundary) {
        ring.push_back(piece_start(pp));
        if (const auto* c = std::get_if<InvolutePiece>(&pp))
            for (int j = 1; j < 24; ++j)
                ring.push_back(eval(*c, c->theta_start() + (c->theta_end() - c->theta_start()) * j / 24));
    }
    bool inside = ring.size() >= 3;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point a = ring[i], b = ring[(i + 1) % ring.size()];
        if (point_segment_distance(q, {a, b}) <= tol) return true;
        if (cross(b - a, q - a) <= 0) inside = false;
    }
    return inside;
}

std::vector<int> stack_for(const ShortestPathTree& spt, int node) {
    std::vector<int> out;
    for (int v : root_path(spt, node))
        if (out.empty() || dist(spt.point(out.back()), spt.point(v)) > 0.0) out.push_back(v);
    return out;
}

std::vector<Point> points_of(const ShortestPathTree& spt, const std::vector<int>& nodes) {
    std::vector<Point> out;
    for (int v : nodes) out.push_back(spt.point(v));
    return out;
}

}  // namespace

std::optional<LineSeg> case1_extend(const SuffixHull& hull, Point p_i) {
    const Point A = hull.anchor_point();
    const Vec2 d = unit(A - p_i);
    const auto [e_ccw, e_cw] = anchor_tangents(hull);
    const double slack = -std::sin(kCaseAngleEps);
    if (dot(d, e_ccw) >= slack && dot(d, e_cw) >= slack) return LineSeg{p_i, A};
    return std::nullopt;
}

Side unwind_side(const SuffixHull& hull, Point pred) {
    const Vec2 d = unit(hull.anchor_point() - pred);
    const auto [e_ccw, e_cw] = anchor_tangents(hull);
    const double slack = -std::sin(kCaseAngleEps);
    const bool bad_ccw = dot(d, e_ccw) < slack, bad_cw = dot(d, e_cw) < slack;
    if (bad_cw && !bad_ccw) return Side::Cw;
    if (bad_ccw && !bad_cw) return Side::Ccw;
    Vec2 ahead = unit(e_ccw + e_cw);
    if (ahead.norm2() == 0.0) ahead = e_ccw;
    return cross(d, ahead) > 0 ? Side::Cw : Side::Ccw;
}

std::variant<Case2Prefix, NotReachable> case2_extend(const Polygon& P, const SuffixHull& hull,
                                                     std::vector<int>& stack, const ShortestPathTree& spt) {
    if (stack.size() < 2) throw Error(ErrorCode::InvalidArgument, "no predecessor on the stack");
    const double scale = poly_scale(P);
    const double tol = 1e-9 * scale;
    const Point A = hull.anchor_point();
    const Side side = unwind_side(hull, spt.point(stack[stack.size() - 2]));

    const std::size_t cap = 4 * P.size() + 8 + 2 * hull.size();
    DeadRegionBoundary dr = unwind_involute(
        hull, side,
        [&](const InvolutePiece& c, std::size_t idx) { return boundary_cut(P, c, idx == 0, scale); }, cap);

    auto dead = [&](Point g) {
        try {
            return dead_point_test(hull, g, side);
        } catch (const Error&) {
            return true;  // on or inside the hull
        }
    };

    // drop dead geodesic vertices below the anchor
    std::vector<int> live(stack.begin(), stack.end() - 1);
    while (!live.empty() && dead(spt.point(live.back()))) live.pop_back();
    if (live.empty()) return NotReachable{{Witness::Kind::DeadPoint, spt.root, dr}};

    const ChainPoly poly = sample_chain(dr);
    struct Best {
        double cost = std::numeric_limits<double>::infinity();
        int node = kRootNode;
        std::size_t piece = 0;
        double theta = 0.0;
        Point x;
    } best;
    bool found = false;

    std::vector<int> nodes{kRootNode};
    for (int v = 0; v < static_cast<int>(P.size()); ++v)
        if (v != spt.root_vertex) nodes.push_back(v);
    for (int v : nodes) {
        const Point q = spt.point(v);
        if (dist(q, A) <= tol || on_or_inside_hull(hull, q, tol) || dead(q)) continue;
        const double base = v == kRootNode ? 0.0 : spt.dist[v];
        if (base >= best.cost) continue;
        bool reach_checked = false, reach_ok = false;
        for (std::size_t k = 0; k < dr.chain.size(); ++k) {
            const InvolutePiece& c = dr.chain[k];
            if (!(c.theta_b > c.theta_a)) continue;
            const int n = std::max(32, static_cast<int>(std::ceil((c.theta_b - c.theta_a) / 0.02)));
            const auto roots = detail::scan_roots(
                [&](double t) { return cross(q - eval(c, t), tangent_increasing(c, t)); }, c.theta_a,
                c.theta_b, n);
            for (double t : roots) {
                const Point X = eval(c, t);
                const Vec2 u = tangent_increasing(c, t) * static_cast<double>(c.direction);
                if (dot(q - X, u) <= 0) continue;
                const double cost = base + dist(q, X) + dr.start_length[k] + arc_length(c, c.theta_start(), t);
                if (cost >= best.cost) continue;
                if (!segment_inside(P, {q, X}, tol)) continue;
                if (hits_chain({q, X}, poly, X, 1e-6 * scale)) continue;
                if (!reach_checked) {
                    reach_checked = true;
                    const auto path = points_of(spt, stack_for(spt, v));
                    reach_ok = !hits_chain(path, poly, std::nullopt, 0.0);
                }
                if (!reach_ok) continue;
                best = {cost, v, k, t, X};
                found = true;
            }
        }
    }

    if (!found) {
        if (!dr.boundary_hit)
            throw Error(ErrorCode::SolverFailure, "no tangent to the dead-region chain and no separation");
        Witness w{Witness::Kind::Separation, *dr.boundary_hit, dr};
        if (auto x = hits_chain(points_of(spt, live), poly, A, 1e-6 * scale)) w.point = *x;
        return NotReachable{w};
    }

    Case2Prefix out;
    out.node = best.node;
    if (dist(spt.point(best.node), best.x) > 0.0) out.pieces.push_back(LineSeg{spt.point(best.node), best.x});
    for (std::size_t j = best.piece + 1; j-- > 0;) {
        InvolutePiece c = dr.chain[j];
        if (j == best.piece) {
            const double t0 = c.theta_start();
            c.theta_a = std::min(t0, best.theta);
            c.theta_b = std::max(t0, best.theta);
        }
        if (!(c.theta_b > c.theta_a)) continue;
        out.pieces.push_back(reversed(c));
    }
    stack = stack_for(spt, best.node);
    return out;
}

SAPathResult shortest_sa_path(const Polygon& P, Point s, Point t) {
    const GeodesicPath g = geodesic(P, s, t);
    SAPath path{s, t, {}};
    if (g.points.size() < 2) return path;
    const ShortestPathTree spt = build_spt(P, s);

    std::vector<int> stack{kRootNode};
    for (std::size_t i = 1; i + 1 < g.points.size(); ++i) stack.push_back(g.vertex[i]);
    const Point p2 = g.points[g.points.size() - 2];
    std::vector<PathPiece> rev{LineSeg{p2, t}};
    SuffixHull hull = make_hull({rev.front()}, p2);

    const std::size_t cap = 20 * P.size() + 100;
    for (std::size_t it = 0; stack.size() > 1; ++it) {
        if (it > cap) throw Error(ErrorCode::SolverFailure, "construction did not terminate");
        const Point pred = spt.point(stack[stack.size() - 2]);
        if (auto seg = case1_extend(hull, pred)) {
            rev.push_back(*seg);
            stack.pop_back();
            hull = hull_update(hull, {*seg}, pred);
            continue;
        }
        auto r = case2_extend(P, hull, stack, spt);
        if (auto* nr = std::get_if<NotReachable>(&r)) return *nr;
        const auto& pre = std::get<Case2Prefix>(r);
        for (auto it2 = pre.pieces.rbegin(); it2 != pre.pieces.rend(); ++it2) rev.push_back(*it2);
        hull = hull_update(hull, pre.pieces, spt.point(pre.node));
    }
    path.pieces.assign(rev.rbegin(), rev.rend());
    return path;
}

}  // namespace sap
