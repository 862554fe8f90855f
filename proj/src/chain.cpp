#include <algorithm>
#include <cmath>
#include <numbers>

#include "sap/detail/roots.hpp"
#include "sap/shortest.hpp"

namespace sap {

namespace {

constexpr double kPi = std::numbers::pi;

// k-th hull piece met by the tangent point, oriented along its motion
PathPiece traversed(const SuffixHull& h, Side side, std::size_t k) {
    const std::size_t n = h.size();
    if (side == Side::Ccw) return h.boundary[(h.anchor + k) % n];
    return reversed(h.boundary[(h.anchor + n - 1 - k % n) % n]);
}

// turn from e0 to e1 taken in the traversal sense; convex hulls only turn one way
double turn(Vec2 e0, Vec2 e1, Side side) {
    double a = std::atan2(cross(e0, e1), dot(e0, e1));
    if (side == Side::Ccw) {
        if (a <= -kPi + 1e-9) return kPi;
        return std::max(a, 0.0);
    }
    if (a >= kPi - 1e-9) return -kPi;
    return std::min(a, 0.0);
}

// parameters where the tangent line of c passes through q
std::vector<double> tangent_params(const InvolutePiece& c, Point q) {
    const int n = std::max(16, static_cast<int>(std::ceil((c.theta_b - c.theta_a) / 0.05)));
    return detail::scan_roots(
        [&](double t) { return cross(eval(c, t) - q, tangent_increasing(c, t)); }, c.theta_a,
        c.theta_b, n);
}

struct Cand {
    Point p;
    std::size_t piece;
    std::optional<double> theta;
};

void curve_candidates(const std::vector<PathPiece>& chain, std::size_t i, Point q, std::vector<Cand>& out) {
    if (const auto* c = std::get_if<InvolutePiece>(&chain[i]))
        for (double t : tangent_params(*c, q))
            if (t > c->theta_a && t < c->theta_b) out.push_back({eval(*c, t), i, t});
}

// the candidate with every other on the requested side of q -> it
std::size_t extreme(Point q, const std::vector<Cand>& cs, int side) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < cs.size(); ++i)
        if (cross(cs[best].p - q, cs[i].p - q) * side < 0) best = i;
    return best;
}

bool supports(Point q, Point x, const std::vector<PathPiece>& chain, int side, double scale) {
    const Vec2 d = x - q;
    if (d.norm() <= 1e-12 * scale) return false;
    for (const auto& pp : chain) {
        std::vector<Point> pts{piece_start(pp), piece_end(pp)};
        if (const auto* c = std::get_if<InvolutePiece>(&pp))
            for (int j = 1; j < 32; ++j) pts.push_back(eval(*c, c->theta_a + (c->theta_b - c->theta_a) * j / 32));
        for (Point y : pts)
            if (cross(d, y - q) * side < -1e-9 * scale * std::max(1.0, d.norm())) return false;
    }
    return true;
}

double chain_scale(Point q, const std::vector<PathPiece>& chain) {
    double s = std::max({1.0, std::abs(q.x), std::abs(q.y)});
    for (const auto& pp : chain) {
        const Point a = piece_start(pp);
        s = std::max({s, std::abs(a.x), std::abs(a.y)});
    }
    return s;
}

TangentPoint finish_tangent(Point q, const std::vector<PathPiece>& chain, int side, const Cand& c) {
    if (!supports(q, c.p, chain, side, chain_scale(q, chain)))
        throw Error(ErrorCode::NoTangent, "point sees the chain from its concave side");
    return {c.p, c.piece, c.theta};
}

Point P_of(const std::vector<PathPiece>& chain, std::size_t i) {
    return i < chain.size() ? piece_start(chain[i]) : piece_end(chain.back());
}

// q inside or on the region bounded by the chain and its chord
void reject_inside(Point q, const std::vector<PathPiece>& chain) {
    std::vector<Point> loop;
    for (const auto& pp : chain) {
        loop.push_back(piece_start(pp));
        if (const auto* c = std::get_if<InvolutePiece>(&pp))
            for (int j = 1; j < 64; ++j)
                loop.push_back(eval(*c, c->theta_start() + (c->theta_end() - c->theta_start()) * j / 64));
    }
    loop.push_back(piece_end(chain.back()));
    const double area = signed_area(loop);
    if (area == 0.0) return;
    const double o = area > 0 ? 1.0 : -1.0;
    const double eps = 1e-12 * chain_scale(q, chain);
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const Point a = loop[i], b = loop[(i + 1) % loop.size()];
        if (cross(b - a, q - a) * o < -eps * std::max(1.0, dist(a, b))) return;
    }
    throw Error(ErrorCode::NoTangent, "point lies inside the chain");
}

}  // namespace

std::string to_string(Witness::Kind k) { return k == Witness::Kind::DeadPoint ? "dead-point" : "separation"; }

TangentPoint tangent_point_chain_scan(Point q, const std::vector<PathPiece>& chain, int side) {
    if (chain.empty()) throw Error(ErrorCode::InvalidArgument, "empty chain");
    reject_inside(q, chain);
    std::vector<Cand> cs;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        cs.push_back({piece_start(chain[i]), i, std::nullopt});
        curve_candidates(chain, i, q, cs);
    }
    cs.push_back({piece_end(chain.back()), chain.size() - 1, std::nullopt});
    return finish_tangent(q, chain, side, cs[extreme(q, cs, side)]);
}

TangentPoint tangent_point_chain(Point q, const std::vector<PathPiece>& chain, int side) {
    if (chain.empty()) throw Error(ErrorCode::InvalidArgument, "empty chain");
    reject_inside(q, chain);
    const std::size_t m = chain.size();
    // junctions closed by the chord, counter-clockwise
    std::vector<Point> V;
    for (const auto& pp : chain) V.push_back(piece_start(pp));
    V.push_back(piece_end(chain.back()));
    const bool flip = signed_area(V) < 0;
    if (flip) std::reverse(V.begin(), V.end());
    const std::size_t n = V.size();
    auto at = [&](std::size_t i) { return V[i % n]; };
    auto left = [&](Point a, Point b) { return cross(a - q, b - q); };
    // V[i] supports the requested side against both neighbours
    const int s = flip ? -side : side;
    auto tangent_at = [&](std::size_t i) {
        return left(at(i), at(i + n - 1)) * s >= 0 && left(at(i), at(i + 1)) * s >= 0;
    };
    // binary search on the closed polygon: the edge signs seen from q form
    // one visible and one hidden run
    auto search = [&]() -> std::optional<std::size_t> {
        if (n < 3) return std::nullopt;
        if (tangent_at(0)) return 0;
        auto dn = [&](std::size_t i) { return left(at(i), at(i + 1)) * s < 0; };
        std::size_t a = 0, b = n;
        for (int guard = 0; guard < 128 && b - a > 1; ++guard) {
            const std::size_t c = (a + b) / 2;
            if (tangent_at(c)) return c;
            const bool dc = dn(c), da = dn(a);
            if (da) {
                if (!dc)
                    a = c;
                else if (left(at(a), at(c)) * s < 0)
                    b = c;
                else
                    a = c;
            } else {
                if (dc)
                    b = c;
                else if (left(at(a), at(c)) * s > 0)
                    b = c;
                else
                    a = c;
            }
        }
        for (std::size_t c : {a, b})
            if (tangent_at(c)) return c;
        return std::nullopt;
    };
    std::size_t idx;
    if (auto hit = search()) {
        idx = *hit % n;
    } else {
        // two junctions only, or a degenerate tie: pick directly
        idx = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (left(at(idx), at(i)) * s < 0) idx = i;
    }
    if (flip) idx = n - 1 - idx;
    std::vector<Cand> cs{{P_of(chain, idx), std::min(idx, m - 1), std::nullopt}};
    if (idx > 0) curve_candidates(chain, idx - 1, q, cs);
    if (idx < m) curve_candidates(chain, idx, q, cs);
    return finish_tangent(q, chain, side, cs[extreme(q, cs, side)]);
}

std::variant<CommonTangent, Crossing> common_tangent(const std::vector<PathPiece>& A,
                                                     const std::vector<PathPiece>& B, TangentKind kind) {
    if (A.empty() || B.empty()) throw Error(ErrorCode::InvalidArgument, "empty chain");
    auto poly = [](const std::vector<PathPiece>& ch) {
        std::vector<Point> out;
        for (const auto& pp : ch) {
            out.push_back(piece_start(pp));
            if (const auto* c = std::get_if<InvolutePiece>(&pp)) {
                const int n = std::max(16, static_cast<int>(std::ceil((c->theta_b - c->theta_a) / 0.01)));
                for (int j = 1; j < n; ++j) {
                    const double t = c->theta_start() + (c->theta_end() - c->theta_start()) * j / n;
                    out.push_back(eval(*c, t));
                }
            }
        }
        out.push_back(piece_end(ch.back()));
        return out;
    };
    const auto pa = poly(A), pb = poly(B);
    for (std::size_t i = 0; i + 1 < pa.size(); ++i)
        for (std::size_t j = 0; j + 1 < pb.size(); ++j)
            if (segments_intersect({pa[i], pa[i + 1]}, {pb[j], pb[j + 1]})) {
                const auto x = line_intersection(pa[i], pa[i + 1] - pa[i], pb[j], pb[j + 1] - pb[j]);
                return Crossing{x ? *x : pa[i]};
            }

    const int side_b = kind == TangentKind::Outer ? 1 : -1;
    TangentPoint a{piece_start(A.front()), 0, std::nullopt};
    TangentPoint b = tangent_point_chain_scan(a.point, B, side_b);
    for (int it = 0; it < 200; ++it) {
        const TangentPoint na = tangent_point_chain_scan(b.point, A, -1);
        const TangentPoint nb = tangent_point_chain_scan(na.point, B, side_b);
        const bool still = dist(na.point, a.point) + dist(nb.point, b.point) <= 1e-14 * chain_scale(a.point, A);
        a = na;
        b = nb;
        if (still) break;
    }
    return CommonTangent{a, b};
}

HullTangent string_tangent(const SuffixHull& hull, Point g, Side side) {
    // the free string leaves the hull against the unwinding motion
    const TangentPoint tp = tangent_point_chain_scan(g, hull.boundary, side == Side::Cw ? -1 : 1);
    const std::size_t n = hull.size();
    const double per = hull.perimeter();
    double ccw;
    if (tp.theta) {
        const auto& c = std::get<InvolutePiece>(hull.boundary[tp.piece]);
        ccw = hull.dist_ccw[tp.piece] + arc_length(c, c.theta_start(), *tp.theta);
    } else {
        std::size_t j = tp.piece;
        if (dist(tp.point, hull.junction(j)) > dist(tp.point, hull.junction(j + 1))) j = (j + 1) % n;
        ccw = hull.dist_ccw[j];
        if (j == hull.anchor) return {tp.point, 0.0};
    }
    return {tp.point, side == Side::Ccw ? ccw : per - ccw};
}

bool dead_point_test(const SuffixHull& hull, Point g, Side side) {
    const HullTangent h = string_tangent(hull, g, side);
    return dist(g, h.point) < h.boundary_length - 1e-12 * std::max(1.0, h.boundary_length);
}

DeadRegionBoundary unwind_involute(const SuffixHull& hull, Side side, const ChainStop& stop,
                                   std::size_t max_pieces) {
    DeadRegionBoundary out;
    out.side = side;
    out.anchor = hull.anchor_point();
    if (!(hull.perimeter() > 0.0)) {
        // zero string length: a degenerate circle about the point
        InvolutePiece c;
        c.order = 0;
        c.r0 = 0.0;
        c.center = out.anchor;
        c.theta_a = 0.0;
        c.theta_b = 2 * kPi;
        c.direction = static_cast<int>(side);
        out.chain.push_back(c);
        out.start_length.push_back(0.0);
        return out;
    }

    Point X = out.anchor;
    double L = 0.0, len = 0.0;
    std::optional<Vec2> e_prev;
    // true when the stop rule cut the piece
    auto emit = [&](InvolutePiece c) {
        out.start_length.push_back(len);
        const auto cut = stop ? stop(c, out.chain.size()) : std::nullopt;
        if (cut) {
            if (c.direction > 0)
                c.theta_b = std::clamp(*cut, c.theta_a, c.theta_b);
            else
                c.theta_a = std::clamp(*cut, c.theta_a, c.theta_b);
            out.boundary_hit = eval(c, c.theta_end());
        }
        out.chain.push_back(c);
        len += piece_length(c);
        X = eval(c, c.theta_end());
        if (!cut && out.chain.size() >= max_pieces)
            throw Error(ErrorCode::SolverFailure,
                        "dead-region chain exceeded " + std::to_string(max_pieces) + " pieces");
        return cut.has_value();
    };

    const std::size_t guard = 4 * max_pieces + 4 * hull.size() + 8;
    for (std::size_t k = 0; k < guard; ++k) {
        const PathPiece tp = traversed(hull, side, k);
        const double plen = piece_length(tp);
        if (!(plen > 0.0)) continue;
        const Vec2 e0 = start_tangent(tp);
        if (e_prev) {
            const double a = turn(*e_prev, e0, side);
            if (std::abs(a) > 1e-14 && L > 0.0) {
                InvolutePiece arc;
                arc.order = 0;
                arc.r0 = L;
                arc.center = piece_start(tp);
                const double a0 = std::atan2(-e_prev->y, -e_prev->x);
                arc.theta_a = std::min(a0, a0 + a);
                arc.theta_b = std::max(a0, a0 + a);
                arc.direction = a > 0 ? 1 : -1;
                if (emit(arc)) return out;
            }
        }
        if (const auto* c = std::get_if<InvolutePiece>(&tp)) {
            const AnchorSolution sol = anchor_at_theta(*c, X, c->theta_start());
            if (sol.residual > 1e-8)
                throw Error(ErrorCode::SolverFailure,
                            "chain piece misses its start by " + std::to_string(sol.residual));
            if (emit(make_child(*c, sol.c, c->theta_a, c->theta_b, c->direction))) return out;
        }
        L += plen;
        e_prev = end_tangent(tp);
    }
    throw Error(ErrorCode::SolverFailure, "dead-region chain made no progress");
}

}  // namespace sap
