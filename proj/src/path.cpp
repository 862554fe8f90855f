#include "sap/path.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sap {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Vec2 unit(Vec2 v) {
    const double n = v.norm();
    return n > 0 ? v / n : Vec2{};
}

// parameters in [0,1] clustered toward both ends
std::vector<double> sample_params(int n) {
    n = std::max(n, 2);
    std::vector<double> u;
    for (int j = 0; j < n; ++j) u.push_back(0.5 * (1 - std::cos(std::numbers::pi * j / (n - 1))));
    for (double e : {1e-6, 1e-4}) {
        u.push_back(e);
        u.push_back(1 - e);
    }
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

}  // namespace

bool is_line(const PathPiece& p) { return std::holds_alternative<LineSeg>(p); }

Point piece_start(const PathPiece& p) {
    return std::visit(overloaded{[](const LineSeg& s) { return s.from; },
                                 [](const InvolutePiece& c) { return eval(c, c.theta_start()); }},
                      p);
}

Point piece_end(const PathPiece& p) {
    return std::visit(overloaded{[](const LineSeg& s) { return s.to; },
                                 [](const InvolutePiece& c) { return eval(c, c.theta_end()); }},
                      p);
}

double piece_length(const PathPiece& p) {
    return std::visit(overloaded{[](const LineSeg& s) { return dist(s.from, s.to); },
                                 [](const InvolutePiece& c) { return piece_length(c); }},
                      p);
}

Vec2 start_tangent(const PathPiece& p) {
    return std::visit(
        overloaded{[](const LineSeg& s) { return unit(s.to - s.from); },
                   [](const InvolutePiece& c) { return eval_tangent_direction(c, c.theta_start()).unit(); }},
        p);
}

Vec2 end_tangent(const PathPiece& p) {
    return std::visit(
        overloaded{[](const LineSeg& s) { return unit(s.to - s.from); },
                   [](const InvolutePiece& c) { return eval_tangent_direction(c, c.theta_end()).unit(); }},
        p);
}

Point piece_eval(const PathPiece& p, double s) {
    return std::visit(overloaded{[&](const LineSeg& l) {
                                     const double L = dist(l.from, l.to);
                                     if (L == 0) return l.from;
                                     return l.from + (l.to - l.from) * std::clamp(s / L, 0.0, 1.0);
                                 },
                                 [&](const InvolutePiece& c) { return eval(c, theta_at_length(c, s)); }},
                      p);
}

PathPiece reversed(const PathPiece& p) {
    return std::visit(overloaded{[](const LineSeg& l) -> PathPiece { return LineSeg{l.to, l.from}; },
                                 [](const InvolutePiece& c) -> PathPiece {
                                     InvolutePiece r = c;
                                     r.direction = -c.direction;
                                     return r;
                                 }},
                      p);
}

double path_length(const SAPath& path) {
    double s = 0.0;
    for (const auto& p : path.pieces) s += piece_length(p);
    return s;
}

Point eval_path(const SAPath& path, double s_arc) {
    const double total = path_length(path);
    if (s_arc < -1e-12 || s_arc > total + 1e-9 * std::max(1.0, total))
        throw Error(ErrorCode::OutOfRange, "arc parameter outside [0, length]");
    if (path.pieces.empty()) return path.source;
    double s = std::max(0.0, s_arc);
    for (const auto& p : path.pieces) {
        const double L = piece_length(p);
        if (s <= L) return piece_eval(p, s);
        s -= L;
    }
    return piece_end(path.pieces.back());
}

std::vector<Point> bend_points(const SAPath& path, double angle_eps) {
    std::vector<Point> out;
    for (std::size_t i = 0; i + 1 < path.pieces.size(); ++i) {
        const Vec2 a = end_tangent(path.pieces[i]), b = start_tangent(path.pieces[i + 1]);
        const double ang = std::atan2(std::abs(cross(a, b)), dot(a, b));
        if (ang > angle_eps) out.push_back(piece_end(path.pieces[i]));
    }
    return out;
}

double detour_ratio(const SAPath& path) {
    const double d = dist(path.source, path.target);
    if (d == 0.0) throw Error(ErrorCode::DegenerateEndpoints, "source equals target");
    return path_length(path) / d;
}

double continuity_defect(const SAPath& path) {
    if (path.pieces.empty()) return dist(path.source, path.target);
    double worst = dist(path.source, piece_start(path.pieces.front()));
    for (std::size_t i = 0; i + 1 < path.pieces.size(); ++i)
        worst = std::max(worst, dist(piece_end(path.pieces[i]), piece_start(path.pieces[i + 1])));
    return std::max(worst, dist(piece_end(path.pieces.back()), path.target));
}

std::vector<PathSample> sample_path(const SAPath& path, int samples_per_piece) {
    std::vector<PathSample> out;
    const std::vector<double> us = sample_params(samples_per_piece);
    for (std::size_t k = 0; k < path.pieces.size(); ++k) {
        const PathPiece& pp = path.pieces[k];
        if (piece_length(pp) <= 1e-14) continue;
        if (const auto* l = std::get_if<LineSeg>(&pp)) {
            const Vec2 d = unit(l->to - l->from);
            for (double u : us) out.push_back({l->from + (l->to - l->from) * u, d, k});
        } else {
            const auto& c = std::get<InvolutePiece>(pp);
            const double t0 = c.theta_start(), t1 = c.theta_end();
            for (double u : us) {
                const double t = (u == 1.0) ? t1 : t0 + (t1 - t0) * u;
                out.push_back({eval(c, t), eval_tangent_direction(c, t).unit(), k});
            }
        }
    }
    if (out.empty()) out.push_back({path.source, {}, 0});
    return out;
}

VerificationReport verify_normal_property(const SAPath& path, const Polygon* P,
                                          int samples_per_piece, double tol) {
    if (samples_per_piece < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 samples");
    const auto S = sample_path(path, samples_per_piece);
    VerificationReport rep;
    rep.samples = S.size();
    rep.kind = "normal";
    std::size_t wi = 0, wj = 0;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            const double m = dot(S[j].p - S[i].p, S[i].tangent);
            if (m < rep.worst_margin) {
                rep.worst_margin = m;
                wi = i;
                wj = j;
            }
        }
    if (rep.worst_margin < -tol) {
        rep.pass = false;
        rep.a = S[wi].p;
        rep.b = S[wj].p;
    }
    if (P) {
        for (const auto& s : S)
            if (point_in_polygon(*P, s.p, tol) == Location::Outside) {
                if (rep.pass) {
                    rep.pass = false;
                    rep.kind = "containment";
                    rep.a = s.p;
                }
                break;
            }
        for (const auto& pp : path.pieces)
            if (const auto* l = std::get_if<LineSeg>(&pp); l && rep.pass)
                if (!segment_inside(*P, {l->from, l->to}, tol)) {
                    rep.pass = false;
                    rep.kind = "containment";
                    rep.a = l->from;
                    rep.b = l->to;
                }
    }
    return rep;
}

VerificationReport verify_triples(const SAPath& path, int samples_per_piece, double tol) {
    if (samples_per_piece < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 samples");
    const auto S = sample_path(path, samples_per_piece);
    VerificationReport rep;
    rep.samples = S.size();
    rep.kind = "triple";
    double worst = 0.0;  // max of |bc| - |ac|
    std::size_t wb = 0, wc = 0;
    for (std::size_t c = 0; c < S.size(); ++c) {
        double min_ac = std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b < c; ++b) {
            const double bc = dist(S[b].p, S[c].p);
            if (bc - min_ac > worst) {
                worst = bc - min_ac;
                wb = b;
                wc = c;
            }
            min_ac = std::min(min_ac, bc);
        }
    }
    rep.worst_margin = -worst;
    if (worst > tol) {
        rep.pass = false;
        const double bc = dist(S[wb].p, S[wc].p);
        std::size_t wa = 0;
        while (wa < wb && dist(S[wa].p, S[wc].p) >= bc - tol) ++wa;
        rep.a = S[wa].p;
        rep.b = S[wb].p;
        rep.c = S[wc].p;
    }
    return rep;
}

SAPath polyline_path(const std::vector<Point>& pts) {
    SAPath p;
    if (pts.empty()) return p;
    p.source = pts.front();
    p.target = pts.back();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) p.pieces.push_back(LineSeg{pts[i], pts[i + 1]});
    return p;
}

}  // namespace sap
