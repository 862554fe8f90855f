#include <algorithm>
#include <cmath>

#include "sap/shortest.hpp"

namespace sap {

namespace {

constexpr double kThetaStep = 0.01;

struct Curve {
    InvolutePiece c;
    std::vector<double> thetas;  // ascending sample parameters
};

struct Sample {
    Point p;
    int curve = -1;  // -1 for segment endpoints
    int idx = 0;
};

InvolutePiece sub_piece(const InvolutePiece& c, double lo, double hi, int direction) {
    InvolutePiece s = c;
    s.theta_a = std::min(lo, hi);
    s.theta_b = std::max(lo, hi);
    s.direction = direction;
    return s;
}

double extent(const std::vector<Sample>& pts) {
    double s = 1.0;
    for (const auto& q : pts) s = std::max({s, std::abs(q.p.x), std::abs(q.p.y)});
    return s;
}

// support point of the curve near sample idx for outward normal nrm
double support(const Curve& cv, int idx, Vec2 d, Vec2 nrm) {
    const int n = static_cast<int>(cv.thetas.size());
    const double lo = cv.thetas[std::max(idx - 1, 0)], hi = cv.thetas[std::min(idx + 1, n - 1)];
    double best = lo, best_v = dot(eval(cv.c, lo), nrm);
    auto consider = [&](double t) {
        const double v = dot(eval(cv.c, t), nrm);
        if (v > best_v) {
            best_v = v;
            best = t;
        }
    };
    consider(hi);
    if (d.norm2() > 0)
        if (auto t = theta_for_tangent_direction(sub_piece(cv.c, lo, hi, 1), Direction(d))) consider(*t);
    return best;
}

struct End {
    Point p;
    double theta = 0.0;
};

std::vector<Point> piece_junctions(const std::vector<PathPiece>& b) {
    std::vector<Point> out;
    for (const auto& p : b) out.push_back(piece_start(p));
    return out;
}

// nearest parameter of a curve to q by scan plus bisection on the projection
std::optional<double> curve_foot(const InvolutePiece& c, Point q, double tol) {
    const int N = 256;
    double best = c.theta_a, bd = dist(eval(c, c.theta_a), q);
    for (int i = 1; i <= N; ++i) {
        const double t = c.theta_a + (c.theta_b - c.theta_a) * i / N;
        const double d = dist(eval(c, t), q);
        if (d < bd) {
            bd = d;
            best = t;
        }
    }
    double lo = std::max(c.theta_a, best - (c.theta_b - c.theta_a) / N);
    double hi = std::min(c.theta_b, best + (c.theta_b - c.theta_a) / N);
    for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if (dist(eval(c, m1), q) < dist(eval(c, m2), q))
            hi = m2;
        else
            lo = m1;
    }
    const double t = 0.5 * (lo + hi);
    if (dist(eval(c, t), q) <= tol) return t;
    return std::nullopt;
}

}  // namespace

double SuffixHull::perimeter() const {
    double s = 0.0;
    for (const auto& p : boundary) s += piece_length(p);
    return s;
}

SuffixHull make_hull(const std::vector<PathPiece>& pieces, Point anchor) {
    std::vector<Curve> curves;
    std::vector<Sample> pts;
    for (const auto& pp : pieces) {
        if (const auto* l = std::get_if<LineSeg>(&pp)) {
            pts.push_back({l->from});
            pts.push_back({l->to});
            continue;
        }
        const auto& c = std::get<InvolutePiece>(pp);
        if (!(c.theta_b > c.theta_a)) {
            pts.push_back({eval(c, c.theta_a)});
            continue;
        }
        Curve cv{c, {}};
        const int n = std::max(9, static_cast<int>(std::ceil((c.theta_b - c.theta_a) / kThetaStep)) + 1);
        for (int i = 0; i < n; ++i) cv.thetas.push_back(c.theta_a + (c.theta_b - c.theta_a) * i / (n - 1));
        cv.thetas.back() = c.theta_b;
        const int id = static_cast<int>(curves.size());
        for (int i = 0; i < n; ++i) pts.push_back({eval(c, cv.thetas[i]), id, i});
        curves.push_back(std::move(cv));
    }
    pts.push_back({anchor});
    const double scale = extent(pts);
    const double tol = 1e-12 * scale;

    // lexicographic order; coincident points keep a curve tag when any has one
    std::sort(pts.begin(), pts.end(), [](const Sample& a, const Sample& b) {
        return a.p.x < b.p.x || (a.p.x == b.p.x && a.p.y < b.p.y);
    });
    std::vector<Sample> uniq;
    for (const auto& s : pts) {
        if (!uniq.empty() && dist(uniq.back().p, s.p) <= tol) {
            if (uniq.back().curve < 0 && s.curve >= 0) {
                const Point keep = uniq.back().p;
                uniq.back() = s;
                uniq.back().p = keep;
            }
            continue;
        }
        uniq.push_back(s);
    }

    auto left = [](const Sample& o, const Sample& a, const Sample& b) {
        const Vec2 u = a.p - o.p, v = b.p - o.p;
        return cross(u, v) > 1e-14 * u.norm() * v.norm();
    };
    std::vector<Sample> H;
    if (uniq.size() <= 2) {
        H = uniq;
    } else {
        std::vector<Sample> h(2 * uniq.size());
        std::size_t k = 0;
        for (const auto& s : uniq) {
            while (k >= 2 && !left(h[k - 2], h[k - 1], s)) --k;
            h[k++] = s;
        }
        for (std::size_t i = uniq.size() - 1, lo = k + 1; i-- > 0;) {
            while (k >= lo && !left(h[k - 2], h[k - 1], uniq[i])) --k;
            h[k++] = uniq[i];
        }
        h.resize(k - 1);
        H = std::move(h);
    }

    SuffixHull out;
    const std::size_t m = H.size();
    if (m == 1) {
        out.boundary.push_back(LineSeg{H[0].p, H[0].p});
    } else {
        // edge i joins H[i] and H[i+1]; curve edges follow a single piece
        std::vector<bool> curved(m, false);
        for (std::size_t i = 0; i < m && m > 2; ++i) {
            const Sample &a = H[i], &b = H[(i + 1) % m];
            if (a.curve < 0 || a.curve != b.curve) continue;
            const int lo = std::min(a.idx, b.idx), hi = std::max(a.idx, b.idx);
            bool ok = true;
            const Curve& cv = curves[a.curve];
            for (int j = lo + 1; j < hi && ok; ++j)
                ok = point_segment_distance(eval(cv.c, cv.thetas[j]), {a.p, b.p}) <= 1e3 * tol;
            curved[i] = ok;
        }
        std::size_t first = 0;
        while (first < m && curved[(first + m - 1) % m]) ++first;
        if (first == m) throw Error(ErrorCode::SolverFailure, "hull without a straight bridge");

        struct Run {
            std::size_t a, b;  // hull vertex positions (relative order)
            End in, out;
        };
        std::vector<Run> runs;
        for (std::size_t k = 0; k < m;) {
            const std::size_t a = (first + k) % m;
            std::size_t len = 0;
            while (k + len + 1 < m && curved[(first + k + len) % m]) ++len;
            const std::size_t b = (first + k + len) % m;
            runs.push_back({a, b, {H[a].p, 0.0}, {H[b].p, 0.0}});
            if (H[a].curve >= 0) runs.back().in.theta = curves[H[a].curve].thetas[H[a].idx];
            if (H[b].curve >= 0) runs.back().out.theta = curves[H[b].curve].thetas[H[b].idx];
            k += len + 1;
        }

        // refine each bridge run[r].out -> run[r+1].in on the exact curves
        for (std::size_t r = 0; r < runs.size(); ++r) {
            Run& R = runs[r];
            Run& S = runs[(r + 1) % runs.size()];
            const Sample &U = H[R.b], &V = H[S.a];
            if (U.curve < 0 && V.curve < 0) continue;
            for (int it = 0; it < 100; ++it) {
                const Vec2 d = S.in.p - R.out.p;
                const Vec2 nrm{d.y, -d.x};
                Point nu = R.out.p, nv = S.in.p;
                if (U.curve >= 0) {
                    R.out.theta = support(curves[U.curve], U.idx, d, nrm);
                    nu = eval(curves[U.curve].c, R.out.theta);
                }
                if (V.curve >= 0) {
                    S.in.theta = support(curves[V.curve], V.idx, d, nrm);
                    nv = eval(curves[V.curve].c, S.in.theta);
                }
                const double moved = dist(nu, R.out.p) + dist(nv, S.in.p);
                R.out.p = nu;
                S.in.p = nv;
                if (moved <= 1e-15 * scale) break;
            }
        }

        for (std::size_t r = 0; r < runs.size(); ++r) {
            Run& R = runs[r];
            const Sample& A = H[R.a];
            if (A.curve >= 0 && A.curve == H[R.b].curve) {
                const Curve& cv = curves[A.curve];
                int dir = 0;
                if (R.a != R.b) {
                    dir = H[R.b].idx > A.idx ? 1 : -1;
                } else if (R.out.theta != R.in.theta) {
                    dir = R.out.theta > R.in.theta ? 1 : -1;
                    // keep only if the curve turns the hull's way there
                    const Vec2 tin = tangent_increasing(cv.c, 0.5 * (R.in.theta + R.out.theta)) * dir;
                    const Vec2 din = R.in.p - runs[(r + runs.size() - 1) % runs.size()].out.p;
                    if (dot(tin, din) <= 0) dir = 0;
                }
                if (dir != 0 && (R.out.theta - R.in.theta) * dir > 1e-13) {
                    out.boundary.push_back(sub_piece(cv.c, R.in.theta, R.out.theta, dir));
                } else {
                    R.out.p = R.in.p;
                }
            } else if (R.a == R.b) {
                R.out.p = R.in.p;
            }
            const Point to = runs[(r + 1) % runs.size()].in.p;
            if (dist(R.out.p, to) > tol || runs.size() == 1 || m == 2) out.boundary.push_back(LineSeg{R.out.p, to});
        }
    }

    // anchor as a junction, splitting a piece when it lands inside one
    const double atol = 1e-9 * scale;
    std::vector<Point> J = piece_junctions(out.boundary);
    std::size_t best = 0;
    for (std::size_t i = 1; i < J.size(); ++i)
        if (dist(J[i], anchor) < dist(J[best], anchor)) best = i;
    if (dist(J[best], anchor) > atol) {
        bool split = false;
        for (std::size_t i = 0; i < out.boundary.size() && !split; ++i) {
            auto& pp = out.boundary[i];
            if (auto* l = std::get_if<LineSeg>(&pp)) {
                if (point_segment_distance(anchor, {l->from, l->to}) > atol) continue;
                const LineSeg tail{anchor, l->to};
                l->to = anchor;
                out.boundary.insert(out.boundary.begin() + static_cast<long>(i) + 1, tail);
                best = i + 1;
                split = true;
            } else {
                const auto c = std::get<InvolutePiece>(pp);
                const auto t = curve_foot(c, anchor, 1e-7 * scale);
                if (!t || *t <= c.theta_a || *t >= c.theta_b) continue;
                const double t0 = c.theta_start(), t1 = c.theta_end();
                pp = sub_piece(c, t0, *t, c.direction);
                out.boundary.insert(out.boundary.begin() + static_cast<long>(i) + 1,
                                    sub_piece(c, *t, t1, c.direction));
                best = i + 1;
                split = true;
            }
        }
        if (!split) throw Error(ErrorCode::SolverFailure, "anchor is not on the suffix hull");
    }
    const std::size_t n = out.boundary.size();
    out.anchor = best;
    if (auto* l = std::get_if<LineSeg>(&out.boundary[best])) l->from = anchor;
    if (auto* l = std::get_if<LineSeg>(&out.boundary[(best + n - 1) % n])) l->to = anchor;

    out.dist_ccw.assign(n, 0.0);
    out.dist_cw.assign(n, 0.0);
    const double per = out.perimeter();
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = (best + k) % n;
        out.dist_ccw[j] = acc;
        out.dist_cw[j] = k == 0 ? 0.0 : per - acc;
        acc += piece_length(out.boundary[j]);
    }
    return out;
}

SuffixHull hull_update(const SuffixHull& hull, const std::vector<PathPiece>& prefix, Point new_anchor) {
    std::vector<PathPiece> all = hull.boundary;
    all.insert(all.end(), prefix.begin(), prefix.end());
    return make_hull(all, new_anchor);
}

}  // namespace sap
