#include "sap/involute.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sap {

namespace {

constexpr double kPi = std::numbers::pi;

// a_i(t) with an explicit coefficient list c_1..c_m (m >= i)
double poly_a(double r0, const std::vector<double>& c, int i, double t) {
    double term = 1.0;  // t^m / m!
    double sum = 0.0;
    // a_i = sum_{j=0..i} c_j t^(i-j)/(i-j)!, c_0 = r0
    for (int m = 0; m <= i; ++m) {
        const int j = i - m;
        const double cj = (j == 0) ? r0 : c[j - 1];
        sum += cj * term;
        term *= t / (m + 1);
    }
    return sum;
}

// sigma_k and whether w_k is the radial frame vector u
int sigma(int k) {
    if (k % 2 == 1) return ((k - 1) / 2) % 2 == 0 ? 1 : -1;
    return (k / 2) % 2 == 0 ? 1 : -1;
}
bool radial(int k) { return k % 2 == 1; }

Vec2 frame_w(int k, double t) {
    return radial(k) ? Vec2{std::cos(t), std::sin(t)} : Vec2{-std::sin(t), std::cos(t)};
}
Vec2 frame_w_prime(int k, double t) {
    return radial(k) ? Vec2{-std::sin(t), std::cos(t)} : Vec2{-std::cos(t), -std::sin(t)};
}

Point local_eval(double r0, const std::vector<double>& c, int k, double t) {
    const Vec2 u{std::cos(t), std::sin(t)}, v{-std::sin(t), std::cos(t)};
    Vec2 out{};
    for (int i = 0; i <= k; ++i) {
        const double a = poly_a(r0, c, i, t);
        if (i % 2 == 0)
            out += u * (((i / 2) % 2 == 0) ? a : -a);
        else
            out -= v * ((((i - 1) / 2) % 2 == 0) ? a : -a);
    }
    return out;
}

int piece_sign(const InvolutePiece& p) {
    const double mid = 0.5 * (p.theta_a + p.theta_b);
    const double a = poly_a(p.r0, p.coeffs, p.order, mid);
    if (a != 0.0) return a > 0 ? 1 : -1;
    const double b = poly_a(p.r0, p.coeffs, p.order, p.theta_b);
    return b >= 0 ? 1 : -1;
}

void check_theta(const InvolutePiece& p, double t) {
    const double tol = 1e-9 * std::max(1.0, std::abs(t));
    if (!(t >= p.theta_a - tol && t <= p.theta_b + tol))
        throw Error(ErrorCode::ThetaOutOfRange,
                    "theta " + std::to_string(t) + " outside [" + std::to_string(p.theta_a) + ", " +
                        std::to_string(p.theta_b) + "]");
}

// roots of a_i on [lo, hi]; a_i' = a_(i-1) splits it into monotone runs
void poly_roots(double r0, const std::vector<double>& c, int i, double lo, double hi,
                std::vector<double>& out) {
    if (i == 0 || !(hi > lo)) return;
    std::vector<double> crit;
    poly_roots(r0, c, i - 1, lo, hi, crit);
    std::vector<double> knots{lo};
    knots.insert(knots.end(), crit.begin(), crit.end());
    knots.push_back(hi);
    for (std::size_t s = 0; s + 1 < knots.size(); ++s) {
        double x = knots[s], y = knots[s + 1];
        double fx = poly_a(r0, c, i, x), fy = poly_a(r0, c, i, y);
        if (fx == 0.0) {
            if (out.empty() || out.back() < x) out.push_back(x);
            continue;
        }
        if (fy == 0.0 || (fx > 0) == (fy > 0)) continue;
        for (int it = 0; it < 200 && y - x > 0; ++it) {
            const double m = 0.5 * (x + y);
            if (m <= x || m >= y) break;
            const double fm = poly_a(r0, c, i, m);
            if ((fm > 0) == (fx > 0)) {
                x = m;
                fx = fm;
            } else {
                y = m;
            }
        }
        out.push_back(0.5 * (x + y));
    }
    std::sort(out.begin(), out.end());
}

// antiderivative of a_k: a_(k+1) with c_(k+1) = 0
double antideriv(const InvolutePiece& p, double t) {
    std::vector<double> c = p.coeffs;
    c.push_back(0.0);
    return poly_a(p.r0, c, p.order + 1, t);
}

// Newton with bisection fallback on a sign-change bracket
std::optional<double> refine(auto&& f, auto&& df, double lo, double hi) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0)) return std::nullopt;
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 300; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0) == (flo > 0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x)))
            return 0.5 * (lo + hi);
        const double d = df(x);
        double nx = (d != 0.0) ? x - fx / d : lo - 1.0;
        // damped: reject steps leaving the bracket or barely shrinking it
        if (!(nx > lo && nx < hi) || std::abs(nx - x) > 0.5 * (hi - lo)) nx = 0.5 * (lo + hi);
        if (nx == x) return x;
        x = nx;
    }
    return std::nullopt;
}

}  // namespace

Point to_world(const InvolutePiece& p, Point q) {
    return p.center + rotate(Vec2{q.x, p.reflect * q.y}, p.phase);
}
Point to_local(const InvolutePiece& p, Point q) {
    const Vec2 r = rotate(q - p.center, -p.phase);
    return {r.x, p.reflect * r.y};
}
Vec2 dir_to_world(const InvolutePiece& p, Vec2 v) { return rotate(Vec2{v.x, p.reflect * v.y}, p.phase); }
Vec2 dir_to_local(const InvolutePiece& p, Vec2 v) {
    const Vec2 r = rotate(v, -p.phase);
    return {r.x, p.reflect * r.y};
}

double coeff_poly(const InvolutePiece& p, int i, double theta) {
    if (i < 0 || i > p.order) throw Error(ErrorCode::OutOfRange, "coefficient index");
    return poly_a(p.r0, p.coeffs, i, theta);
}

Point eval_unchecked(const InvolutePiece& p, double theta) {
    return to_world(p, local_eval(p.r0, p.coeffs, p.order, theta));
}

Point eval(const InvolutePiece& p, double theta) {
    check_theta(p, theta);
    return eval_unchecked(p, theta);
}

Vec2 tangent_increasing(const InvolutePiece& p, double theta) {
    const double a = poly_a(p.r0, p.coeffs, p.order, theta);
    const double scale = std::max(1.0, std::abs(poly_a(p.r0, p.coeffs, p.order - (p.order > 0), theta)));
    const int s = std::abs(a) > 1e-14 * scale ? (a > 0 ? 1 : -1) : piece_sign(p);
    return dir_to_world(p, frame_w(p.order, theta) * static_cast<double>(s * sigma(p.order)));
}

Direction eval_tangent_direction(const InvolutePiece& p, double theta) {
    check_theta(p, theta);
    return Direction(tangent_increasing(p, theta) * static_cast<double>(p.direction));
}

Point evolute_point(const InvolutePiece& p, double theta) {
    if (p.order == 0) return p.center;
    return to_world(p, local_eval(p.r0, p.coeffs, p.order - 1, theta));
}

double tangent_length(const InvolutePiece& p, double theta) {
    check_theta(p, theta);
    if (p.order == 0) return 0.0;
    return std::abs(poly_a(p.r0, p.coeffs, p.order, theta));
}

double arc_length(const InvolutePiece& p, double ta, double tb) {
    check_theta(p, ta);
    check_theta(p, tb);
    double lo = std::min(ta, tb), hi = std::max(ta, tb);
    if (p.order == 0) return p.r0 * (hi - lo);
    std::vector<double> roots;
    poly_roots(p.r0, p.coeffs, p.order, lo, hi, roots);
    double total = 0.0, prev = lo, fprev = antideriv(p, lo);
    for (double r : roots) {
        if (r <= prev || r >= hi) continue;
        const double fr = antideriv(p, r);
        total += std::abs(fr - fprev);
        prev = r;
        fprev = fr;
    }
    total += std::abs(antideriv(p, hi) - fprev);
    return total;
}

double piece_length(const InvolutePiece& p) { return arc_length(p, p.theta_a, p.theta_b); }

double theta_at_length(const InvolutePiece& p, double s) {
    const double total = piece_length(p);
    if (s <= 0.0) return p.theta_start();
    if (s >= total) return p.theta_end();
    double lo = p.theta_a, hi = p.theta_b;
    const double t0 = p.theta_start();
    for (int it = 0; it < 200 && hi - lo > 0; ++it) {
        const double m = 0.5 * (lo + hi);
        if (m <= lo || m >= hi) break;
        const double len = arc_length(p, t0, m);
        // length grows away from the start
        if ((len < s) == (p.direction > 0))
            lo = m;
        else
            hi = m;
    }
    return 0.5 * (lo + hi);
}

std::optional<double> theta_for_tangent_direction(const InvolutePiece& p, const Direction& d,
                                                  bool oriented) {
    const Vec2 ld = dir_to_local(p, d.unit());
    double base = std::atan2(ld.y, ld.x);
    if (!radial(p.order)) base -= kPi / 2;
    const double tol = 1e-12 * std::max(1.0, std::abs(p.theta_a));
    double t = base + kPi * std::ceil((p.theta_a - tol - base) / kPi);
    for (; t <= p.theta_b + tol; t += kPi) {
        const double tc = std::clamp(t, p.theta_a, p.theta_b);
        if (!oriented) return tc;
        const Vec2 tan = tangent_increasing(p, tc) * static_cast<double>(p.direction);
        if (dot(tan, d.unit()) > 0) return tc;
    }
    return std::nullopt;
}

InvolutePiece make_child(const InvolutePiece& parent, double c_next, double ta, double tb,
                         int direction) {
    InvolutePiece c = parent;
    c.order = parent.order + 1;
    c.coeffs.push_back(c_next);
    c.theta_a = std::min(ta, tb);
    c.theta_b = std::max(ta, tb);
    c.direction = direction;
    return c;
}

InvolutePiece rebase(const InvolutePiece& p, double delta) {
    InvolutePiece q = p;
    for (int j = 1; j <= p.order; ++j) q.coeffs[j - 1] = poly_a(p.r0, p.coeffs, j, delta);
    q.phase = p.phase + p.reflect * delta;
    q.theta_a = p.theta_a - delta;
    q.theta_b = p.theta_b - delta;
    return q;
}

namespace {

AnchorSolution finish(const InvolutePiece& parent, Point a_local, double theta) {
    const int km1 = parent.order;
    const Point I = local_eval(parent.r0, parent.coeffs, km1, theta);
    const double ak = -sigma(km1) * dot(a_local - I, frame_w(km1, theta));
    std::vector<double> c = parent.coeffs;
    c.push_back(0.0);
    const double base = poly_a(parent.r0, c, km1 + 1, theta);
    AnchorSolution sol{theta, ak - base, 0.0};
    c.back() = sol.c;
    const Point hit = local_eval(parent.r0, c, km1 + 1, theta);
    sol.residual = dist(hit, a_local) / std::max(1.0, a_local.norm());
    return sol;
}

bool branch_ok(const InvolutePiece& parent, Point a_local, double theta, int branch) {
    const int km1 = parent.order;
    const Point I = local_eval(parent.r0, parent.coeffs, km1, theta);
    const double ak = -sigma(km1) * dot(a_local - I, frame_w(km1, theta));
    const double akm1 = poly_a(parent.r0, parent.coeffs, km1, theta);
    const double scale = std::max(1.0, a_local.norm());
    if (std::abs(ak) <= 1e-12 * scale) return true;
    return branch * ak * akm1 >= 0.0;
}

}  // namespace

AnchorSolution anchor_at_theta(const InvolutePiece& parent, Point anchor, double theta) {
    return finish(parent, to_local(parent, anchor), theta);
}

AnchorSolution solve_anchor_numeric(const InvolutePiece& parent, Point anchor, int branch) {
    if (branch != 1 && branch != -1) throw Error(ErrorCode::InvalidArgument, "branch must be +-1");
    const Point a = to_local(parent, anchor);
    const int km1 = parent.order;
    auto f = [&](double t) {
        return cross(a - local_eval(parent.r0, parent.coeffs, km1, t), frame_w(km1, t));
    };
    auto df = [&](double t) {
        return cross(a - local_eval(parent.r0, parent.coeffs, km1, t), frame_w_prime(km1, t));
    };

    auto scan = [&](double lo, double hi, std::vector<double>& roots, bool& failed) {
        const double h = 1e-2;
        const int steps = std::max(1, static_cast<int>(std::ceil((hi - lo) / h)));
        double x0 = lo, f0 = f(lo);
        if (f0 == 0.0) roots.push_back(lo);
        for (int s = 1; s <= steps; ++s) {
            const double x1 = (s == steps) ? hi : lo + (hi - lo) * s / steps;
            const double f1 = f(x1);
            if (f1 == 0.0) {
                roots.push_back(x1);
            } else if (f0 != 0.0 && (f0 > 0) != (f1 > 0)) {
                const auto r = refine(f, df, x0, x1);
                if (r)
                    roots.push_back(*r);
                else
                    failed = true;
            }
            x0 = x1;
            f0 = f1;
        }
    };

    std::vector<double> roots;
    bool failed = false;
    scan(parent.theta_a, parent.theta_b, roots, failed);
    auto string_len = [&](double t) {
        return std::abs(dot(a - local_eval(parent.r0, parent.coeffs, km1, t), frame_w(km1, t)));
    };
    // several tangencies can qualify on long parents; keep the shortest string
    std::optional<AnchorSolution> best;
    for (double t : roots) {
        if (!branch_ok(parent, a, t, branch)) continue;
        if (!best || string_len(t) < string_len(best->theta)) best = finish(parent, a, t);
    }
    if (best) {
        if (best->residual > 1e-9)
            throw Error(ErrorCode::NoConvergence,
                        "anchor residual " + std::to_string(best->residual) + " at theta " +
                            std::to_string(best->theta));
        return *best;
    }
    if (failed)
        throw Error(ErrorCode::NoConvergence, "root refinement failed in [" +
                                                  std::to_string(parent.theta_a) + ", " +
                                                  std::to_string(parent.theta_b) + "]");
    std::vector<double> outside;
    scan(parent.theta_a - 2 * kPi, parent.theta_a, outside, failed);
    scan(parent.theta_b, parent.theta_b + 2 * kPi, outside, failed);
    for (double t : outside)
        if (branch_ok(parent, a, t, branch))
            throw Error(ErrorCode::BranchOutOfRange,
                        "tangent parameter " + std::to_string(t) + " outside the parent range");
    throw Error(ErrorCode::NoTangent, "no tangent from anchor to parent");
}

AnchorSolution solve_anchor(const InvolutePiece& parent, Point anchor, int branch) {
    if (branch != 1 && branch != -1) throw Error(ErrorCode::InvalidArgument, "branch must be +-1");
    if (parent.order != 0) return solve_anchor_numeric(parent, anchor, branch);
    const Point a = to_local(parent, anchor);
    const double r1 = a.norm(), r0 = parent.r0;
    if (r1 < r0 * (1 - 1e-12)) throw Error(ErrorCode::NoTangent, "anchor inside the base circle");
    const double phi = std::atan2(a.y, a.x);
    const double t0 = phi + branch * std::acos(std::min(1.0, r0 / r1));
    // representative of t0 + 2 pi m inside the parent range
    const double tol = 1e-12 * std::max(1.0, std::abs(parent.theta_a));
    const double m = std::ceil((parent.theta_a - tol - t0) / (2 * kPi));
    const double t = t0 + 2 * kPi * m;
    if (t > parent.theta_b + tol)
        throw Error(ErrorCode::BranchOutOfRange,
                    "tangent parameter " + std::to_string(t0) + " (mod 2pi) outside the parent range");
    return finish(parent, a, std::clamp(t, parent.theta_a, parent.theta_b));
}

}  // namespace sap
