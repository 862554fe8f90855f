#include "sap/generate.hpp"

#include <algorithm>
#include <numbers>
#include <random>

namespace sap {

namespace {

using Rng = std::mt19937_64;

double uni(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

void chain(Rng& rng, Point a, Point b, std::vector<Point> pts, std::vector<Point>& out) {
    if (pts.empty()) {
        out.push_back(a);
        return;
    }
    const std::size_t ci = std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng);
    const Point c = pts[ci];
    pts.erase(pts.begin() + static_cast<long>(ci));
    // split the rest by the line through c and a random point of ab
    const Point m = a + (b - a) * (0.1 + 0.8 * uni(rng));
    const Vec2 d = m - c;
    const double side_a = cross(d, a - c);
    std::vector<Point> sa, sb;
    for (const Point& p : pts) ((cross(d, p - c) > 0) == (side_a > 0) ? sa : sb).push_back(p);
    chain(rng, a, c, sa, out);
    chain(rng, c, b, sb, out);
}

}  // namespace

Instance gen_convex(int n, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorCode::TooFewVertices, "n < 3");
    Rng rng(seed);
    std::vector<double> ang(n);
    for (;;) {
        for (double& a : ang) a = 2 * std::numbers::pi * uni(rng);
        std::sort(ang.begin(), ang.end());
        double gap = 2 * std::numbers::pi - ang.back() + ang.front();
        for (int i = 1; i < n; ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
        bool close = false;
        for (int i = 1; i < n; ++i) close |= ang[i] - ang[i - 1] < 1e-3;
        if (gap < std::numbers::pi * 0.95 && !close) break;
    }
    Instance in{"convex-" + std::to_string(n), {}, std::nullopt, std::nullopt, seed};
    for (double a : ang) in.vertices.push_back({10 * std::cos(a), 10 * std::sin(a)});
    return in;
}

Instance gen_random(int n, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorCode::TooFewVertices, "n < 3");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Point> pts(n);
        for (Point& p : pts) p = {10 * uni(rng), 10 * uni(rng)};
        const Point a = pts[0], b = pts[1];
        std::vector<Point> left, right;
        for (int i = 2; i < n; ++i) (cross(b - a, pts[i] - a) > 0 ? left : right).push_back(pts[i]);
        std::vector<Point> out;
        chain(rng, a, b, right, out);
        chain(rng, b, a, left, out);
        try {
            const Polygon P = validate_polygon(out);
            if (static_cast<int>(P.size()) != n) continue;
            return Instance{"random-" + std::to_string(n), P.vertices(), std::nullopt, std::nullopt,
                            seed};
        } catch (const Error&) {
        }
    }
    throw Error(ErrorCode::InvalidArgument, "random polygon generation did not converge");
}

Instance gen_comb(int n) {
    const int notches = std::max(1, (n - 4) / 4);
    // outer box with notches cut down from the top edge
    const double w = 2.0 * notches + 1.0;
    std::vector<Point> v{{0, 0}, {w, 0}, {w, 3}};
    for (int k = notches; k >= 1; --k) {
        const double x0 = 2.0 * k - 1.0;
        v.push_back({x0 + 1.0, 3});
        v.push_back({x0 + 1.0, 1});
        v.push_back({x0, 1});
        v.push_back({x0, 3});
    }
    v.push_back({0, 3});
    // drop the duplicate where a notch meets the right wall
    std::vector<Point> out;
    for (const Point& p : v)
        if (out.empty() || dist(out.back(), p) > 0) out.push_back(p);
    return Instance{"comb-" + std::to_string(notches), out, std::nullopt, std::nullopt, std::nullopt};
}

namespace {

Point along(const std::vector<Point>& line, double s) {
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
        const double L = dist(line[i], line[i + 1]);
        if (s <= L) return line[i] + (line[i + 1] - line[i]) * (s / L);
        s -= L;
    }
    return line.back();
}

}  // namespace

double spiral_length(int n) {
    const int m = std::max(3, n / 2 - 1);
    double total = 0.0;
    for (int j = 0; j < m; ++j) total += 2.0 * ((j + 2) / 2);
    return total;
}

Instance gen_spiral(int n, double s_pos) {
    const int m = std::max(3, n / 2 - 1);
    // outward square spiral centerline, ring spacing 2, corridor width 1
    const Vec2 dirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<Point> c{{0, 0}};
    for (int j = 0; j < m; ++j) c.push_back(c.back() + dirs[j % 4] * (2.0 * ((j + 2) / 2)));
    std::vector<Point> left, right;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Vec2 off;
        if (i == 0) {
            off = perp(dirs[0]) * 0.5;
        } else if (i + 1 == c.size()) {
            off = perp(dirs[(i - 1) % 4]) * 0.5;
        } else {
            off = (perp(dirs[(i - 1) % 4]) + perp(dirs[i % 4])) * 0.5;
        }
        left.push_back(c[i] + off);
        right.push_back(c[i] - off);
    }
    Instance in{"spiral-" + std::to_string(2 * m + 2), {}, std::nullopt, std::nullopt, std::nullopt};
    in.vertices = right;
    in.vertices.insert(in.vertices.end(), left.rbegin(), left.rend());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) total += dist(c[i], c[i + 1]);
    in.t = along(c, 0.25);
    in.s = along(c, std::clamp(s_pos, 0.0, 1.0) * (total - 0.5) + 0.25);
    return in;
}

Instance gen_hook(int n, std::uint64_t seed) {
    Rng rng(seed);
    const int needles = std::max(1, (n - 4) / 4);
    const double H = 10.0;
    // short alternating needles, then one long needle with t tucked under its tip
    std::vector<Point> bottom, top;
    double x = 3.0;
    Point tip{};
    for (int j = 0; j < needles; ++j) {
        const bool last = j + 1 == needles;
        const bool from_bottom = last || j % 2 == 0;
        const double len = last ? 7.0 : 3.0 + uni(rng);
        const double lean = last ? 1.0 : 0.3 * uni(rng);
        const Point b0{x, 0}, b1{x + 0.2, 0};
        const Point t1{x + 0.2 + lean, len}, t0{x + 0.15 + lean, len};
        if (from_bottom) {
            bottom.insert(bottom.end(), {b0, t0, t1, b1});
        } else {
            top.insert(top.end(), {Point{b1.x, H}, Point{t1.x, H - len}, Point{t0.x, H - len}, Point{b0.x, H}});
        }
        if (last) tip = t1;
        x += last ? 0.0 : 4.0;
    }
    const double W = x + 6.0;
    Instance in{"hook-" + std::to_string(n), {}, std::nullopt, std::nullopt, seed};
    in.vertices.push_back({0, 0});
    in.vertices.insert(in.vertices.end(), bottom.begin(), bottom.end());
    in.vertices.push_back({W, 0});
    in.vertices.push_back({W, H});
    // top needles are met right to left along the top wall
    for (std::size_t k = top.size(); k >= 4; k -= 4)
        in.vertices.insert(in.vertices.end(), top.begin() + static_cast<long>(k - 4),
                           top.begin() + static_cast<long>(k));
    in.vertices.push_back({0, H});
    in.s = Point{1.0, 5.0};
    in.t = Point{tip.x - 0.1, tip.y - 1.5};
    return in;
}

Instance generate(const std::string& kind, int n, std::uint64_t seed) {
    if (kind == "convex") return gen_convex(n, seed);
    if (kind == "random") return gen_random(n, seed);
    if (kind == "comb") return gen_comb(n);
    if (kind == "spiral") return gen_spiral(n, 1.0);
    if (kind == "hook") return gen_hook(n, seed);
    throw Error(ErrorCode::InvalidArgument, "unsupported kind '" + kind + "'");
}

}  // namespace sap
