#include <doctest.h>

#include <numbers>
#include <random>

#include "sap/involute.hpp"
#include "support/chains.hpp"
#include "support/oracles.hpp"

using namespace sap;
using std::numbers::pi;

namespace {

InvolutePiece circle(double r0, double ta, double tb) {
    InvolutePiece p;
    p.r0 = r0;
    p.theta_a = ta;
    p.theta_b = tb;
    return p;
}

InvolutePiece order1(double c1, double ta, double tb) {
    return make_child(circle(1.0, ta - 10, tb + 10), c1, ta, tb);
}

// central difference of eval, independent of the frame-rule tangent
Vec2 fd_tangent(const InvolutePiece& p, double t, double h = 1e-6) {
    return (eval_unchecked(p, t + h) - eval_unchecked(p, t - h)) / (2 * h);
}

InvolutePiece parent_of(const InvolutePiece& p) {
    InvolutePiece q = p;
    q.order -= 1;
    q.coeffs.pop_back();
    return q;
}

}  // namespace

TEST_CASE("eval on the base circle and the unwinding start") {
    CHECK(dist(eval(circle(1, -pi, pi), 0.0), {1, 0}) < 1e-15);
    CHECK(dist(eval(order1(0.0, -1, 1), 0.0), {1, 0}) < 1e-15);
    CHECK_THROWS_AS(eval(circle(1, 0, 1), 2.0), Error);
}

TEST_CASE("order one through (2,0)") {
    const double t = pi / 3;
    const double c1 = std::sqrt(3.0) - t;
    CHECK(c1 == doctest::Approx(0.684853).epsilon(1e-6));
    CHECK(dist(eval(order1(c1, 0, 2), t), {2, 0}) < 1e-12);
    // the constant -sqrt(3) - pi/3 lands on the reflected point instead
    const Point q = eval(order1(-std::sqrt(3.0) - t, 0, 2), t);
    CHECK(dist(q, {-1, std::sqrt(3.0)}) < 1e-12);
}

TEST_CASE("tangent direction follows the frame rule") {
    const InvolutePiece p1 = order1(0.0, 0.1, 1.0);
    const Vec2 d = eval_tangent_direction(p1, 0.5).unit();
    CHECK(dist(d, {std::cos(0.5), std::sin(0.5)}) < 1e-12);

    const Vec2 arc = eval_tangent_direction(circle(1, 0, pi), 0.7).unit();
    CHECK(dist(arc, {-std::sin(0.7), std::cos(0.7)}) < 1e-12);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto chain = support::random_chain(rng, 4);
        for (const auto& st : chain) {
            const InvolutePiece& p = st.parent;
            const double t = 0.5 * (p.theta_a + p.theta_b);
            const Vec2 fd = fd_tangent(p, t);
            if (fd.norm() < 1e-4) continue;
            const Vec2 dir = tangent_increasing(p, t);
            CHECK(dist(dir, fd / fd.norm()) < 1e-6);
        }
    }
}

TEST_CASE("anchor solve, order one closed form") {
    const InvolutePiece c = circle(1.0, -pi, pi);
    const auto sp = solve_anchor(c, {2, 0}, +1);
    CHECK(sp.theta == doctest::Approx(1.047198).epsilon(1e-6));
    CHECK(sp.c == doctest::Approx(0.684853).epsilon(1e-6));
    const auto sm = solve_anchor(c, {2, 0}, -1);
    CHECK(sm.theta == doctest::Approx(-1.047198).epsilon(1e-6));
    CHECK(sm.c == doctest::Approx(-0.684853).epsilon(1e-6));

    const auto child = make_child(c, sp.c, sp.theta, sp.theta + 1);
    CHECK(tangent_length(child, sp.theta) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

    const double phi = 0.4;
    const auto on = solve_anchor(c, {std::cos(phi), std::sin(phi)}, +1);
    CHECK(on.theta == doctest::Approx(phi));
    CHECK(on.c == doctest::Approx(-phi));

    CHECK_THROWS_AS(solve_anchor(c, {0.2, 0.1}, +1), Error);
    try {
        solve_anchor(circle(1.0, 2.0, 2.5), {2, 0}, +1);
        FAIL("expected out of range");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BranchOutOfRange);
    }
}

TEST_CASE("numeric solve reproduces the closed form") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> U(0, 1);
    for (int i = 0; i < 100; ++i) {
        const double r0 = 0.2 + 2 * U(rng), r1 = r0 * (1.01 + 3 * U(rng)), phi = -3 + 6 * U(rng);
        const InvolutePiece c = circle(r0, -2 * pi, 2 * pi);
        const Point a{r1 * std::cos(phi), r1 * std::sin(phi)};
        for (int br : {1, -1}) {
            const auto cf = solve_anchor(c, a, br);
            const auto nm = solve_anchor_numeric(c, a, br);
            const double expect = phi + br * std::acos(r0 / r1);
            CHECK(std::abs(std::remainder(cf.theta - expect, 2 * pi)) < 1e-12);
            CHECK(std::abs(std::remainder(nm.theta - cf.theta, 2 * pi)) < 1e-9);
            const auto ch = make_child(c, nm.c, nm.theta - 0.1, nm.theta + 0.1);
            CHECK(tangent_length(ch, nm.theta) ==
                  doctest::Approx(std::sqrt(r1 * r1 - r0 * r0)).epsilon(1e-9));
        }
    }
}

TEST_CASE("order two over the order one piece") {
    const InvolutePiece c = circle(1.0, -pi, pi);
    const auto s1 = solve_anchor(c, {2, 0}, +1);
    const InvolutePiece p1 = make_child(c, s1.c, s1.theta, 3.0);
    const auto s2 = solve_anchor(p1, {3, 0}, +1);
    CHECK(s2.residual < 1e-12);
    const InvolutePiece p2 = make_child(p1, s2.c, s2.theta, s2.theta + 0.5);
    CHECK(dist(eval(p2, s2.theta), {3, 0}) < 1e-6);
    // independent root of 3 sin t = t + c1
    const double r = s2.theta;
    CHECK(3 * std::sin(r) == doctest::Approx(r + s1.c).epsilon(1e-10));
}

TEST_CASE("back-substitution over random chains") {
    std::mt19937 rng(21);
    for (int i = 0; i < 50; ++i) {
        const auto chain = support::random_chain(rng, 5);
        for (const auto& st : chain) {
            const auto sol = solve_anchor(st.parent, st.anchor, st.branch);
            CHECK(sol.residual <= 1e-12);
            const auto child = make_child(st.parent, sol.c, sol.theta - 0.1, sol.theta + 0.1);
            CHECK(dist(eval(child, sol.theta), st.anchor) <= 1e-6);
            // tangency: string parallel to the parent tangent
            const Vec2 s = st.anchor - eval(st.parent, sol.theta);
            if (s.norm() > 1e-9) {
                const Vec2 T = tangent_increasing(st.parent, sol.theta);
                CHECK(std::abs(cross(s / s.norm(), T)) < 1e-8);
                CHECK(s.norm() == doctest::Approx(tangent_length(child, sol.theta)).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("string property: normal passes through the evolute point") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> U(0, 1);
    int checked = 0;
    while (checked < 1000) {
        const int order = static_cast<int>(U(rng) * 6);
        InvolutePiece p;
        if (order == 0) {
            p = circle(0.5 + U(rng), -1, 1);
        } else {
            const auto chain = support::random_chain(rng, order);
            const auto& st = chain.back();
            const auto sol = solve_anchor(st.parent, st.anchor, st.branch);
            p = make_child(st.parent, sol.c, sol.theta - 0.5, sol.theta + 0.5);
        }
        const double t = p.theta_a + (p.theta_b - p.theta_a) * U(rng);
        const Point x = eval(p, t);
        const Point e = order == 0 ? p.center : eval_unchecked(parent_of(p), t);
        const Vec2 fd = fd_tangent(p, t);
        if (fd.norm() < 1e-3) continue;
        CHECK(std::abs(dot(e - x, fd / fd.norm())) < 1e-8 * std::max(1.0, dist(e, x)));
        if (order > 0) CHECK(dist(e, x) == doctest::Approx(tangent_length(p, t)).epsilon(1e-10));
        ++checked;
    }
}

TEST_CASE("arc length") {
    CHECK(arc_length(circle(1, 0, pi), 0, pi / 2) == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(arc_length(order1(0.0, 0, 1), 0, 1) == doctest::Approx(0.5).epsilon(1e-15));

    const InvolutePiece c = circle(1.0, -pi, pi);
    const auto s1 = solve_anchor(c, {2, 0}, +1);
    const InvolutePiece p1 = make_child(c, s1.c, s1.theta, 3.0);
    const auto s2 = solve_anchor(p1, {3, 0}, +1);
    const InvolutePiece p2 = make_child(p1, s2.c, s2.theta, s2.theta + 1.0);
    const double quad = oracle::simpson(
        [&](double t) { return fd_tangent(p2, t, 1e-5).norm(); }, p2.theta_a, p2.theta_b, 1e-12);
    CHECK(piece_length(p2) == doctest::Approx(quad).epsilon(1e-8));

    // a sign change of a_1 inside the range
    const InvolutePiece z = order1(-0.5, -1, 1.5);
    const double quadz = oracle::simpson(
        [&](double t) { return fd_tangent(z, t, 1e-5).norm(); }, -1, 1.5, 1e-12);
    CHECK(piece_length(z) == doctest::Approx(quadz).epsilon(1e-8));
}

TEST_CASE("arc length is additive") {
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> U(0, 1);
    for (int i = 0; i < 200; ++i) {
        const auto chain = support::random_chain(rng, 4);
        const auto& p = chain.back().parent;
        double t[3] = {U(rng), U(rng), U(rng)};
        std::sort(t, t + 3);
        for (double& x : t) x = p.theta_a + x * (p.theta_b - p.theta_a);
        CHECK(std::abs(arc_length(p, t[0], t[2]) - arc_length(p, t[0], t[1]) -
                       arc_length(p, t[1], t[2])) < 1e-12);
    }
}

TEST_CASE("theta for a tangent direction") {
    const auto t0 = theta_for_tangent_direction(circle(1, 0, pi), Direction(1, 0));
    REQUIRE(t0);
    CHECK(*t0 == doctest::Approx(pi / 2));
    const auto t1 = theta_for_tangent_direction(order1(0, 0, 1), Direction(std::cos(0.3), std::sin(0.3)));
    REQUIRE(t1);
    CHECK(*t1 == doctest::Approx(0.3));
    CHECK_FALSE(theta_for_tangent_direction(order1(0, 0, 1), Direction(std::cos(2.0), std::sin(2.0))));
}

TEST_CASE("rebase keeps the curve") {
    std::mt19937 rng(4);
    for (int i = 0; i < 50; ++i) {
        const auto chain = support::random_chain(rng, 4);
        const auto& p = chain.back().parent;
        const InvolutePiece q = rebase(p, 0.37);
        for (double s : {0.0, 0.3, 0.8, 1.0}) {
            const double t = p.theta_a + s * (p.theta_b - p.theta_a);
            CHECK(dist(eval(p, t), eval(q, t - 0.37)) < 1e-10);
        }
        CHECK(piece_length(p) == doctest::Approx(piece_length(q)).epsilon(1e-10));
    }
}

TEST_CASE("length parameterization inverts arc length") {
    const InvolutePiece p = order1(0.0, 0.2, 1.7);
    for (double s : {0.1, 0.5, 1.0}) {
        const double t = theta_at_length(p, s);
        CHECK(arc_length(p, p.theta_a, t) == doctest::Approx(s).epsilon(1e-12));
    }
    InvolutePiece r = p;
    r.direction = -1;
    const double t = theta_at_length(r, 0.3);
    CHECK(arc_length(r, t, r.theta_b) == doctest::Approx(0.3).epsilon(1e-12));
}
