#include <doctest.h>

#include <random>

#include "sap/detail/triangulation.hpp"
#include "sap/geom.hpp"
#include "support/oracles.hpp"

using namespace sap;

namespace {

const std::vector<Point> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
const std::vector<Point> kL{{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 3}};

ErrorCode code_of(const std::vector<Point>& v) {
    try {
        validate_polygon(v);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected rejection");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("orientation of basic triples") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Orientation::Left);
    CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == Orientation::Collinear);
    CHECK(orientation({0, 0}, {1, 0}, {1, -1}) == Orientation::Right);
}

TEST_CASE("orientation is antisymmetric") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> U(-10, 10);
    for (int i = 0; i < 1000; ++i) {
        const Point a{U(rng), U(rng)}, b{U(rng), U(rng)}, c{U(rng), U(rng)};
        const auto o1 = orientation(a, b, c), o2 = orientation(a, c, b);
        if (o1 == Orientation::Collinear) continue;
        CHECK(o2 != o1);
        CHECK(o2 != Orientation::Collinear);
    }
}

TEST_CASE("validate square in both orientations") {
    const Polygon P = validate_polygon(kSquare);
    CHECK(P.size() == 4);
    CHECK(P.signed_area() == doctest::Approx(1.0));

    std::vector<Point> cw(kSquare.rbegin(), kSquare.rend());
    const Polygon Q = validate_polygon(cw);
    CHECK(Q.signed_area() == doctest::Approx(1.0));
}

TEST_CASE("validate rejects bad input") {
    const std::vector<Point> bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    CHECK_FALSE(oracle::simple_cycle(bowtie));
    CHECK(code_of(bowtie) == ErrorCode::SelfIntersecting);
    CHECK(code_of({{0, 0}, {1, 0}}) == ErrorCode::TooFewVertices);
    CHECK(code_of({{0, 0}, {1, 0}, {2, 0}}) == ErrorCode::ZeroArea);
    // touching at a vertex
    CHECK(code_of({{0, 0}, {2, 0}, {2, 2}, {1, 0}, {0, 2}}) == ErrorCode::SelfIntersecting);
}

TEST_CASE("validate merges duplicates and collinear runs") {
    const Polygon P = validate_polygon(
        std::vector<Point>{{0, 0}, {0.5, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
    CHECK(P.size() == 4);
    for (std::size_t i = 0; i < P.size(); ++i)
        CHECK(orientation(P.vertex(i), P.vertex(i + 1), P.vertex(i + 2)) == Orientation::Left);
}

TEST_CASE("ray shoot examples") {
    const Polygon S = validate_polygon(kSquare);
    auto h = ray_shoot(S, Ray{{0.5, 0.5}, Direction(1, 0)});
    CHECK(h.hit.x == doctest::Approx(1.0));
    CHECK(h.hit.y == doctest::Approx(0.5));
    CHECK(h.edge == 1);

    h = ray_shoot(S, Ray{{0.5, 0.5}, Direction(1, 1)});
    CHECK(dist(h.hit, {1, 1}) < 1e-9);
    CHECK(h.edge == 1);  // lowest index among edges 1 and 2

    const Polygon L = validate_polygon(kL);
    h = ray_shoot(L, Ray{{0.5, 0.5}, Direction(1, 1)});
    CHECK(dist(h.hit, {1, 1}) < 1e-9);
    const auto b = oracle::brute_ray(kL, {0.5, 0.5}, {1, 1});
    REQUIRE(b);
    CHECK(dist(b->p, h.hit) < 1e-9);

    CHECK_THROWS_AS(ray_shoot(S, Ray{{2, 2}, Direction(1, 0)}), Error);
}

TEST_CASE("ray shoot from the boundary pointing inward") {
    const Polygon S = validate_polygon(kSquare);
    const auto h = ray_shoot(S, Ray{{0, 0.5}, Direction(1, 0)});
    CHECK(h.hit.x == doctest::Approx(1.0));
    CHECK_THROWS_AS(ray_shoot(S, Ray{{0, 0.5}, Direction(-1, 0)}), Error);
}

TEST_CASE("ray shoot agrees with brute force on a comb") {
    std::vector<Point> comb{{0, 0}, {9, 0}, {9, 3}};
    for (int k = 4; k >= 0; --k) {
        comb.push_back({2.0 * k + 1, 3});
        comb.push_back({2.0 * k + 1, 1});
        comb.push_back({2.0 * k, 1});
        comb.push_back({2.0 * k, 3});
    }
    comb.pop_back();
    comb.push_back({0, 3});
    const Polygon P = validate_polygon(comb);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> U(0, 1), A(0, 2 * M_PI);
    int tested = 0;
    while (tested < 500) {
        const Point o{9 * U(rng), 3 * U(rng)};
        if (point_in_polygon(P, o) != Location::Inside) continue;
        const double a = A(rng);
        const Point d{std::cos(a), std::sin(a)};
        const auto h = ray_shoot(P, Ray{o, Direction(d)});
        const auto b = oracle::brute_ray(P.vertices(), o, d);
        REQUIRE(b);
        CHECK(dist(h.hit, b->p) < 1e-8);
        CHECK(point_segment_distance(h.hit, P.edge(h.edge)) < 1e-8);
        ++tested;
    }
}

TEST_CASE("point in polygon classification") {
    const Polygon S = validate_polygon(kSquare);
    CHECK(point_in_polygon(S, {0.5, 0.5}) == Location::Inside);
    CHECK(point_in_polygon(S, {1, 0.5}) == Location::Boundary);
    CHECK(point_in_polygon(S, {2, 2}) == Location::Outside);
}

TEST_CASE("segment containment") {
    const Polygon L = validate_polygon(kL);
    CHECK(segment_inside(L, {{0.5, 2.5}, {1, 1}}));
    CHECK(segment_inside(L, {{0.5, 2.5}, {0.5, 0.5}}));
    CHECK_FALSE(segment_inside(L, {{0.5, 2.5}, {2.5, 0.5}}));
    // grazing the reflex vertex from outside the notch
    CHECK_FALSE(segment_inside(L, {{2, 2}, {0.5, 0.5}}));
    CHECK(segment_inside(L, {{0, 0}, {3, 0}}));
}

TEST_CASE("triangulation covers the polygon") {
    const Polygon L = validate_polygon(kL);
    const detail::Triangulation T(L);
    CHECK(T.triangles().size() == L.size() - 2);
    double area = 0;
    for (int i = 0; i < static_cast<int>(T.triangles().size()); ++i)
        area += 0.5 * cross(T.corner(i, 1) - T.corner(i, 0), T.corner(i, 2) - T.corner(i, 0));
    CHECK(area == doctest::Approx(L.signed_area()));
}
