#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sap {

/// Absolute tolerance for sign and incidence predicates, in input units.
/// The predicates below are floating-point with this band; exact
/// predicates could replace them without changing any signature.
inline constexpr double kGeomEps = 1e-9;

enum class ErrorCode {
    SelfIntersecting,
    TooFewVertices,
    ZeroArea,
    OriginOutside,
    ThetaOutOfRange,
    NoTangent,
    NoConvergence,
    BranchOutOfRange,
    RootOutside,
    EndpointOutside,
    NodeNotInTree,
    OutOfRange,
    DegenerateEndpoints,
    TangentFailure,
    SolverFailure,
    CenterOutside,
    InvalidArgument,
    ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr bool operator==(const Vec2&) const = default;

    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

using Point = Vec2;

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
/// Counter-clockwise quarter turn.
constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }
inline double dist(Point a, Point b) { return (a - b).norm(); }
inline Vec2 rotate(Vec2 v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}
inline Vec2 unit_at(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Non-zero direction; stored as given and normalized on demand.
class Direction {
public:
    Direction(double dx, double dy) : v_{dx, dy} {
        if (!(v_.norm2() > 0.0) || !v_.finite())
            throw Error(ErrorCode::InvalidArgument, "zero or non-finite direction");
    }
    explicit Direction(Vec2 v) : Direction(v.x, v.y) {}

    Vec2 raw() const { return v_; }
    Vec2 unit() const { return v_ / v_.norm(); }
    double angle() const { return std::atan2(v_.y, v_.x); }

private:
    Vec2 v_;
};

enum class Orientation { Left, Right, Collinear };

/// Sign of (b-a) x (c-a); collinear when the cross product is within
/// eps scaled by the lengths of the two arms.
Orientation orientation(Point a, Point b, Point c, double eps = kGeomEps);

struct Segment {
    Point a;
    Point b;
    double length() const { return dist(a, b); }
};

/// Distance from q to the closed segment.
double point_segment_distance(Point q, const Segment& s);

/// Segments share at least one point (within eps).
bool segments_intersect(const Segment& s, const Segment& t, double eps = kGeomEps);

/// Interiors cross transversally at a single point that is not an endpoint
/// of either segment.
bool segments_cross_properly(const Segment& s, const Segment& t, double eps = kGeomEps);

/// Intersection point of two non-parallel supporting lines.
std::optional<Point> line_intersection(Point p, Vec2 d, Point q, Vec2 e);

struct Ray {
    Point origin;
    Direction dir;
};

/// Simple, counter-clockwise, no repeated or collinear consecutive vertices.
class Polygon {
public:
    const std::vector<Point>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const Point& operator[](std::size_t i) const { return v_[i]; }
    const Point& vertex(std::size_t i) const { return v_[i % v_.size()]; }
    /// Edge i runs from vertex i to vertex i+1.
    Segment edge(std::size_t i) const { return {v_[i], v_[(i + 1) % v_.size()]}; }
    double signed_area() const;
    double perimeter() const;

    /// Normalizing constructor; see validate_polygon.
    friend Polygon validate_polygon(std::span<const Point> raw, double eps);

private:
    explicit Polygon(std::vector<Point> v) : v_(std::move(v)) {}
    std::vector<Point> v_;
};

/// Reverses clockwise input, merges repeated vertices and collinear runs,
/// then rejects self-intersecting or degenerate input.
Polygon validate_polygon(std::span<const Point> raw, double eps = kGeomEps);
inline Polygon validate_polygon(const std::vector<Point>& raw, double eps = kGeomEps) {
    return validate_polygon(std::span<const Point>(raw), eps);
}

/// Signed area of a raw vertex cycle (positive for counter-clockwise).
double signed_area(std::span<const Point> pts);

enum class Location { Inside, Boundary, Outside };

Location point_in_polygon(const Polygon& P, Point q, double eps = kGeomEps);

inline bool inside_or_boundary(const Polygon& P, Point q, double eps = kGeomEps) {
    return point_in_polygon(P, q, eps) != Location::Outside;
}

struct RayHit {
    Point hit;
    std::size_t edge = 0;
};

/// First boundary point met by the ray. The origin must be inside P, or on
/// its boundary with the ray pointing inward. A ray through a vertex stops
/// there and reports the lowest-index edge incident to that vertex.
RayHit ray_shoot(const Polygon& P, const Ray& r, double eps = kGeomEps);

/// Closed segment lies in P: no proper crossing of any edge and sample
/// points inside or on the boundary.
bool segment_inside(const Polygon& P, const Segment& s, double eps = kGeomEps);

}  // namespace sap
