#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sap/geom.hpp"
#include "sap/involute.hpp"

namespace sap {

struct LineSeg {
    Point from;
    Point to;
};

using PathPiece = std::variant<LineSeg, InvolutePiece>;

struct SAPath {
    Point source;
    Point target;
    std::vector<PathPiece> pieces;
};

Point piece_start(const PathPiece& p);
Point piece_end(const PathPiece& p);
double piece_length(const PathPiece& p);
/// Unit traversal tangents at the two ends (one-sided).
Vec2 start_tangent(const PathPiece& p);
Vec2 end_tangent(const PathPiece& p);
/// Point at arc length s from the piece start.
Point piece_eval(const PathPiece& p, double s);
/// Same piece traversed backwards.
PathPiece reversed(const PathPiece& p);
bool is_line(const PathPiece& p);

double path_length(const SAPath& path);
Point eval_path(const SAPath& path, double s_arc);
/// Junctions where the one-sided tangents differ by more than 1e-6 rad.
std::vector<Point> bend_points(const SAPath& path, double angle_eps = 1e-6);
double detour_ratio(const SAPath& path);
/// Largest G0 gap between consecutive pieces (and to source/target).
double continuity_defect(const SAPath& path);

struct PathSample {
    Point p;
    Vec2 tangent;       // unit, traversal sense
    std::size_t piece;  // index of the owning piece
};

/// Samples clustered toward the piece ends; every junction appears twice,
/// once per one-sided tangent.
std::vector<PathSample> sample_path(const SAPath& path, int samples_per_piece);

struct VerificationReport {
    bool pass = true;
    double worst_margin = 0.0;
    std::string kind;  // "normal", "triple" or "containment" for the first failure
    // normal: a = sample, b = later point behind its normal
    // triple: |ac| < |bc| - tol
    // containment: a = sample outside P
    std::optional<Point> a, b, c;
    std::size_t samples = 0;
};

inline constexpr int kDefaultSamples = 64;
inline constexpr double kVerifyTol = 1e-7;

VerificationReport verify_normal_property(const SAPath& path, const Polygon* P = nullptr,
                                          int samples_per_piece = kDefaultSamples,
                                          double tol = kVerifyTol);

/// Brute-force triple check |ac| >= |bc| - tol over sampled ordered triples,
/// evaluated in O(N^2) with a running minimum over a.
VerificationReport verify_triples(const SAPath& path, int samples_per_piece = kDefaultSamples,
                                  double tol = kVerifyTol);

/// Convenience builder for a polyline path.
SAPath polyline_path(const std::vector<Point>& pts);

}  // namespace sap
