#pragma once

#include <optional>
#include <vector>

#include "sap/geom.hpp"

namespace sap {

inline constexpr double kSolveEps = 1e-12;

/// One piece of a circle involute of order k in a local frame.
///
/// Local curve (origin-centered, x-axis phased):
///   a_i(t) = r0 t^i/i! + c1 t^(i-1)/(i-1)! + ... + c_i
///   I_k(t) = sum (-1)^i a_2i (cos t, sin t) - sum (-1)^(i-1) a_(2i-1) (-sin t, cos t)
/// World point = center + R(phase) * diag(1, reflect) * local.
/// Order 0 is the base circle itself (a circular arc).
struct InvolutePiece {
    int order = 0;
    double r0 = 1.0;
    Point center{};
    double phase = 0.0;
    int reflect = 1;
    std::vector<double> coeffs;  // c_1..c_k
    double theta_a = 0.0;
    double theta_b = 0.0;
    int direction = 1;  // +1 traverses theta_a -> theta_b

    double theta_start() const { return direction > 0 ? theta_a : theta_b; }
    double theta_end() const { return direction > 0 ? theta_b : theta_a; }
};

struct AnchorSolution {
    double theta = 0.0;
    double c = 0.0;
    double residual = 0.0;
};

/// a_i(theta) for 0 <= i <= order (a_0 = r0).
double coeff_poly(const InvolutePiece& p, int i, double theta);

Point eval(const InvolutePiece& p, double theta);
/// Same, skipping the range check (used for extrapolation by solvers).
Point eval_unchecked(const InvolutePiece& p, double theta);

/// Unit tangent in the traversal sense. At a root of a_k the sign on the
/// piece interior is used.
Direction eval_tangent_direction(const InvolutePiece& p, double theta);

/// Tangent pointing toward increasing theta (no range check).
Vec2 tangent_increasing(const InvolutePiece& p, double theta);

/// Point of the order-(k-1) evolute at theta: the tangent point of the
/// string ending at eval(p, theta). For order 0 this is the center.
Point evolute_point(const InvolutePiece& p, double theta);

/// |a_k(theta)|; 0 for order 0.
double tangent_length(const InvolutePiece& p, double theta);

/// Integral of |a_k| over [ta, tb] (either order).
double arc_length(const InvolutePiece& p, double ta, double tb);
double piece_length(const InvolutePiece& p);

/// Theta at which the path has travelled s from the piece start.
double theta_at_length(const InvolutePiece& p, double s);

/// First theta in range whose tangent is parallel to d (either sign).
/// With oriented=true the traversal tangent must equal +d.
std::optional<double> theta_for_tangent_direction(const InvolutePiece& p, const Direction& d,
                                                  bool oriented = false);

/// Child of order k+1 in the same frame with the given new coefficient.
InvolutePiece make_child(const InvolutePiece& parent, double c_next, double ta, double tb,
                         int direction = 1);

/// Shift the parameter by delta without changing the curve: the new
/// piece uses theta' = theta - delta and a rotated frame.
InvolutePiece rebase(const InvolutePiece& p, double delta);

/// Solve the anchor equations: the child of order k = parent.order + 1
/// passes through the anchor with the string tangent to the parent at
/// theta. branch=+1 selects sgn(a_k) = sgn(a_(k-1)) at the solution (the
/// string unwinds as theta grows), -1 the opposite. Uses the closed form
/// for k = 1.
AnchorSolution solve_anchor(const InvolutePiece& parent, Point anchor, int branch);

/// Child constant making the order-(k+1) curve pass through the anchor
/// with the string tangent to the parent at the given theta. The anchor
/// should lie on the parent's tangent line there; residual reports the miss.
AnchorSolution anchor_at_theta(const InvolutePiece& parent, Point anchor, double theta);

/// Bracketed Newton/bisection path for every order (k = 1 included).
AnchorSolution solve_anchor_numeric(const InvolutePiece& parent, Point anchor, int branch);

/// Map between world and local frames.
Point to_local(const InvolutePiece& p, Point q);
Point to_world(const InvolutePiece& p, Point q);
Vec2 dir_to_world(const InvolutePiece& p, Vec2 v);
Vec2 dir_to_local(const InvolutePiece& p, Vec2 v);

}  // namespace sap
