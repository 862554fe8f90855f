#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sap/geodesic.hpp"
#include "sap/path.hpp"

namespace sap {

/// Angular slack for the 90 degree test; ties go to the straight extension.
inline constexpr double kCaseAngleEps = 1e-9;

/// Convex hull of the built suffix. Boundary pieces run counter-clockwise,
/// piece i starting at junction i; the anchor (current path start) is a
/// junction. dist_ccw / dist_cw are boundary lengths from the anchor.
struct SuffixHull {
    std::vector<PathPiece> boundary;
    std::size_t anchor = 0;
    std::vector<double> dist_ccw;
    std::vector<double> dist_cw;

    std::size_t size() const { return boundary.size(); }
    Point junction(std::size_t i) const { return piece_start(boundary[i % boundary.size()]); }
    Point anchor_point() const { return junction(anchor); }
    double perimeter() const;
};

/// Hull of a set of pieces, anchored at the given point (which must lie on
/// the hull boundary). Curved runs are found from samples and their bridge
/// tangencies refined on the exact curves.
SuffixHull make_hull(const std::vector<PathPiece>& pieces, Point anchor);

/// Hull of the old hull plus a prefix joined at the old anchor.
SuffixHull hull_update(const SuffixHull& hull, const std::vector<PathPiece>& prefix,
                       Point new_anchor);

/// Sense in which the tangent point travels around the hull while the
/// string unwinds from the anchor.
enum class Side { Ccw = 1, Cw = -1 };

struct DeadRegionBoundary {
    Side side = Side::Cw;
    Point anchor;
    /// Pieces in unwinding order, each traversed away from the anchor.
    std::vector<InvolutePiece> chain;
    /// Chain length from the anchor to the start of each piece.
    std::vector<double> start_length;
    /// Where the chain was cut by the stop rule (polygon boundary).
    std::optional<Point> boundary_hit;
};

/// Cut parameter for a freshly emitted piece, or nullopt to continue.
using ChainStop = std::function<std::optional<double>(const InvolutePiece&, std::size_t index)>;

/// Arcs about hull corners, nothing along straight hull edges, and one
/// order-(k+1) piece over each order-k hull curve; emitted until stop cuts a
/// piece. Throws SolverFailure past max_pieces.
DeadRegionBoundary unwind_involute(const SuffixHull& hull, Side side, const ChainStop& stop,
                                   std::size_t max_pieces);

/// Straight extension from p_i to the anchor when the turn there keeps the
/// hull ahead (angle to both hull tangents at least 90 degrees).
std::optional<LineSeg> case1_extend(const SuffixHull& hull, Point p_i);

/// Unwinding sense for a predecessor that fails the straight extension.
Side unwind_side(const SuffixHull& hull, Point pred);

struct HullTangent {
    Point point;
    double boundary_length = 0.0;  // from the anchor, in the unwinding sense
};

/// Point of the hull where the unwinding string points at g.
HullTangent string_tangent(const SuffixHull& hull, Point g, Side side);

/// g lies strictly closer to the hull than the unwound string.
bool dead_point_test(const SuffixHull& hull, Point g, Side side);

struct TangentPoint {
    Point point;
    std::size_t piece = 0;
    std::optional<double> theta;  // set when the touch is inside a curve
};

/// Tangent from q to a convex chain with the chain on the left (side = +1)
/// or right (side = -1) of the directed line from q. Junctions are searched
/// by bisection; curves adjacent to the result are then solved exactly.
/// Throws NoTangent when q sees the chain from its concave side.
TangentPoint tangent_point_chain(Point q, const std::vector<PathPiece>& chain, int side);

/// Same by scanning every junction and curve.
TangentPoint tangent_point_chain_scan(Point q, const std::vector<PathPiece>& chain, int side);

enum class TangentKind { Outer, Inner };

struct CommonTangent {
    TangentPoint a;
    TangentPoint b;
};

struct Crossing {
    Point point;
};

/// Outer: both chains left of a->b. Inner: A on the left, B on the right.
std::variant<CommonTangent, Crossing> common_tangent(const std::vector<PathPiece>& A,
                                                     const std::vector<PathPiece>& B,
                                                     TangentKind kind);

struct Witness {
    enum class Kind { DeadPoint, Separation };
    Kind kind = Kind::DeadPoint;
    Point point;  // dead point, or where a path from s meets the chain
    DeadRegionBoundary boundary;
};

std::string to_string(Witness::Kind k);

struct NotReachable {
    Witness witness;
};

using SAPathResult = std::variant<SAPath, NotReachable>;

/// Shortest self-approaching path from s to t inside P, or a witness that
/// none exists. Throws EndpointOutside, or SolverFailure when the numerics
/// give out.
SAPathResult shortest_sa_path(const Polygon& P, Point s, Point t);

struct Case2Prefix {
    std::vector<PathPiece> pieces;  // path order, ending at the anchor
    int node = kRootNode;           // tree node where the prefix starts
};

/// One Case 2 step: stack holds tree nodes from the root to the anchor and
/// is replaced by the root path of the chosen node.
std::variant<Case2Prefix, NotReachable> case2_extend(const Polygon& P, const SuffixHull& hull,
                                                     std::vector<int>& stack,
                                                     const ShortestPathTree& spt);

}  // namespace sap
