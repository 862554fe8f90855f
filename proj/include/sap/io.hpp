#pragma once

#include <string>

#include <json.hpp>

#include "sap/generate.hpp"
#include "sap/path.hpp"
#include "sap/sa_polygon.hpp"
#include "sap/shortest.hpp"

namespace sap::io {

using Json = nlohmann::json;

Json to_json(Point p);
Point point_from_json(const Json& j);

/// {"name", "vertices", "s"?, "t"?, "seed"?}
Json to_json(const Instance& in);
Instance instance_from_json(const Json& j);

Json to_json(const PathPiece& p);
PathPiece piece_from_json(const Json& j);
/// {"source", "target", "segments"}
Json to_json(const SAPath& path);
SAPath path_from_json(const Json& j);

/// {"kind", "point", "side", "anchor", "boundary_hit"?, "chain"}
Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

/// {"verdict", "witness"?, "tests_per_pass"}
Json to_json(const DecisionReport& r);
Json to_json(const VerificationReport& r);

/// Doubles are written in shortest round-trip form.
std::string dump(const Json& j);
Json read_json_file(const std::string& file);
void write_text_file(const std::string& file, const std::string& text);

struct RenderSpec {
    int samples_per_piece = 64;  // clamped to at least 8
    double width = 800.0;        // pixels
    double margin = 0.05;        // fraction of the larger extent
};

/// Stroke color by piece kind: lines green, circular arcs purple, then
/// orange, blue, brown for orders 1-3 and gray above.
std::string piece_color(const PathPiece& p);

/// Polygon outline, optional path and optional dead-region chain (dashed).
/// y is flipped so the figure reads with y up.
std::string render_svg(const std::vector<Point>& polygon, const SAPath* path, const Witness* witness,
                       const RenderSpec& spec = {});

}  // namespace sap::io
