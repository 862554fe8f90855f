#include "sap/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace sap::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) bad(std::string(what) + " must be a number");
    return j.get<double>();
}

int sign(const Json& j, const char* what) {
    if (!j.is_number_integer() || (j.get<int>() != 1 && j.get<int>() != -1))
        bad(std::string(what) + " must be +1 or -1");
    return j.get<int>();
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::vector<Point> samples(const PathPiece& p, int n) {
    std::vector<Point> out;
    if (is_line(p)) return {piece_start(p), piece_end(p)};
    const double len = piece_length(p);
    for (int i = 0; i <= n; ++i) out.push_back(piece_eval(p, len * i / n));
    return out;
}

}  // namespace

Json to_json(Point p) { return Json::array({p.x, p.y}); }

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("point must be [x, y]");
    const Point p{number(j[0], "x"), number(j[1], "y")};
    if (!p.finite()) bad("non-finite coordinate");
    return p;
}

Json to_json(const Instance& in) {
    Json j;
    j["name"] = in.name;
    j["vertices"] = Json::array();
    for (Point p : in.vertices) j["vertices"].push_back(to_json(p));
    if (in.s) j["s"] = to_json(*in.s);
    if (in.t) j["t"] = to_json(*in.t);
    if (in.seed) j["seed"] = *in.seed;
    return j;
}

Instance instance_from_json(const Json& j) {
    Instance in;
    if (j.contains("name")) {
        if (!j["name"].is_string()) bad("name must be a string");
        in.name = j["name"].get<std::string>();
    }
    const Json& v = field(j, "vertices");
    if (!v.is_array()) bad("vertices must be an array");
    for (const Json& p : v) in.vertices.push_back(point_from_json(p));
    if (j.contains("s")) in.s = point_from_json(j["s"]);
    if (j.contains("t")) in.t = point_from_json(j["t"]);
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) bad("seed must be a non-negative integer");
        in.seed = j["seed"].get<std::uint64_t>();
    }
    return in;
}

Json to_json(const PathPiece& p) {
    if (const auto* s = std::get_if<LineSeg>(&p))
        return {{"kind", "line"}, {"from", to_json(s->from)}, {"to", to_json(s->to)}};
    const auto& c = std::get<InvolutePiece>(p);
    return {{"kind", "involute"},     {"order", c.order},
            {"r0", c.r0},             {"center", to_json(c.center)},
            {"phase", c.phase},       {"reflect", c.reflect},
            {"coeffs", c.coeffs},     {"theta", Json::array({c.theta_a, c.theta_b})},
            {"dir", c.direction}};
}

PathPiece piece_from_json(const Json& j) {
    const Json& kind = field(j, "kind");
    if (kind == "line") return LineSeg{point_from_json(field(j, "from")), point_from_json(field(j, "to"))};
    if (kind != "involute") bad("unknown segment kind");
    InvolutePiece c;
    const Json& order = field(j, "order");
    if (!order.is_number_integer() || order.get<int>() < 0) bad("order must be a non-negative integer");
    c.order = order.get<int>();
    c.r0 = number(field(j, "r0"), "r0");
    c.center = point_from_json(field(j, "center"));
    c.phase = number(field(j, "phase"), "phase");
    c.reflect = sign(field(j, "reflect"), "reflect");
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) bad("coeffs must be an array");
    for (const Json& x : coeffs) c.coeffs.push_back(number(x, "coeff"));
    if (static_cast<int>(c.coeffs.size()) != c.order) bad("coeffs length must equal order");
    const Json& th = field(j, "theta");
    if (!th.is_array() || th.size() != 2) bad("theta must be [a, b]");
    c.theta_a = number(th[0], "theta");
    c.theta_b = number(th[1], "theta");
    if (!(c.theta_a <= c.theta_b)) bad("theta range must be increasing");
    c.direction = sign(field(j, "dir"), "dir");
    return c;
}

Json to_json(const SAPath& path) {
    Json j;
    j["source"] = to_json(path.source);
    j["target"] = to_json(path.target);
    j["segments"] = Json::array();
    for (const auto& p : path.pieces) j["segments"].push_back(to_json(p));
    return j;
}

SAPath path_from_json(const Json& j) {
    SAPath path;
    path.source = point_from_json(field(j, "source"));
    path.target = point_from_json(field(j, "target"));
    const Json& segs = field(j, "segments");
    if (!segs.is_array()) bad("segments must be an array");
    for (const Json& s : segs) path.pieces.push_back(piece_from_json(s));
    return path;
}

Json to_json(const Witness& w) {
    Json j;
    j["kind"] = to_string(w.kind);
    j["point"] = to_json(w.point);
    j["side"] = w.boundary.side == Side::Ccw ? "ccw" : "cw";
    j["anchor"] = to_json(w.boundary.anchor);
    if (w.boundary.boundary_hit) j["boundary_hit"] = to_json(*w.boundary.boundary_hit);
    j["chain"] = Json::array();
    for (const auto& c : w.boundary.chain) j["chain"].push_back(to_json(PathPiece{c}));
    return j;
}

Witness witness_from_json(const Json& j) {
    Witness w;
    const Json& kind = field(j, "kind");
    if (kind == "dead-point")
        w.kind = Witness::Kind::DeadPoint;
    else if (kind == "separation")
        w.kind = Witness::Kind::Separation;
    else
        bad("unknown witness kind");
    w.point = point_from_json(field(j, "point"));
    const Json& side = field(j, "side");
    if (side != "ccw" && side != "cw") bad("side must be ccw or cw");
    w.boundary.side = side == "ccw" ? Side::Ccw : Side::Cw;
    w.boundary.anchor = point_from_json(field(j, "anchor"));
    if (j.contains("boundary_hit")) w.boundary.boundary_hit = point_from_json(j["boundary_hit"]);
    double len = 0.0;
    for (const Json& c : field(j, "chain")) {
        const PathPiece p = piece_from_json(c);
        if (!std::holds_alternative<InvolutePiece>(p)) bad("chain pieces must be involutes");
        w.boundary.start_length.push_back(len);
        w.boundary.chain.push_back(std::get<InvolutePiece>(p));
        len += piece_length(p);
    }
    return w;
}

Json to_json(const DecisionReport& r) {
    Json j;
    j["verdict"] = r.yes ? "yes" : "no";
    if (r.witness) {
        j["witness"] = {
            {"strip", Json::array({to_json(r.witness->strip.a), to_json(r.witness->strip.b)})},
            {"boundary", Json::array({to_json(r.witness->boundary.a), to_json(r.witness->boundary.b)})},
            {"point", to_json(r.witness->point)}};
    }
    j["tests_per_pass"] = r.tests_per_pass;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["pass"] = r.pass;
    j["worst_margin"] = r.worst_margin;
    j["samples"] = r.samples;
    if (!r.pass) j["kind"] = r.kind;
    if (r.a) j["a"] = to_json(*r.a);
    if (r.b) j["b"] = to_json(*r.b);
    if (r.c) j["c"] = to_json(*r.c);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) bad("cannot read '" + file + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        bad("'" + file + "': " + e.what());
    }
}

void write_text_file(const std::string& file, const std::string& text) {
    std::ofstream out(file);
    out << text;
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + file + "'");
}

std::string piece_color(const PathPiece& p) {
    if (is_line(p)) return "#2e8b57";
    switch (std::get<InvolutePiece>(p).order) {
        case 0: return "#800080";
        case 1: return "#ff8c00";
        case 2: return "#1f5fbf";
        case 3: return "#8b4513";
        default: return "#808080";
    }
}

std::string render_svg(const std::vector<Point>& polygon, const SAPath* path, const Witness* witness,
                       const RenderSpec& spec) {
    const int n = std::max(8, spec.samples_per_piece);
    struct Stroke {
        std::vector<Point> pts;
        std::string color;
        bool dashed;
    };
    std::vector<Stroke> strokes;
    if (path)
        for (const auto& p : path->pieces) strokes.push_back({samples(p, n), piece_color(p), false});
    if (witness)
        for (const auto& c : witness->boundary.chain) strokes.push_back({samples(c, n), piece_color(c), true});

    // bounds over everything drawn, y flipped
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
    auto grow = [&](Point p) {
        x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
        y0 = std::min(y0, -p.y), y1 = std::max(y1, -p.y);
    };
    for (Point p : polygon) grow(p);
    for (const auto& s : strokes)
        for (Point p : s.pts) grow(p);
    if (path) grow(path->source), grow(path->target);
    if (witness) grow(witness->point);
    if (!(x1 >= x0)) x0 = y0 = 0, x1 = y1 = 1;
    const double ext = std::max({x1 - x0, y1 - y0, 1e-9});
    const double pad = spec.margin * ext;
    x0 -= pad, y0 -= pad, x1 += pad, y1 += pad;
    const double stroke = ext / 400;

    std::ostringstream o;
    o.precision(17);
    auto pt = [&](Point p) {
        std::ostringstream s;
        s.precision(17);
        s << p.x << ',' << -p.y;
        return s.str();
    };
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.width * (y1 - y0) / (x1 - x0) << "\" viewBox=\"" << x0 << ' ' << y0 << ' ' << x1 - x0 << ' '
      << y1 - y0 << "\">\n";
    if (!polygon.empty()) {
        o << "<polygon fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"" << stroke << "\" points=\"";
        for (std::size_t i = 0; i < polygon.size(); ++i) o << (i ? " " : "") << pt(polygon[i]);
        o << "\"/>\n";
    }
    for (const auto& s : strokes) {
        o << "<polyline fill=\"none\" stroke=\"" << escape(s.color) << "\" stroke-width=\"" << 2 * stroke << '"';
        if (s.dashed) o << " stroke-dasharray=\"" << 6 * stroke << ' ' << 3 * stroke << '"';
        o << " points=\"";
        for (std::size_t i = 0; i < s.pts.size(); ++i) o << (i ? " " : "") << pt(s.pts[i]);
        o << "\"/>\n";
    }
    auto dot = [&](Point p, const char* color) {
        o << "<circle cx=\"" << p.x << "\" cy=\"" << -p.y << "\" r=\"" << 3 * stroke << "\" fill=\"" << color
          << "\"/>\n";
    };
    if (path) dot(path->source, "black"), dot(path->target, "red");
    if (witness) dot(witness->point, "crimson");
    o << "</svg>\n";
    return o.str();
}

}  // namespace sap::io
