#include <doctest.h>

#include <regex>

#include "sap/io.hpp"
#include "support/corpus.hpp"

using namespace sap;

namespace {

bool same_point(Point a, Point b) { return a.x == b.x && a.y == b.y; }

bool same_piece(const PathPiece& a, const PathPiece& b) {
    if (a.index() != b.index()) return false;
    if (const auto* s = std::get_if<LineSeg>(&a)) {
        const auto& t = std::get<LineSeg>(b);
        return same_point(s->from, t.from) && same_point(s->to, t.to);
    }
    const auto& p = std::get<InvolutePiece>(a);
    const auto& q = std::get<InvolutePiece>(b);
    return p.order == q.order && p.r0 == q.r0 && same_point(p.center, q.center) && p.phase == q.phase &&
           p.reflect == q.reflect && p.coeffs == q.coeffs && p.theta_a == q.theta_a && p.theta_b == q.theta_b &&
           p.direction == q.direction;
}

struct Box {
    double x0, y0, w, h;
};

Box view_box(const std::string& svg) {
    std::smatch m;
    const std::regex re("viewBox=\"([^ ]+) ([^ ]+) ([^ ]+) ([^\"]+)\"");
    REQUIRE(std::regex_search(svg, m, re));
    return {std::stod(m[1]), std::stod(m[2]), std::stod(m[3]), std::stod(m[4])};
}

// every coordinate pair in points="..." and every circle center
std::vector<std::pair<double, double>> drawn(const std::string& svg) {
    std::vector<std::pair<double, double>> out;
    const std::regex pts("points=\"([^\"]*)\"");
    const std::regex pair("(-?[0-9.eE+-]+),(-?[0-9.eE+-]+)");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), pts); it != std::sregex_iterator(); ++it) {
        const std::string body = (*it)[1];
        for (auto p = std::sregex_iterator(body.begin(), body.end(), pair); p != std::sregex_iterator(); ++p)
            out.emplace_back(std::stod((*p)[1]), std::stod((*p)[2]));
    }
    const std::regex circ("cx=\"([^\"]+)\" cy=\"([^\"]+)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circ); it != std::sregex_iterator(); ++it)
        out.emplace_back(std::stod((*it)[1]), std::stod((*it)[2]));
    return out;
}

// elements are either self-closing or the single svg root
bool well_formed(const std::string& svg) {
    if (svg.rfind("<?xml", 0) != 0) return false;
    int open = 0;
    for (std::size_t i = 0; i < svg.size(); ++i) {
        if (svg[i] != '<' || svg.compare(i, 2, "<?") == 0) continue;
        const std::size_t end = svg.find('>', i);
        if (end == std::string::npos) return false;
        const std::string tag = svg.substr(i, end - i + 1);
        if (tag.compare(0, 2, "</") == 0)
            --open;
        else if (tag.size() < 2 || tag[tag.size() - 2] != '/')
            ++open;
        if (open < 0) return false;
    }
    return open == 0;
}

}  // namespace

TEST_CASE("instance round trip") {
    for (const std::string kind : {"convex", "random", "comb", "spiral", "hook"}) {
        const Instance in = generate(kind, 12, 5);
        const Instance back = io::instance_from_json(io::Json::parse(io::dump(io::to_json(in))));
        CHECK(back.name == in.name);
        CHECK(back.seed == in.seed);
        REQUIRE(back.vertices.size() == in.vertices.size());
        for (std::size_t i = 0; i < in.vertices.size(); ++i) CHECK(same_point(back.vertices[i], in.vertices[i]));
        CHECK(back.s.has_value() == in.s.has_value());
        if (in.s) CHECK(same_point(*back.s, *in.s));
        if (in.t) CHECK(same_point(*back.t, *in.t));
    }
}

TEST_CASE("path round trip is exact") {
    for (const SAPath& p : support::path_corpus(60, 9)) {
        const SAPath back = io::path_from_json(io::Json::parse(io::dump(io::to_json(p))));
        CHECK(same_point(back.source, p.source));
        CHECK(same_point(back.target, p.target));
        REQUIRE(back.pieces.size() == p.pieces.size());
        for (std::size_t i = 0; i < p.pieces.size(); ++i) CHECK(same_piece(back.pieces[i], p.pieces[i]));
    }
}

TEST_CASE("witness round trip") {
    const Instance in = gen_spiral(16);
    const auto r = shortest_sa_path(validate_polygon(in.vertices), *in.s, *in.t);
    REQUIRE(std::holds_alternative<NotReachable>(r));
    const Witness& w = std::get<NotReachable>(r).witness;
    const Witness back = io::witness_from_json(io::Json::parse(io::dump(io::to_json(w))));
    CHECK(back.kind == w.kind);
    CHECK(same_point(back.point, w.point));
    CHECK(back.boundary.side == w.boundary.side);
    REQUIRE(back.boundary.chain.size() == w.boundary.chain.size());
    for (std::size_t i = 0; i < w.boundary.chain.size(); ++i)
        CHECK(same_piece(back.boundary.chain[i], w.boundary.chain[i]));
    CHECK(io::to_json(w)["kind"] == "separation");
}

TEST_CASE("malformed input is a parse error") {
    auto fails = [](const char* text) {
        try {
            io::path_from_json(io::Json::parse(text));
        } catch (const Error& e) {
            return e.code() == ErrorCode::ParseError;
        }
        return false;
    };
    CHECK(fails(R"({"source":[0,0],"target":[1,0]})"));
    CHECK(fails(R"({"source":[0,0],"target":[1,0],"segments":[{"kind":"spline"}]})"));
    CHECK(fails(R"({"source":[0],"target":[1,0],"segments":[]})"));
    CHECK(fails(R"({"source":[0,0],"target":[1,0],"segments":[{"kind":"involute","order":1,"r0":1,
        "center":[0,0],"phase":0,"reflect":1,"coeffs":[],"theta":[0,1],"dir":1}]})"));
    CHECK(fails(R"({"source":[0,0],"target":[1,0],"segments":[{"kind":"involute","order":0,"r0":1,
        "center":[0,0],"phase":0,"reflect":2,"coeffs":[],"theta":[0,1],"dir":1}]})"));
    CHECK_THROWS_AS(io::instance_from_json(io::Json::parse(R"({"vertices":[[0,"a"]]})")), Error);
}

TEST_CASE("generator output is byte-identical for a seed") {
    for (const std::string kind : {"convex", "random", "comb", "spiral", "hook"}) {
        const std::string a = io::dump(io::to_json(generate(kind, 16, 42)));
        const std::string b = io::dump(io::to_json(generate(kind, 16, 42)));
        CHECK(a == b);
    }
    CHECK(io::dump(io::to_json(generate("random", 16, 1))) != io::dump(io::to_json(generate("random", 16, 2))));
}

TEST_CASE("decision report json") {
    const Polygon U = validate_polygon(gen_comb(8).vertices);
    const io::Json j = io::to_json(is_self_approaching_polygon(U));
    CHECK(j["verdict"] == "no");
    CHECK(j.contains("witness"));
    CHECK(j["tests_per_pass"].size() == 4);
}

TEST_CASE("svg viewport holds every drawn point") {
    const Instance hook = gen_hook(16, 7);
    const auto hr = shortest_sa_path(validate_polygon(hook.vertices), *hook.s, *hook.t);
    REQUIRE(std::holds_alternative<SAPath>(hr));
    const Instance sp = gen_spiral(32);
    const auto sr = shortest_sa_path(validate_polygon(sp.vertices), *sp.s, *sp.t);
    REQUIRE(std::holds_alternative<NotReachable>(sr));

    const std::vector<std::string> figures{
        io::render_svg(gen_convex(9, 3).vertices, nullptr, nullptr),
        io::render_svg(hook.vertices, &std::get<SAPath>(hr), nullptr),
        io::render_svg(sp.vertices, nullptr, &std::get<NotReachable>(sr).witness),
    };
    for (const std::string& svg : figures) {
        CHECK(well_formed(svg));
        const Box b = view_box(svg);
        const auto pts = drawn(svg);
        CHECK(pts.size() >= 3);
        for (auto [x, y] : pts) {
            CHECK(x >= b.x0);
            CHECK(x <= b.x0 + b.w);
            CHECK(y >= b.y0);
            CHECK(y <= b.y0 + b.h);
        }
    }
    // curved pieces are drawn in their order's color
    CHECK(figures[1].find(io::piece_color(support::arc({0, 0}, 1, 0, 1))) != std::string::npos);
    CHECK(figures[1].find("#2e8b57") != std::string::npos);
}

TEST_CASE("piece colors") {
    CHECK(io::piece_color(LineSeg{{0, 0}, {1, 0}}) == "#2e8b57");
    InvolutePiece c = support::arc({0, 0}, 1, 0, 1);
    CHECK(io::piece_color(c) == "#800080");
    std::vector<std::string> seen;
    for (int k = 1; k <= 5; ++k) {
        c.order = k;
        c.coeffs.assign(k, 0.0);
        seen.push_back(io::piece_color(c));
    }
    CHECK(seen[0] != seen[1]);
    CHECK(seen[1] != seen[2]);
    CHECK(seen[3] == seen[4]);
}
