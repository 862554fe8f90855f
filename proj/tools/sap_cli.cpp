// sap: self-approaching paths and polygons from the command line.
//
// Exit codes: 0 success / yes / pass, 1 no / fail, 2 input error,
// 3 no self-approaching path, 4 solver failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sap/io.hpp"

using namespace sap;

namespace {

enum Exit { kOk = 0, kNo = 1, kInput = 2, kNotReachable = 3, kSolver = 4 };

// flag > SA_GEOM_TOL > default
double resolve_tol(const std::optional<double>& flag, double fallback) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SA_GEOM_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring SA_GEOM_TOL='" << env << "'\n";
    }
    return fallback;
}

Point parse_point(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "point must be x,y: '" + s + "'");
    try {
        std::size_t used = 0;
        const double x = std::stod(s.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(s);
        const std::string ys = s.substr(comma + 1);
        const double y = std::stod(ys, &used);
        if (used != ys.size()) throw std::invalid_argument(s);
        return {x, y};
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "point must be x,y: '" + s + "'");
    }
}

struct Loaded {
    Instance in;
    Polygon P;
};

Loaded load(const std::string& file, double eps) {
    Instance in = io::instance_from_json(io::read_json_file(file));
    Polygon P = validate_polygon(in.vertices, eps);
    return {std::move(in), std::move(P)};
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty())
        std::cout << text;
    else
        io::write_text_file(out, text);
}

int check_polygon(const std::string& file, const std::optional<double>& tol) {
    const double eps = resolve_tol(tol, kGeomEps);
    const Loaded L = load(file, eps);
    const DecisionReport r = is_self_approaching_polygon(L.P, eps);
    std::cout << io::dump(io::to_json(r));
    return r.yes ? kOk : kNo;
}

int shortest_path(const std::string& file, const std::string& s_arg, const std::string& t_arg,
                  const std::string& json_out, const std::string& svg_out, const std::optional<double>& tol) {
    const double eps = resolve_tol(tol, kGeomEps);
    const Loaded L = load(file, eps);
    std::optional<Point> s = L.in.s, t = L.in.t;
    if (!s_arg.empty()) s = parse_point(s_arg);
    if (!t_arg.empty()) t = parse_point(t_arg);
    if (!s || !t) throw Error(ErrorCode::InvalidArgument, "s and t are required (instance or --s/--t)");

    SAPathResult r;
    try {
        r = shortest_sa_path(L.P, *s, *t);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::EndpointOutside || e.code() == ErrorCode::InvalidArgument) throw;
        std::cerr << "solver failure: " << e.what() << '\n';
        return kSolver;
    }
    if (const auto* path = std::get_if<SAPath>(&r)) {
        emit(io::dump(io::to_json(*path)), json_out);
        if (!svg_out.empty()) io::write_text_file(svg_out, io::render_svg(L.P.vertices(), path, nullptr));
        return kOk;
    }
    const Witness& w = std::get<NotReachable>(r).witness;
    emit(io::dump({{"status", "not-reachable"}, {"witness", io::to_json(w)}}), json_out);
    if (!svg_out.empty()) io::write_text_file(svg_out, io::render_svg(L.P.vertices(), nullptr, &w));
    return kNotReachable;
}

int verify_path(const std::string& inst, const std::string& file, int samples, const std::optional<double>& tol) {
    const double t = resolve_tol(tol, kVerifyTol);
    const Loaded L = load(inst, kGeomEps);
    const SAPath path = io::path_from_json(io::read_json_file(file));
    const VerificationReport normal = verify_normal_property(path, &L.P, samples, t);
    const VerificationReport triples = verify_triples(path, samples, t);
    const bool pass = normal.pass && triples.pass;
    io::Json j;
    j["pass"] = pass;
    j["normal"] = io::to_json(normal);
    j["triples"] = io::to_json(triples);
    j["continuity_defect"] = continuity_defect(path);
    std::cout << io::dump(j);
    return pass ? kOk : kNo;
}

int gen(const std::string& kind, int n, std::uint64_t seed, const std::string& out) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
    Instance in = generate(kind, n, seed);
    validate_polygon(in.vertices);
    emit(io::dump(io::to_json(in)), out);
    return kOk;
}

int render(const std::string& inst, const std::string& extra, const std::string& out, int samples) {
    const Loaded L = load(inst, kGeomEps);
    std::optional<SAPath> path;
    std::optional<Witness> w;
    if (!extra.empty()) {
        const io::Json j = io::read_json_file(extra);
        if (j.contains("witness"))
            w = io::witness_from_json(j["witness"]);
        else
            path = io::path_from_json(j);
    }
    io::RenderSpec spec;
    spec.samples_per_piece = samples;
    io::write_text_file(out, io::render_svg(L.P.vertices(), path ? &*path : nullptr, w ? &*w : nullptr, spec));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shortest self-approaching paths and self-approaching polygons"};
    app.require_subcommand(1);

    std::string instance, second, s_arg, t_arg, json_out, svg_out, out, kind;
    std::optional<double> tol;
    int samples = kDefaultSamples, n = 8;
    std::uint64_t seed = 1;

    auto* cp = app.add_subcommand("check-polygon", "Decide whether a polygon is self-approaching");
    cp->add_option("instance", instance, "Instance JSON")->required();
    cp->add_option("--tol", tol, "Geometric tolerance");

    auto* sp = app.add_subcommand("shortest-path", "Shortest self-approaching s-t path");
    sp->add_option("instance", instance, "Instance JSON")->required();
    sp->add_option("--s", s_arg, "Source x,y (overrides the instance)");
    sp->add_option("--t", t_arg, "Target x,y (overrides the instance)");
    sp->add_option("--json", json_out, "Write path or witness JSON here instead of stdout");
    sp->add_option("--svg", svg_out, "Also write an SVG figure");
    sp->add_option("--tol", tol, "Geometric tolerance");

    auto* vp = app.add_subcommand("verify-path", "Check a path for the self-approaching property");
    vp->add_option("instance", instance, "Instance JSON")->required();
    vp->add_option("path", second, "Path JSON")->required();
    vp->add_option("--samples", samples, "Samples per piece")->check(CLI::PositiveNumber);
    vp->add_option("--tol", tol, "Verification tolerance");

    auto* gp = app.add_subcommand("gen", "Generate an instance");
    gp->add_option("--kind", kind, "convex, random, comb, spiral or hook")->required();
    gp->add_option("--n", n, "Vertex count");
    gp->add_option("--seed", seed, "Random seed");
    gp->add_option("--out", out, "Write here instead of stdout");

    auto* rp = app.add_subcommand("render", "Draw an instance with an optional path or witness");
    rp->add_option("instance", instance, "Instance JSON")->required();
    rp->add_option("path", second, "Path JSON or shortest-path witness output");
    rp->add_option("--out", out, "SVG file")->required();
    rp->add_option("--samples", samples, "Samples per curved piece")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*cp) return check_polygon(instance, tol);
        if (*sp) return shortest_path(instance, s_arg, t_arg, json_out, svg_out, tol);
        if (*vp) return verify_path(instance, second, samples, tol);
        if (*gp) return gen(kind, n, seed, out);
        if (*rp) return render(instance, second, out, samples);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
    return kInput;
}
