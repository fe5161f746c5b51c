#pragma once

// The four commands of the ellbill tool, as functions from an input document
// to an output document and exit code. The executable only adds argument
// parsing and file handling.
//
// Exit codes: 0 success, 2 malformed input, 3 solver or geometry failure
// (including a verify that finds residuals above tolerance), 4 I/O failure.

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellbill/billiard.hpp"
#include "ellbill/certificate.hpp"
#include "ellbill/cli/json_io.hpp"
#include "ellbill/cli/svg.hpp"
#include "ellbill/conics.hpp"
#include "ellbill/geometry.hpp"
#include "ellbill/quad_solver.hpp"
#include "ellbill/triangle_solver.hpp"

namespace ellbill::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitIo = 4;

struct Options {
    double tol = 1e-9;
    int max_bounces = 1000;
    int digits = 17;
};

struct CommandResult {
    int exit_code = kExitOk;
    std::string output; ///< document to write (JSON or SVG)
};

enum class PolygonKind { Triangle, Parallelogram, Butterfly, Auto };

inline std::string_view to_string(PolygonKind k) {
    switch (k) {
    case PolygonKind::Triangle: return "triangle";
    case PolygonKind::Parallelogram: return "parallelogram";
    case PolygonKind::Butterfly: return "butterfly";
    case PolygonKind::Auto: return "auto";
    }
    return "auto";
}

struct PolygonInput {
    PolygonKind kind = PolygonKind::Auto;
    std::vector<Point2> vertices;
};

inline PolygonKind parse_kind(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "triangle") return PolygonKind::Triangle;
    if (s == "parallelogram") return PolygonKind::Parallelogram;
    if (s == "butterfly") return PolygonKind::Butterfly;
    if (s == "auto") return PolygonKind::Auto;
    throw ParseError("unknown kind \"" + s + "\"");
}

inline PolygonInput read_polygon_input(const Json& doc) {
    PolygonInput in;
    if (!doc.is_object()) throw ParseError("input must be a JSON object");
    if (doc.contains("kind")) {
        if (!doc.at("kind").is_string()) throw ParseError("kind must be a string");
        in.kind = parse_kind(doc.at("kind").get<std::string>());
    }
    in.vertices = read_points(require_field(doc, "vertices"));
    const std::size_t n = in.vertices.size();
    const bool ok = in.kind == PolygonKind::Triangle ? n == 3 : in.kind == PolygonKind::Auto ? (n == 3 || n == 4) : n == 4;
    if (!ok)
        throw ParseError("kind \"" + std::string(to_string(in.kind)) + "\" does not accept " + std::to_string(n) +
                         " vertices");
    return in;
}

/// Kind of a 3- or 4-vertex polygon: triangles by count; quadrilaterals by
/// the parallelogram test (diagonals bisect each other, no crossing) or the
/// butterfly test (congruent opposite sides, one crossing pair).
inline PolygonKind infer_kind(std::span<const Point2> v) {
    if (v.size() == 3) return PolygonKind::Triangle;
    const double diam = bbox_diameter(v);
    const bool crossing = ellbill::detail::segments_cross(v[0], v[1], v[2], v[3]) ||
                          ellbill::detail::segments_cross(v[1], v[2], v[3], v[0]);
    if (!crossing && norm(v[0] + v[2] - v[1] - v[3]) <= 1e-6 * diam) return PolygonKind::Parallelogram;
    const bool congruent = std::abs(distance(v[0], v[1]) - distance(v[2], v[3])) <= 1e-6 * diam &&
                           std::abs(distance(v[1], v[2]) - distance(v[3], v[0])) <= 1e-6 * diam;
    if (crossing && congruent) return PolygonKind::Butterfly;
    throw GeometryError(ErrorCode::UnclassifiedPolygon, "quadrilateral is neither a parallelogram nor a butterfly");
}

struct SolveResult {
    PolygonKind kind = PolygonKind::Triangle;
    std::vector<Point2> vertices;
    Ellipse boundary;
    std::vector<Point2> host;
    std::vector<int> touch_edge; ///< vertex i touches host edge touch_edge[i] -> touch_edge[i] + 1
    std::vector<VertexCertificate> certificates;
    std::optional<ConfocalConic> caustic;
    Json details;
};

namespace detail {

inline std::optional<ConfocalConic> closed_orbit_caustic(const Ellipse& e, std::span<const Point2> v) {
    const Line2 side = Line2::through(v[0], v[1]);
    if (passes_through_focus(e, side)) return std::nullopt;
    return caustic_of_line(e, side);
}

} // namespace detail

inline SolveResult solve(const PolygonInput& in, const NumberFormat& fmt = {}) {
    const auto& v = in.vertices;
    const PolygonKind kind = in.kind == PolygonKind::Auto ? infer_kind(v) : in.kind;
    if (kind == PolygonKind::Triangle) {
        const TriangleTrajectory t = boundary_ellipse(v[0], v[1], v[2]);
        const auto host = t.host();
        const auto w = t.weights.values();
        SolveResult r{kind,
                      v,
                      t.boundary,
                      {host.begin(), host.end()},
                      {t.touch_edge.begin(), t.touch_edge.end()},
                      certify(t),
                      std::nullopt,
                      Json{{"weights", Json::array({fmt(w[0]), fmt(w[1]), fmt(w[2])})}}};
        r.caustic = detail::closed_orbit_caustic(r.boundary, v);
        return r;
    }
    if (kind == PolygonKind::Parallelogram) {
        const ParallelogramCase c = parallelogram_boundary_ellipse(v[0], v[1], v[2], v[3]);
        const auto host = c.host();
        SolveResult r{kind,
                      v,
                      c.boundary,
                      {host.begin(), host.end()},
                      {c.touch_edge.begin(), c.touch_edge.end()},
                      certify(c),
                      std::nullopt,
                      Json{{"a", fmt(c.a)}, {"b", fmt(c.b)}, {"e", fmt(c.e)}, {"x", fmt(c.x)}, {"y", fmt(c.y)}}};
        r.caustic = detail::closed_orbit_caustic(r.boundary, v);
        return r;
    }
    const ButterflyCase c = butterfly_boundary_ellipse(v[0], v[1], v[2], v[3]);
    const auto host = c.host();
    SolveResult r{kind,
                  v,
                  c.boundary,
                  {host.begin(), host.end()},
                  {c.touch_edge.begin(), c.touch_edge.end()},
                  certify(c),
                  std::nullopt,
                  Json{{"b1", fmt(c.b1)}, {"b2", fmt(c.b2)}, {"f1", fmt(c.f1)}, {"f2", fmt(c.f2)}}};
    r.caustic = detail::closed_orbit_caustic(r.boundary, v);
    return r;
}

inline Json to_json(const SolveResult& r, const NumberFormat& fmt) {
    Json edges = Json::array();
    for (int j : r.touch_edge) edges.push_back(Json::array({j, (j + 1) % static_cast<int>(r.host.size())}));
    return Json{{"type", "solve_result"},
                {"kind", std::string(to_string(r.kind))},
                {"vertices", to_json(std::span<const Point2>(r.vertices), fmt)},
                {"ellipse", to_json(r.boundary, fmt)},
                {"host", Json{{"vertices", to_json(std::span<const Point2>(r.host), fmt)}, {"touch_edges", edges}}},
                {"details", r.details},
                {"certificates", to_json(std::span<const VertexCertificate>(r.certificates), fmt)},
                {"worst_residual", fmt(worst_residual(r.certificates))},
                {"caustic", r.caustic ? to_json(*r.caustic, fmt) : Json(nullptr)}};
}

inline Json to_json(const Trajectory& t, const NumberFormat& fmt) {
    Json residuals = Json::array();
    for (std::size_t i = 1; i < t.vertices.size(); ++i) {
        const Point2 v = t.vertices[i];
        const double on = std::abs(t.boundary.focal_sum(v) - t.boundary.rope_length()) / t.boundary.rope_length();
        const double refl = ellbill::detail::focal_reflection_residual(t.boundary, t.vertices[i - 1], v, v + t.directions[i]);
        residuals.push_back(Json{{"on_ellipse", fmt(on)}, {"reflection", fmt(refl)}});
    }
    return Json{{"type", "trajectory"},
                {"ellipse", to_json(t.boundary, fmt)},
                {"vertices", to_json(std::span<const Point2>(t.vertices), fmt)},
                {"directions", to_json(std::span<const Point2>(t.directions), fmt)},
                {"closed", t.closed},
                {"period", t.period ? Json(*t.period) : Json(nullptr)},
                {"focal", t.focal},
                {"caustic", t.caustic ? to_json(*t.caustic, fmt) : Json(nullptr)},
                {"residuals", residuals}};
}

inline std::string dump(const Json& j) { return to_text(j); }

// --- commands --------------------------------------------------------------

inline CommandResult cmd_solve(const Json& doc, const Options& opt) {
    const NumberFormat fmt{opt.digits};
    return {kExitOk, dump(to_json(solve(read_polygon_input(doc), fmt), fmt))};
}

/// Input: {"ellipse": {...}, "start": [x, y], "direction": [dx, dy],
/// "bounces": n} or a solve result, which is launched from its first vertex
/// toward the second for one lap unless "bounces" is given.
inline CommandResult cmd_simulate(const Json& doc, const Options& opt) {
    if (!doc.is_object()) throw ParseError("input must be a JSON object");
    const NumberFormat fmt{opt.digits};
    const Ellipse e = read_ellipse(require_field(doc, "ellipse"));
    Point2 start, dir;
    int bounces = opt.max_bounces;
    if (doc.contains("start")) {
        start = read_point(doc.at("start"));
        dir = read_point(require_field(doc, "direction"));
    } else {
        const auto v = read_points(require_field(doc, "vertices"));
        if (v.size() < 2) throw ParseError("need a start point and direction or at least two vertices");
        start = v[0];
        dir = v[1] - v[0];
        bounces = static_cast<int>(v.size());
    }
    if (dir.x == 0.0 && dir.y == 0.0) throw ParseError("direction must be nonzero");
    if (doc.contains("bounces")) {
        const Json& b = doc.at("bounces");
        if (!b.is_number_integer() || b.get<long long>() < 1) throw ParseError("bounces must be a positive integer");
        bounces = static_cast<int>(std::min<long long>(b.get<long long>(), opt.max_bounces));
    }
    RunOptions ro;
    ro.caustic_tol = opt.tol;
    return {kExitOk, dump(to_json(run(e, start, dir, bounces, ro), fmt))};
}

inline Figure figure_from_document(const Json& doc) {
    if (!doc.is_object()) throw ParseError("input must be a JSON object");
    const std::string type = doc.contains("type") && doc.at("type").is_string() ? doc.at("type").get<std::string>() : "";
    Figure f{read_ellipse(require_field(doc, "ellipse")), read_points(require_field(doc, "vertices")), true, {},
             std::nullopt, ""};
    if (type == "solve_result") {
        f.host = read_points(require_field(require_field(doc, "host"), "vertices"));
        f.title = "ellbill " + require_field(doc, "kind").get<std::string>();
    } else if (type == "trajectory") {
        f.closed = require_field(doc, "closed").get<bool>();
        f.title = "ellbill trajectory";
    } else {
        throw ParseError("render expects a solve_result or trajectory document");
    }
    if (doc.contains("caustic") && !doc.at("caustic").is_null()) {
        const double lambda = read_number(require_field(doc.at("caustic"), "lambda"), "lambda");
        f.caustic = ConfocalConic{f.boundary, lambda, classify_lambda(f.boundary, lambda)};
    }
    return f;
}

inline CommandResult cmd_render(const Json& doc, const Options&) { return {kExitOk, render_svg(figure_from_document(doc))}; }

namespace detail {

/// Certificates recomputed from a solve result document alone, through the
/// canonical-frame tangent rather than the focal bisector the solvers use.
inline std::vector<VertexCertificate> recertify(const Ellipse& e, const std::vector<Point2>& v,
                                                const std::vector<Point2>& host, const Json& edges) {
    if (!edges.is_array() || edges.size() != v.size()) throw ParseError("touch_edges must list one edge per vertex");
    const double diam = bbox_diameter(v);
    const std::size_t n = v.size();
    std::vector<VertexCertificate> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Json& ed = edges[i];
        if (!ed.is_array() || ed.size() != 2 || !ed[0].is_number_integer() || !ed[1].is_number_integer())
            throw ParseError("a touch edge is a pair of host vertex indices");
        const auto j0 = ed[0].get<std::size_t>(), j1 = ed[1].get<std::size_t>();
        if (j0 >= host.size() || j1 >= host.size()) throw ParseError("touch edge index out of range");
        const Line2 side = Line2::through(host[j0], host[j1]);
        VertexCertificate c;
        c.on_ellipse = std::abs(e.focal_sum(v[i]) - e.rope_length()) / e.rope_length();
        c.tangency = std::max(std::abs(is_tangent(e, side).gap), side.distance(v[i])) / diam;
        const Line2 tangent(v[i], e.dir_to_world(perp(Point2{e.to_local(v[i]).x / e.A(), e.to_local(v[i]).y / e.B()})));
        c.reflection = reflection_law_residual(v[(i + n - 1) % n], v[i], v[(i + 1) % n], tangent);
        out.push_back(c);
    }
    return out;
}

} // namespace detail

/// Re-checks a solve result or trajectory document against `opt.tol`.
inline CommandResult cmd_verify(const Json& doc, const Options& opt) {
    if (!doc.is_object()) throw ParseError("input must be a JSON object");
    const NumberFormat fmt{opt.digits};
    const std::string type = doc.contains("type") && doc.at("type").is_string() ? doc.at("type").get<std::string>() : "";
    const Ellipse e = read_ellipse(require_field(doc, "ellipse"));
    const auto v = read_points(require_field(doc, "vertices"));
    Json report{{"type", "verify_report"}, {"checked", type}, {"tol", opt.tol}};
    double worst = 0.0;
    if (type == "solve_result") {
        if (v.size() < 3) throw ParseError("a solve result needs at least three vertices");
        const Json& host = require_field(doc, "host");
        const auto certs = detail::recertify(e, v, read_points(require_field(host, "vertices")),
                                             require_field(host, "touch_edges"));
        worst = worst_residual(certs);
        report["certificates"] = to_json(std::span<const VertexCertificate>(certs), fmt);
    } else if (type == "trajectory") {
        const auto dirs = read_points(require_field(doc, "directions"));
        if (dirs.size() != v.size() || v.size() < 2) throw ParseError("one direction per vertex, at least two vertices");
        Json per = Json::array();
        for (std::size_t i = 1; i < v.size(); ++i) {
            const double on = std::abs(e.focal_sum(v[i]) - e.rope_length()) / e.rope_length();
            const double refl = ellbill::detail::focal_reflection_residual(e, v[i - 1], v[i], v[i] + dirs[i]);
            worst = std::max({worst, on, refl});
            per.push_back(Json{{"on_ellipse", fmt(on)}, {"reflection", fmt(refl)}});
        }
        report["residuals"] = per;
    } else {
        throw ParseError("verify expects a solve_result or trajectory document");
    }
    // The caustic must touch every segment, including the closing one of a
    // solved polygon.
    double caustic_dev = 0.0;
    if (doc.contains("caustic") && !doc.at("caustic").is_null()) {
        const double lambda = read_number(require_field(doc.at("caustic"), "lambda"), "lambda");
        const std::size_t segs = type == "solve_result" ? v.size() : v.size() - 1;
        for (std::size_t i = 0; i < segs; ++i)
            caustic_dev = std::max(caustic_dev,
                                   std::abs(line_lambda(e, Line2::through(v[i], v[(i + 1) % v.size()])) - lambda) / e.A());
        report["caustic_deviation"] = fmt(caustic_dev);
    }
    const bool ok = worst <= opt.tol && caustic_dev <= opt.tol;
    report["worst_residual"] = fmt(worst);
    report["verified"] = ok;
    return {ok ? kExitOk : kExitSolver, dump(report)};
}

inline Json error_document(std::string_view code, std::string_view message) {
    return Json{{"error", Json{{"code", std::string(code)}, {"message", std::string(message)}}}};
}

/// Runs a command on raw input text, mapping failures to exit codes and an
/// error document.
inline CommandResult run_command(std::string_view name, const std::string& input, const Options& opt) {
    try {
        const Json doc = parse_document(input);
        if (name == "solve") return cmd_solve(doc, opt);
        if (name == "simulate") return cmd_simulate(doc, opt);
        if (name == "render") return cmd_render(doc, opt);
        if (name == "verify") return cmd_verify(doc, opt);
        return {kExitParse, dump(error_document("ParseError", "unknown command " + std::string(name)))};
    } catch (const ParseError& e) {
        return {kExitParse, dump(error_document("ParseError", e.what()))};
    } catch (const Json::exception& e) {
        return {kExitParse, dump(error_document("ParseError", e.what()))};
    } catch (const GeometryError& e) {
        return {kExitSolver, dump(error_document(ellbill::to_string(e.code()), e.what()))};
    }
}

} // namespace ellbill::cli
