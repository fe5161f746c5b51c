#pragma once

// SVG 1.1 figures: boundary ellipse, trajectory, host polygon, foci and an
// optional confocal caustic. World coordinates are mapped into a fixed-size
// canvas with y pointing up; coordinates are written with three decimals so
// output is byte-stable.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ellbill/conics.hpp"
#include "ellbill/point.hpp"

namespace ellbill::cli {

struct Figure {
    Ellipse boundary;
    std::vector<Point2> trajectory;
    bool closed = true;
    std::vector<Point2> host; ///< empty when there is no host polygon
    std::optional<ConfocalConic> caustic;
    std::string title;
};

namespace detail {

inline std::string fmt3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    return s == "-0.000" ? "0.000" : s;
}

/// Sampled arcs of the caustic inside the boundary, in world coordinates.
inline std::vector<std::vector<Point2>> caustic_arcs(const ConfocalConic& c, int samples = 96) {
    const Ellipse& e = c.base;
    std::vector<std::vector<Point2>> arcs;
    const double p2 = c.axis2_major(), q2 = c.axis2_minor();
    if (c.kind == ConicKind::ConfocalEllipse && p2 > 0.0 && q2 > 0.0) {
        std::vector<Point2> ring;
        for (int i = 0; i <= samples; ++i) {
            const double t = 2.0 * std::numbers::pi * i / samples;
            ring.push_back(e.to_world({std::sqrt(p2) * std::cos(t), std::sqrt(q2) * std::sin(t)}));
        }
        arcs.push_back(std::move(ring));
    } else if (c.kind == ConicKind::ConfocalHyperbola && p2 > 0.0 && q2 < 0.0) {
        // x = +-alpha cosh u, y = beta sinh u up to where the branch leaves the
        // boundary.
        const double al = std::sqrt(p2), be = std::sqrt(-q2);
        const double s = (1.0 - p2 / e.A()) / (p2 / e.A() + (-q2) / e.B());
        const double umax = std::asinh(std::sqrt(std::max(0.0, s)));
        for (double side : {1.0, -1.0}) {
            std::vector<Point2> arc;
            for (int i = 0; i <= samples; ++i) {
                const double u = -umax + 2.0 * umax * i / samples;
                arc.push_back(e.to_world({side * al * std::cosh(u), be * std::sinh(u)}));
            }
            arcs.push_back(std::move(arc));
        }
    }
    return arcs;
}

} // namespace detail

inline std::string render_svg(const Figure& f, double canvas = 800.0) {
    const Ellipse& e = f.boundary;
    const EllipseCanonical ec = to_canonical(e);
    // Axis-aligned extent of the rotated ellipse.
    const double cr = std::cos(ec.rotation), sr = std::sin(ec.rotation);
    const double hx = std::hypot(ec.semi_major * cr, ec.semi_minor * sr);
    const double hy = std::hypot(ec.semi_major * sr, ec.semi_minor * cr);
    double x0 = ec.center.x - hx, x1 = ec.center.x + hx, y0 = ec.center.y - hy, y1 = ec.center.y + hy;
    for (const auto& p : f.host) {
        x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    }
    const double span = std::max(x1 - x0, y1 - y0);
    const double margin = 0.05 * span;
    const double scale = canvas / (span + 2.0 * margin);
    const double width = (x1 - x0 + 2.0 * margin) * scale, height = (y1 - y0 + 2.0 * margin) * scale;
    auto X = [&](double x) { return detail::fmt3((x - x0 + margin) * scale); };
    auto Y = [&](double y) { return detail::fmt3((y1 - y + margin) * scale); };
    auto pts = [&](std::span<const Point2> ps) {
        std::string s;
        for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? " " : "") + X(ps[i].x) + "," + Y(ps[i].y);
        return s;
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::fmt3(width) + "\" height=\"" +
           detail::fmt3(height) + "\" viewBox=\"0 0 " + detail::fmt3(width) + " " + detail::fmt3(height) + "\">\n";
    if (!f.title.empty()) out += "  <title>" + f.title + "</title>\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const std::string cx = X(ec.center.x), cy = Y(ec.center.y);
    const bool circle = ec.semi_major - ec.semi_minor <= 1e-12 * ec.semi_major;
    if (circle) {
        out += "  <circle id=\"boundary\" cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"" + detail::fmt3(ec.semi_major * scale) +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    } else {
        // The canvas y axis points down, so the rotation changes sign.
        out += "  <ellipse id=\"boundary\" cx=\"" + cx + "\" cy=\"" + cy + "\" rx=\"" +
               detail::fmt3(ec.semi_major * scale) + "\" ry=\"" + detail::fmt3(ec.semi_minor * scale) +
               "\" transform=\"rotate(" + detail::fmt3(-ec.rotation * 180.0 / std::numbers::pi) + " " + cx + " " + cy +
               ")\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    if (f.caustic) {
        for (const auto& arc : detail::caustic_arcs(*f.caustic))
            out += "  <polyline class=\"caustic\" points=\"" + pts(arc) +
                   "\" fill=\"none\" stroke=\"seagreen\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }
    if (!f.host.empty())
        out += "  <polygon id=\"host\" points=\"" + pts(f.host) +
               "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
    if (!f.trajectory.empty()) {
        const char* tag = f.closed ? "polygon" : "polyline";
        out += std::string("  <") + tag + " id=\"trajectory\" points=\"" + pts(f.trajectory) +
               "\" fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";
    }
    auto dot = [&](Point2 p, const char* id) {
        out += std::string("  <circle id=\"") + id + "\" cx=\"" + X(p.x) + "\" cy=\"" + Y(p.y) +
               "\" r=\"4\" fill=\"royalblue\"/>\n";
    };
    // Foci that land on the same canvas position are drawn as one dot.
    dot(e.focus1(), "focus1");
    if (X(e.focus1().x) != X(e.focus2().x) || Y(e.focus1().y) != Y(e.focus2().y)) dot(e.focus2(), "focus2");
    out += "</svg>\n";
    return out;
}

} // namespace ellbill::cli
