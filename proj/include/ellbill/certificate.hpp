#pragma once

// Per-vertex evidence that a closed polygon is a billiard trajectory inside
// an ellipse, with each vertex touching a given host side.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "ellbill/conics.hpp"
#include "ellbill/geometry.hpp"

namespace ellbill {

struct VertexCertificate {
    double on_ellipse = 0.0; ///< |focal sum - d| / d
    double tangency = 0.0;   ///< host side defect over the polygon diameter
    double reflection = 0.0; ///< reflection-law residual, radians

    double worst() const { return std::max({on_ellipse, tangency, reflection}); }
};

/// Tangent direction of the confocal ellipse through `p` (the exterior
/// bisector of F1-p-F2). Defined off the boundary too, which the perturbation
/// harness relies on.
inline Line2 focal_tangent(const Ellipse& e, Point2 p) {
    const Point2 n = unit(p - e.focus1()) + unit(p - e.focus2());
    if (norm(n) == 0.0) throw GeometryError(ErrorCode::DegenerateEllipse, "point on the focal segment");
    return {p, perp(n)};
}

namespace detail {

/// Reflection-law residual at `v` against the focal tangent, evaluated in
/// extended precision. Vertices of thin polygons sit within ~1e-7 of a focus,
/// where double evaluation alone would contribute ~1e-9 rad of noise.
inline double focal_reflection_residual(const Ellipse& e, Point2 prev, Point2 v, Point2 next) {
    using W = long double;
    auto unit_w = [](W x, W y, W& ux, W& uy) {
        const W r = std::hypot(x, y);
        if (r == 0) throw GeometryError(ErrorCode::ZeroLengthSegment, "reflection with a zero-length segment");
        ux = x / r;
        uy = y / r;
    };
    W a1x, a1y, a2x, a2y;
    unit_w(W(v.x) - W(e.focus1().x), W(v.y) - W(e.focus1().y), a1x, a1y);
    unit_w(W(v.x) - W(e.focus2().x), W(v.y) - W(e.focus2().y), a2x, a2y);
    const W nx = a1x + a2x, ny = a1y + a2y;
    if (nx == 0 && ny == 0) throw GeometryError(ErrorCode::DegenerateEllipse, "point on the focal segment");
    const W tx = -ny, ty = nx;
    auto angle_from_tangent = [&](Point2 q) {
        const W qx = W(q.x) - W(v.x), qy = W(q.y) - W(v.y);
        if (qx == 0 && qy == 0) throw GeometryError(ErrorCode::ZeroLengthSegment, "reflection with a zero-length segment");
        return std::atan2(tx * qy - ty * qx, tx * qx + ty * qy);
    };
    const W pi = std::numbers::pi_v<W>;
    // Mirroring across the normal maps angle th to pi - th.
    const W r = std::remainder(angle_from_tangent(next) - (pi - angle_from_tangent(prev)), 2 * pi);
    return static_cast<double>(std::abs(r));
}

/// |focal sum - d| / d in extended precision.
inline double focal_sum_defect(const Ellipse& e, Point2 v) {
    using W = long double;
    const W s = std::hypot(W(v.x) - W(e.focus1().x), W(v.y) - W(e.focus1().y)) +
                std::hypot(W(v.x) - W(e.focus2().x), W(v.y) - W(e.focus2().y));
    return static_cast<double>(std::abs(s - W(e.rope_length())) / W(e.rope_length()));
}

} // namespace detail

/// Certificates for a closed polygon `vertices` (trajectory order) whose
/// vertex i should touch `host_sides[i]`.
inline std::vector<VertexCertificate> certify(const Ellipse& e, std::span<const Point2> vertices,
                                              std::span<const Line2> host_sides) {
    if (vertices.size() != host_sides.size() || vertices.size() < 3)
        throw GeometryError(ErrorCode::InvalidArgument, "one host side per vertex, at least three vertices");
    const double diam = bbox_diameter(vertices);
    const std::size_t n = vertices.size();
    std::vector<VertexCertificate> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 v = vertices[i];
        const Point2 prev = vertices[(i + n - 1) % n], next = vertices[(i + 1) % n];
        VertexCertificate c;
        c.on_ellipse = detail::focal_sum_defect(e, v);
        c.tangency = std::max(std::abs(tangency_gap(e, host_sides[i])), host_sides[i].distance(v)) / diam;
        c.reflection = detail::focal_reflection_residual(e, prev, v, next);
        out.push_back(c);
    }
    return out;
}

inline double worst_residual(std::span<const VertexCertificate> certs) {
    double w = 0.0;
    for (const auto& c : certs) w = std::max(w, c.worst());
    return w;
}

} // namespace ellbill
