#pragma once

// Forward simulation of the billiard inside an ellipse.
//
// Chords are intersected in the canonical frame of the ellipse, where the
// boundary is x^2/A + y^2/B = 1. Every hit point is pulled back onto the
// ellipse with one Newton step on the focal-sum residual, which keeps long
// runs from drifting. Every segment of a trajectory is tangent to one
// confocal conic, its caustic; focal trajectories, whose segments pass
// through the foci instead, have none.

#include <cmath>
#include <optional>
#include <vector>

#include "ellbill/conics.hpp"
#include "ellbill/error.hpp"
#include "ellbill/point.hpp"

namespace ellbill {

struct Bounce {
    Point2 point;     ///< hit point on the boundary
    Point2 direction; ///< unit direction after reflection
};

struct Trajectory {
    Ellipse boundary;
    std::vector<Point2> vertices;   ///< vertex 0 is the launch point on the boundary
    std::vector<Point2> directions; ///< unit direction leaving each vertex
    bool closed = false;
    std::optional<int> period;
    std::optional<ConfocalConic> caustic; ///< absent for focal trajectories
    bool focal = false;                   ///< segments alternate through the foci
};

struct RunOptions {
    double period_tol = 1e-8;  ///< position (relative to d) and direction tolerance
    double caustic_tol = 1e-9; ///< lambda agreement, relative to A
};

namespace detail {

/// Pulls a near-boundary point onto the ellipse along the focal normal.
inline Point2 project_to_boundary(const Ellipse& e, Point2 p) {
    for (int i = 0; i < 2; ++i) {
        const Point2 g = unit(p - e.focus1()) + unit(p - e.focus2());
        const double r = e.focal_sum(p) - e.rope_length();
        if (r == 0.0) break;
        p = p - (r / norm2(g)) * g;
    }
    return p;
}

/// Mirror of `v` in the tangent at boundary point `p`. The focal normal is
/// summed in extended precision because the two focal unit vectors nearly
/// cancel near the minor axis of a flat ellipse.
inline Point2 reflect_direction(const Ellipse& e, Point2 p, Point2 v) {
    using W = long double;
    const W x1 = W(p.x) - W(e.focus1().x), y1 = W(p.y) - W(e.focus1().y);
    const W x2 = W(p.x) - W(e.focus2().x), y2 = W(p.y) - W(e.focus2().y);
    const W r1 = std::hypot(x1, y1), r2 = std::hypot(x2, y2);
    const Point2 n = unit(Point2{static_cast<double>(x1 / r1 + x2 / r2), static_cast<double>(y1 / r1 + y2 / r2)});
    return unit(v - 2.0 * dot(v, n) * n);
}

} // namespace detail

/// Next boundary hit along the ray from `from` (on the boundary or inside)
/// and the reflected direction there.
inline Bounce next_bounce(const Ellipse& e, Point2 from, Point2 direction) {
    const Point2 dir = unit(direction);
    const Point2 p = e.to_local(from), v = e.dir_to_local(dir);
    const double qa = v.x * v.x / e.A() + v.y * v.y / e.B();
    const double qb = 2.0 * (p.x * v.x / e.A() + p.y * v.y / e.B());
    const double qc = p.x * p.x / e.A() + p.y * p.y / e.B() - 1.0;
    // The implicit form amplifies rounding by a/b in flat ellipses, so the
    // outside test uses the focal sum instead.
    if (e.focal_sum(from) - e.rope_length() > kDefaultTol * e.rope_length())
        throw GeometryError(ErrorCode::InvalidArgument, "launch point lies outside the ellipse");
    const double disc = std::max(0.0, qb * qb - 4.0 * qa * qc);
    // Stable roots q/qa and qc/q; the forward hit is the larger one. From a
    // boundary point the other root is ~0 and is the start itself.
    const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
    double t = q / qa;
    if (q != 0.0) t = std::max(t, qc / q);
    if (!(t > 1e-10 * e.rope_length()))
        throw GeometryError(ErrorCode::TangentialStart, "ray has no forward chord");
    const Point2 hit = detail::project_to_boundary(e, from + t * dir);
    return {hit, detail::reflect_direction(e, hit, dir)};
}

/// Smallest k >= 2 with vertex k back at vertex 0 (within tol*d) leaving in
/// the same direction (within tol).
inline std::optional<int> detect_period(const Trajectory& t, double tol = 1e-8) {
    const double lim = tol * t.boundary.rope_length();
    for (std::size_t k = 2; k < t.vertices.size(); ++k) {
        if (distance(t.vertices[k], t.vertices[0]) <= lim && distance(t.directions[k], t.directions[0]) <= tol)
            return static_cast<int>(k);
    }
    return std::nullopt;
}

/// The confocal conic touching every segment, from the first segment and
/// checked against all others.
inline ConfocalConic classify_caustic(const Trajectory& t, double tol = kDefaultTol) {
    if (t.vertices.size() < 2) throw GeometryError(ErrorCode::InvalidArgument, "need at least one segment");
    const Ellipse& e = t.boundary;
    const ConfocalConic c = caustic_of_line(e, Line2::through(t.vertices[0], t.vertices[1]), tol);
    for (std::size_t i = 1; i + 1 < t.vertices.size(); ++i) {
        const double lam = line_lambda(e, Line2::through(t.vertices[i], t.vertices[i + 1]));
        if (std::abs(lam - c.lambda) > tol * e.A())
            throw GeometryError(ErrorCode::CausticMismatch, "segment " + std::to_string(i) + " touches another conic");
    }
    return c;
}

/// Simulates `max_bounces` reflections. A launch point inside the ellipse is
/// first carried to its boundary hit, which becomes vertex 0.
inline Trajectory run(const Ellipse& e, Point2 start, Point2 direction, int max_bounces,
                      const RunOptions& opt = {}) {
    if (max_bounces < 1) throw GeometryError(ErrorCode::InvalidArgument, "max_bounces must be at least 1");
    Trajectory t{e, {}, {}, false, std::nullopt, std::nullopt, false};
    Point2 dir = unit(direction);
    Point2 p = start;
    if (!contains_point(e, start, kDefaultTol)) {
        const Point2 q = e.to_local(start);
        if (q.x * q.x / e.A() + q.y * q.y / e.B() > 1.0)
            throw GeometryError(ErrorCode::InvalidArgument, "launch point lies outside the ellipse");
        const Bounce b = next_bounce(e, start, dir);
        p = b.point;
        dir = b.direction;
    } else {
        p = detail::project_to_boundary(e, start);
    }
    t.vertices.reserve(static_cast<std::size_t>(max_bounces) + 1);
    t.directions.reserve(static_cast<std::size_t>(max_bounces) + 1);
    t.vertices.push_back(p);
    t.directions.push_back(dir);
    for (int i = 0; i < max_bounces; ++i) {
        const Bounce b = next_bounce(e, p, dir);
        p = b.point;
        dir = b.direction;
        t.vertices.push_back(p);
        t.directions.push_back(dir);
    }

    const Line2 first = Line2::through(t.vertices[0], t.vertices[1]);
    t.focal = passes_through_focus(e, first, opt.caustic_tol);
    if (!t.focal) t.caustic = classify_caustic(t, opt.caustic_tol);
    t.period = detect_period(t, opt.period_tol);
    t.closed = t.period.has_value();
    return t;
}

} // namespace ellbill
