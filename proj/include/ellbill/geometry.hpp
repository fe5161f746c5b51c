#pragma once

// Plane primitives and the classical triangle predicates (Ceva, Menelaus,
// Simson) shared by every solver.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "ellbill/error.hpp"
#include "ellbill/point.hpp"

namespace ellbill {

/// Ratio PX/XQ of directed segments along the line PQ.
struct SignedRatio {
    double value = 0.0;
};

/// Mirror image of `p` across `l`.
inline Point2 reflect_point(Point2 p, const Line2& l) { return 2.0 * l.project(p) - p; }

/// Angle in (-pi, pi] that rotates `from` onto `to`.
inline double signed_angle(Point2 from, Point2 to) { return std::atan2(cross(from, to), dot(from, to)); }

/// Interior angle at `vertex` in [0, pi].
inline double angle_at(Point2 prev, Point2 vertex, Point2 next) {
    return std::abs(signed_angle(prev - vertex, next - vertex));
}

/// Sine of the angle between the rays vertex->prev and vertex->next; throws
/// DegenerateAngle below `tol`.
inline void require_proper_angle(Point2 prev, Point2 vertex, Point2 next, double tol) {
    if (prev == vertex || next == vertex)
        throw GeometryError(ErrorCode::DegenerateAngle, "angle with a zero-length arm");
    const double s = cross(unit(prev - vertex), unit(next - vertex));
    if (std::abs(s) <= tol)
        throw GeometryError(ErrorCode::DegenerateAngle, "angle arms are collinear");
}

/// Bisector of the exterior angle at `vertex`, perpendicular to the interior one.
inline Line2 exterior_bisector(Point2 prev, Point2 vertex, Point2 next, double tol = 1e-12) {
    require_proper_angle(prev, vertex, next, tol);
    return {vertex, unit(next - vertex) - unit(prev - vertex)};
}

inline Line2 interior_bisector(Point2 prev, Point2 vertex, Point2 next, double tol = 1e-12) {
    require_proper_angle(prev, vertex, next, tol);
    return {vertex, unit(next - vertex) + unit(prev - vertex)};
}

/// Signed ratio PX/XQ for X on line PQ. Ratios are taken along the directed
/// line P->Q, so the value is positive iff X lies strictly between P and Q.
inline SignedRatio signed_ratio(Point2 p, Point2 x, Point2 q, double tol = kDefaultTol) {
    const Point2 pq = q - p;
    const double len2 = norm2(pq);
    if (!(len2 > 0.0)) throw GeometryError(ErrorCode::ZeroLengthSegment, "ratio on a degenerate segment");
    const double len = std::sqrt(len2);
    if (Line2(p, pq).distance(x) > tol * std::max(1.0, len))
        throw GeometryError(ErrorCode::NotOnLine, "point is not on the side line");
    const double t = dot(x - p, pq) / len2;
    if (std::abs(t) <= tol || std::abs(1.0 - t) <= tol)
        throw GeometryError(ErrorCode::VertexCoincidence, "point coincides with a vertex");
    return {t / (1.0 - t)};
}

/// AM/MB * BK/KC * CL/LA with K on BC, L on CA, M on AB. Equals 1 iff the
/// cevians AK, BL, CM are concurrent (or parallel).
inline double ceva_product(Point2 a, Point2 b, Point2 c, Point2 k, Point2 l, Point2 m,
                           double tol = kDefaultTol) {
    return signed_ratio(a, m, b, tol).value * signed_ratio(b, k, c, tol).value *
           signed_ratio(c, l, a, tol).value;
}

/// AR/RB * BP/PC * CQ/QA with P on BC, Q on CA, R on AB. Equals -1 iff P, Q,
/// R are collinear.
inline double menelaus_product(Point2 a, Point2 b, Point2 c, Point2 p, Point2 q, Point2 r,
                               double tol = kDefaultTol) {
    return signed_ratio(a, r, b, tol).value * signed_ratio(b, p, c, tol).value *
           signed_ratio(c, q, a, tol).value;
}

/// Scale-free collinearity: |det| over the product of the two longest
/// pairwise distances (the sine of the best-conditioned angle). Points closer
/// than `tol` relative to the longest distance count as coincident.
inline bool are_collinear(Point2 p, Point2 q, Point2 r, double tol = kDefaultTol) {
    std::array<double, 3> len{distance(p, q), distance(q, r), distance(r, p)};
    std::sort(len.begin(), len.end());
    if (len[2] == 0.0 || len[1] <= tol * len[2]) return true;
    return std::abs(signed_area2(p, q, r)) / (len[2] * len[1]) < tol;
}

struct Circle {
    Point2 center;
    double radius = 0.0;
};

inline Circle circumcircle(Point2 a, Point2 b, Point2 c) {
    const Point2 ab = b - a, ac = c - a;
    const double den = 2.0 * cross(ab, ac);
    if (den == 0.0) throw GeometryError(ErrorCode::CollinearVertices, "circumcircle of collinear points");
    const Point2 off{(ac.y * norm2(ab) - ab.y * norm2(ac)) / den, (ab.x * norm2(ac) - ac.x * norm2(ab)) / den};
    return {a + off, norm(off)};
}

/// True iff the feet of the perpendiculars from `s` to lines BC, CA, AB are
/// collinear, i.e. `s` sits on the circumcircle.
inline bool simson_collinear(Point2 a, Point2 b, Point2 c, Point2 s, double tol = kDefaultTol) {
    const Point2 pa = Line2::through(b, c).project(s);
    const Point2 pb = Line2::through(c, a).project(s);
    const Point2 pc = Line2::through(a, b).project(s);
    return are_collinear(pa, pb, pc, tol);
}

/// Deviation (radians) from the billiard reflection law at `bounce`: zero iff
/// the segments to `incoming_from` and `outgoing_to` make equal angles with
/// `tangent` on the same side of it.
inline double reflection_law_residual(Point2 incoming_from, Point2 bounce, Point2 outgoing_to,
                                      const Line2& tangent) {
    if (incoming_from == bounce || outgoing_to == bounce)
        throw GeometryError(ErrorCode::ZeroLengthSegment, "reflection with a zero-length segment");
    const Point2 t = tangent.direction();
    const double back = signed_angle(t, incoming_from - bounce);
    const double out = signed_angle(t, outgoing_to - bounce);
    // Mirroring across the normal maps angle th to pi - th.
    double r = std::remainder(out - (std::numbers::pi - back), 2.0 * std::numbers::pi);
    return std::abs(r);
}

} // namespace ellbill
