#pragma once

// Boundary ellipses for the two families of 4-periodic trajectories.
//
// Parallelograms have a confocal ellipse as caustic. Their exterior bisectors
// bound a rectangle ABCD; with a = AB, b = BC and e = AE, a focus at distance
// x from AD and y from AB satisfies
//   (a - 2x)^2 - (b - 2y)^2 = a^2 - b^2,   (a - 2x)(b - 2y) = b(a - 2e),
// and the second focus is its mirror image through the rectangle center.
//
// Darboux butterflies have a confocal hyperbola as caustic. Their exterior
// bisectors bound a kite split by its axis into two congruent acute
// triangles. In the frame A = (0,0), C = (1,0) on the axis with apex
// B = (b1, b2), a focus (f1, f2) lies on the circle with diameter AC,
// f1^2 - f1 + f2^2 = 0, with f1 = (b1^2 + b2^2) / (1 - 2 b1 + 2 b1^2 + 2 b2^2).
// The second focus is the mirror image across the axis.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ellbill/certificate.hpp"
#include "ellbill/conics.hpp"
#include "ellbill/error.hpp"
#include "ellbill/geometry.hpp"

namespace ellbill {

// ---------------------------------------------------------------------------
// Parallelograms

struct ParallelogramCase {
    Point2 E, F, G, H;                     ///< trajectory vertices
    Point2 rect_A, rect_B, rect_C, rect_D; ///< E on AB, F on BC, G on CD, H on DA
    double a = 0.0, b = 0.0;               ///< a = AB = CD, b = BC = AD
    double e = 0.0;                        ///< AE
    double x = 0.0, y = 0.0;               ///< distances of focus1 from AD and AB
    Ellipse boundary;
    static constexpr std::array<int, 4> touch_edge{0, 1, 2, 3};

    std::array<Point2, 4> vertices() const { return {E, F, G, H}; }
    std::array<Point2, 4> host() const { return {rect_A, rect_B, rect_C, rect_D}; }
    std::array<Line2, 4> host_sides() const {
        return {Line2::through(rect_A, rect_B), Line2::through(rect_B, rect_C), Line2::through(rect_C, rect_D),
                Line2::through(rect_D, rect_A)};
    }
};

namespace detail {

inline void require_distinct(std::span<const Point2> pts, ErrorCode code) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw GeometryError(code, "coincident vertices");
}

/// Strict crossing of segments pq and rs.
inline bool segments_cross(Point2 p, Point2 q, Point2 r, Point2 s) {
    const double d1 = signed_area2(p, q, r), d2 = signed_area2(p, q, s);
    const double d3 = signed_area2(r, s, p), d4 = signed_area2(r, s, q);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

} // namespace detail

/// Rectangle bounded by the exterior bisectors of the parallelogram EFGH.
inline std::array<Point2, 4> bounding_rectangle(Point2 E, Point2 F, Point2 G, Point2 H) {
    const std::array<Point2, 4> v{E, F, G, H};
    detail::require_distinct(v, ErrorCode::DegenerateParallelogram);
    const double diam = bbox_diameter(v);
    if (std::abs(signed_area2(E, F, G)) <= 1e-12 * diam * diam)
        throw GeometryError(ErrorCode::DegenerateParallelogram, "parallelogram is flat");
    if (norm(E + G - F - H) > 1e-6 * diam)
        throw GeometryError(ErrorCode::NotParallelogram, "diagonals do not bisect each other");
    const Line2 be = exterior_bisector(H, E, F), bf = exterior_bisector(E, F, G);
    const Line2 bg = exterior_bisector(F, G, H), bh = exterior_bisector(G, H, E);
    return {intersect(bh, be), intersect(be, bf), intersect(bf, bg), intersect(bg, bh)};
}

/// A focus position in rectangle coordinates.
struct RectFocus {
    double x = 0.0, y = 0.0;
};

/// Residuals of the two focus relations, relative to a^2 + b^2.
inline std::array<double, 2> parallelogram_focus_residuals(double a, double b, double e, RectFocus f) {
    const double X = a - 2.0 * f.x, Y = b - 2.0 * f.y, s = a * a + b * b;
    return {std::abs((X - Y) * (X + Y) - (a - b) * (a + b)) / s, std::abs(X * Y - b * (a - 2.0 * e)) / s};
}

/// Focus solutions inside the a-by-b rectangle for a tangency at distance e
/// from A along AB. Returns the mirror pair sorted with the canonical pick
/// (x <= a/2, then y <= b/2) first, or the center alone for a square with e
/// at the midpoint.
inline std::vector<RectFocus> parallelogram_focus(double a, double b, double e) {
    if (!(a > 0.0 && b > 0.0 && e > 0.0 && e < a) || !std::isfinite(a) || !std::isfinite(b))
        throw GeometryError(ErrorCode::InvalidDimensions, "need a > 0, b > 0 and 0 < e < a");
    // With X = a - 2x and Y = b - 2y, X^2 and Y^2 are the positive roots of
    // t^2 - p t - q = 0 and t^2 + p t - q = 0. Each is taken in the form that
    // avoids cancellation, so the e = a/2 and a = b cases need no branches.
    const double k = a - 2.0 * e;
    const double p = (a - b) * (a + b), q = b * b * k * k;
    const double root_d = std::hypot(p, 2.0 * b * k);
    const double xi = p >= 0.0 ? 0.5 * (p + root_d) : 2.0 * q / (root_d - p);
    const double eta = p <= 0.0 ? 0.5 * (root_d - p) : 2.0 * q / (root_d + p);
    const double X = std::sqrt(xi);
    const double Y = std::copysign(std::sqrt(eta), k);
    std::vector<RectFocus> out{{0.5 * (a - X), 0.5 * (b - Y)}, {0.5 * (a + X), 0.5 * (b + Y)}};
    if (X == 0.0 && Y == 0.0) out.pop_back();
    std::sort(out.begin(), out.end(), [](RectFocus l, RectFocus r) { return l.x < r.x || (l.x == r.x && l.y < r.y); });
    return out;
}

/// The unique ellipse in which EFGH is a 4-periodic billiard trajectory.
inline ParallelogramCase parallelogram_boundary_ellipse(Point2 E, Point2 F, Point2 G, Point2 H) {
    const auto [A, B, C, D] = bounding_rectangle(E, F, G, H);
    const double a = distance(A, B), b = distance(A, D);
    const Point2 u = unit(B - A), w = unit(D - A);
    const double e = dot(E - A, u);
    const RectFocus f = parallelogram_focus(a, b, e).front();
    const Point2 f1 = A + f.x * u + f.y * w;
    const Point2 f2 = A + (a - f.x) * u + (b - f.y) * w;
    return {E, F, G, H, A, B, C, D, a, b, e, f.x, f.y, ellipse_from_foci_and_point(f1, f2, E)};
}

inline std::vector<VertexCertificate> certify(const ParallelogramCase& c) {
    const auto v = c.vertices();
    const auto h = c.host_sides();
    return certify(c.boundary, v, h);
}

// ---------------------------------------------------------------------------
// Darboux butterflies

struct ButterflyCase {
    Point2 G, H, K, L;                     ///< trajectory vertices in input order
    Point2 kite_A, kite_B, kite_C, kite_D; ///< A and C on the symmetry axis
    double b1 = 0.0, b2 = 0.0;             ///< apex B in the frame A = (0,0), C = (1,0), b2 > 0
    double f1 = 0.0, f2 = 0.0;             ///< focus1 in that frame
    Ellipse boundary;
    std::array<Line2, 4> sides; ///< kite side touched by G, H, K, L respectively
    std::array<int, 4> touch_edge{}; ///< that side runs from host()[j] to host()[(j + 1) % 4]

    std::array<Point2, 4> vertices() const { return {G, H, K, L}; }
    std::array<Point2, 4> host() const { return {kite_A, kite_B, kite_C, kite_D}; }
    std::array<Line2, 4> host_sides() const { return sides; }
};

struct Kite {
    Point2 A, B, C, D;
    std::array<Line2, 4> sides; ///< side touched by each input vertex, in input order
    std::array<int, 4> touch_edge{}; ///< for each input vertex, the edge from corner j to corner j + 1 (mod 4)
};

namespace detail {

/// Input positions of the butterfly relabelled as v0..v3 so that the sides
/// v0v1 and v2v3 are the crossing pair.
inline std::array<int, 4> butterfly_order(const std::array<Point2, 4>& p) {
    if (segments_cross(p[0], p[1], p[2], p[3])) return {0, 1, 2, 3};
    if (segments_cross(p[1], p[2], p[3], p[0])) return {1, 2, 3, 0};
    throw GeometryError(ErrorCode::NotButterfly, "no pair of opposite sides crosses");
}

} // namespace detail

/// Kite bounded by the exterior bisectors of the butterfly GHKL.
inline Kite butterfly_kite(Point2 G, Point2 H, Point2 K, Point2 L) {
    const std::array<Point2, 4> p{G, H, K, L};
    detail::require_distinct(p, ErrorCode::NotButterfly);
    const double diam = bbox_diameter(p);
    if (std::abs(distance(G, H) - distance(K, L)) > 1e-6 * diam ||
        std::abs(distance(H, K) - distance(L, G)) > 1e-6 * diam)
        throw GeometryError(ErrorCode::NotButterfly, "opposite sides are not congruent");
    const auto idx = detail::butterfly_order(p);
    const Point2 v0 = p[idx[0]], v1 = p[idx[1]], v2 = p[idx[2]], v3 = p[idx[3]];
    // Going around the kite the touch points come in the order v0, v2, v1, v3;
    // v0, v2 and v1, v3 are mirror pairs, so A and C land on the axis.
    std::array<Line2, 4> bis{exterior_bisector(v3, v0, v1), exterior_bisector(v0, v1, v2),
                             exterior_bisector(v1, v2, v3), exterior_bisector(v2, v3, v0)};
    const Point2 A = intersect(bis[0], bis[2]), B = intersect(bis[2], bis[1]);
    const Point2 C = intersect(bis[1], bis[3]), D = intersect(bis[3], bis[0]);
    constexpr std::array<int, 4> edge{3, 1, 0, 2}; // v0 on DA, v1 on BC, v2 on AB, v3 on CD
    Kite k{A, B, C, D, {bis[0], bis[0], bis[0], bis[0]}, {}};
    for (int i = 0; i < 4; ++i) {
        k.sides[idx[i]] = bis[i];
        k.touch_edge[idx[i]] = edge[i];
    }
    return k;
}

/// Focus of the butterfly ellipse in the frame A = (0,0), C = (1,0) with apex
/// (b1, b2). Returns f1 and |f2|; the focus lies in the half-triangle when f2
/// takes the sign of b2.
inline std::array<double, 2> butterfly_focus(double b1, double b2) {
    if (!std::isfinite(b1) || !std::isfinite(b2))
        throw GeometryError(ErrorCode::InvalidArgument, "apex coordinates must be finite");
    if (b2 == 0.0) throw GeometryError(ErrorCode::DegenerateApex, "apex lies on the axis");
    // The denominator is 2(b1 - 1/2)^2 + 2 b2^2 + 1/2 >= 1/2.
    const double den = 2.0 * (b1 - 0.5) * (b1 - 0.5) + 2.0 * b2 * b2 + 0.5;
    if (den < 1e-14) throw GeometryError(ErrorCode::DegenerateApex, "focus denominator vanishes");
    const double f1 = (b1 * b1 + b2 * b2) / den;
    return {f1, std::sqrt(std::max(0.0, f1 * (1.0 - f1)))};
}

/// The unique ellipse in which the butterfly GHKL is a 4-periodic billiard
/// trajectory.
inline ButterflyCase butterfly_boundary_ellipse(Point2 G, Point2 H, Point2 K, Point2 L) {
    const Kite kite = butterfly_kite(G, H, K, L);
    const double lim = std::numbers::pi / 2 - 1e-9;
    if (!(angle_at(kite.C, kite.A, kite.B) < lim && angle_at(kite.A, kite.B, kite.C) < lim &&
          angle_at(kite.B, kite.C, kite.A) < lim))
        throw GeometryError(ErrorCode::NotAcuteHalf, "kite halves must be acute");

    // Similarity onto A = 0, C = 1, reflected if needed so the apex is above.
    using Cx = std::complex<double>;
    const Cx za = kite.A.to_complex(), span = kite.C.to_complex() - za;
    Cx zb = (kite.B.to_complex() - za) / span;
    const bool mirrored = zb.imag() < 0.0;
    if (mirrored) zb = std::conj(zb);
    const auto [f1, f2] = butterfly_focus(zb.real(), zb.imag());
    const Cx zf = mirrored ? Cx(f1, -f2) : Cx(f1, f2);
    const Point2 focus1 = Point2::from_complex(za + span * zf);
    const Point2 focus2 = Point2::from_complex(za + span * std::conj(zf));
    return {G,       H,       K,         L,         kite.A, kite.B,
            kite.C,  kite.D,  zb.real(), zb.imag(), f1,     f2,
            ellipse_from_foci_and_point(focus1, focus2, G), kite.sides, kite.touch_edge};
}

inline std::vector<VertexCertificate> certify(const ButterflyCase& c) {
    const auto v = c.vertices();
    const auto h = c.host_sides();
    return certify(c.boundary, v, h);
}

} // namespace ellbill
