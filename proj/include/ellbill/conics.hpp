#pragma once

// Ellipses in focal form, their confocal families, and tangency.
//
// The focal form (two foci plus rope length d) is primary because every
// solver produces foci first. Local computations happen in the canonical frame
// of the ellipse: origin at the center, x along F1->F2, where the ellipse reads
// x^2/A + y^2/B = 1 with A = a^2, B = b^2. Members of the confocal family are
// x^2/(A - lambda) + y^2/(B - lambda) = 1.

#include <cmath>
#include <numbers>
#include <vector>

#include "ellbill/error.hpp"
#include "ellbill/geometry.hpp"
#include "ellbill/point.hpp"

namespace ellbill {

class Ellipse {
public:
    Ellipse(Point2 focus1, Point2 focus2, double rope_length)
        : f1_(focus1), f2_(focus2), d_(rope_length) {
        const double sep = distance(f1_, f2_);
        if (!std::isfinite(d_) || !(d_ > sep))
            throw GeometryError(ErrorCode::DegenerateEllipse, "rope length must exceed the focal distance");
        axis_ = f1_ == f2_ ? Point2{1.0, 0.0} : unit(f2_ - f1_);
    }

    Point2 focus1() const { return f1_; }
    Point2 focus2() const { return f2_; }
    double rope_length() const { return d_; }

    Point2 center() const { return midpoint(f1_, f2_); }
    /// Unit vector along the major axis (F1 -> F2; +x for a circle).
    Point2 major_axis() const { return axis_; }
    double semi_major() const { return 0.5 * d_; }
    double linear_eccentricity() const { return 0.5 * distance(f1_, f2_); }
    double semi_minor() const {
        const double a = semi_major(), c = linear_eccentricity();
        return std::sqrt((a - c) * (a + c));
    }
    double A() const { return semi_major() * semi_major(); }
    double B() const {
        const double a = semi_major(), c = linear_eccentricity();
        return (a - c) * (a + c);
    }
    double area() const { return std::numbers::pi * semi_major() * semi_minor(); }

    double focal_sum(Point2 p) const { return distance(p, f1_) + distance(p, f2_); }

    Point2 to_local(Point2 p) const {
        const Point2 r = p - center();
        return {dot(r, axis_), cross(axis_, r)};
    }
    Point2 to_world(Point2 q) const { return center() + q.x * axis_ + q.y * perp(axis_); }
    Point2 dir_to_local(Point2 v) const { return {dot(v, axis_), cross(axis_, v)}; }
    Point2 dir_to_world(Point2 v) const { return v.x * axis_ + v.y * perp(axis_); }

    /// Point at eccentric anomaly t.
    Point2 point_at(double t) const {
        return to_world({semi_major() * std::cos(t), semi_minor() * std::sin(t)});
    }

private:
    Point2 f1_, f2_;
    double d_;
    Point2 axis_;
};

/// Center / semi-axes / rotation form, for output and rendering.
struct EllipseCanonical {
    Point2 center;
    double semi_major = 0.0;
    double semi_minor = 0.0;
    double rotation = 0.0; ///< major axis angle to +x, in (-pi/2, pi/2]
};

inline EllipseCanonical to_canonical(const Ellipse& e) {
    double rot = 0.0;
    if (e.focus1() != e.focus2()) {
        const Point2 u = e.major_axis();
        rot = std::atan2(u.y, u.x);
        if (rot > std::numbers::pi / 2) rot -= std::numbers::pi;
        else if (rot <= -std::numbers::pi / 2) rot += std::numbers::pi;
    }
    return {e.center(), e.semi_major(), e.semi_minor(), rot};
}

inline Ellipse from_canonical(const EllipseCanonical& c) {
    if (!(c.semi_minor > 0.0) || c.semi_major < c.semi_minor)
        throw GeometryError(ErrorCode::DegenerateEllipse, "need semi_major >= semi_minor > 0");
    const double lin = std::sqrt((c.semi_major - c.semi_minor) * (c.semi_major + c.semi_minor));
    const Point2 u{std::cos(c.rotation), std::sin(c.rotation)};
    return {c.center - lin * u, c.center + lin * u, 2.0 * c.semi_major};
}

/// The ellipse with the given foci through `p`.
inline Ellipse ellipse_from_foci_and_point(Point2 f1, Point2 f2, Point2 p) {
    const double d = distance(p, f1) + distance(p, f2);
    if (!(d > distance(f1, f2) * (1.0 + 1e-14)))
        throw GeometryError(ErrorCode::DegenerateEllipse, "point lies on the focal segment");
    return {f1, f2, d};
}

/// Focal-sum test relative to the rope length.
inline bool contains_point(const Ellipse& e, Point2 p, double tol = kDefaultTol) {
    return std::abs(e.focal_sum(p) - e.rope_length()) < tol * e.rope_length();
}

/// Tangent at a boundary point. Direction is counter-clockwise around the
/// center.
inline Line2 tangent_line_at(const Ellipse& e, Point2 p, double tol = kDefaultTol) {
    if (!contains_point(e, p, tol))
        throw GeometryError(ErrorCode::PointNotOnEllipse, "tangent requested off the ellipse");
    const Point2 q = e.to_local(p);
    const Point2 n{q.x / e.A(), q.y / e.B()};
    return {p, e.dir_to_world(perp(n))};
}

/// Outward unit normal at (or near) a boundary point.
inline Point2 outward_normal(const Ellipse& e, Point2 p) {
    const Point2 q = e.to_local(p);
    return unit(e.dir_to_world({q.x / e.A(), q.y / e.B()}));
}

/// Distance-like tangency defect of a line: |c| - h(n), where the line reads
/// n.x = c in the canonical frame and h is the support function. Positive when
/// the line misses the ellipse, negative when it cuts it.
inline double tangency_gap(const Ellipse& e, const Line2& l) {
    const Point2 p = e.to_local(l.point());
    const Point2 n = perp(e.dir_to_local(l.direction()));
    return std::abs(dot(n, p)) - std::sqrt(e.A() * n.x * n.x + e.B() * n.y * n.y);
}

struct Tangency {
    bool tangent = false;
    Point2 witness; ///< double root of the chord quadratic (touch point when tangent)
    double gap = 0.0;
};

/// Tangency test with tolerance relative to the semi-major axis.
inline Tangency is_tangent(const Ellipse& e, const Line2& l, double tol = kDefaultTol) {
    const Point2 p = e.to_local(l.point());
    const Point2 v = e.dir_to_local(l.direction());
    const double qa = v.x * v.x / e.A() + v.y * v.y / e.B();
    const double qb = 2.0 * (p.x * v.x / e.A() + p.y * v.y / e.B());
    const double gap = tangency_gap(e, l);
    return {std::abs(gap) <= tol * e.semi_major(), l.at(-qb / (2.0 * qa)), gap};
}

enum class ConicKind { ConfocalEllipse, ConfocalHyperbola, DegenerateFocalSegment, DegenerateMinorAxis };

constexpr std::string_view to_string(ConicKind k) noexcept {
    switch (k) {
    case ConicKind::ConfocalEllipse: return "ConfocalEllipse";
    case ConicKind::ConfocalHyperbola: return "ConfocalHyperbola";
    case ConicKind::DegenerateFocalSegment: return "DegenerateFocalSegment";
    case ConicKind::DegenerateMinorAxis: return "DegenerateMinorAxis";
    }
    return "Unknown";
}

/// Member of the confocal family of `base` with parameter lambda.
struct ConfocalConic {
    Ellipse base;
    double lambda = 0.0;
    ConicKind kind = ConicKind::ConfocalEllipse;

    /// Squared semi-axes (A - lambda, B - lambda); the second is negative for
    /// hyperbolas.
    double axis2_major() const { return base.A() - lambda; }
    double axis2_minor() const { return base.B() - lambda; }
};

/// Confocal parameter of the unique family member tangent to `l`:
/// lambda = A n1^2 + B n2^2 - c^2 for the line n.x = c in the canonical frame.
inline double line_lambda(const Ellipse& e, const Line2& l) {
    const Point2 p = e.to_local(l.point());
    const Point2 n = perp(e.dir_to_local(l.direction()));
    const double c = dot(n, p);
    return e.A() * n.x * n.x + e.B() * n.y * n.y - c * c;
}

/// Kind from lambda, with a band of tol*A around B and A mapped to the
/// degenerate members.
inline ConicKind classify_lambda(const Ellipse& e, double lambda, double tol = kDefaultTol) {
    const double band = tol * e.A();
    if (std::abs(lambda - e.B()) <= band) return ConicKind::DegenerateFocalSegment;
    if (std::abs(lambda - e.A()) <= band) return ConicKind::DegenerateMinorAxis;
    return lambda < e.B() ? ConicKind::ConfocalEllipse : ConicKind::ConfocalHyperbola;
}

inline bool passes_through_focus(const Ellipse& e, const Line2& l, double tol = kDefaultTol) {
    const double lim = tol * e.semi_major();
    return l.distance(e.focus1()) <= lim || l.distance(e.focus2()) <= lim;
}

/// The confocal conic touching `l`.
inline ConfocalConic caustic_of_line(const Ellipse& e, const Line2& l, double tol = kDefaultTol) {
    if (passes_through_focus(e, l, tol))
        throw GeometryError(ErrorCode::LineThroughFocus, "focal chords have no caustic conic");
    const double lambda = line_lambda(e, l);
    return {e, lambda, classify_lambda(e, lambda, tol)};
}

/// The lines through `p` tangent to the confocal member with parameter
/// `lambda` (lambda = 0 is the ellipse itself). Empty when `p` is on the
/// wrong side of the conic; a single line when `p` is on it.
inline std::vector<Line2> tangent_lines_through(const Ellipse& e, double lambda, Point2 p) {
    // Unit normals n with n^T M n = 0 for M = diag(A', B') - q q^T.
    const Point2 q = e.to_local(p);
    const double m11 = e.A() - lambda - q.x * q.x;
    const double m22 = e.B() - lambda - q.y * q.y;
    const double m12 = -q.x * q.y;
    const double half_tr = 0.5 * (m11 + m22);
    const double rad = std::hypot(0.5 * (m11 - m22), m12);
    const double mu1 = half_tr + rad, mu2 = half_tr - rad;
    const double scale = std::abs(m11) + std::abs(m22) + std::abs(m12);
    if (mu1 < -1e-14 * scale || mu2 > 1e-14 * scale) return {};
    Point2 e1 = std::abs(m12) > 0.0 || m11 != m22
                    ? (m11 >= m22 ? Point2{mu1 - m22, m12} : Point2{m12, mu1 - m11})
                    : Point2{1.0, 0.0};
    e1 = unit(e1);
    const Point2 e2 = perp(e1);
    const double w1 = std::sqrt(std::max(0.0, -mu2)), w2 = std::sqrt(std::max(0.0, mu1));
    std::vector<Line2> out;
    for (double s : {1.0, -1.0}) {
        const Point2 n = w1 * e1 + s * w2 * e2;
        out.emplace_back(p, e.dir_to_world(perp(n)));
        if (w2 == 0.0 || w1 == 0.0) break;
    }
    return out;
}

} // namespace ellbill
