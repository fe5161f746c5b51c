#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <span>

#include "ellbill/error.hpp"

namespace ellbill {

/// Default geometric tolerance for unit-scale figures.
inline constexpr double kDefaultTol = 1e-9;

/// A point (or free vector) in the Euclidean plane. Doubles as the complex
/// number x + iy where the Marden machinery needs it.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    Point2(double x_, double y_) : x(x_), y(y_) {
        if (!std::isfinite(x) || !std::isfinite(y))
            throw GeometryError(ErrorCode::InvalidArgument, "point coordinates must be finite");
    }

    static Point2 from_complex(std::complex<double> z) { return {z.real(), z.imag()}; }
    std::complex<double> to_complex() const { return {x, y}; }

    Point2 operator-() const { return {-x, -y}; }
    Point2& operator+=(Point2 o) { return *this = Point2(x + o.x, y + o.y); }
    Point2& operator-=(Point2 o) { return *this = Point2(x - o.x, y - o.y); }

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
    friend Point2 operator/(Point2 p, double s) { return {p.x / s, p.y / s}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Point2 a) { return dot(a, a); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Counter-clockwise quarter turn.
inline Point2 perp(Point2 a) { return {-a.y, a.x}; }

inline Point2 rotate(Point2 a, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

inline Point2 unit(Point2 a) {
    const double n = norm(a);
    if (!(n > 0.0))
        throw GeometryError(ErrorCode::ZeroLengthSegment, "cannot normalize a zero vector");
    return a / n;
}

inline Point2 midpoint(Point2 a, Point2 b) { return 0.5 * (a + b); }

/// Lexicographic order on (x, y).
inline bool lex_less(Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

/// Diagonal length of the axis-aligned bounding box.
inline double bbox_diameter(std::span<const Point2> pts) {
    if (pts.empty()) return 0.0;
    double lox = pts[0].x, hix = pts[0].x, loy = pts[0].y, hiy = pts[0].y;
    for (const auto& p : pts) {
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, p.y);
        hiy = std::max(hiy, p.y);
    }
    return std::hypot(hix - lox, hiy - loy);
}

inline double bbox_diameter(std::initializer_list<Point2> pts) {
    return bbox_diameter(std::span<const Point2>(pts.begin(), pts.size()));
}

/// Tolerance scaled to the figure: `tol` on unit-scale input, proportionally
/// larger for larger figures.
inline double scaled_tol(double tol, double diameter) { return tol * std::max(1.0, diameter); }

/// Infinite line through `point` with unit `direction`.
class Line2 {
public:
    Line2(Point2 point, Point2 direction) : point_(point) {
        const double n = norm(direction);
        if (!(n > 0.0))
            throw GeometryError(ErrorCode::InvalidArgument, "line direction must be nonzero");
        direction_ = direction / n;
    }

    static Line2 through(Point2 p, Point2 q) {
        if (p == q) throw GeometryError(ErrorCode::ZeroLengthSegment, "line through coincident points");
        return {p, q - p};
    }

    Point2 point() const { return point_; }
    Point2 direction() const { return direction_; }
    Point2 normal() const { return perp(direction_); }

    /// Positive on the left of the direction.
    double signed_distance(Point2 p) const { return cross(direction_, p - point_); }
    double distance(Point2 p) const { return std::abs(signed_distance(p)); }
    Point2 project(Point2 p) const { return point_ + dot(p - point_, direction_) * direction_; }
    Point2 at(double t) const { return point_ + t * direction_; }

private:
    Point2 point_;
    Point2 direction_;
};

/// Intersection of two lines; nullopt-free: throws DegenerateAngle when the
/// lines are parallel to within `parallel_tol` (sine of the angle between them).
inline Point2 intersect(const Line2& l1, const Line2& l2, double parallel_tol = 1e-14) {
    const double den = cross(l1.direction(), l2.direction());
    if (std::abs(den) <= parallel_tol)
        throw GeometryError(ErrorCode::DegenerateAngle, "intersecting parallel lines");
    const double t = cross(l2.point() - l1.point(), l2.direction()) / den;
    return l1.at(t);
}

/// Twice the signed area of triangle abc.
inline double signed_area2(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

} // namespace ellbill
