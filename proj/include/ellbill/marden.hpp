#pragma once

// Zeros of the weighted logarithmic derivative
//     F(z) = m1/(z - a1) + m2/(z - a2) + m3/(z - a3)
// and the inscribed conics they are foci of: the Marden ellipse touching side
// [ai, aj] at the point dividing it in the ratio mi : mj, the Steiner
// inellipse (equal weights), and the inellipse with a prescribed focus.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "ellbill/conics.hpp"
#include "ellbill/error.hpp"
#include "ellbill/geometry.hpp"
#include "ellbill/point.hpp"

namespace ellbill {

/// Masses (m1, m2, m3), meaningful up to a common nonzero factor. Stored
/// normalized to unit sum, or to unit max-magnitude when the sum vanishes.
class WeightTriple {
public:
    WeightTriple(double m1, double m2, double m3) {
        std::array<double, 3> m{m1, m2, m3};
        double big = 0.0;
        for (double v : m) {
            if (!std::isfinite(v) || v == 0.0)
                throw GeometryError(ErrorCode::InvalidArgument, "weights must be finite and nonzero");
            big = std::max(big, std::abs(v));
        }
        const double sum = m1 + m2 + m3;
        const double div = std::abs(sum) > 1e-12 * big ? sum : big;
        for (auto& v : m) v /= div;
        m_ = m;
    }

    static WeightTriple uniform() { return {1.0, 1.0, 1.0}; }

    double operator[](std::size_t i) const { return m_[i]; }
    const std::array<double, 3>& values() const { return m_; }
    double sum() const { return m_[0] + m_[1] + m_[2]; }
    bool all_positive() const { return m_[0] > 0 && m_[1] > 0 && m_[2] > 0; }

private:
    std::array<double, 3> m_{};
};

/// Unordered focus pair, stored in lexicographic (x, then y) order.
struct FocusPair {
    Point2 beta1, beta2;

    FocusPair(Point2 p, Point2 q) : beta1(p), beta2(q) {
        if (lex_less(beta2, beta1)) std::swap(beta1, beta2);
    }
};

namespace detail {

inline void require_noncollinear(Point2 a1, Point2 a2, Point2 a3) {
    const double diam = bbox_diameter({a1, a2, a3});
    if (diam == 0.0 || std::abs(signed_area2(a1, a2, a3)) <= 1e-12 * diam * diam)
        throw GeometryError(ErrorCode::CollinearVertices, "triangle vertices are collinear");
}

/// Extended precision for the internal pipelines; foci of thin figures sit
/// within a few micrometres of a vertex, where every lost bit shows up in the
/// reflection-law residual.
using Wide = long double;
using WideComplex = std::complex<Wide>;

inline WideComplex widen(Point2 p) { return {p.x, p.y}; }
inline Point2 narrow(WideComplex z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// Both zeros of sum m_i/(z - z_i): clear denominators to
/// (m1+m2+m3) z^2 - [m1(z2+z3) + m2(z1+z3) + m3(z1+z2)] z + (m1 z2 z3 + m2 z1 z3 + m3 z1 z2)
/// and return c + h, c - h with c the midpoint. Callers work in a frame
/// centered near the triangle, so only absolute accuracy matters, and the
/// symmetric form keeps the midpoint exact even when the zeros nearly
/// coincide (an error in h moves the ellipse only to second order).
template <class T>
std::pair<std::complex<T>, std::complex<T>> marden_zeros(const std::array<std::complex<T>, 3>& z,
                                                         const std::array<T, 3>& m) {
    const std::complex<T> qa = m[0] + m[1] + m[2];
    const std::complex<T> qb = -(m[0] * (z[1] + z[2]) + m[1] * (z[0] + z[2]) + m[2] * (z[0] + z[1]));
    const std::complex<T> qc = m[0] * z[1] * z[2] + m[1] * z[0] * z[2] + m[2] * z[0] * z[1];
    const std::complex<T> c = -qb / (T(2) * qa);
    const std::complex<T> h = std::sqrt(qb * qb - T(4) * qa * qc) / (T(2) * qa);
    return {c + h, c - h};
}

} // namespace detail

/// Both zeros of F, solved in coordinates centered at the centroid.
inline FocusPair log_derivative_zeros(Point2 a1, Point2 a2, Point2 a3, const WeightTriple& w) {
    detail::require_noncollinear(a1, a2, a3);
    const double big = std::max({std::abs(w[0]), std::abs(w[1]), std::abs(w[2])});
    if (std::abs(w.sum()) <= 1e-12 * big)
        throw GeometryError(ErrorCode::WeightSumZero, "weights sum to zero; one zero is at infinity");
    using detail::Wide;
    const detail::WideComplex g = (detail::widen(a1) + detail::widen(a2) + detail::widen(a3)) / Wide(3);
    const std::array<detail::WideComplex, 3> z{detail::widen(a1) - g, detail::widen(a2) - g, detail::widen(a3) - g};
    const auto [r1, r2] = detail::marden_zeros<Wide>(z, {w[0], w[1], w[2]});
    return {detail::narrow(g + r1), detail::narrow(g + r2)};
}

/// Value of F at z.
inline std::complex<double> log_derivative(Point2 a1, Point2 a2, Point2 a3, const WeightTriple& w,
                                           Point2 z) {
    const auto zc = z.to_complex();
    return w[0] / (zc - a1.to_complex()) + w[1] / (zc - a2.to_complex()) + w[2] / (zc - a3.to_complex());
}

struct MardenEllipse {
    Ellipse ellipse;
    /// Touch points on [a1,a2], [a2,a3], [a3,a1].
    std::array<Point2, 3> touch;
};

/// Point of [p, q] dividing it in the ratio mp : mq (measured from p).
inline Point2 divide_in_ratio(Point2 p, Point2 q, double mp, double mq) {
    return (mq * p + mp * q) / (mp + mq);
}

inline MardenEllipse marden_ellipse(Point2 a1, Point2 a2, Point2 a3, const WeightTriple& w) {
    if (!w.all_positive())
        throw GeometryError(ErrorCode::NonPositiveWeight, "inscribed Marden ellipse needs positive weights");
    const FocusPair foci = log_derivative_zeros(a1, a2, a3, w);
    const std::array<Point2, 3> touch{divide_in_ratio(a1, a2, w[0], w[1]), divide_in_ratio(a2, a3, w[1], w[2]),
                                      divide_in_ratio(a3, a1, w[2], w[0])};
    return {ellipse_from_foci_and_point(foci.beta1, foci.beta2, touch[0]), touch};
}

/// Maximal-area inscribed ellipse, tangent at the side midpoints.
inline Ellipse steiner_ellipse(Point2 a1, Point2 a2, Point2 a3) {
    return marden_ellipse(a1, a2, a3, WeightTriple::uniform()).ellipse;
}

/// Minimal-area ellipse through the vertices: the Steiner inellipse scaled
/// by 2 about the centroid.
inline Ellipse steiner_circumellipse(Point2 a1, Point2 a2, Point2 a3) {
    const Ellipse in = steiner_ellipse(a1, a2, a3);
    const Point2 g = (a1 + a2 + a3) / 3.0;
    return {g + 2.0 * (in.focus1() - g), g + 2.0 * (in.focus2() - g), 2.0 * in.rope_length()};
}

/// Barycentric coordinates of p with respect to abc.
inline std::array<double, 3> barycentric(Point2 a, Point2 b, Point2 c, Point2 p) {
    const double area = signed_area2(a, b, c);
    return {signed_area2(p, b, c) / area, signed_area2(a, p, c) / area, signed_area2(a, b, p) / area};
}

/// The unique inellipse of triangle ABC with focus `f1`. The second focus is
/// where the bisectors of the angles F1''-A-F1''' and F1''-C-F1' meet (F1',
/// F1'', F1''' the mirror images of f1 in BC, CA, AB), and the rope length is
/// |F1' F2|.
inline Ellipse inscribed_ellipse_with_focus(Point2 a, Point2 b, Point2 c, Point2 f1, double tol = 1e-12) {
    detail::require_noncollinear(a, b, c);
    const auto bary = barycentric(a, b, c, f1);
    if (!(bary[0] > tol && bary[1] > tol && bary[2] > tol))
        throw GeometryError(ErrorCode::FocusOutsideTriangle, "focus must lie strictly inside the triangle");

    const Point2 r_bc = reflect_point(f1, Line2::through(b, c));
    const Point2 r_ca = reflect_point(f1, Line2::through(c, a));
    const Point2 r_ab = reflect_point(f1, Line2::through(a, b));

    // Bisector line of the angle p-v-q. When the arms are nearly opposite the
    // sum of unit vectors degenerates; the perpendicular of their difference
    // spans the same line.
    auto bisector = [](Point2 p, Point2 v, Point2 q) {
        const Point2 u1 = unit(p - v), u2 = unit(q - v);
        const Point2 s = u1 + u2, d = u1 - u2;
        return Line2(v, norm(s) >= norm(d) ? s : perp(d));
    };
    const std::array<Line2, 3> bis{bisector(r_ca, a, r_ab), bisector(r_ab, b, r_bc), bisector(r_ca, c, r_bc)};

    // Intersect the bisectors at A and C; fall back to the best-conditioned
    // pair when those two are close to parallel.
    std::pair<int, int> pick{0, 2};
    if (std::abs(cross(bis[0].direction(), bis[2].direction())) < 1e-8) {
        double best = -1.0;
        for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
            const double s = std::abs(cross(bis[i].direction(), bis[j].direction()));
            if (s > best) best = s, pick = {i, j};
        }
    }
    const Point2 f2 = intersect(bis[pick.first], bis[pick.second], 0.0);
    return {f1, f2, distance(r_bc, f2)};
}

/// Weights reproducing the touch points K in BC, L in CA, M in AB:
/// BK:KC = m2:m3, CL:LA = m3:m1, AM:MB = m1:m2. The three ratios are
/// reconciled by least squares on their logarithms.
inline WeightTriple weights_from_touch_points(Point2 a, Point2 b, Point2 c, Point2 k, Point2 l, Point2 m,
                                              double gate = 1e-6) {
    const double rk = signed_ratio(b, k, c, gate).value;
    const double rl = signed_ratio(c, l, a, gate).value;
    const double rm = signed_ratio(a, m, b, gate).value;
    if (!(rk > 0 && rl > 0 && rm > 0))
        throw GeometryError(ErrorCode::InconsistentRatios, "touch points must be interior to the sides");
    if (std::abs(rk * rl * rm - 1.0) > gate)
        throw GeometryError(ErrorCode::InconsistentRatios, "cevians through the touch points are not concurrent");
    const double r1 = std::log(rk), r2 = std::log(rl), r3 = std::log(rm);
    return {std::exp((r3 - r2) / 3.0), std::exp((r1 - r3) / 3.0), std::exp((r2 - r1) / 3.0)};
}

/// The weight triple (up to scale) that makes `focus` a zero of F: the single
/// complex equation F(focus) = 0 is two real linear equations in (m1, m2, m3).
inline WeightTriple weights_for_focus(Point2 a1, Point2 a2, Point2 a3, Point2 focus) {
    const auto q = focus.to_complex();
    const std::complex<double> g1 = 1.0 / (q - a1.to_complex()), g2 = 1.0 / (q - a2.to_complex()),
                               g3 = 1.0 / (q - a3.to_complex());
    // Null vector of [[Re g], [Im g]].
    const double n1 = g2.real() * g3.imag() - g3.real() * g2.imag();
    const double n2 = g3.real() * g1.imag() - g1.real() * g3.imag();
    const double n3 = g1.real() * g2.imag() - g2.real() * g1.imag();
    return {n1, n2, n3};
}

} // namespace ellbill
