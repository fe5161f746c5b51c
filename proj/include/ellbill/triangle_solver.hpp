#pragma once

// Every triangle KLM is a 3-periodic billiard trajectory in exactly one
// ellipse. Construction: the exterior bisectors of KLM bound an acute host
// triangle ABC whose altitude feet are K, L, M; the feet split the host sides
// in ratios given by the weights m1:m2:m3 = cos-weighted side products, and
// the Marden ellipse of ABC with those weights touches the sides exactly at
// K, L, M.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "ellbill/certificate.hpp"
#include "ellbill/conics.hpp"
#include "ellbill/error.hpp"
#include "ellbill/geometry.hpp"
#include "ellbill/marden.hpp"

namespace ellbill {

struct TriangleTrajectory {
    Point2 K, L, M;                ///< trajectory vertices
    Point2 host_A, host_B, host_C; ///< K on BC, L on CA, M on AB
    Ellipse boundary;
    WeightTriple weights;
    /// K, L, M touch the host edges host()[j] -> host()[(j + 1) % 3] for these j.
    static constexpr std::array<int, 3> touch_edge{1, 2, 0};

    std::array<Point2, 3> vertices() const { return {K, L, M}; }
    std::array<Point2, 3> host() const { return {host_A, host_B, host_C}; }
    std::array<Line2, 3> host_sides() const {
        return {Line2::through(host_B, host_C), Line2::through(host_C, host_A), Line2::through(host_A, host_B)};
    }
};

namespace detail {

inline void require_triangle(Point2 k, Point2 l, Point2 m) {
    const double diam = bbox_diameter({k, l, m});
    if (k == l || l == m || m == k || std::abs(0.5 * signed_area2(k, l, m)) < 1e-12 * diam * diam)
        throw GeometryError(ErrorCode::DegenerateTriangle, "triangle is degenerate");
}

} // namespace detail

/// Host triangle bounded by the exterior bisectors of KLM.
inline std::array<Point2, 3> host_triangle(Point2 k, Point2 l, Point2 m) {
    detail::require_triangle(k, l, m);
    const Line2 bk = exterior_bisector(m, k, l, 0.0);
    const Line2 bl = exterior_bisector(k, l, m, 0.0);
    const Line2 bm = exterior_bisector(l, m, k, 0.0);
    // The bisector at L is side CA and the one at M is side AB, so their
    // meeting point is A; the labels follow from the construction.
    return {intersect(bl, bm, 0.0), intersect(bk, bm, 0.0), intersect(bk, bl, 0.0)};
}

/// True when every angle of ABC is below pi/2 - margin.
inline bool is_acute(Point2 a, Point2 b, Point2 c, double margin = 1e-12) {
    const double lim = std::numbers::pi / 2 - margin;
    return angle_at(c, a, b) < lim && angle_at(a, b, c) < lim && angle_at(b, c, a) < lim;
}

/// Feet of the altitudes from A, B, C (K on BC, L on CA, M on AB).
inline std::array<Point2, 3> orthic_feet(Point2 a, Point2 b, Point2 c) {
    detail::require_triangle(a, b, c);
    if (!is_acute(a, b, c))
        throw GeometryError(ErrorCode::NotAcute, "altitude feet leave the sides of a non-acute triangle");
    return {Line2::through(b, c).project(a), Line2::through(c, a).project(b), Line2::through(a, b).project(c)};
}

/// Weights whose ratios reproduce the altitude feet of ABC:
/// m1 : m2 : m3 = (b^2 + c^2 - a^2) : (a^2 + c^2 - b^2) : (a^2 + b^2 - c^2)
/// with a = BC, b = CA, c = AB. Each term is twice a dot product, which is
/// how it is evaluated.
inline WeightTriple orthic_weights(Point2 a, Point2 b, Point2 c) {
    return {2.0 * dot(b - a, c - a), 2.0 * dot(a - b, c - b), 2.0 * dot(a - c, b - c)};
}

namespace detail {

template <class T>
T wcross(std::complex<T> a, std::complex<T> b) { return std::imag(std::conj(a) * b); }
template <class T>
T wdot(std::complex<T> a, std::complex<T> b) { return std::real(std::conj(a) * b); }
template <class T>
std::complex<T> wunit(std::complex<T> a) { return a / std::abs(a); }

/// Meeting point of the lines p1 + t d1 and p2 + s d2.
template <class T>
std::complex<T> wintersect(std::complex<T> p1, std::complex<T> d1, std::complex<T> p2, std::complex<T> d2) {
    return p1 + (wcross(p2 - p1, d2) / wcross(d1, d2)) * d1;
}

} // namespace detail

/// The unique ellipse in which KLM is a 3-periodic billiard trajectory.
/// Runs host_triangle -> orthic_weights -> marden_ellipse in extended
/// precision, in a frame centered at the centroid of KLM with unit diameter.
inline TriangleTrajectory boundary_ellipse(Point2 k, Point2 l, Point2 m) {
    detail::require_triangle(k, l, m);
    using W = detail::Wide;
    using C = detail::WideComplex;
    using detail::wunit;
    const C g = (detail::widen(k) + detail::widen(l) + detail::widen(m)) / W(3);
    const W s = bbox_diameter({k, l, m});
    auto fwd = [&](Point2 p) { return (detail::widen(p) - g) / s; };
    auto back = [&](C z) { return detail::narrow(g + s * z); };

    const C kn = fwd(k), ln = fwd(l), mn = fwd(m);
    const C dk = wunit(ln - kn) - wunit(mn - kn);
    const C dl = wunit(mn - ln) - wunit(kn - ln);
    const C dm = wunit(kn - mn) - wunit(ln - mn);
    const C ha = detail::wintersect(ln, dl, mn, dm);
    const C hb = detail::wintersect(kn, dk, mn, dm);
    const C hc = detail::wintersect(kn, dk, ln, dl);

    const std::array<W, 3> w{W(2) * detail::wdot(hb - ha, hc - ha), W(2) * detail::wdot(ha - hb, hc - hb),
                             W(2) * detail::wdot(ha - hc, hb - hc)};
    if (!(w[0] > 0 && w[1] > 0 && w[2] > 0))
        throw GeometryError(ErrorCode::DegenerateTriangle, "host triangle is not acute at working precision");
    const auto [r1, r2] = detail::marden_zeros<W>({ha, hb, hc}, w);
    const C touch_ab = (w[1] * ha + w[0] * hb) / (w[0] + w[1]);
    const W d = std::abs(touch_ab - r1) + std::abs(touch_ab - r2);

    const Ellipse e(back(r1), back(r2), static_cast<double>(s * d));
    return {k, l, m, back(ha), back(hb), back(hc), e,
            WeightTriple(static_cast<double>(w[0]), static_cast<double>(w[1]), static_cast<double>(w[2]))};
}

inline std::vector<VertexCertificate> certify(const TriangleTrajectory& t) {
    const auto v = t.vertices();
    const auto h = t.host_sides();
    return certify(t.boundary, v, h);
}

struct PerturbationVariant {
    std::string label;
    double worst = 0.0; ///< largest certificate residual of the perturbed ellipse
    bool failed = false;
};

struct UniquenessReport {
    double magnitude = 0.0;
    std::vector<PerturbationVariant> variants;

    bool all_fail() const {
        for (const auto& v : variants)
            if (!v.failed) return false;
        return !variants.empty();
    }
    bool all_pass() const {
        for (const auto& v : variants)
            if (v.failed) return false;
        return true;
    }
};

/// Numerical falsification of uniqueness: moves each focus in four
/// directions and the rope length both ways by `perturbation` times the
/// triangle diameter, and records whether some certificate then exceeds
/// `factor` times `tol`.
inline UniquenessReport verify_uniqueness(const TriangleTrajectory& t, double perturbation,
                                          double tol = kDefaultTol, double factor = 10.0) {
    const auto v = t.vertices();
    const auto h = t.host_sides();
    const double delta = perturbation * bbox_diameter(v);
    const Ellipse& e = t.boundary;

    UniquenessReport rep{delta, {}};
    auto run = [&](std::string label, Point2 f1, Point2 f2, double d) {
        PerturbationVariant pv{std::move(label), 0.0, false};
        try {
            pv.worst = worst_residual(certify(Ellipse(f1, f2, d), v, h));
        } catch (const GeometryError&) {
            pv.worst = INFINITY;
        }
        pv.failed = pv.worst > factor * tol;
        rep.variants.push_back(std::move(pv));
    };
    const std::array<std::pair<const char*, Point2>, 4> dirs{
        {{"+x", {1, 0}}, {"-x", {-1, 0}}, {"+y", {0, 1}}, {"-y", {0, -1}}}};
    for (const auto& [name, dir] : dirs)
        run(std::string("focus1 ") + name, e.focus1() + delta * dir, e.focus2(), e.rope_length());
    for (const auto& [name, dir] : dirs)
        run(std::string("focus2 ") + name, e.focus1(), e.focus2() + delta * dir, e.rope_length());
    run("rope +", e.focus1(), e.focus2(), e.rope_length() + delta);
    run("rope -", e.focus1(), e.focus2(), e.rope_length() - delta);
    return rep;
}

} // namespace ellbill
