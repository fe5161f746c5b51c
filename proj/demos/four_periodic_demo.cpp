// Both kinds of 4-periodic orbit in one ellipse. A launch tangent to the
// confocal ellipse with lambda = AB/(A+B) traces a parallelogram; a launch
// tangent to the confocal hyperbola with lambda = AB/(A-B) traces a Darboux
// butterfly. Each polygon is handed to its solver, which must give back the
// ellipse it came from. Figures are written as SVG to the working directory.
//
//   four_periodic_demo [a b]

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>

#include "ellbill/cli/svg.hpp"
#include "ellbill/ellbill.hpp"

using namespace ellbill;

namespace {

std::vector<Point2> orbit(const Ellipse& e, double lambda, Point2 start) {
    const auto lines = tangent_lines_through(e, lambda, start);
    if (lines.empty()) throw GeometryError(ErrorCode::InvalidArgument, "no tangent through the start point");
    // Point the launch into the ellipse, against the outward focal normal.
    const Point2 outward = unit(start - e.focus1()) + unit(start - e.focus2());
    Point2 dir = lines.front().direction();
    if (dot(dir, outward) > 0) dir = -dir;
    const Trajectory t = run(e, start, dir, 4);
    return {t.vertices.begin(), t.vertices.begin() + 4};
}

void report(const char* name, const Ellipse& truth, const Ellipse& found, double worst) {
    const double err = std::min(std::max(distance(found.focus1(), truth.focus1()), distance(found.focus2(), truth.focus2())),
                                std::max(distance(found.focus1(), truth.focus2()), distance(found.focus2(), truth.focus1())));
    std::printf("%-14s focus error %.3g, rope error %.3g, worst residual %.3g\n", name, err / truth.rope_length(),
                std::abs(found.rope_length() - truth.rope_length()) / truth.rope_length(), worst);
}

void write_svg(const char* path, const Ellipse& e, const std::vector<Point2>& v, std::span<const Point2> host,
               double lambda) {
    cli::Figure f{e, v, true, {host.begin(), host.end()}, ConfocalConic{e, lambda, classify_lambda(e, lambda)}, path};
    std::ofstream(path) << cli::render_svg(f);
    std::printf("%-14s wrote %s\n", "", path);
}

} // namespace

int main(int argc, char** argv) {
    double a = 2.0, b = 1.0;
    if (argc == 3) {
        a = std::atof(argv[1]);
        b = std::atof(argv[2]);
    }
    if (!(a > 0 && b > 0 && b < a / std::numbers::sqrt2)) {
        std::fprintf(stderr, "need a > 0 and 0 < b < a / sqrt(2) for a butterfly orbit\n");
        return 2;
    }
    try {
        const Ellipse e = from_canonical({{0, 0}, a, b, 0.3});
        const Point2 start = e.point_at(std::numbers::pi / 2 - 0.2);

        const double lam_convex = e.A() * e.B() / (e.A() + e.B());
        const auto p = orbit(e, lam_convex, start);
        const ParallelogramCase pc = parallelogram_boundary_ellipse(p[0], p[1], p[2], p[3]);
        report("parallelogram", e, pc.boundary, worst_residual(certify(pc)));
        write_svg("parallelogram.svg", pc.boundary, p, pc.host(), lam_convex);

        const double lam_butterfly = e.A() * e.B() / (e.A() - e.B());
        const auto q = orbit(e, lam_butterfly, start);
        const ButterflyCase bc = butterfly_boundary_ellipse(q[0], q[1], q[2], q[3]);
        report("butterfly", e, bc.boundary, worst_residual(certify(bc)));
        write_svg("butterfly.svg", bc.boundary, q, bc.host(), lam_butterfly);
    } catch (const GeometryError& err) {
        std::fprintf(stderr, "%s\n", err.what());
        return 3;
    }
    return 0;
}
