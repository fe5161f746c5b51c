// Finds the ellipse in which a triangle is a 3-periodic billiard trajectory,
// then checks the claim by simulating the billiard.
//
//   triangle_demo [kx ky lx ly mx my]

#include <cstdio>
#include <cstdlib>

#include "ellbill/ellbill.hpp"

using namespace ellbill;

int main(int argc, char** argv) {
    Point2 k{0, 0}, l{4, 1}, m{1, 3};
    if (argc == 7) {
        k = {std::atof(argv[1]), std::atof(argv[2])};
        l = {std::atof(argv[3]), std::atof(argv[4])};
        m = {std::atof(argv[5]), std::atof(argv[6])};
    } else if (argc != 1) {
        std::fprintf(stderr, "usage: %s [kx ky lx ly mx my]\n", argv[0]);
        return 2;
    }

    try {
        const TriangleTrajectory t = boundary_ellipse(k, l, m);
        const Ellipse& e = t.boundary;
        const auto h = t.host();
        std::printf("host triangle   (%.6f, %.6f) (%.6f, %.6f) (%.6f, %.6f)\n", h[0].x, h[0].y, h[1].x, h[1].y, h[2].x,
                    h[2].y);
        std::printf("weights         %.6f %.6f %.6f\n", t.weights[0], t.weights[1], t.weights[2]);
        std::printf("foci            (%.9f, %.9f) (%.9f, %.9f)\n", e.focus1().x, e.focus1().y, e.focus2().x,
                    e.focus2().y);
        std::printf("rope length     %.9f\n", e.rope_length());
        std::printf("semi-axes       %.9f %.9f\n", e.semi_major(), e.semi_minor());
        std::printf("worst residual  %.3g\n", worst_residual(certify(t)));

        // Launch from K toward L and watch the orbit close.
        const Trajectory tr = run(e, t.K, t.L - t.K, 30);
        std::printf("simulated       period %s, caustic %s\n",
                    tr.period ? std::to_string(*tr.period).c_str() : "none",
                    tr.caustic ? std::string(to_string(tr.caustic->kind)).c_str() : "focal");
        std::printf("drift after 30  %.3g\n", distance(tr.vertices[30], t.K) / bbox_diameter({k, l, m}));
    } catch (const GeometryError& err) {
        std::fprintf(stderr, "%s\n", err.what());
        return 3;
    }
    return 0;
}
