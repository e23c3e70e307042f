#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "isogon/geometry.hpp"
#include "support.hpp"

using namespace isogon;
using testsupport::Rng;
using testsupport::random_point;

namespace {

// Independent oracle for the radial hyperbolic distance: composite Simpson
// quadrature of the metric factor 2/(1 - t^2) along a radius.
double integrate_radial_metric(double rho, int intervals = 4096) {
    const double h = rho / intervals;
    double sum = 0.0;
    auto f = [](double t) { return 2.0 / (1.0 - t * t); };
    for (int i = 0; i < intervals; ++i) {
        const double a = i * h;
        sum += (f(a) + 4.0 * f(a + h / 2.0) + f(a + h)) * h / 6.0;
    }
    return sum;
}

}  // namespace

TEST_CASE("hyperbolic radial distance matches the metric integral") {
    const double oracle = integrate_radial_metric(0.5);
    const double ln3 = 1.0986122886681098;  // frozen from the oracle; equals log 3
    CHECK(std::abs(oracle - ln3) < 1e-12);

    const Point origin = Point::hyperbolic(0.0, 0.0);
    const Point p = Point::hyperbolic(0.5, 0.0);
    CHECK_THAT(distance(origin, p), Catch::Matchers::WithinAbs(ln3, 1e-12));
}

TEST_CASE("distance basics") {
    const Point o = Point::hyperbolic(0.1, -0.2);
    CHECK(distance(o, o) == 0.0);

    const Point pole = Point::spherical(0.0, 0.0, 1.0);
    const Point q = Point::spherical(std::sin(0.3), 0.0, std::cos(0.3));
    CHECK_THAT(distance(pole, q), Catch::Matchers::WithinAbs(0.3, 1e-14));

    const Point e1 = Point::euclidean(1.0, 2.0);
    const Point e2 = Point::euclidean(4.0, 6.0);
    CHECK_THAT(distance(e1, e2), Catch::Matchers::WithinAbs(5.0, 1e-14));

    CHECK_THROWS_AS(distance(o, e1), error);
}

TEST_CASE("point constructors enforce their domains") {
    CHECK_THROWS_AS(Point::hyperbolic(1.0, 0.0), error);
    CHECK_THROWS_AS(Point::hyperbolic(0.8, 0.7), error);
    CHECK_THROWS_AS(Point::spherical(0.0, 0.0, -1.0), error);
    CHECK_THROWS_AS(Point::spherical(1.0, 0.0, 0.0), error);   // equator excluded
    CHECK_THROWS_AS(Point::spherical(0.5, 0.5, 0.5), error);   // not a unit vector
    CHECK_NOTHROW(Point::spherical(0.0, 0.0, 1.0 + 4e-13));    // renormalized
}

TEST_CASE("angle_at examples") {
    // orthogonal meridians meeting at the pole
    const Point v = Point::spherical(0.0, 0.0, 1.0);
    const Point p = Point::spherical(std::sin(1.5), 0.0, std::cos(1.5));
    const Point q = Point::spherical(0.0, std::sin(1.5), std::cos(1.5));
    CHECK_THAT(angle_at(v, p, q), Catch::Matchers::WithinAbs(pi / 2.0, 1e-12));
    CHECK_THAT(angle_at(v, p, q), Catch::Matchers::WithinAbs(angle_at(v, q, p), 1e-15));

    // conformal model: euclidean right angle at the disk origin
    const Point o = Point::hyperbolic(0.0, 0.0);
    const Point a = Point::hyperbolic(0.5, 0.0);
    const Point b = Point::hyperbolic(0.0, 0.5);
    CHECK_THAT(angle_at(o, a, b), Catch::Matchers::WithinAbs(pi / 2.0, 1e-14));

    CHECK_THROWS_AS(angle_at(o, o, b), error);
}

TEST_CASE("law_of_cosines_angle examples") {
    const double c = std::acosh(std::cosh(1.0) * std::cosh(1.0));  // hyperbolic Pythagoras
    CHECK_THAT(law_of_cosines_angle(1.0, 1.0, c, Geometry::hyperbolic),
               Catch::Matchers::WithinAbs(pi / 2.0, 1e-12));
    CHECK_THAT(law_of_cosines_angle(pi / 2.0, pi / 2.0, pi / 2.0, Geometry::spherical),
               Catch::Matchers::WithinAbs(pi / 2.0, 1e-12));
    CHECK_THAT(law_of_cosines_angle(3.0, 4.0, 5.0, Geometry::euclidean),
               Catch::Matchers::WithinAbs(pi / 2.0, 1e-12));
    CHECK_THROWS_AS(law_of_cosines_angle(1.0, 1.0, 3.0, Geometry::euclidean), error);
    CHECK_THROWS_AS(law_of_cosines_angle(2.0, 2.0, 3.0, Geometry::spherical), error);
}

TEST_CASE("polar_point examples") {
    const double ln3 = std::log(3.0);
    const Point h = polar_point(ln3, 0.0, Geometry::hyperbolic);
    CHECK_THAT(h.disk().x, Catch::Matchers::WithinAbs(0.5, 1e-14));
    CHECK_THAT(h.disk().y, Catch::Matchers::WithinAbs(0.0, 1e-14));

    const Point s = polar_point(0.3, 0.0, Geometry::spherical);
    CHECK_THAT(s.sphere().x, Catch::Matchers::WithinAbs(std::sin(0.3), 1e-14));
    CHECK_THAT(s.sphere().z, Catch::Matchers::WithinAbs(std::cos(0.3), 1e-14));

    for (const Geometry g : {Geometry::hyperbolic, Geometry::spherical, Geometry::euclidean}) {
        const Point center = polar_point(0.0, 1.234, g);
        CHECK(distance(center, canonical_center(g)) == 0.0);
        const Point at = polar_point(0.8, 2.5, g);
        CHECK_THAT(distance(at, canonical_center(g)), Catch::Matchers::WithinAbs(0.8, 1e-13));
    }

    CHECK_THROWS_AS(polar_point(pi / 2.0, 0.0, Geometry::spherical), error);
}

TEST_CASE("to_canonical contracts") {
    Rng rng(7);
    for (const Geometry g : {Geometry::hyperbolic, Geometry::spherical, Geometry::euclidean}) {
        const double cap = g == Geometry::spherical ? 0.7 : 1.5;
        for (int trial = 0; trial < 200; ++trial) {
            const Point u = random_point(g, rng, cap);
            const Point w = random_point(g, rng, cap);
            if (!(distance(u, w) > 1e-6)) continue;
            const CanonicalFrame f = to_canonical(u, w);

            const Point iu = f.apply(u);
            CHECK(distance(iu, canonical_center(g)) < 1e-10);
            const Point iw = f.apply(w);
            CHECK_THAT(distance(iw, canonical_center(g)),
                       Catch::Matchers::WithinAbs(distance(u, w), 1e-10));
            CHECK(std::abs(detail::transverse_coordinate(iw)) < 1e-10);

            const Point p = random_point(g, rng, cap);
            const Point q = random_point(g, rng, cap);
            CHECK_THAT(distance(f.apply(p), f.apply(q)),
                       Catch::Matchers::WithinAbs(distance(p, q), 1e-10));
            CHECK(distance(f.unapply(f.apply(p)), p) < 1e-10);
        }
    }
    const Point u = Point::hyperbolic(0.1, 0.1);
    CHECK_THROWS_AS(to_canonical(u, u), error);
}

TEST_CASE("third_vertex places circle-circle intersections") {
    for (const Geometry g : {Geometry::hyperbolic, Geometry::spherical, Geometry::euclidean}) {
        const Point center = canonical_center(g);
        const Point anchor = polar_point(1.0, 0.0, g);
        const Point v = third_vertex(1.0, 0.75, 0.75, +1, g);
        CHECK_THAT(distance(v, center), Catch::Matchers::WithinAbs(0.75, 1e-10));
        CHECK_THAT(distance(v, anchor), Catch::Matchers::WithinAbs(0.75, 1e-10));

        const Point below = third_vertex(1.0, 0.75, 0.75, -1, g);
        CHECK(detail::transverse_coordinate(v) > 0.0);
        CHECK(detail::transverse_coordinate(below) < 0.0);
    }
    CHECK_THROWS_AS(third_vertex(1.0, 0.4, 0.6, +1, Geometry::hyperbolic), error);
}

TEST_CASE("circumcurve classification") {
    const ToleranceConfig tol;
    auto at = [](double r, double theta) { return polar_point(r, theta, Geometry::hyperbolic); };

    // equal hyperbolic distance from the origin
    const CircumCurve circle = circumcurve_through(at(0.4, 0.0), at(0.4, 2.0 * pi / 3.0), at(0.4, 4.0 * pi / 3.0), tol);
    CHECK(circle.kind == CurveKind::circle);
    CHECK(circle.euclidean_radius < 1.0);
    CHECK(std::hypot(circle.euclidean_center.x, circle.euclidean_center.y) < 1e-12);

    // points on a diameter
    const CircumCurve diam = circumcurve_through(Point::hyperbolic(-0.5, 0.0), Point::hyperbolic(0.0, 0.0),
                                                 Point::hyperbolic(0.5, 0.0), tol);
    CHECK(diam.kind == CurveKind::geodesic);
    CHECK(diam.infinite_radius);

    // euclidean circle radius 0.5 centered (0.5, 0): internally tangent at (1, 0)
    const CircumCurve horo = circumcurve_through(Point::hyperbolic(0.5, 0.5), Point::hyperbolic(0.0, 0.0),
                                                 Point::hyperbolic(0.5, -0.5), tol);
    CHECK(horo.kind == CurveKind::horocycle);

    // a straight chord off the center is a hypercycle
    const CircumCurve chord = circumcurve_through(Point::hyperbolic(-0.5, 0.3), Point::hyperbolic(0.0, 0.3),
                                                  Point::hyperbolic(0.5, 0.3), tol);
    CHECK(chord.kind == CurveKind::hypercycle);
    CHECK(chord.infinite_radius);

    // an orthogonal circular arc is a geodesic: take two points on the
    // geodesic circle |z - c| = r with c = (1.25, 0), r = 0.75 (c^2 = 1 + r^2)
    auto on_geodesic = [](double angle) {
        return Point::hyperbolic(1.25 + 0.75 * std::cos(angle), 0.75 * std::sin(angle));
    };
    const CircumCurve geod = circumcurve_through(on_geodesic(2.8), on_geodesic(pi), on_geodesic(3.5), tol);
    CHECK(geod.kind == CurveKind::geodesic);
    CHECK_FALSE(geod.infinite_radius);

    CHECK_THROWS_AS(circumcurve_through(at(0.4, 0.0), at(0.4, 0.0), at(0.4, 1.0), tol), error);
}

TEST_CASE("circumcurve classification is label-invariant") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Point a = random_point(Geometry::hyperbolic, rng, 2.0);
        const Point b = random_point(Geometry::hyperbolic, rng, 2.0);
        const Point c = random_point(Geometry::hyperbolic, rng, 2.0);
        if (!(distance(a, b) > 1e-3 && distance(b, c) > 1e-3 && distance(a, c) > 1e-3)) continue;
        const CurveKind k0 = circumcurve_through(a, b, c).kind;
        CHECK(circumcurve_through(b, c, a).kind == k0);
        CHECK(circumcurve_through(c, a, b).kind == k0);
        CHECK(circumcurve_through(b, a, c).kind == k0);
    }
}

TEST_CASE("lies_on membership") {
    const Point a = Point::hyperbolic(0.3, 0.1);
    const Point b = Point::hyperbolic(-0.2, 0.4);
    const Point c = Point::hyperbolic(0.1, -0.35);
    const CircumCurve curve = circumcurve_through(a, b, c);
    CHECK(lies_on(curve, a, 1e-12));
    CHECK(lies_on(curve, b, 1e-12));
    CHECK(lies_on(curve, c, 1e-12));
    CHECK_FALSE(lies_on(curve, Point::hyperbolic(0.0, 0.0), 1e-6));
}

TEST_CASE("metric triangle inequality holds for random triples") {
    Rng rng(23);
    for (const Geometry g : {Geometry::hyperbolic, Geometry::spherical, Geometry::euclidean}) {
        const double cap = g == Geometry::spherical ? 1.2 : 2.0;
        for (int trial = 0; trial < 10000; ++trial) {
            const Point p = random_point(g, rng, cap);
            const Point q = random_point(g, rng, cap);
            const Point r = random_point(g, rng, cap);
            REQUIRE(distance(p, r) <= distance(p, q) + distance(q, r) + 1e-12);
        }
    }
}

TEST_CASE("isosceles base angles are equal") {
    Rng rng(31);
    for (const Geometry g : {Geometry::hyperbolic, Geometry::spherical, Geometry::euclidean}) {
        for (int trial = 0; trial < 1000; ++trial) {
            const double r = rng.uniform(0.1, g == Geometry::spherical ? 1.0 : 1.6);
            const double d_hi = g == Geometry::spherical ? std::min(1.9 * r, 1.5) : 1.9 * r;
            const double d = rng.uniform(0.05, d_hi);
            const Point apex = third_vertex(d, r, r, trial % 2 == 0 ? +1 : -1, g);
            const Point base1 = canonical_center(g);
            const Point base2 = polar_point(d, 0.0, g);
            const double alpha = angle_at(base1, base2, apex);
            const double beta = angle_at(base2, base1, apex);
            REQUIRE(std::abs(alpha - beta) < 1e-10);
        }
    }
}

TEST_CASE("angle_at agrees with the law of cosines") {
    Rng rng(37);
    for (const Geometry g : {Geometry::hyperbolic, Geometry::spherical, Geometry::euclidean}) {
        const double cap = g == Geometry::spherical ? 1.0 : 1.6;
        int checked = 0;
        for (int trial = 0; trial < 4000 && checked < 1000; ++trial) {
            const Point p = random_point(g, rng, cap);
            const Point q = random_point(g, rng, cap);
            const Point r = random_point(g, rng, cap);
            const double a = distance(q, r), b = distance(p, r), c = distance(p, q);
            const double slack = std::min({a + b - c, a + c - b, b + c - a});
            if (!(std::min({a, b, c}) > 1e-2 && slack > 1e-2)) continue;
            ++checked;
            REQUIRE(std::abs(angle_at(p, q, r) - law_of_cosines_angle(c, b, a, g)) < 1e-9);
            REQUIRE(std::abs(angle_at(q, r, p) - law_of_cosines_angle(a, c, b, g)) < 1e-9);
        }
        REQUIRE(checked == 1000);
    }
}

TEST_CASE("spherical concyclicity residual") {
    auto on_circle = [](double theta) { return polar_point(0.5, theta, Geometry::spherical); };
    CHECK(spherical_concyclicity_residual(on_circle(0.1), on_circle(1.3), on_circle(2.9), on_circle(4.4)) < 1e-14);
    CHECK(spherical_concyclicity_residual(on_circle(0.1), on_circle(1.3), on_circle(2.9),
                                          polar_point(0.2, 4.4, Geometry::spherical)) > 1e-2);
}
