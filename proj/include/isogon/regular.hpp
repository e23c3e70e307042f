#pragma once

// The regular n-gon of a given perimeter: circumradius solved by bisection
// on the monotone radius -> side map, vertices placed around the canonical
// center, area in closed form as n copies of the central isosceles triangle.

#include <cmath>

#include "isogon/polygon.hpp"
#include "isogon/triangle.hpp"

namespace isogon {

// Side length subtended by the apex angle 2*pi/n at circumradius r; the
// law of cosines in each geometry, strictly increasing in r.
inline double side_for_circumradius(int n, double r, Geometry g) {
    if (n < 3) throw error(errc::arity, "a regular polygon needs n >= 3");
    if (!(r > 0.0)) throw error(errc::bad_input, "circumradius must be positive");
    const double apex = 2.0 * pi / n;
    switch (g) {
        case Geometry::hyperbolic: {
            const double ch = std::cosh(r), sh = std::sinh(r);
            return std::acosh(ch * ch - sh * sh * std::cos(apex));
        }
        case Geometry::spherical: {
            if (!(r < pi / 2.0))
                throw error(errc::hemisphere_violation, "spherical circumradius must be < pi/2");
            const double cs = std::cos(r), sn = std::sin(r);
            return std::acos(detail::clamp_unit(cs * cs + sn * sn * std::cos(apex)));
        }
        case Geometry::euclidean:
            return 2.0 * r * std::sin(pi / n);
    }
    return 0.0;
}

struct RegularGon {
    int n = 3;
    Geometry geometry = Geometry::euclidean;
    double perimeter = 0.0;
    double circumradius = 0.0;
    double side = 0.0;
};

// Unique r with n * side_for_circumradius(n, r, g) = L, by bisection.
inline double circumradius_for_perimeter(int n, double L, Geometry g) {
    if (n < 3) throw error(errc::arity, "a regular polygon needs n >= 3");
    if (!(L > 0.0)) throw error(errc::infeasible, "perimeter must be positive");
    if (g == Geometry::spherical && !(L < 2.0 * pi))
        throw error(errc::infeasible, "spherical perimeter must be < 2*pi");

    const double target = L / n;
    double lo = 0.0;
    double hi;
    if (g == Geometry::spherical) {
        hi = pi / 2.0 - 1e-9;
    } else {
        hi = 1.0;
        while (side_for_circumradius(n, hi, g) < target) hi *= 2.0;
    }

    const double tol = 1e-12 * std::max(1.0, L);
    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double residual = n * side_for_circumradius(n, mid, g) - L;
        if (std::abs(residual) < tol) break;
        if (residual < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return mid;
}

inline RegularGon make_regular_gon(int n, double L, Geometry g) {
    RegularGon spec;
    spec.n = n;
    spec.geometry = g;
    spec.perimeter = L;
    spec.circumradius = circumradius_for_perimeter(n, L, g);
    spec.side = L / n;
    return spec;
}

inline Polygon build_regular(const RegularGon& spec) {
    std::vector<Point> vertices;
    vertices.reserve(static_cast<std::size_t>(spec.n));
    for (int k = 0; k < spec.n; ++k)
        vertices.push_back(polar_point(spec.circumradius, 2.0 * pi * k / spec.n, spec.geometry));
    return Polygon(spec.geometry, std::move(vertices));
}

inline Polygon build_regular(int n, double L, Geometry g) { return build_regular(make_regular_gon(n, L, g)); }

// n congruent central triangles (r, r, side).
inline double regular_area(const RegularGon& spec) {
    return spec.n * area_from_sides(spec.circumradius, spec.circumradius, spec.side, spec.geometry);
}

inline double regular_area(int n, double L, Geometry g) { return regular_area(make_regular_gon(n, L, g)); }

// Interior vertex angle: twice the base angle of the central triangle.
inline double regular_interior_angle(const RegularGon& spec) {
    return 2.0 * law_of_cosines_angle(spec.circumradius, spec.side, spec.circumradius, spec.geometry);
}

}  // namespace isogon
