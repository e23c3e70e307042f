#pragma once

// Closed-form triangle areas from side lengths: Lhuilier's formula on the
// sphere, its hyperbolic-tangent analogue in the disk, Heron's formula in
// the plane, plus the angle defect/excess route as an independent oracle.

#include <cmath>

#include "isogon/geometry.hpp"

namespace isogon {

struct TriangleSides {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    Geometry geometry = Geometry::euclidean;

    static TriangleSides make(double a, double b, double c, Geometry g) {
        validate_triangle_sides(a, b, c, g);
        return TriangleSides{a, b, c, g};
    }

    double semi_perimeter() const { return (a + b + c) / 2.0; }
};

// Area from side lengths.
//   spherical:  tan^2(S/4) = tan(s/2) tan((s-a)/2) tan((s-b)/2) tan((s-c)/2)
//   hyperbolic: tan^2(S/4) = tanh(s/2) tanh((s-a)/2) tanh((s-b)/2) tanh((s-c)/2)
//   euclidean:  S^2 = s (s-a)(s-b)(s-c)
// Extracted as 4*atan(sqrt(.)): the product lies in [0, 1) for valid sides,
// so the arctangent stays on the principal branch.  Tiny negative products
// from roundoff near degenerate triples are clamped to zero.
inline double area_from_sides(const TriangleSides& t) {
    validate_triangle_sides(t.a, t.b, t.c, t.geometry);
    const double s = t.semi_perimeter();
    switch (t.geometry) {
        case Geometry::spherical: {
            double prod = std::tan(s / 2.0) * std::tan((s - t.a) / 2.0) * std::tan((s - t.b) / 2.0) *
                          std::tan((s - t.c) / 2.0);
            if (prod < 0.0) prod = 0.0;
            return 4.0 * std::atan(std::sqrt(prod));
        }
        case Geometry::hyperbolic: {
            double prod = std::tanh(s / 2.0) * std::tanh((s - t.a) / 2.0) * std::tanh((s - t.b) / 2.0) *
                          std::tanh((s - t.c) / 2.0);
            if (prod < 0.0) prod = 0.0;
            return 4.0 * std::atan(std::sqrt(prod));
        }
        case Geometry::euclidean: {
            double prod = s * (s - t.a) * (s - t.b) * (s - t.c);
            if (prod < 0.0) prod = 0.0;
            return std::sqrt(prod);
        }
    }
    return 0.0;
}

inline double area_from_sides(double a, double b, double c, Geometry g) {
    return area_from_sides(TriangleSides::make(a, b, c, g));
}

// Area from vertices via the pairwise distances.  Collinear or otherwise
// degenerate triples report zero area instead of raising.
inline double area_from_vertices(const Point& p, const Point& q, const Point& r) {
    detail::require_same_geometry(p, q);
    detail::require_same_geometry(p, r);
    const double a = distance(q, r);
    const double b = distance(p, r);
    const double c = distance(p, q);
    if (!(a > 0.0 && b > 0.0 && c > 0.0 && a < b + c && b < a + c && c < a + b)) return 0.0;
    return area_from_sides(TriangleSides::make(a, b, c, p.geometry()));
}

// Gauss-Bonnet oracle: hyperbolic area is the angle defect pi - (alpha +
// beta + gamma); spherical area is the excess.  The angles come from the
// tangent-vector route in angle_at, so this shares no code path with
// area_from_sides.
inline double area_gauss_bonnet(const Point& p, const Point& q, const Point& r) {
    detail::require_same_geometry(p, q);
    detail::require_same_geometry(p, r);
    const double sum = angle_at(p, q, r) + angle_at(q, r, p) + angle_at(r, p, q);
    switch (p.geometry()) {
        case Geometry::hyperbolic: return pi - sum;
        case Geometry::spherical: return sum - pi;
        case Geometry::euclidean:
            throw error(errc::bad_input, "area_gauss_bonnet is defined for the non-Euclidean geometries");
    }
    return 0.0;
}

}  // namespace isogon
