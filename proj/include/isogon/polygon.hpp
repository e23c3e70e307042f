#pragma once

// Polygons as ordered vertex cycles with geodesic sides.  Area is defined
// for convex polygons only and computed by fan triangulation; the convex
// case is all the isoperimetric machinery needs.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "isogon/geometry.hpp"
#include "isogon/triangle.hpp"

namespace isogon {

class Polygon {
public:
    Polygon(Geometry g, std::vector<Point> vertices) : geometry_(g), vertices_(std::move(vertices)) {
        if (vertices_.size() < 3)
            throw error(errc::arity, "a polygon needs at least 3 vertices");
        for (const auto& v : vertices_)
            if (v.geometry() != geometry_)
                throw error(errc::geometry_mismatch, "polygon vertices must share one geometry");
        const std::size_t n = vertices_.size();
        for (std::size_t i = 0; i < n; ++i)
            if (!(distance(vertices_[i], vertices_[(i + 1) % n]) > 0.0))
                throw error(errc::degenerate_input, "consecutive polygon vertices must be distinct");
    }

    explicit Polygon(std::vector<Point> vertices)
        : Polygon(vertices.empty() ? Geometry::euclidean : vertices.front().geometry(), std::move(vertices)) {}

    Geometry geometry() const { return geometry_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<Point>& vertices() const { return vertices_; }

    // Cyclic access: any integer index is reduced modulo n.
    const Point& vertex(long i) const {
        const long n = static_cast<long>(vertices_.size());
        return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
    }

    Polygon with_vertex(std::size_t i, const Point& p) const {
        std::vector<Point> vs = vertices_;
        vs[i % vs.size()] = p;
        return Polygon(geometry_, std::move(vs));
    }

private:
    Geometry geometry_;
    std::vector<Point> vertices_;
};

struct QuadAngles {
    double A = 0.0, B = 0.0, C = 0.0, D = 0.0;
};

inline double perimeter(const Polygon& poly) {
    double total = 0.0;
    const long n = static_cast<long>(poly.size());
    for (long i = 0; i < n; ++i) total += distance(poly.vertex(i), poly.vertex(i + 1));
    return total;
}

inline std::vector<double> side_lengths(const Polygon& poly) {
    std::vector<double> sides;
    const long n = static_cast<long>(poly.size());
    sides.reserve(poly.size());
    for (long i = 0; i < n; ++i) sides.push_back(distance(poly.vertex(i), poly.vertex(i + 1)));
    return sides;
}

// All turns must agree in sign, with a predicate dead-band: a triple of
// consecutive vertices that is collinear to within eps counts as nonconvex.
inline bool is_convex(const Polygon& poly, double eps = ToleranceConfig{}.eps_predicate) {
    const long n = static_cast<long>(poly.size());
    int sign = 0;
    for (long i = 0; i < n; ++i) {
        const double o = detail::orientation(poly.vertex(i), poly.vertex(i + 1), poly.vertex(i + 2));
        if (std::abs(o) < eps) return false;
        const int s = o > 0.0 ? 1 : -1;
        if (sign == 0)
            sign = s;
        else if (s != sign)
            return false;
    }
    return true;
}

inline std::vector<double> interior_angles(const Polygon& poly) {
    if (!is_convex(poly))
        throw error(errc::nonconvex, "interior_angles requires a convex polygon");
    std::vector<double> angles;
    const long n = static_cast<long>(poly.size());
    angles.reserve(poly.size());
    for (long i = 0; i < n; ++i)
        angles.push_back(angle_at(poly.vertex(i), poly.vertex(i - 1), poly.vertex(i + 1)));
    return angles;
}

// Fan triangulation from vertex 0; any fan apex gives the same result for a
// convex polygon.
inline double area_convex(const Polygon& poly) {
    if (!is_convex(poly))
        throw error(errc::nonconvex, "area_convex requires a convex polygon");
    double total = 0.0;
    const long n = static_cast<long>(poly.size());
    for (long i = 1; i + 1 < n; ++i)
        total += area_from_vertices(poly.vertex(0), poly.vertex(i), poly.vertex(i + 1));
    return total;
}

// Polygon-level angle defect/excess: (n-2)*pi minus the angle sum in the
// hyperbolic plane, the angle sum minus (n-2)*pi on the sphere.
inline double area_gauss_bonnet(const Polygon& poly) {
    const auto angles = interior_angles(poly);
    double sum = 0.0;
    for (const double a : angles) sum += a;
    const double flat = (static_cast<double>(poly.size()) - 2.0) * pi;
    switch (poly.geometry()) {
        case Geometry::hyperbolic: return flat - sum;
        case Geometry::spherical: return sum - flat;
        case Geometry::euclidean:
            throw error(errc::bad_input, "area_gauss_bonnet is defined for the non-Euclidean geometries");
    }
    return 0.0;
}

namespace detail {

// Planar shoelace area; the euclidean stand-in for the Gauss-Bonnet
// cross-check.
inline double shoelace_area(const Polygon& poly) {
    double twice = 0.0;
    const long n = static_cast<long>(poly.size());
    for (long i = 0; i < n; ++i) {
        const auto& a = poly.vertex(i).plane();
        const auto& b = poly.vertex(i + 1).plane();
        twice += a.x * b.y - a.y * b.x;
    }
    return std::abs(twice) / 2.0;
}

}  // namespace detail

inline QuadAngles quad_angles(const Polygon& poly) {
    if (poly.size() != 4)
        throw error(errc::arity, "quad_angles requires a quadrilateral");
    const auto angles = interior_angles(poly);
    return QuadAngles{angles[0], angles[1], angles[2], angles[3]};
}

// (A + C) - (B + D) on the cyclically ordered interior angles; zero exactly
// at the maximal-area quadrilateral with the given sides.
inline double wimmer_gap(const Polygon& poly) {
    const auto q = quad_angles(poly);
    return (q.A + q.C) - (q.B + q.D);
}

inline double spread(const std::vector<double>& values) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
}

inline bool is_equilateral(const Polygon& poly, double tol = ToleranceConfig{}.eps_converge) {
    return spread(side_lengths(poly)) < tol;
}

inline bool is_equiangular(const Polygon& poly, double tol = ToleranceConfig{}.eps_converge) {
    return spread(interior_angles(poly)) < tol;
}

inline bool is_regular(const Polygon& poly, double tol = ToleranceConfig{}.eps_converge) {
    return is_equilateral(poly, tol) && is_equiangular(poly, tol);
}

namespace detail {

// mt19937_64 with a fixed 53-bit mantissa draw, so samples are reproducible
// independent of the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace detail

// Star-shaped rejection sampler: n direction angles sorted increasingly,
// radii drawn from (scale/2, scale), resampled until the polygon is convex.
// Deterministic per seed; gives up after 1000 tries.
inline Polygon sample_convex_polygon(int n, Geometry g, double scale, std::uint64_t seed) {
    if (n < 3) throw error(errc::arity, "sample_convex_polygon requires n >= 3");
    if (!(scale > 0.0)) throw error(errc::bad_input, "sample_convex_polygon requires scale > 0");
    if (g == Geometry::spherical && !(scale < pi / 2.0))
        throw error(errc::hemisphere_violation, "spherical sampling scale must be < pi/2");

    detail::Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> theta(static_cast<std::size_t>(n));
        for (auto& t : theta) t = rng.uniform(0.0, 2.0 * pi);
        std::sort(theta.begin(), theta.end());

        std::vector<Point> vertices;
        vertices.reserve(static_cast<std::size_t>(n));
        for (const double t : theta) vertices.push_back(polar_point(rng.uniform(scale / 2.0, scale), t, g));

        try {
            Polygon candidate(g, std::move(vertices));
            if (is_convex(candidate)) return candidate;
        } catch (const error&) {
            // coincident vertices from colliding angles; resample
        }
    }
    throw error(errc::sampling_exhausted, "sample_convex_polygon exhausted its rejection budget");
}

}  // namespace isogon
