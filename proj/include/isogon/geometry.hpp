#pragma once

// Geometry kernel for polygons in three constant-curvature planes:
// the Poincare disk (curvature -1), the unit sphere restricted to the
// open hemisphere z > 0 (curvature +1), and the Euclidean plane as the
// flat baseline.  All operations are pure functions of their inputs.

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>

namespace isogon {

inline constexpr double pi = 3.14159265358979323846;

enum class Geometry { hyperbolic, spherical, euclidean };

inline const char* to_string(Geometry g) {
    switch (g) {
        case Geometry::hyperbolic: return "hyperbolic";
        case Geometry::spherical: return "spherical";
        case Geometry::euclidean: return "euclidean";
    }
    return "?";
}

enum class errc {
    geometry_mismatch,
    degenerate_input,
    invalid_sides,
    hemisphere_violation,
    disk_violation,
    infeasible,
    arity,
    nonconvex,
    sampling_exhausted,
    bad_input,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

// Predicate / convergence tolerances shared across the library.  Immutable
// after construction; every routine that needs a band takes one of these
// (or a plain tolerance) as a parameter.
struct ToleranceConfig {
    double eps_predicate = 1e-10;
    double eps_converge = 1e-8;

    void validate() const {
        if (!(0.0 < eps_predicate && eps_predicate < eps_converge && eps_converge < 1.0))
            throw error(errc::bad_input, "tolerances must satisfy 0 < eps_predicate < eps_converge < 1");
    }
};

// Disk coordinates, strictly inside the unit circle.
struct HPoint {
    double x = 0.0;
    double y = 0.0;
};

// Unit vector with z > 0 (hemisphere centered at the north pole).
struct SPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;
};

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

class Point {
public:
    static Point hyperbolic(double x, double y) {
        if (!(x * x + y * y < 1.0))
            throw error(errc::disk_violation, "hyperbolic point must lie strictly inside the unit disk");
        return Point(HPoint{x, y});
    }

    // Accepts a vector whose squared norm is within 1e-12 of 1 and
    // renormalizes; the open-hemisphere convention requires z > 0.
    static Point spherical(double x, double y, double z) {
        const double n2 = x * x + y * y + z * z;
        if (!(std::abs(n2 - 1.0) <= 1e-12))
            throw error(errc::bad_input, "spherical point must be a unit vector (|n^2 - 1| <= 1e-12)");
        const double n = std::sqrt(n2);
        x /= n;
        y /= n;
        z /= n;
        if (!(z > 0.0))
            throw error(errc::hemisphere_violation, "spherical point must satisfy z > 0 (open hemisphere)");
        return Point(SPoint{x, y, z});
    }

    static Point euclidean(double x, double y) { return Point(PlanarPoint{x, y}); }

    Geometry geometry() const {
        switch (coords_.index()) {
            case 0: return Geometry::hyperbolic;
            case 1: return Geometry::spherical;
            default: return Geometry::euclidean;
        }
    }

    const HPoint& disk() const { return std::get<HPoint>(coords_); }
    const SPoint& sphere() const { return std::get<SPoint>(coords_); }
    const PlanarPoint& plane() const { return std::get<PlanarPoint>(coords_); }

private:
    explicit Point(HPoint p) : coords_(p) {}
    explicit Point(SPoint p) : coords_(p) {}
    explicit Point(PlanarPoint p) : coords_(p) {}

    std::variant<HPoint, SPoint, PlanarPoint> coords_;
};

namespace detail {

struct Vec3 {
    double x, y, z;
};

inline Vec3 to_vec(const SPoint& p) { return {p.x, p.y, p.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 scale(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline Vec3 sub(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

inline std::complex<double> to_complex(const HPoint& p) { return {p.x, p.y}; }
inline std::complex<double> to_complex(const PlanarPoint& p) { return {p.x, p.y}; }

// Mobius translation of the disk taking a to 0.
inline std::complex<double> mobius_to_origin(std::complex<double> a, std::complex<double> z) {
    return (z - a) / (1.0 - std::conj(a) * z);
}

inline void require_same_geometry(const Point& p, const Point& q) {
    if (p.geometry() != q.geometry())
        throw error(errc::geometry_mismatch, "points belong to different geometries");
}

inline double clamp_unit(double v) { return v < -1.0 ? -1.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace detail

// Geodesic distance.  Hyperbolic distances come from the Poincare metric
// 4(dr^2 + r^2 dtheta^2)/(1-r^2)^2; spherical distances are central angles.
inline double distance(const Point& p, const Point& q) {
    detail::require_same_geometry(p, q);
    switch (p.geometry()) {
        case Geometry::hyperbolic: {
            const auto z = detail::to_complex(p.disk());
            const auto w = detail::to_complex(q.disk());
            const double t = std::abs(z - w) / std::abs(1.0 - std::conj(z) * w);
            return 2.0 * std::atanh(t);
        }
        case Geometry::spherical: {
            const auto a = detail::to_vec(p.sphere());
            const auto b = detail::to_vec(q.sphere());
            return std::atan2(detail::norm(detail::cross(a, b)), detail::dot(a, b));
        }
        case Geometry::euclidean: {
            const auto& a = p.plane();
            const auto& b = q.plane();
            return std::hypot(a.x - b.x, a.y - b.y);
        }
    }
    return 0.0;
}

// Angle opposite side c in a triangle with side lengths (a, b, c).
inline double law_of_cosines_angle(double a, double b, double c, Geometry g) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0 && a < b + c && b < a + c && c < a + b))
        throw error(errc::invalid_sides, "side lengths violate the strict triangle inequality");
    double cos_angle = 0.0;
    switch (g) {
        case Geometry::hyperbolic:
            cos_angle = (std::cosh(a) * std::cosh(b) - std::cosh(c)) / (std::sinh(a) * std::sinh(b));
            break;
        case Geometry::spherical:
            if (!(a < pi && b < pi && c < pi && a + b + c < 2.0 * pi))
                throw error(errc::invalid_sides, "spherical sides must fit in an open hemisphere");
            cos_angle = (std::cos(c) - std::cos(a) * std::cos(b)) / (std::sin(a) * std::sin(b));
            break;
        case Geometry::euclidean:
            cos_angle = (a * a + b * b - c * c) / (2.0 * a * b);
            break;
    }
    return std::acos(detail::clamp_unit(cos_angle));
}

// Interior angle at v between the geodesic rays v->p and v->q, in [0, pi].
// Computed from tangent directions: the disk model is conformal, so the
// hyperbolic angle equals the Euclidean angle after translating v to the
// origin; on the sphere we project p and q onto the tangent plane at v.
inline double angle_at(const Point& v, const Point& p, const Point& q) {
    detail::require_same_geometry(v, p);
    detail::require_same_geometry(v, q);
    switch (v.geometry()) {
        case Geometry::hyperbolic: {
            const auto a = detail::to_complex(v.disk());
            const auto zp = detail::mobius_to_origin(a, detail::to_complex(p.disk()));
            const auto zq = detail::mobius_to_origin(a, detail::to_complex(q.disk()));
            if (std::abs(zp) < 1e-15 || std::abs(zq) < 1e-15)
                throw error(errc::degenerate_input, "angle_at requires p != v != q");
            double d = std::arg(zp) - std::arg(zq);
            d = std::remainder(d, 2.0 * pi);
            return std::abs(d);
        }
        case Geometry::spherical: {
            const auto c = detail::to_vec(v.sphere());
            auto tp = detail::sub(detail::to_vec(p.sphere()), detail::scale(c, detail::dot(detail::to_vec(p.sphere()), c)));
            auto tq = detail::sub(detail::to_vec(q.sphere()), detail::scale(c, detail::dot(detail::to_vec(q.sphere()), c)));
            const double np = detail::norm(tp);
            const double nq = detail::norm(tq);
            if (np < 1e-15 || nq < 1e-15)
                throw error(errc::degenerate_input, "angle_at requires p != v != q");
            return std::atan2(detail::norm(detail::cross(tp, tq)), detail::dot(tp, tq));
        }
        case Geometry::euclidean: {
            const auto& o = v.plane();
            const double ax = p.plane().x - o.x, ay = p.plane().y - o.y;
            const double bx = q.plane().x - o.x, by = q.plane().y - o.y;
            if (std::hypot(ax, ay) < 1e-15 || std::hypot(bx, by) < 1e-15)
                throw error(errc::degenerate_input, "angle_at requires p != v != q");
            return std::atan2(std::abs(ax * by - ay * bx), ax * bx + ay * by);
        }
    }
    return 0.0;
}

// Point at distance r from the canonical center (disk origin / north pole /
// planar origin) along direction theta.
inline Point polar_point(double r, double theta, Geometry g) {
    if (!(r >= 0.0))
        throw error(errc::bad_input, "polar_point requires r >= 0");
    switch (g) {
        case Geometry::hyperbolic: {
            const double rho = std::tanh(r / 2.0);
            return Point::hyperbolic(rho * std::cos(theta), rho * std::sin(theta));
        }
        case Geometry::spherical: {
            if (!(r < pi / 2.0))
                throw error(errc::hemisphere_violation, "spherical polar_point requires r < pi/2");
            return Point::spherical(std::sin(r) * std::cos(theta), std::sin(r) * std::sin(theta), std::cos(r));
        }
        case Geometry::euclidean:
            return Point::euclidean(r * std::cos(theta), r * std::sin(theta));
    }
    return Point::euclidean(0.0, 0.0);
}

inline Point canonical_center(Geometry g) {
    switch (g) {
        case Geometry::hyperbolic: return Point::hyperbolic(0.0, 0.0);
        case Geometry::spherical: return Point::spherical(0.0, 0.0, 1.0);
        case Geometry::euclidean: return Point::euclidean(0.0, 0.0);
    }
    return Point::euclidean(0.0, 0.0);
}

// Orientation-preserving isometry fixing a canonical frame: u goes to the
// canonical center, w lands on the theta = 0 ray.  apply/unapply are exact
// inverses up to roundoff.
class CanonicalFrame {
public:
    Point apply(const Point& p) const {
        if (p.geometry() != geometry_)
            throw error(errc::geometry_mismatch, "frame and point geometries differ");
        switch (geometry_) {
            case Geometry::hyperbolic: {
                const auto z = detail::mobius_to_origin(h_center_, detail::to_complex(p.disk())) * h_rot_;
                return Point::hyperbolic(z.real(), z.imag());
            }
            case Geometry::spherical: {
                const auto v = detail::to_vec(p.sphere());
                return Point::spherical(detail::dot(e1_, v), detail::dot(e2_, v), detail::dot(e3_, v));
            }
            case Geometry::euclidean: {
                const auto z = (detail::to_complex(p.plane()) - e_center_) * h_rot_;
                return Point::euclidean(z.real(), z.imag());
            }
        }
        return p;
    }

    Point unapply(const Point& p) const {
        if (p.geometry() != geometry_)
            throw error(errc::geometry_mismatch, "frame and point geometries differ");
        switch (geometry_) {
            case Geometry::hyperbolic: {
                const auto w = detail::to_complex(p.disk()) * std::conj(h_rot_);
                const auto z = detail::mobius_to_origin(-h_center_, w);
                return Point::hyperbolic(z.real(), z.imag());
            }
            case Geometry::spherical: {
                const auto v = detail::to_vec(p.sphere());
                return Point::spherical(e1_.x * v.x + e2_.x * v.y + e3_.x * v.z,
                                        e1_.y * v.x + e2_.y * v.y + e3_.y * v.z,
                                        e1_.z * v.x + e2_.z * v.y + e3_.z * v.z);
            }
            case Geometry::euclidean: {
                const auto z = detail::to_complex(p.plane()) * std::conj(h_rot_) + e_center_;
                return Point::euclidean(z.real(), z.imag());
            }
        }
        return p;
    }

    Geometry geometry() const { return geometry_; }

private:
    friend CanonicalFrame to_canonical(const Point&, const Point&);
    explicit CanonicalFrame(Geometry g) : geometry_(g) {}

    Geometry geometry_;
    std::complex<double> h_center_{0.0, 0.0};  // hyperbolic: point sent to 0; euclidean: translation
    std::complex<double> e_center_{0.0, 0.0};
    std::complex<double> h_rot_{1.0, 0.0};
    detail::Vec3 e1_{1, 0, 0}, e2_{0, 1, 0}, e3_{0, 0, 1};  // spherical rotation rows
};

inline CanonicalFrame to_canonical(const Point& u, const Point& w) {
    detail::require_same_geometry(u, w);
    if (!(distance(u, w) > 0.0))
        throw error(errc::degenerate_input, "to_canonical requires two distinct points");
    CanonicalFrame f(u.geometry());
    switch (u.geometry()) {
        case Geometry::hyperbolic: {
            f.h_center_ = detail::to_complex(u.disk());
            const auto wz = detail::mobius_to_origin(f.h_center_, detail::to_complex(w.disk()));
            f.h_rot_ = std::conj(wz) / std::abs(wz);
            break;
        }
        case Geometry::spherical: {
            const auto cu = detail::to_vec(u.sphere());
            const auto cw = detail::to_vec(w.sphere());
            auto t = detail::sub(cw, detail::scale(cu, detail::dot(cw, cu)));
            const double tn = detail::norm(t);
            if (tn < 1e-15)
                throw error(errc::degenerate_input, "to_canonical requires two distinct points");
            f.e1_ = detail::scale(t, 1.0 / tn);
            f.e3_ = cu;
            f.e2_ = detail::cross(cu, f.e1_);
            break;
        }
        case Geometry::euclidean: {
            f.e_center_ = detail::to_complex(u.plane());
            const auto wz = detail::to_complex(w.plane()) - f.e_center_;
            f.h_rot_ = std::conj(wz) / std::abs(wz);
            break;
        }
    }
    return f;
}

inline void validate_triangle_sides(double a, double b, double c, Geometry g) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0))
        throw error(errc::invalid_sides, "side lengths must be positive");
    if (!(a < b + c && b < a + c && c < a + b))
        throw error(errc::invalid_sides, "side lengths violate the strict triangle inequality");
    if (g == Geometry::spherical) {
        if (!(a < pi && b < pi && c < pi))
            throw error(errc::invalid_sides, "spherical side lengths must be < pi");
        if (!(a + b + c < 2.0 * pi))
            throw error(errc::invalid_sides, "spherical perimeter must be < 2*pi");
    }
}

// Third vertex of a triangle in the canonical frame: the second anchor sits
// at distance d along theta = 0, and the result is at distance r1 from the
// center and r2 from the anchor, on the half selected by the sign of side.
inline Point third_vertex(double d, double r1, double r2, int side, Geometry g) {
    validate_triangle_sides(d, r1, r2, g);
    const double at_center = law_of_cosines_angle(r1, d, r2, g);
    return polar_point(r1, side >= 0 ? at_center : -at_center, g);
}

enum class CurveKind { circle, horocycle, hypercycle, geodesic };

inline const char* to_string(CurveKind k) {
    switch (k) {
        case CurveKind::circle: return "circle";
        case CurveKind::horocycle: return "horocycle";
        case CurveKind::hypercycle: return "hypercycle";
        case CurveKind::geodesic: return "geodesic";
    }
    return "?";
}

// The unique Euclidean circle (or straight chord) through three points of
// the Poincare disk, classified against the unit circle: disjoint from it ->
// hyperbolic circle; internally tangent -> horocycle; crossing at a right
// angle -> geodesic; crossing otherwise -> hypercycle.  Straight chords are
// stored with infinite_radius set, a unit normal, and an offset >= 0.
struct CircumCurve {
    CurveKind kind = CurveKind::circle;
    PlanarPoint euclidean_center{};
    double euclidean_radius = 0.0;
    bool infinite_radius = false;
    PlanarPoint chord_normal{};  // meaningful only when infinite_radius
    double chord_offset = 0.0;
};

inline CircumCurve circumcurve_through(const Point& p1, const Point& p2, const Point& p3,
                                       const ToleranceConfig& tol = {}) {
    if (p1.geometry() != Geometry::hyperbolic || p2.geometry() != Geometry::hyperbolic ||
        p3.geometry() != Geometry::hyperbolic)
        throw error(errc::geometry_mismatch, "circumcurve_through is defined for hyperbolic points");
    if (!(distance(p1, p2) > 0.0 && distance(p2, p3) > 0.0 && distance(p1, p3) > 0.0))
        throw error(errc::degenerate_input, "circumcurve_through requires three distinct points");

    const double ax = p1.disk().x, ay = p1.disk().y;
    const double bx = p2.disk().x, by = p2.disk().y;
    const double cx = p3.disk().x, cy = p3.disk().y;

    CircumCurve curve;
    const double den = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    bool as_chord = (den == 0.0);
    if (!as_chord) {
        const double a2 = ax * ax + ay * ay;
        const double b2 = bx * bx + by * by;
        const double c2 = cx * cx + cy * cy;
        const double ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / den;
        const double uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / den;
        const double radius = std::hypot(ax - ux, ay - uy);
        // Near-collinear triples are represented as a straight chord.
        if (radius > 1e6) {
            as_chord = true;
        } else {
            curve.euclidean_center = {ux, uy};
            curve.euclidean_radius = radius;
        }
    }

    if (as_chord) {
        curve.infinite_radius = true;
        curve.euclidean_radius = std::numeric_limits<double>::infinity();
        const double dx = cx - ax, dy = cy - ay;
        const double dn = std::hypot(dx, dy);
        double nx = -dy / dn, ny = dx / dn;
        double h = nx * ax + ny * ay;
        if (h < 0.0) {
            nx = -nx;
            ny = -ny;
            h = -h;
        }
        curve.chord_normal = {nx, ny};
        curve.chord_offset = h;
        // A chord crosses the boundary at angle alpha with cos(alpha) equal
        // to its distance from the origin; a diameter is a geodesic.
        curve.kind = (h < tol.eps_predicate) ? CurveKind::geodesic : CurveKind::hypercycle;
        return curve;
    }

    const double m = std::hypot(curve.euclidean_center.x, curve.euclidean_center.y);
    const double r = curve.euclidean_radius;
    const double touch = m + r - 1.0;
    if (touch < -tol.eps_predicate) {
        curve.kind = CurveKind::circle;
    } else if (touch <= tol.eps_predicate) {
        curve.kind = CurveKind::horocycle;
    } else {
        const double cos_alpha = (1.0 + r * r - m * m) / (2.0 * r);
        curve.kind = (std::abs(cos_alpha) < tol.eps_predicate) ? CurveKind::geodesic : CurveKind::hypercycle;
    }
    return curve;
}

// Euclidean distance from a disk point to the curve, compared against tol.
inline bool lies_on(const CircumCurve& curve, const Point& p, double tol) {
    if (p.geometry() != Geometry::hyperbolic)
        throw error(errc::geometry_mismatch, "lies_on is defined for hyperbolic points");
    const double x = p.disk().x, y = p.disk().y;
    double dist = 0.0;
    if (curve.infinite_radius) {
        dist = std::abs(curve.chord_normal.x * x + curve.chord_normal.y * y - curve.chord_offset);
    } else {
        dist = std::abs(std::hypot(x - curve.euclidean_center.x, y - curve.euclidean_center.y) -
                        curve.euclidean_radius);
    }
    return dist <= tol;
}

// Distance of the fourth point from the plane spanned by the spherical
// circle through the first three; zero iff the four points are concyclic.
inline double spherical_concyclicity_residual(const Point& p0, const Point& p1, const Point& p2,
                                              const Point& p3) {
    for (const Point* p : {&p0, &p1, &p2, &p3})
        if (p->geometry() != Geometry::spherical)
            throw error(errc::geometry_mismatch, "concyclicity residual is defined for spherical points");
    const auto a = detail::to_vec(p0.sphere());
    const auto b = detail::to_vec(p1.sphere());
    const auto c = detail::to_vec(p2.sphere());
    auto n = detail::cross(detail::sub(b, a), detail::sub(c, a));
    const double nn = detail::norm(n);
    if (nn < 1e-15)
        throw error(errc::degenerate_input, "three defining points do not span a circle");
    n = detail::scale(n, 1.0 / nn);
    const double offset = detail::dot(n, a);
    return std::abs(detail::dot(n, detail::to_vec(p3.sphere())) - offset);
}

namespace detail {

// Coordinate transverse to the theta = 0 ray of the canonical frame; its
// sign selects the half-plane (half-sphere) a frame-mapped point lies in.
inline double transverse_coordinate(const Point& p) {
    switch (p.geometry()) {
        case Geometry::hyperbolic: return p.disk().y;
        case Geometry::spherical: return p.sphere().y;
        case Geometry::euclidean: return p.plane().y;
    }
    return 0.0;
}

// Klein-chart image of a disk point; hyperbolic geodesics become straight
// chords there, which makes side-of-geodesic tests plain orientation tests.
inline PlanarPoint to_klein(const HPoint& p) {
    const double s = 2.0 / (1.0 + p.x * p.x + p.y * p.y);
    return {s * p.x, s * p.y};
}

// Signed side of x relative to the oriented geodesic u -> w, normalized so
// the magnitude behaves like the sine of an angle; |result| below a
// predicate band means "collinear for all practical purposes".
inline double orientation(const Point& u, const Point& w, const Point& x) {
    require_same_geometry(u, w);
    require_same_geometry(u, x);
    switch (u.geometry()) {
        case Geometry::hyperbolic: {
            const auto ku = to_klein(u.disk());
            const auto kw = to_klein(w.disk());
            const auto kx = to_klein(x.disk());
            const double a1 = kw.x - ku.x, a2 = kw.y - ku.y;
            const double b1 = kx.x - ku.x, b2 = kx.y - ku.y;
            const double na = std::hypot(a1, a2), nb = std::hypot(b1, b2);
            if (na == 0.0 || nb == 0.0) return 0.0;
            return (a1 * b2 - a2 * b1) / (na * nb);
        }
        case Geometry::spherical: {
            const auto a = to_vec(u.sphere());
            const auto b = to_vec(w.sphere());
            const auto c = to_vec(x.sphere());
            const auto n = cross(a, b);
            const double nn = norm(n);
            if (nn == 0.0) return 0.0;
            return dot(n, c) / nn;
        }
        case Geometry::euclidean: {
            const double a1 = w.plane().x - u.plane().x, a2 = w.plane().y - u.plane().y;
            const double b1 = x.plane().x - u.plane().x, b2 = x.plane().y - u.plane().y;
            const double na = std::hypot(a1, a2), nb = std::hypot(b1, b2);
            if (na == 0.0 || nb == 0.0) return 0.0;
            return (a1 * b2 - a2 * b1) / (na * nb);
        }
    }
    return 0.0;
}

}  // namespace detail

}  // namespace isogon
