#pragma once

// Symmetrization moves and their driver.  Two local, perimeter-preserving,
// area-nondecreasing moves are iterated round-robin until the polygon is
// regular to tolerance: averaging two adjacent sides (replacing the shared
// vertex by the apex of the isosceles triangle over the same chord), and
// flexing the one-parameter quadrilateral linkage spanned by three
// consecutive sides to its maximal-area configuration.

#include <cmath>
#include <vector>

#include "isogon/polygon.hpp"
#include "isogon/triangle.hpp"

namespace isogon {

struct MoveResult {
    Polygon polygon;
    bool applied = false;
};

// Replace v_i by the point v' with d(v_{i-1}, v') = d(v', v_{i+1}) =
// (a + b)/2 on the same side of the chord v_{i-1} v_{i+1} as v_i.  The
// replacement triangle has the same base and semi-perimeter but more area
// unless a = b already.  Moves that would break convexity are rejected and
// the polygon is returned unchanged.
inline MoveResult move_average_sides(const Polygon& poly, long i,
                                     const ToleranceConfig& tol = {}) {
    const Point& prev = poly.vertex(i - 1);
    const Point& cur = poly.vertex(i);
    const Point& next = poly.vertex(i + 1);
    const double a = distance(prev, cur);
    const double b = distance(cur, next);
    const double c = distance(prev, next);
    const double m = (a + b) / 2.0;

    try {
        const CanonicalFrame frame = to_canonical(prev, next);
        const int side = detail::transverse_coordinate(frame.apply(cur)) >= 0.0 ? 1 : -1;
        const Point replacement = frame.unapply(third_vertex(c, m, m, side, poly.geometry()));
        Polygon candidate = poly.with_vertex(static_cast<std::size_t>(((i % static_cast<long>(poly.size())) +
                                                                       static_cast<long>(poly.size())) %
                                                                      static_cast<long>(poly.size())),
                                             replacement);
        if (!is_convex(candidate, tol.eps_predicate)) return {poly, false};
        return {std::move(candidate), true};
    } catch (const error&) {
        return {poly, false};
    }
}

// One-parameter family of quadrilaterals with fixed side lengths s1, s2, s3
// and fixed closing chord k, parametrized by the diagonal p between the
// first and third vertex.
struct FlexProblem {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    double k = 0.0;
    Geometry geometry = Geometry::euclidean;
};

struct FlexInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty() const { return !(lo < hi); }
};

inline FlexInterval feasible_diagonal_interval(const FlexProblem& fp) {
    FlexInterval iv;
    iv.lo = std::max(std::abs(fp.s1 - fp.s2), std::abs(fp.k - fp.s3));
    iv.hi = std::min(fp.s1 + fp.s2, fp.k + fp.s3);
    if (fp.geometry == Geometry::spherical) {
        // Keep both sub-triangles inside the hemisphere and the diagonal
        // within the pole-centered chart used for reconstruction.
        iv.hi = std::min({iv.hi, 2.0 * pi - fp.s1 - fp.s2, 2.0 * pi - fp.k - fp.s3, pi / 2.0 - 1e-9});
    }
    return iv;
}

// Area of the convex configuration at diagonal p: the two triangles
// (s1, s2, p) and (p, s3, k) laid on opposite sides of the diagonal.
inline double flex_area(const FlexProblem& fp, double p) {
    const FlexInterval iv = feasible_diagonal_interval(fp);
    if (!(iv.lo < p && p < iv.hi))
        throw error(errc::infeasible, "diagonal outside the feasible interval");
    return area_from_sides(fp.s1, fp.s2, p, fp.geometry) + area_from_sides(p, fp.s3, fp.k, fp.geometry);
}

struct FlexSolution {
    double diagonal = 0.0;
    double area = 0.0;
};

// Coarse 64-point scan to pick the bracket holding the global maximum,
// then golden-section refinement down to an interval of width 1e-12.
inline FlexSolution solve_flex(const FlexProblem& fp) {
    const FlexInterval iv = feasible_diagonal_interval(fp);
    if (iv.empty()) throw error(errc::infeasible, "flex problem has no feasible diagonal");

    constexpr int scan_points = 64;
    const double width = iv.hi - iv.lo;
    double best_p = 0.0;
    double best_area = -1.0;
    int best_j = 0;
    for (int j = 0; j < scan_points; ++j) {
        const double p = iv.lo + (j + 0.5) * width / scan_points;
        const double area = flex_area(fp, p);
        if (area > best_area) {
            best_area = area;
            best_p = p;
            best_j = j;
        }
    }

    double a = (best_j == 0) ? iv.lo : iv.lo + (best_j - 0.5) * width / scan_points;
    double b = (best_j == scan_points - 1) ? iv.hi : iv.lo + (best_j + 1.5) * width / scan_points;

    constexpr double inv_phi = 0.6180339887498949;  // 1/golden ratio
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = flex_area(fp, c);
    double fd = flex_area(fp, d);
    while (b - a > 1e-12) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = flex_area(fp, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = flex_area(fp, d);
        }
    }

    FlexSolution sol;
    sol.diagonal = 0.5 * (a + b);
    sol.area = flex_area(fp, sol.diagonal);
    if (sol.area < best_area) {  // golden bracket never loses to the scan
        sol.diagonal = best_p;
        sol.area = best_area;
    }
    return sol;
}

// Quadrilateral realizing the flex problem at diagonal p, laid out in the
// canonical frame: first vertex at the center, fourth on the theta = 0 ray
// at distance k, second and third on the half selected by side.
inline Polygon reconstruct_flex_quad(const FlexProblem& fp, double p, int side = 1) {
    const Geometry g = fp.geometry;
    const Point v0 = canonical_center(g);
    const Point v3 = polar_point(fp.k, 0.0, g);
    const Point v2 = third_vertex(fp.k, p, fp.s3, side, g);
    const double toward_v2 = law_of_cosines_angle(p, fp.k, fp.s3, g);
    const double beyond = law_of_cosines_angle(fp.s1, p, fp.s2, g);
    const Point v1 = polar_point(fp.s1, side >= 0 ? toward_v2 + beyond : -(toward_v2 + beyond), g);
    return Polygon(g, {v0, v1, v2, v3});
}

// Reposition v_i and v_{i+1} to the maximal-area configuration of the
// quadrilateral v_{i-1} v_i v_{i+1} v_{i+2}, keeping its side lengths and
// the two outer vertices fixed.
inline MoveResult move_flex_quad(const Polygon& poly, long i, const ToleranceConfig& tol = {}) {
    if (poly.size() < 4)
        throw error(errc::arity, "move_flex_quad requires n >= 4");
    const Point& v_prev = poly.vertex(i - 1);
    const Point& v_a = poly.vertex(i);
    const Point& v_b = poly.vertex(i + 1);
    const Point& v_next = poly.vertex(i + 2);

    FlexProblem fp;
    fp.s1 = distance(v_prev, v_a);
    fp.s2 = distance(v_a, v_b);
    fp.s3 = distance(v_b, v_next);
    fp.k = distance(v_prev, v_next);
    fp.geometry = poly.geometry();

    try {
        const FlexSolution sol = solve_flex(fp);
        const CanonicalFrame frame = to_canonical(v_prev, v_next);
        const int side = detail::transverse_coordinate(frame.apply(v_a)) >= 0.0 ? 1 : -1;
        const Polygon quad = reconstruct_flex_quad(fp, sol.diagonal, side);

        const long n = static_cast<long>(poly.size());
        std::vector<Point> vertices = poly.vertices();
        vertices[static_cast<std::size_t>(((i % n) + n) % n)] = frame.unapply(quad.vertex(1));
        vertices[static_cast<std::size_t>((((i + 1) % n) + n) % n)] = frame.unapply(quad.vertex(2));
        Polygon candidate(poly.geometry(), std::move(vertices));
        if (!is_convex(candidate, tol.eps_predicate)) return {poly, false};
        return {std::move(candidate), true};
    } catch (const error&) {
        return {poly, false};
    }
}

struct SymmetrizationReport {
    int iterations = 0;
    bool converged = false;
    long rejected_moves = 0;
    std::vector<double> area_trace;
    std::vector<double> side_spread_trace;
    std::vector<double> angle_spread_trace;
    Polygon final_polygon;
};

// Round-robin driver: one full averaging pass, one full flexing pass,
// repeated until side spread and angle spread drop below eps_converge or
// the pass budget runs out.  Trace entries are recorded for the input and
// after every pass.
inline SymmetrizationReport symmetrize(const Polygon& input, const ToleranceConfig& cfg = {},
                                       int max_iter = 500) {
    cfg.validate();
    if (!is_convex(input, cfg.eps_predicate))
        throw error(errc::nonconvex, "symmetrize requires a convex input polygon");

    Polygon poly = input;
    const long n = static_cast<long>(poly.size());

    std::vector<double> area_trace{area_convex(poly)};
    std::vector<double> side_spread_trace{spread(side_lengths(poly))};
    std::vector<double> angle_spread_trace{spread(interior_angles(poly))};

    int iterations = 0;
    bool converged = false;
    long rejected = 0;

    for (int pass = 0; pass < max_iter; ++pass) {
        for (long i = 0; i < n; ++i) {
            MoveResult r = move_average_sides(poly, i, cfg);
            if (!r.applied) ++rejected;
            poly = std::move(r.polygon);
        }
        if (n >= 4) {
            for (long i = 0; i < n; ++i) {
                MoveResult r = move_flex_quad(poly, i, cfg);
                if (!r.applied) ++rejected;
                poly = std::move(r.polygon);
            }
        }
        ++iterations;

        area_trace.push_back(area_convex(poly));
        side_spread_trace.push_back(spread(side_lengths(poly)));
        angle_spread_trace.push_back(spread(interior_angles(poly)));

        if (side_spread_trace.back() < cfg.eps_converge && angle_spread_trace.back() < cfg.eps_converge) {
            converged = true;
            break;
        }
    }

    return SymmetrizationReport{iterations,
                                converged,
                                rejected,
                                std::move(area_trace),
                                std::move(side_spread_trace),
                                std::move(angle_spread_trace),
                                std::move(poly)};
}

}  // namespace isogon
