#pragma once

// Shared helpers for the unit and acceptance suites: a deterministic rng
// and generators for random points and valid triangle side triples.

#include <cstdint>
#include <random>

#include "isogon/geometry.hpp"

namespace testsupport {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::mt19937_64 engine_;
};

inline isogon::Point random_point(isogon::Geometry g, Rng& rng, double max_r) {
    return isogon::polar_point(rng.uniform(0.0, max_r), rng.uniform(0.0, 2.0 * isogon::pi), g);
}

// Side triple satisfying the strict triangle inequality with a margin, so
// the triangle is usable by every formula without conditioning trouble.
struct SideTriple {
    double a, b, c;
};

inline SideTriple random_sides(isogon::Geometry g, Rng& rng, double max_side = 2.0,
                               double margin = 1e-3) {
    const double cap = g == isogon::Geometry::spherical ? 1.2 : max_side;
    for (;;) {
        const double a = rng.uniform(0.05, cap);
        const double b = rng.uniform(0.05, cap);
        const double lo = std::abs(a - b) + margin;
        const double hi = a + b - margin;
        if (lo >= hi) continue;
        const double c = rng.uniform(lo, hi);
        return {a, b, c};
    }
}

}  // namespace testsupport
