#pragma once

// Serialization: the polygon JSON interchange format, symmetrization
// reports, and the trace CSV.  Hyperbolic and euclidean vertices are
// [x, y] pairs, spherical vertices [x, y, z] unit triples.

#include <cstdio>
#include <string>

#include <json.hpp>

#include "isogon/polygon.hpp"
#include "isogon/symmetrize.hpp"

namespace isogon {

inline Geometry geometry_from_string(const std::string& name) {
    if (name == "hyperbolic") return Geometry::hyperbolic;
    if (name == "spherical") return Geometry::spherical;
    if (name == "euclidean") return Geometry::euclidean;
    throw error(errc::bad_input, "unknown geometry '" + name + "'");
}

inline nlohmann::json point_to_json(const Point& p) {
    switch (p.geometry()) {
        case Geometry::hyperbolic: return nlohmann::json::array({p.disk().x, p.disk().y});
        case Geometry::spherical: return nlohmann::json::array({p.sphere().x, p.sphere().y, p.sphere().z});
        case Geometry::euclidean: return nlohmann::json::array({p.plane().x, p.plane().y});
    }
    return nlohmann::json::array();
}

inline nlohmann::json polygon_to_json(const Polygon& poly) {
    nlohmann::json j;
    j["geometry"] = to_string(poly.geometry());
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : poly.vertices()) j["vertices"].push_back(point_to_json(v));
    return j;
}

inline Point point_from_json(Geometry g, const nlohmann::json& j) {
    if (!j.is_array()) throw error(errc::bad_input, "vertex must be a coordinate array");
    switch (g) {
        case Geometry::hyperbolic:
            if (j.size() != 2) throw error(errc::bad_input, "hyperbolic vertex must be [x, y]");
            return Point::hyperbolic(j[0].get<double>(), j[1].get<double>());
        case Geometry::spherical:
            if (j.size() != 3) throw error(errc::bad_input, "spherical vertex must be [x, y, z]");
            return Point::spherical(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
        case Geometry::euclidean:
            if (j.size() != 2) throw error(errc::bad_input, "euclidean vertex must be [x, y]");
            return Point::euclidean(j[0].get<double>(), j[1].get<double>());
    }
    throw error(errc::bad_input, "unknown geometry tag");
}

inline Polygon polygon_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("geometry") || !j.contains("vertices"))
        throw error(errc::bad_input, "polygon JSON needs 'geometry' and 'vertices'");
    const Geometry g = geometry_from_string(j["geometry"].get<std::string>());
    std::vector<Point> vertices;
    for (const auto& v : j["vertices"]) vertices.push_back(point_from_json(g, v));
    return Polygon(g, std::move(vertices));
}

inline nlohmann::json report_to_json(const SymmetrizationReport& report) {
    nlohmann::json j;
    j["iterations"] = report.iterations;
    j["converged"] = report.converged;
    j["rejected_moves"] = report.rejected_moves;
    j["area_trace"] = report.area_trace;
    j["side_spread_trace"] = report.side_spread_trace;
    j["angle_spread_trace"] = report.angle_spread_trace;
    j["final_polygon"] = polygon_to_json(report.final_polygon);
    return j;
}

namespace detail {

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

inline std::string trace_csv(const SymmetrizationReport& report) {
    std::string out = "iteration,area,side_spread,angle_spread\n";
    for (std::size_t i = 0; i < report.area_trace.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += detail::format_double(report.area_trace[i]);
        out += ',';
        out += detail::format_double(report.side_spread_trace[i]);
        out += ',';
        out += detail::format_double(report.angle_spread_trace[i]);
        out += '\n';
    }
    return out;
}

}  // namespace isogon
