// isogon command line: polygon measurements, regular n-gon queries,
// symmetrization runs, isoperimetric fuzzing, quadrilateral classification,
// and sweep tables.
//
// Exit codes: 0 success / converged / no violations,
//             1 nonconvergence or isoperimetric violations,
//             2 malformed input or infeasible parameters.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "isogon/isogon.hpp"

namespace {

using nlohmann::json;
using namespace isogon;

constexpr double kCrossCheckTol = 1e-8;
constexpr double kMembershipTol = 1e-6;
constexpr double kFuzzTol = 1e-9;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw error(errc::bad_input, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw error(errc::bad_input, "cannot write '" + path + "'");
    out << content;
}

Polygon load_polygon(const std::string& path) {
    json j;
    try {
        j = json::parse(read_input(path));
    } catch (const json::exception& e) {
        throw error(errc::bad_input, std::string("malformed JSON: ") + e.what());
    }
    return polygon_from_json(j);
}

std::string fmt(double v) { return detail::format_double(v); }

// Angle formatting for human output only; machine formats stay in radians.
std::string fmt_angle(double radians, bool degrees) {
    if (!degrees) return fmt(radians);
    return fmt(radians * 180.0 / pi) + " deg";
}

// Fan-triangulated area, cross-checked against the angle defect/excess
// (shoelace in the euclidean baseline) before anything is emitted.
double cross_checked_area(const Polygon& poly) {
    const double area = area_convex(poly);
    const double check = poly.geometry() == Geometry::euclidean ? detail::shoelace_area(poly)
                                                                : area_gauss_bonnet(poly);
    if (std::abs(area - check) > kCrossCheckTol)
        throw error(errc::bad_input, "area failed the Gauss-Bonnet cross-check: " + fmt(area) +
                                         " vs " + fmt(check));
    return area;
}

struct CommonOpts {
    std::string format = "human";
    std::string out;
    double eps_predicate = ToleranceConfig{}.eps_predicate;
    double eps_converge = ToleranceConfig{}.eps_converge;
    bool degrees = false;

    ToleranceConfig tolerances() const {
        ToleranceConfig cfg{eps_predicate, eps_converge};
        cfg.validate();
        return cfg;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_format = true) {
    if (with_format)
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"human", "json", "csv"}));
    cmd->add_option("--out", opts.out, "write output to PATH instead of stdout");
    cmd->add_option("--eps-predicate", opts.eps_predicate, "geometric predicate dead-band");
    cmd->add_option("--eps-converge", opts.eps_converge, "convergence / regularity tolerance");
    cmd->add_flag("--degrees", opts.degrees, "display angles in degrees (human output only)");
}

int run_area(const std::string& input, const CommonOpts& opts) {
    const Polygon poly = load_polygon(input);
    const ToleranceConfig cfg = opts.tolerances();
    if (!is_convex(poly, cfg.eps_predicate))
        throw error(errc::nonconvex, "polygon is nonconvex; area is defined for convex polygons");

    const double area = cross_checked_area(poly);
    const double length = perimeter(poly);
    const auto angles = interior_angles(poly);
    const bool equilateral = is_equilateral(poly, cfg.eps_converge);
    const bool equiangular = is_equiangular(poly, cfg.eps_converge);

    if (opts.format == "json") {
        json j;
        j["geometry"] = to_string(poly.geometry());
        j["n"] = poly.size();
        j["perimeter"] = length;
        j["area"] = area;
        j["interior_angles"] = angles;
        j["convex"] = true;
        j["equilateral"] = equilateral;
        j["equiangular"] = equiangular;
        j["regular"] = equilateral && equiangular;
        write_output(opts.out, j.dump(2) + "\n");
    } else {
        std::string s;
        s += "geometry: " + std::string(to_string(poly.geometry())) + "\n";
        s += "n: " + std::to_string(poly.size()) + "\n";
        s += "perimeter: " + fmt(length) + "\n";
        s += "area: " + fmt(area) + "\n";
        s += "interior angles:";
        for (const double a : angles) s += " " + fmt_angle(a, opts.degrees);
        s += "\nconvex: true\n";
        s += "equilateral: " + std::string(equilateral ? "true" : "false") + "\n";
        s += "equiangular: " + std::string(equiangular ? "true" : "false") + "\n";
        s += "regular: " + std::string(equilateral && equiangular ? "true" : "false") + "\n";
        write_output(opts.out, s);
    }
    return 0;
}

int run_regular(int n, double L, const std::string& geometry, const std::string& vertices_path,
                const CommonOpts& opts) {
    const Geometry g = geometry_from_string(geometry);
    const RegularGon spec = make_regular_gon(n, L, g);
    const Polygon poly = build_regular(spec);
    const double closed_form = regular_area(spec);
    const double fan = cross_checked_area(poly);
    const double check = g == Geometry::euclidean ? detail::shoelace_area(poly) : area_gauss_bonnet(poly);
    if (std::abs(closed_form - fan) > kCrossCheckTol)
        throw error(errc::bad_input, "closed-form area disagrees with fan triangulation");
    const double interior = regular_interior_angle(spec);

    if (!vertices_path.empty()) write_output(vertices_path, polygon_to_json(poly).dump(2) + "\n");

    if (opts.format == "json") {
        json j;
        j["geometry"] = to_string(g);
        j["n"] = n;
        j["perimeter"] = L;
        j["circumradius"] = spec.circumradius;
        j["side"] = spec.side;
        j["interior_angle"] = interior;
        j["area"] = closed_form;
        j["area_cross_check"] = check;
        write_output(opts.out, j.dump(2) + "\n");
    } else {
        std::string s;
        s += "geometry: " + std::string(to_string(g)) + "\n";
        s += "n: " + std::to_string(n) + "\n";
        s += "perimeter: " + fmt(L) + "\n";
        s += "circumradius: " + fmt(spec.circumradius) + "\n";
        s += "side: " + fmt(spec.side) + "\n";
        s += "interior angle: " + fmt_angle(interior, opts.degrees) + "\n";
        s += "area: " + fmt(closed_form) + "\n";
        s += "area cross-check: " + fmt(check) + "\n";
        write_output(opts.out, s);
    }
    return 0;
}

int run_symmetrize(const std::string& input, int n, double scale, std::uint64_t seed,
                   const std::string& geometry, int max_iter, const std::string& trace_path,
                   const CommonOpts& opts) {
    const ToleranceConfig cfg = opts.tolerances();
    std::optional<Polygon> poly;
    if (!input.empty()) {
        poly = load_polygon(input);
    } else {
        poly = sample_convex_polygon(n, geometry_from_string(geometry), scale, seed);
    }

    const SymmetrizationReport report = symmetrize(*poly, cfg, max_iter);

    json j = report_to_json(report);
    try {
        const double reference =
            regular_area(static_cast<int>(report.final_polygon.size()),
                         perimeter(report.final_polygon), report.final_polygon.geometry());
        const double final_area = report.area_trace.back();
        j["regular_area"] = reference;
        j["relative_area_gap"] = (reference - final_area) / reference;
    } catch (const error&) {
        // no regular reference for infeasible perimeters; report stands alone
    }

    if (!trace_path.empty()) write_output(trace_path, trace_csv(report));

    if (opts.format == "csv") {
        write_output(opts.out, trace_csv(report));
    } else if (opts.format == "json") {
        write_output(opts.out, j.dump(2) + "\n");
    } else {
        std::string s;
        s += "iterations: " + std::to_string(report.iterations) + "\n";
        s += "converged: " + std::string(report.converged ? "true" : "false") + "\n";
        s += "final area: " + fmt(report.area_trace.back()) + "\n";
        s += "side spread: " + fmt(report.side_spread_trace.back()) + "\n";
        s += "angle spread: " + fmt(report.angle_spread_trace.back()) + "\n";
        if (j.contains("relative_area_gap"))
            s += "relative gap vs regular: " + fmt(j["relative_area_gap"].get<double>()) + "\n";
        write_output(opts.out, s);
    }
    return report.converged ? 0 : 1;
}

int run_fuzz(int trials, std::uint64_t seed, int n_fixed, double scale, const std::string& geometry,
             const CommonOpts& opts) {
    if (trials < 1) throw error(errc::bad_input, "--trials must be >= 1");
    const Geometry g = geometry_from_string(geometry);

    int violations = 0;
    int skipped = 0;
    double max_ratio = 0.0;
    std::optional<Polygon> worst;

    for (int t = 0; t < trials; ++t) {
        const int n = n_fixed > 0 ? n_fixed : 3 + (t % 6);
        std::optional<Polygon> poly;
        try {
            poly = sample_convex_polygon(n, g, scale, seed + static_cast<std::uint64_t>(t));
        } catch (const error&) {
            ++skipped;
            continue;
        }
        const double area = cross_checked_area(*poly);
        const double reference = regular_area(n, perimeter(*poly), g);
        const double ratio = area / reference;
        if (ratio > max_ratio) {
            max_ratio = ratio;
            worst = poly;
        }
        if (area > reference * (1.0 + kFuzzTol)) ++violations;
    }

    if (opts.format == "json") {
        json j;
        j["geometry"] = to_string(g);
        j["trials"] = trials;
        j["skipped"] = skipped;
        j["violations"] = violations;
        j["max_deficit_ratio"] = max_ratio;
        if (worst) j["worst_polygon"] = polygon_to_json(*worst);
        write_output(opts.out, j.dump(2) + "\n");
    } else {
        std::string s;
        s += "trials: " + std::to_string(trials) + "\n";
        s += "skipped: " + std::to_string(skipped) + "\n";
        s += "violations: " + std::to_string(violations) + "\n";
        s += "max deficit ratio: " + fmt(max_ratio) + "\n";
        write_output(opts.out, s);
    }
    return violations == 0 ? 0 : 1;
}

int run_classify_quad(const std::string& input, const CommonOpts& opts) {
    const Polygon poly = load_polygon(input);
    if (poly.size() != 4) throw error(errc::arity, "classify-quad requires a quadrilateral");
    const ToleranceConfig cfg = opts.tolerances();
    if (!is_convex(poly, cfg.eps_predicate))
        throw error(errc::nonconvex, "classify-quad requires a convex quadrilateral");

    const double gap = wimmer_gap(poly);
    json j;
    j["geometry"] = to_string(poly.geometry());
    j["wimmer_gap"] = gap;

    std::string human = "wimmer gap: " + fmt_angle(gap, opts.degrees) + "\n";
    if (poly.geometry() == Geometry::hyperbolic) {
        const CircumCurve curve = circumcurve_through(poly.vertex(0), poly.vertex(1), poly.vertex(2), cfg);
        const bool member = lies_on(curve, poly.vertex(3), kMembershipTol);
        j["circumcurve"] = to_string(curve.kind);
        j["fourth_vertex_member"] = member;
        human += "circumcurve: " + std::string(to_string(curve.kind)) + "\n";
        human += "fourth vertex member: " + std::string(member ? "true" : "false") + "\n";
    } else if (poly.geometry() == Geometry::spherical) {
        const double residual = spherical_concyclicity_residual(poly.vertex(0), poly.vertex(1),
                                                                poly.vertex(2), poly.vertex(3));
        j["concyclicity_residual"] = residual;
        j["concyclic"] = residual <= kMembershipTol;
        human += "concyclicity residual: " + fmt(residual) + "\n";
        human += "concyclic: " + std::string(residual <= kMembershipTol ? "true" : "false") + "\n";
    }

    if (opts.format == "json")
        write_output(opts.out, j.dump(2) + "\n");
    else
        write_output(opts.out, human);
    return 0;
}

int run_sweep(int n_min, int n_max, double l_min, double l_max, int l_steps,
              const std::string& geometry, const CommonOpts& opts) {
    const Geometry g = geometry_from_string(geometry);
    if (n_min < 3 || n_max < n_min) throw error(errc::bad_input, "need 3 <= n-min <= n-max");
    if (!(l_min > 0.0) || l_max < l_min || l_steps < 1)
        throw error(errc::bad_input, "need 0 < perimeter-min <= perimeter-max and steps >= 1");

    std::string csv = "n,L,regular_area,interior_angle,circumradius\n";
    for (int n = n_min; n <= n_max; ++n) {
        for (int k = 0; k < l_steps; ++k) {
            const double L = l_steps == 1 ? l_min : l_min + (l_max - l_min) * k / (l_steps - 1);
            if (g == Geometry::spherical && L >= 2.0 * pi) {
                std::cerr << "warning: skipping infeasible row n=" << n << " L=" << fmt(L) << "\n";
                continue;
            }
            const RegularGon spec = make_regular_gon(n, L, g);
            const Polygon poly = build_regular(spec);
            const double area = regular_area(spec);
            const double check = g == Geometry::euclidean ? detail::shoelace_area(poly)
                                                          : area_gauss_bonnet(poly);
            if (std::abs(area - check) > kCrossCheckTol)
                throw error(errc::bad_input, "sweep row failed the Gauss-Bonnet cross-check");
            csv += std::to_string(n) + "," + fmt(L) + "," + fmt(area) + "," +
                   fmt(regular_interior_angle(spec)) + "," + fmt(spec.circumradius) + "\n";
        }
    }
    write_output(opts.out, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polygon isoperimetry in hyperbolic, spherical, and euclidean geometry"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string geometry = "hyperbolic";
    std::string vertices_path;
    std::string trace_path;
    int n = 0;
    double perimeter_value = 0.0;
    double scale = 1.0;
    std::uint64_t seed = 0;
    int trials = 100;
    int max_iter = 500;
    int n_min = 3, n_max = 8, l_steps = 8;
    double l_min = 0.5, l_max = 4.0;

    CommonOpts area_opts, regular_opts, symmetrize_opts, fuzz_opts, classify_opts, sweep_opts;

    auto* cmd_area = app.add_subcommand("area", "measure a polygon JSON file");
    cmd_area->add_option("input", input, "polygon JSON file, or - for stdin");
    add_common(cmd_area, area_opts);

    auto* cmd_regular = app.add_subcommand("regular", "solve the regular n-gon of a given perimeter");
    cmd_regular->add_option("--geometry", geometry, "hyperbolic|spherical|euclidean");
    cmd_regular->add_option("--n", n, "number of sides")->required();
    cmd_regular->add_option("--perimeter", perimeter_value, "target perimeter")->required();
    cmd_regular->add_option("--vertices", vertices_path, "also write the vertex JSON to PATH");
    add_common(cmd_regular, regular_opts);

    auto* cmd_sym = app.add_subcommand("symmetrize", "run symmetrization to the regular polygon");
    cmd_sym->add_option("--in", input, "input polygon JSON (omit to sample from --seed)");
    cmd_sym->add_option("--geometry", geometry, "geometry for sampled input");
    cmd_sym->add_option("--n", n, "vertex count for sampled input");
    cmd_sym->add_option("--scale", scale, "sampling scale for sampled input");
    cmd_sym->add_option("--seed", seed, "sampling seed");
    cmd_sym->add_option("--max-iter", max_iter, "maximum number of passes");
    cmd_sym->add_option("--trace", trace_path, "write the iteration trace CSV to PATH");
    add_common(cmd_sym, symmetrize_opts);

    auto* cmd_fuzz = app.add_subcommand("fuzz", "randomized isoperimetric check against the regular n-gon");
    cmd_fuzz->add_option("--geometry", geometry, "hyperbolic|spherical|euclidean");
    cmd_fuzz->add_option("--trials", trials, "number of sampled polygons");
    cmd_fuzz->add_option("--seed", seed, "base seed");
    cmd_fuzz->add_option("--n", n, "fixed vertex count (default: cycle 3..8)");
    cmd_fuzz->add_option("--scale", scale, "sampling scale");
    add_common(cmd_fuzz, fuzz_opts);

    auto* cmd_classify = app.add_subcommand("classify-quad", "Wimmer gap and circumcurve of a quadrilateral");
    cmd_classify->add_option("input", input, "quadrilateral JSON file, or - for stdin");
    add_common(cmd_classify, classify_opts);

    auto* cmd_sweep = app.add_subcommand("sweep", "regular-gon table over n and perimeter ranges");
    cmd_sweep->add_option("--geometry", geometry, "hyperbolic|spherical|euclidean");
    cmd_sweep->add_option("--n-min", n_min, "smallest n");
    cmd_sweep->add_option("--n-max", n_max, "largest n");
    cmd_sweep->add_option("--perimeter-min", l_min, "smallest perimeter");
    cmd_sweep->add_option("--perimeter-max", l_max, "largest perimeter");
    cmd_sweep->add_option("--perimeter-steps", l_steps, "number of perimeter samples");
    add_common(cmd_sweep, sweep_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_area->parsed()) return run_area(input, area_opts);
        if (cmd_regular->parsed())
            return run_regular(n, perimeter_value, geometry, vertices_path, regular_opts);
        if (cmd_sym->parsed()) {
            const std::string in = cmd_sym->count("--in") ? input : "";
            if (in.empty() && n < 3)
                throw error(errc::bad_input, "symmetrize needs --in FILE or --n with --seed");
            return run_symmetrize(in, n, scale, seed, geometry, max_iter, trace_path, symmetrize_opts);
        }
        if (cmd_fuzz->parsed()) return run_fuzz(trials, seed, n, scale, geometry, fuzz_opts);
        if (cmd_classify->parsed()) return run_classify_quad(input, classify_opts);
        if (cmd_sweep->parsed())
            return run_sweep(n_min, n_max, l_min, l_max, l_steps, geometry, sweep_opts);
    } catch (const isogon::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
