#include "infil/app/scenario.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>

#include "infil/reference.hpp"

#ifndef INFIL_VERSION
#define INFIL_VERSION "0.0.0"
#endif

namespace infil::app {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ConfigError, "cannot write '" + path + "'");
    return out;
}

const char* value_label(ValueKind kind) {
    switch (kind) {
        case ValueKind::WaterContent: return "water content";
        case ValueKind::PressureHead: return "pressure head [cm]";
        case ValueKind::TransformedHead: return "exp(a h) - eps";
    }
    return "value";
}

}  // namespace

std::string tool_version() { return std::string("infil ") + INFIL_VERSION; }

SolutionGrid solve_scenario(const ScenarioConfig& cfg, bool sequential) {
    SolverOptions options = cfg.solver;
    options.sequential = sequential;
    switch (cfg.scenario) {
        case ScenarioKind::Flooding:
            return solve_flooding(cfg.theta0, cfg.theta1, {cfg.d0, cfg.k0}, cfg.length, cfg.xs, cfg.ts, options);
        case ScenarioKind::RainfallFlux:
            return solve_rainfall_flux(cfg.theta0, boundary::BraesterFlux{cfg.ka, cfg.theta_offset},
                                       {cfg.d0, cfg.k0}, cfg.length, cfg.xs, cfg.ts, options);
        case ScenarioKind::PressureTank:
            return solve_pressure_tank(cfg.tank, cfg.xs, cfg.ts, options);
        case ScenarioKind::General:
            return solve_general(cfg.profile(), cfg.xs, cfg.ts, options);
        case ScenarioKind::HalfLine:
            return solve_half_line(cfg.initial, cfg.left, {cfg.d0, cfg.k0}, cfg.xs, cfg.ts, options);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown scenario");
}

Reference reference_solution(const ScenarioConfig& cfg, Comparison comparison) {
    if (!comparison_allowed(cfg.scenario, comparison) || comparison == Comparison::None) {
        throw Error(ErrorCode::ConfigError, std::string("comparison: '") + to_string(comparison) +
                                                "' is not available for scenario " + to_string(cfg.scenario));
    }
    Reference ref;
    ref.grid = SolutionGrid(cfg.xs, cfg.ts, to_string(cfg.scenario), cfg.value_kind());
    switch (comparison) {
        case Comparison::FdOracle: {
            FdSolution fd = refine_until(cfg.profile(), cfg.fd, cfg.fd_tolerance, cfg.xs, cfg.ts);
            ref.grid.values = fd.grid.values;
            if (cfg.scenario == ScenarioKind::PressureTank) {
                for (Eigen::Index i = 0; i < ref.grid.values.size(); ++i) {
                    ref.grid.values.data()[i] = head_from_transformed(ref.grid.values.data()[i], cfg.tank);
                }
            }
            ref.method = "Crank-Nicolson, refined until successive solutions agree";
            ref.mask = corner_mask(fd.info, cfg.profile().length);
            ref.fd = fd.info;
            break;
        }
        case Comparison::Tracy:
            for (Eigen::Index i = 0; i < cfg.xs.size(); ++i) {
                for (Eigen::Index j = 0; j < cfg.ts.size(); ++j) {
                    const SeriesValue s = tracy_series_detailed(cfg.xs[i], cfg.ts[j], cfg.tank, cfg.series);
                    ref.grid.values(i, j) = s.value;
                    ref.series_terms = std::max(ref.series_terms, s.terms);
                    ref.series_tail = std::max(ref.series_tail, s.tail);
                }
            }
            ref.method = "eigenfunction series for exp(a h) - eps";
            break;
        case Comparison::Philip:
            for (Eigen::Index i = 0; i < cfg.xs.size(); ++i) {
                for (Eigen::Index j = 0; j < cfg.ts.size(); ++j) {
                    ref.grid.values(i, j) =
                        cfg.theta0 + (cfg.theta1 - cfg.theta0) * philip_profile(cfg.xs[i], cfg.ts[j], cfg.d0, cfg.k0);
                }
            }
            ref.method = "semi-infinite step solution mapped to theta0 + (theta1 - theta0) p, advection speed k0";
            break;
        case Comparison::None:
            break;
    }
    ref.grid.validate();
    return ref;
}

RunResult run_scenario(ScenarioConfig cfg, const RunOptions& options, std::ostream& log) {
    const auto start = Clock::now();
    if (options.comparison) {
        cfg.comparison = *options.comparison;
        if (!comparison_allowed(cfg.scenario, cfg.comparison)) {
            throw Error(ErrorCode::ConfigError, std::string("comparison: '") + to_string(cfg.comparison) +
                                                    "' is not available for scenario " + to_string(cfg.scenario));
        }
    }
    RunResult result;
    result.out_dir = options.out_dir ? *options.out_dir : cfg.output_dir;
    std::error_code ec;
    std::filesystem::create_directories(result.out_dir, ec);
    if (ec) throw Error(ErrorCode::ConfigError, "output_dir: cannot create '" + result.out_dir + "': " + ec.message());

    for (const auto& p : cfg.parameters) {
        log << "  " << p.name << " = " << p.given << "  ->  " << fmt(p.value) << ' '
            << units::base_symbol(p.dim) << '\n';
    }

    auto t0 = Clock::now();
    result.solution = solve_scenario(cfg, options.sequential);
    const double solve_time = seconds_since(t0);
    result.solution.config_snapshot = to_yaml(cfg, tool_version());
    log << "  solved " << result.solution.nx() << " x " << result.solution.nt() << " points in "
        << short_fmt(solve_time) << " s\n";

    double reference_time = 0.0;
    if (cfg.comparison != Comparison::None) {
        t0 = Clock::now();
        result.reference = reference_solution(cfg, cfg.comparison);
        reference_time = seconds_since(t0);
        result.report = compare_grids(result.solution, result.reference->grid, result.reference->mask);
        log << "  " << to_string(cfg.comparison) << ": max_abs_error = " << short_fmt(result.report.max_abs_error)
            << ", rms_error = " << short_fmt(result.report.rms_error) << '\n';
    } else {
        result.report.quadrature = result.solution.summary();
    }

    write_solution_csv(result.out_dir + "/solution.csv", result.solution);
    {
        auto out = open_for_write(result.out_dir + "/manifest.yaml");
        out << "# Resolved configuration in base units (cm, s); rerun with solve --config on this file.\n";
        out << "# sequential: " << (options.sequential ? "true" : "false") << '\n';
        out << result.solution.config_snapshot;
    }
    if (result.reference) write_solution_csv(result.out_dir + "/reference.csv", result.reference->grid);
    write_plot_script(result.out_dir + "/plot.gp", cfg, result.reference.has_value());

    result.report.timings = {{"solve", solve_time}, {"reference", reference_time}, {"total", seconds_since(start)}};
    write_report(result.out_dir + "/report.yaml", cfg, result);
    return result;
}

void write_solution_csv(const std::string& path, const SolutionGrid& grid) {
    auto out = open_for_write(path);
    out << "x,t,value\n";
    char line[128];
    for (Eigen::Index j = 0; j < grid.nt(); ++j) {
        for (Eigen::Index i = 0; i < grid.nx(); ++i) {
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", grid.xs[i], grid.ts[j], grid.values(i, j));
            out << line;
        }
    }
}

void write_report(const std::string& path, const ScenarioConfig& cfg, const RunResult& result) {
    auto out = open_for_write(path);
    const ComparisonReport& r = result.report;
    out << "tool: " << tool_version() << '\n';
    out << "scenario: " << to_string(cfg.scenario) << '\n';
    out << "value: " << value_label(cfg.value_kind()) << '\n';
    out << "comparison: " << to_string(cfg.comparison) << '\n';
    if (result.reference) {
        const Reference& ref = *result.reference;
        out << "reference: \"" << ref.method << "\"\n";
        out << "max_abs_error: " << fmt(r.max_abs_error) << '\n';
        out << "rms_error: " << fmt(r.rms_error) << '\n';
        out << "worst_point: {x: " << fmt(r.worst_x) << ", t: " << fmt(r.worst_t) << "}\n";
        out << "compared_points: " << r.compared << '\n';
        out << "masked_points: " << r.masked << '\n';
        if (ref.mask.dx > 0.0) {
            out << "mask: {rule: \"" << ref.mask.cells << " cells next to each boundary while t < " << ref.mask.steps
                << " dt\", dx: " << fmt(ref.mask.dx) << ", dt: " << fmt(ref.mask.dt) << "}\n";
        }
        out << "slices:\n";
        for (const auto& s : r.slices) {
            out << "  - {t: " << fmt(s.t) << ", max_abs: " << fmt(s.max_abs) << ", rms: " << fmt(s.rms)
                << ", compared: " << s.compared << ", masked: " << s.masked << "}\n";
        }
        if (ref.fd) {
            const FdInfo& f = *ref.fd;
            out << "fd: {nx: " << f.nx << ", nt: " << f.nt << ", stretch: " << fmt(f.stretch)
                << ", dx_min: " << fmt(f.dx_min) << ", dx_max: " << fmt(f.dx_max) << ", dt: " << fmt(f.dt)
                << ", peclet: " << fmt(f.peclet) << ", refinement_difference: " << fmt(f.achieved)
                << ", refinements: " << f.refinements << "}\n";
        }
        if (cfg.comparison == Comparison::Tracy) {
            out << "series: {max_terms_used: " << ref.series_terms << ", max_tail: " << fmt(ref.series_tail) << "}\n";
        }
    }
    const PointDiagnostics& q = r.quadrature;
    out << "quadrature: {route: " << (q.route.empty() ? "none" : q.route) << ", max_nodes: " << q.nodes
        << ", max_error_estimate: " << fmt(q.error) << ", max_tail: " << fmt(q.tail)
        << ", max_radius: " << fmt(q.radius) << ", max_extensions: " << q.extensions << "}\n";
    out << "timings_s:\n";
    for (const auto& [name, secs] : r.timings) out << "  " << name << ": " << short_fmt(secs) << '\n';
}

void write_plot_script(const std::string& path, const ScenarioConfig& cfg, bool with_reference) {
    auto out = open_for_write(path);
    out << "# Profiles at each output time: solid = unified transform";
    if (with_reference) out << ", dotted = " << to_string(cfg.comparison);
    out << ".\n# Run from this directory: gnuplot plot.gp\n";
    out << "set terminal pngcairo size 900,600 enhanced\n";
    out << "set output 'profiles.png'\n";
    out << "set datafile separator ','\n";
    out << "set key autotitle columnhead\n";
    out << "set title '" << to_string(cfg.scenario) << "' noenhanced\n";
    out << "set xlabel 'x [cm]'\n";
    out << "set ylabel '" << value_label(cfg.value_kind()) << "'\n";
    out << "set key outside right\n";
    out << "set grid\n";
    out << "plot \\\n";
    const Eigen::Index nt = cfg.ts.size();
    for (Eigen::Index j = 0; j < nt; ++j) {
        const std::string t = fmt(cfg.ts[j]);
        const std::string pick = "using 1:(abs($2 - " + t + ") <= 1e-9 * " + t + " ? $3 : 1/0)";
        out << "  'solution.csv' " << pick << " with lines lw 2 dt 1 lc " << j + 1 << " title 't = "
            << short_fmt(cfg.ts[j]) << " s'";
        if (with_reference) {
            out << ", \\\n  'reference.csv' " << pick << " with lines lw 2 dt 3 lc " << j + 1 << " notitle";
        }
        out << (j + 1 < nt ? ", \\\n" : "\n");
    }
}

}  // namespace infil::app
