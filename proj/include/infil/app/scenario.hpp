#pragma once

// Runs one configured scenario and writes its artifacts:
//   solution.csv   x,t,value for every grid point (t outer, x inner)
//   manifest.yaml  resolved configuration in base units; a valid config itself
//   reference.csv  the comparison solution on the same grid
//   report.yaml    error metrics, quadrature diagnostics and timings
//   plot.gp        gnuplot script drawing both CSVs

#include <optional>
#include <ostream>
#include <string>

#include "infil/app/config.hpp"
#include "infil/compare.hpp"

namespace infil::app {

std::string tool_version();

struct RunOptions {
    std::optional<std::string> out_dir;
    std::optional<Comparison> comparison;
    bool sequential = false;
};

/// Reference solution with how it was obtained.
struct Reference {
    SolutionGrid grid;
    std::string method;
    CornerMask mask;
    std::optional<FdInfo> fd;
    std::size_t series_terms = 0;
    double series_tail = 0.0;
};

struct RunResult {
    SolutionGrid solution;
    std::optional<Reference> reference;
    ComparisonReport report;
    std::string out_dir;
};

/// Unified-transform solution of the configured scenario.
SolutionGrid solve_scenario(const ScenarioConfig& cfg, bool sequential);

/// Comparison solution on the configuration grid; ConfigError when not applicable.
Reference reference_solution(const ScenarioConfig& cfg, Comparison comparison);

/// Solves, compares and writes every artifact. Library errors propagate.
RunResult run_scenario(ScenarioConfig cfg, const RunOptions& options, std::ostream& log);

void write_solution_csv(const std::string& path, const SolutionGrid& grid);
void write_report(const std::string& path, const ScenarioConfig& cfg, const RunResult& result);
void write_plot_script(const std::string& path, const ScenarioConfig& cfg, bool with_reference);

}  // namespace infil::app
