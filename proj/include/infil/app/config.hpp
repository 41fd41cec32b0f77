#pragma once

// Scenario configuration files (YAML). Every dimensional entry is a string
// "<number> <unit>", converted to cm and s while reading; the conversions are
// kept for the manifest.

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "infil/fd.hpp"
#include "infil/problem.hpp"
#include "infil/reference.hpp"
#include "infil/solver.hpp"
#include "infil/units.hpp"

namespace infil::app {

enum class ScenarioKind { Flooding, RainfallFlux, PressureTank, General, HalfLine };
enum class Comparison { None, FdOracle, Tracy, Philip };

const char* to_string(ScenarioKind kind);
const char* to_string(Comparison comparison);
ScenarioKind scenario_from(std::string_view name);
/// Accepts "fd" as a short form of "fd_oracle".
Comparison comparison_from(std::string_view name);
bool comparison_allowed(ScenarioKind kind, Comparison comparison);

/// One converted parameter, as given and in base units.
struct ParameterEntry {
    std::string name;
    std::string given;
    double value;
    units::Dimension dim;
};

struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::Flooding;
    std::string description;
    std::string source;
    std::vector<ParameterEntry> parameters;

    // flooding, rainfall_flux, general, half_line
    double length = 0.0;
    double d0 = 0.0;
    double k0 = 0.0;
    double theta0 = 0.0;
    double theta1 = 0.0;
    double ka = 0.0;
    double theta_offset = 0.0;
    InitialData initial = initial::Zero{};
    BoundaryData left = boundary::Zero{};
    BoundaryData right = boundary::Zero{};
    // pressure_tank
    TankParameters tank{};

    Eigen::VectorXd xs;
    Eigen::VectorXd ts;
    SolverOptions solver;
    Comparison comparison = Comparison::None;
    FdConfig fd;
    double fd_tolerance = 1e-6;
    SeriesControl series;
    std::string output_dir = "out";

    /// Bounded problem in the variable the solver works with (h_{a,eps} for the tank).
    ProfileProblem profile() const;
    ValueKind value_kind() const;
};

/// Throws ConfigError naming the offending field.
ScenarioConfig parse_config(const std::string& text, const std::string& source = "<string>");
ScenarioConfig load_config(const std::string& path);

/// The resolved configuration in base units, readable by parse_config; numbers are
/// written with 17 significant digits so a rerun sees identical doubles.
std::string to_yaml(const ScenarioConfig& cfg, const std::string& version);

/// Required parameters of a scenario, for listings.
std::vector<std::string> parameter_names(ScenarioKind kind);

}  // namespace infil::app
