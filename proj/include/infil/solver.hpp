#pragma once

// Point and grid evaluators of the unified-transform solution on (0, L) and
// on the half-line.
//
// The integrands are written in mu = lambda + i c. The contour starts at a
// vertex on the imaginary mu axis:
//   Straddle    vertex between the two poles +-i|c| of 1/omega (mu = 0 for the
//               upper contour, -i|c|/2 for the lower one); Re(omega) >= 0 on the
//               upper contour so nothing grows.
//   PoleBypass  vertex on the pole (lambda = 0 in the flooding and tank setups),
//               cut out by a small arc.
//   Enclose     chosen automatically when |c| is negligible: vertex mu = 0 with an
//               arc that passes around both poles.
// The steady part of every constant-in-time boundary term is the residue at the
// pole(s) the contour passes, added in closed form.

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "infil/contour.hpp"
#include "infil/problem.hpp"
#include "infil/transforms.hpp"

namespace infil {

enum class Route { Auto, Straddle, PoleBypass };
enum class Representation { Auto, Upper, Lower };
enum class ValueKind { WaterContent, PressureHead, TransformedHead };

const char* to_string(Route route);
const char* to_string(Representation rep);
const char* to_string(ValueKind kind);

struct SolverOptions {
    ContourConfig contour{};
    Route route = Route::Auto;
    Representation representation = Representation::Auto;
    bool sequential = false;
    unsigned threads = 0;  ///< 0: hardware concurrency
};

struct PointDiagnostics {
    std::size_t nodes = 0;
    double error = 0.0;
    double tail = 0.0;
    double radius = 0.0;
    int extensions = 0;
    std::string route;  ///< contour actually used, or "data" for short-circuited points
};

struct SolutionGrid {
    Eigen::VectorXd xs;
    Eigen::VectorXd ts;
    Eigen::MatrixXd values;  ///< values(i, j) at (xs[i], ts[j])
    std::string scenario;
    ValueKind kind = ValueKind::WaterContent;
    std::string config_snapshot;
    std::vector<PointDiagnostics> diagnostics;  ///< index i * ts.size() + j

    SolutionGrid() = default;
    SolutionGrid(Eigen::VectorXd x, Eigen::VectorXd t, std::string tag, ValueKind value_kind);

    Eigen::Index nx() const { return xs.size(); }
    Eigen::Index nt() const { return ts.size(); }
    /// Throws when dimensions disagree or a value is not finite.
    void validate() const;
    /// Worst diagnostic over the grid.
    PointDiagnostics summary() const;
};

struct PointValue {
    double value = 0.0;
    PointDiagnostics diag;
};

/// Smallest time at which the real-line integral stays within the node budget.
double minimum_time(double d0, double length, const ContourConfig& cfg);

PointValue general_point(const ProfileProblem& problem, double x, double t, const SolverOptions& options);

SolutionGrid solve_general(const ProfileProblem& problem, const Eigen::VectorXd& xs,
                           const Eigen::VectorXd& ts, const SolverOptions& options = {});

/// Residue integral of the flooding solution, -(pi/d0) sinh(c(L-x)) / (1 - e^{-2cL}).
double i1_closed(double x, const Coefficients& coeffs, double length);

/// e^{-c(L-x)} i1_closed(x), finite for every c.
double i1_closed_scaled(double x, const Coefficients& coeffs, double length);

SolutionGrid solve_flooding(double theta0, double theta1, const Coefficients& coeffs, double length,
                            const Eigen::VectorXd& xs, const Eigen::VectorXd& ts,
                            const SolverOptions& options = {});

SolutionGrid solve_rainfall_flux(double theta0, const BoundaryData& surface, const Coefficients& coeffs,
                                 double length, const Eigen::VectorXd& xs, const Eigen::VectorXd& ts,
                                 const SolverOptions& options = {});

struct TankParameters {
    double a;
    double ks;
    double theta1;
    double theta0;
    double h0;
    double length;

    void validate() const;
    double k1() const { return -ks / (theta1 - theta0); }
    double d1() const { return ks / (a * (theta1 - theta0)); }
    double eps() const { return std::exp(a * h0); }
    Coefficients coeffs() const { return {d1(), k1()}; }
};

/// h_{a,eps} = e^{a h} - eps, the linear variable of the tank problem.
SolutionGrid solve_tank_transformed(const TankParameters& params, const Eigen::VectorXd& xs,
                                    const Eigen::VectorXd& ts, const SolverOptions& options = {});

/// Pressure head h = ln(h_{a,eps} + eps) / a. LogDomain if the argument is not positive.
SolutionGrid solve_pressure_tank(const TankParameters& params, const Eigen::VectorXd& xs,
                                 const Eigen::VectorXd& ts, const SolverOptions& options = {});

double head_from_transformed(double h_ae, const TankParameters& params);

/// Half-line problem on x > 0. Initial data are taken as constant beyond their
/// last sample (tabulated) or everywhere (constant).
SolutionGrid solve_half_line(const InitialData& initial, const BoundaryData& surface,
                             const Coefficients& coeffs, const Eigen::VectorXd& xs,
                             const Eigen::VectorXd& ts, const SolverOptions& options = {});

}  // namespace infil
