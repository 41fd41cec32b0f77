#pragma once

// Crank-Nicolson finite differences for u_t + k0 u_x = d0 u_xx on (0, L) with
// Dirichlet data, used as an independent oracle.

#include <cstddef>

#include "infil/problem.hpp"
#include "infil/solver.hpp"

namespace infil {

struct FdConfig {
    std::size_t nx = 2000;     ///< interior nodes
    std::size_t nt = 0;        ///< time steps up to the last output time; 0: max(400, 200 t_max / t_first)
    double refinement_factor = 2.0;
    double convergence_tol = 1e-5;
    /// tanh clustering towards both ends; negative picks it from the first output time,
    /// zero gives a uniform grid
    double stretch = -1.0;
    int startup_substeps = 4;  ///< backward-Euler substeps replacing the first step
    std::size_t max_nx = std::size_t{1} << 21;
    int max_refinements = 6;

    void validate() const;
};

struct FdInfo {
    std::size_t nx = 0;
    std::size_t nt = 0;
    double stretch = 0.0;
    double dx_min = 0.0;
    double dx_max = 0.0;
    double dt = 0.0;         ///< largest time step taken
    double peclet = 0.0;     ///< max |k0| dx / (2 d0)
    double achieved = -1.0;  ///< last refinement difference (refine_until only)
    int refinements = 0;
};

struct FdSolution {
    SolutionGrid grid;
    FdInfo info;
};

/// Nodes 0 = x_0 < ... < x_{nx+1} = L.
Eigen::VectorXd fd_nodes(double length, std::size_t nx, double stretch);

/// Stretch for which the spacing at the ends resolves sqrt(d0 t) (zero when uniform already does).
double auto_stretch(double length, std::size_t nx, double resolve);

FdSolution crank_nicolson(const ProfileProblem& problem, const FdConfig& cfg, const Eigen::VectorXd& xs,
                          const Eigen::VectorXd& ts);

/// Doubles the resolution until successive solutions differ by less than target_tol on (xs, ts).
FdSolution refine_until(const ProfileProblem& problem, FdConfig cfg, double target_tol,
                        const Eigen::VectorXd& xs, const Eigen::VectorXd& ts);

}  // namespace infil
