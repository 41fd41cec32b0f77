#pragma once

// Error metrics between two solution grids sampled at the same points.

#include <string>
#include <utility>
#include <vector>

#include "infil/fd.hpp"
#include "infil/solver.hpp"

namespace infil {

/// Points within `cells` spacings of either boundary are skipped while t < steps * dt,
/// where both methods are singular for incompatible corner data.
struct CornerMask {
    double length = 0.0;
    double dx = 0.0;
    double dt = 0.0;
    double cells = 2.0;
    double steps = 10.0;

    bool excludes(double x, double t) const;
};

/// The oracle's rule: two cells next to each boundary for the first ten steps.
CornerMask corner_mask(const FdInfo& info, double length);

struct SliceError {
    double t = 0.0;
    double max_abs = 0.0;
    double rms = 0.0;
    std::size_t compared = 0;
    std::size_t masked = 0;
};

struct ComparisonReport {
    double max_abs_error = 0.0;
    double rms_error = 0.0;
    std::size_t compared = 0;
    std::size_t masked = 0;
    double worst_x = 0.0;
    double worst_t = 0.0;
    std::vector<SliceError> slices;
    PointDiagnostics quadrature;                         ///< worst over the first grid
    std::vector<std::pair<std::string, double>> timings;  ///< seconds, filled by the caller
};

/// GridMismatch unless xs and ts agree.
ComparisonReport compare_grids(const SolutionGrid& a, const SolutionGrid& b, const CornerMask& mask = {});

}  // namespace infil
