#pragma once

#include <variant>
#include <vector>

#include "infil/spectral.hpp"

namespace infil {

/// Piecewise-linear samples (abscissa, value); the abscissae must be strictly increasing.
struct Samples {
    std::vector<double> at;
    std::vector<double> value;

    void validate(const char* what) const;
    /// Linear interpolation, held constant outside the sampled range.
    double operator()(double s) const;
};

namespace initial {
struct Zero {};
struct Constant {
    double value;
};
struct Tabulated {
    Samples samples;
};
}  // namespace initial

using InitialData = std::variant<initial::Zero, initial::Constant, initial::Tabulated>;

namespace boundary {
struct Zero {};
struct Constant {
    double value;
};
/// theta_offset + f2(t), the rainfall surface content with rate ka.
struct BraesterFlux {
    double ka;
    double theta_offset = 0.0;
};
struct Tabulated {
    Samples samples;
};
}  // namespace boundary

using BoundaryData =
    std::variant<boundary::Zero, boundary::Constant, boundary::BraesterFlux, boundary::Tabulated>;

double evaluate(const InitialData& data, double x);
double evaluate(const BoundaryData& data, double t);

/// Same data minus a constant.
InitialData shifted(const InitialData& data, double offset);
BoundaryData shifted(const BoundaryData& data, double offset);

struct ProfileProblem {
    double length;
    Coefficients coeffs;
    InitialData initial = initial::Zero{};
    BoundaryData left = boundary::Zero{};
    BoundaryData right = boundary::Zero{};

    /// Throws InvalidArgument on any broken invariant.
    void validate() const;
    Spectral spectral() const { return Spectral(coeffs, length); }
};

}  // namespace infil
