#pragma once

// Quantities with units, converted to the base system (length: cm, time: s).

#include <string>
#include <string_view>

namespace infil::units {

/// Exponents of length and time.
struct Dimension {
    int length = 0;
    int time = 0;

    bool operator==(const Dimension&) const = default;
};

inline constexpr Dimension kDimensionless{0, 0};
inline constexpr Dimension kLength{1, 0};
inline constexpr Dimension kTime{0, 1};
inline constexpr Dimension kVelocity{1, -1};
inline constexpr Dimension kDiffusivity{2, -1};
inline constexpr Dimension kRate{0, -1};
inline constexpr Dimension kInverseLength{-1, 0};

struct Quantity {
    double value;  ///< in base units
    Dimension dim;
};

std::string describe(Dimension dim);

/// Base-unit symbol for a dimension, e.g. "cm2/s".
std::string base_symbol(Dimension dim);

/// Parses "0.4653 cm2/s", "4.32 cm/h", "1e-4 1/m", "20 min" or a bare number.
/// Throws ConfigError on malformed input.
Quantity parse(std::string_view text);

/// Parses and checks the dimension; `field` names the offending entry in messages.
double parse_as(std::string_view text, Dimension expected, std::string_view field);

}  // namespace infil::units
