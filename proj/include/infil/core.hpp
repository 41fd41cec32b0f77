#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace infil {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

enum class ErrorCode {
    InvalidArgument,
    NonConvergent,
    TruncationDominated,
    DegenerateTime,
    SingularityNotResolved,
    LogDomain,
    SeriesNotConverged,
    UnstableDiscretization,
    NoConvergence,
    GridMismatch,
    ConfigError,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

    ErrorCode code() const noexcept { return code_; }
    /// Message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

/// Numerical failures (exit status 2 in the CLI) as opposed to bad input.
inline bool is_numerical(ErrorCode code) noexcept {
    return code != ErrorCode::InvalidArgument && code != ErrorCode::ConfigError &&
           code != ErrorCode::GridMismatch;
}

}  // namespace infil
