#include "infil/core.hpp"

namespace infil {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonConvergent: return "NonConvergent";
        case ErrorCode::TruncationDominated: return "TruncationDominated";
        case ErrorCode::DegenerateTime: return "DegenerateTime";
        case ErrorCode::SingularityNotResolved: return "SingularityNotResolved";
        case ErrorCode::LogDomain: return "LogDomain";
        case ErrorCode::SeriesNotConverged: return "SeriesNotConverged";
        case ErrorCode::UnstableDiscretization: return "UnstableDiscretization";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

}  // namespace infil
