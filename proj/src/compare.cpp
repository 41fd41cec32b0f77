#include "infil/compare.hpp"

#include <algorithm>
#include <cmath>

namespace infil {

namespace {

bool same_points(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > 1e-12 * std::max(1.0, std::abs(a[i]))) return false;
    }
    return true;
}

}  // namespace

bool CornerMask::excludes(double x, double t) const {
    if (dx <= 0.0 || dt <= 0.0) return false;
    if (t >= steps * dt) return false;
    const double band = cells * dx * (1.0 + 1e-12);
    return x < band || x > length - band;
}

CornerMask corner_mask(const FdInfo& info, double length) {
    return {length, info.dx_min, info.dt};
}

ComparisonReport compare_grids(const SolutionGrid& a, const SolutionGrid& b, const CornerMask& mask) {
    if (!same_points(a.xs, b.xs) || !same_points(a.ts, b.ts)) {
        throw Error(ErrorCode::GridMismatch, "compare_grids: the two grids are sampled at different points");
    }
    if (a.values.rows() != a.nx() || a.values.cols() != a.nt() || b.values.rows() != b.nx() ||
        b.values.cols() != b.nt()) {
        throw Error(ErrorCode::GridMismatch, "compare_grids: value matrix does not match the grid");
    }
    ComparisonReport report;
    double total_sq = 0.0;
    for (Eigen::Index j = 0; j < a.nt(); ++j) {
        SliceError slice;
        slice.t = a.ts[j];
        double sq = 0.0;
        for (Eigen::Index i = 0; i < a.nx(); ++i) {
            if (mask.excludes(a.xs[i], a.ts[j])) {
                ++slice.masked;
                continue;
            }
            const double err = std::abs(a.values(i, j) - b.values(i, j));
            if (!std::isfinite(err)) {
                throw Error(ErrorCode::InvalidArgument, "compare_grids: non-finite value");
            }
            if (err > report.max_abs_error) {
                report.max_abs_error = err;
                report.worst_x = a.xs[i];
                report.worst_t = a.ts[j];
            }
            slice.max_abs = std::max(slice.max_abs, err);
            sq += err * err;
            ++slice.compared;
        }
        slice.rms = slice.compared > 0 ? std::sqrt(sq / static_cast<double>(slice.compared)) : 0.0;
        total_sq += sq;
        report.compared += slice.compared;
        report.masked += slice.masked;
        report.slices.push_back(slice);
    }
    report.rms_error = report.compared > 0 ? std::sqrt(total_sq / static_cast<double>(report.compared)) : 0.0;
    if (!a.diagnostics.empty()) report.quadrature = a.summary();
    return report;
}

}  // namespace infil
