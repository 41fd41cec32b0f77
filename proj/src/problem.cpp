#include "infil/problem.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infil/transforms.hpp"

namespace infil {

namespace {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

void Samples::validate(const char* what) const {
    if (at.size() != value.size() || at.size() < 2) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string(what) + ": need at least two samples of matching length");
    }
    for (std::size_t i = 0; i < at.size(); ++i) {
        if (!std::isfinite(at[i]) || !std::isfinite(value[i])) {
            throw Error(ErrorCode::InvalidArgument, std::string(what) + ": non-finite sample");
        }
        if (i > 0 && !(at[i] > at[i - 1])) {
            throw Error(ErrorCode::InvalidArgument,
                        std::string(what) + ": sample positions must be strictly increasing");
        }
    }
}

double Samples::operator()(double s) const {
    if (s <= at.front()) return value.front();
    if (s >= at.back()) return value.back();
    const auto it = std::upper_bound(at.begin(), at.end(), s);
    const std::size_t j = static_cast<std::size_t>(it - at.begin()) - 1;
    const double w = (s - at[j]) / (at[j + 1] - at[j]);
    return value[j] + w * (value[j + 1] - value[j]);
}

double evaluate(const InitialData& data, double x) {
    return std::visit(overloaded{[](const initial::Zero&) { return 0.0; },
                                 [](const initial::Constant& c) { return c.value; },
                                 [x](const initial::Tabulated& tab) { return tab.samples(x); }},
                      data);
}

double evaluate(const BoundaryData& data, double t) {
    return std::visit(
        overloaded{[](const boundary::Zero&) { return 0.0; },
                   [](const boundary::Constant& c) { return c.value; },
                   [t](const boundary::BraesterFlux& b) { return b.theta_offset + braester_f2(t, b.ka); },
                   [t](const boundary::Tabulated& tab) { return tab.samples(t); }},
        data);
}

InitialData shifted(const InitialData& data, double offset) {
    return std::visit(overloaded{[offset](const initial::Zero&) -> InitialData {
                                     if (offset == 0.0) return initial::Zero{};
                                     return initial::Constant{-offset};
                                 },
                                 [offset](const initial::Constant& c) -> InitialData {
                                     if (c.value == offset) return initial::Zero{};
                                     return initial::Constant{c.value - offset};
                                 },
                                 [offset](const initial::Tabulated& tab) -> InitialData {
                                     initial::Tabulated out = tab;
                                     for (double& v : out.samples.value) v -= offset;
                                     return out;
                                 }},
                      data);
}

BoundaryData shifted(const BoundaryData& data, double offset) {
    return std::visit(overloaded{[offset](const boundary::Zero&) -> BoundaryData {
                                     if (offset == 0.0) return boundary::Zero{};
                                     return boundary::Constant{-offset};
                                 },
                                 [offset](const boundary::Constant& c) -> BoundaryData {
                                     if (c.value == offset) return boundary::Zero{};
                                     return boundary::Constant{c.value - offset};
                                 },
                                 [offset](const boundary::BraesterFlux& b) -> BoundaryData {
                                     return boundary::BraesterFlux{b.ka, b.theta_offset - offset};
                                 },
                                 [offset](const boundary::Tabulated& tab) -> BoundaryData {
                                     boundary::Tabulated out = tab;
                                     for (double& v : out.samples.value) v -= offset;
                                     return out;
                                 }},
                      data);
}

namespace {

void validate_boundary(const BoundaryData& data, const char* what) {
    if (const auto* b = std::get_if<boundary::BraesterFlux>(&data)) {
        if (!(b->ka > 0.0) || !std::isfinite(b->ka)) {
            throw Error(ErrorCode::InvalidArgument, std::string(what) + ": BraesterFlux requires ka > 0");
        }
    } else if (const auto* tab = std::get_if<boundary::Tabulated>(&data)) {
        tab->samples.validate(what);
        if (tab->samples.at.front() != 0.0) {
            throw Error(ErrorCode::InvalidArgument, std::string(what) + ": tabulated data must start at t = 0");
        }
    } else if (const auto* c = std::get_if<boundary::Constant>(&data)) {
        if (!std::isfinite(c->value)) {
            throw Error(ErrorCode::InvalidArgument, std::string(what) + ": non-finite value");
        }
    }
}

}  // namespace

void ProfileProblem::validate() const {
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw Error(ErrorCode::InvalidArgument, "length must be positive and finite");
    }
    if (const auto* tab = std::get_if<initial::Tabulated>(&initial)) {
        tab->samples.validate("initial");
        const double tol = 1e-12 * length;
        if (tab->samples.at.front() > tol || tab->samples.at.back() < length - tol) {
            throw Error(ErrorCode::InvalidArgument, "initial: tabulated samples must cover [0, L]");
        }
    } else if (const auto* c = std::get_if<initial::Constant>(&initial)) {
        if (!std::isfinite(c->value)) throw Error(ErrorCode::InvalidArgument, "initial: non-finite value");
    }
    validate_boundary(left, "left boundary");
    validate_boundary(right, "right boundary");
}

}  // namespace infil
