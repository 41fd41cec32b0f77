#include "infil/fd.hpp"

#include <algorithm>
#include <memory>
#include <cmath>
#include <sstream>
#include <vector>

namespace infil {

void FdConfig::validate() const {
    if (nx < 3) throw Error(ErrorCode::InvalidArgument, "fd: nx must be at least 3");
    if (!(refinement_factor > 1.0)) throw Error(ErrorCode::InvalidArgument, "fd: refinement_factor must exceed 1");
    if (!(convergence_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "fd: convergence_tol must be positive");
    if (startup_substeps < 0) throw Error(ErrorCode::InvalidArgument, "fd: startup_substeps must be >= 0");
}

Eigen::VectorXd fd_nodes(double length, std::size_t nx, double stretch) {
    const Eigen::Index n = static_cast<Eigen::Index>(nx) + 2;
    Eigen::VectorXd x(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double xi = static_cast<double>(i) / static_cast<double>(n - 1);
        if (stretch > 0.0) {
            x[i] = 0.5 * length * (1.0 + std::tanh(stretch * (2.0 * xi - 1.0)) / std::tanh(stretch));
        } else {
            x[i] = length * xi;
        }
    }
    x[0] = 0.0;
    x[n - 1] = length;
    return x;
}

double auto_stretch(double length, std::size_t nx, double resolve) {
    const double target = resolve / 40.0;
    const double h = length / static_cast<double>(nx + 1);
    if (h <= target) return 0.0;
    // end spacing ~ h * beta sech^2(beta) / tanh(beta), decreasing in beta
    auto end_spacing = [h](double b) {
        const double ch = std::cosh(b);
        return h * b / (ch * ch * std::tanh(b));
    };
    double lo = 1e-6;
    double hi = 12.0;
    if (end_spacing(hi) > target) return hi;
    for (int k = 0; k < 100; ++k) {
        const double mid = 0.5 * (lo + hi);
        (end_spacing(mid) > target ? lo : hi) = mid;
    }
    return hi;
}

namespace {

struct Tridiagonal {
    Eigen::VectorXd lower;  // a_i multiplies u_{i-1}
    Eigen::VectorXd diag;
    Eigen::VectorXd upper;  // c_i multiplies u_{i+1}
};

// Thomas factorisation of (I - s A) reused for all steps of one size.
class ImplicitSolver {
public:
    ImplicitSolver(const Tridiagonal& op, double s) {
        const Eigen::Index n = op.diag.size();
        a_ = -s * op.lower;
        c_ = -s * op.upper;
        Eigen::VectorXd b = Eigen::VectorXd::Ones(n) - s * op.diag;
        cp_.resize(n);
        m_.resize(n);
        double denom = b[0];
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i > 0) denom = b[i] - a_[i] * cp_[i - 1];
            m_[i] = 1.0 / denom;
            cp_[i] = c_[i] * m_[i];
        }
    }

    void solve(Eigen::VectorXd& rhs) const {
        const Eigen::Index n = rhs.size();
        rhs[0] *= m_[0];
        for (Eigen::Index i = 1; i < n; ++i) rhs[i] = (rhs[i] - a_[i] * rhs[i - 1]) * m_[i];
        for (Eigen::Index i = n - 2; i >= 0; --i) rhs[i] -= cp_[i] * rhs[i + 1];
    }

    double lower0() const { return a_[0]; }
    double upper_last() const { return c_[c_.size() - 1]; }

private:
    Eigen::VectorXd a_, c_, cp_, m_;
};

Tridiagonal build_operator(const Eigen::VectorXd& x, double d0, double k0) {
    const Eigen::Index n = x.size() - 2;
    Tridiagonal op{Eigen::VectorXd(n), Eigen::VectorXd(n), Eigen::VectorXd(n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        const double hm = x[i + 1] - x[i];
        const double hp = x[i + 2] - x[i + 1];
        const double sum = hm + hp;
        // d0 u_xx - k0 u_x with three-point formulas on the nonuniform grid
        op.lower[i] = 2.0 * d0 / (hm * sum) + k0 * hp / (hm * sum);
        op.diag[i] = -2.0 * d0 / (hm * hp) - k0 * (hp - hm) / (hm * hp);
        op.upper[i] = 2.0 * d0 / (hp * sum) - k0 * hm / (hp * sum);
    }
    return op;
}

// y = A u (interior) with boundary values ul, ur
void apply(const Tridiagonal& op, const Eigen::VectorXd& u, double ul, double ur, Eigen::VectorXd& y) {
    const Eigen::Index n = u.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        const double left = i > 0 ? u[i - 1] : ul;
        const double right = i + 1 < n ? u[i + 1] : ur;
        y[i] = op.lower[i] * left + op.diag[i] * u[i] + op.upper[i] * right;
    }
}

double interpolate(const Eigen::VectorXd& x, const Eigen::VectorXd& u, double xq) {
    const double* begin = x.data();
    const double* end = x.data() + x.size();
    const double* it = std::upper_bound(begin, end, xq);
    Eigen::Index j = std::clamp<Eigen::Index>(static_cast<Eigen::Index>(it - begin) - 1, 0, x.size() - 2);
    const double w = (xq - x[j]) / (x[j + 1] - x[j]);
    return u[j] + w * (u[j + 1] - u[j]);
}

}  // namespace

FdSolution crank_nicolson(const ProfileProblem& problem, const FdConfig& cfg, const Eigen::VectorXd& xs,
                          const Eigen::VectorXd& ts) {
    problem.validate();
    cfg.validate();
    const double length = problem.length;
    const double d0 = problem.coeffs.d0;
    const double k0 = problem.coeffs.k0;
    for (Eigen::Index j = 1; j < ts.size(); ++j) {
        if (!(ts[j] > ts[j - 1])) throw Error(ErrorCode::InvalidArgument, "fd: output times must increase");
    }
    if (ts.size() > 0 && ts[0] < 0.0) throw Error(ErrorCode::InvalidArgument, "fd: negative output time");
    const double t_max = ts.size() ? ts[ts.size() - 1] : 0.0;
    double t_first = 0.0;
    for (Eigen::Index j = 0; j < ts.size(); ++j) {
        if (ts[j] > 0.0) {
            t_first = ts[j];
            break;
        }
    }

    FdInfo info;
    info.nx = cfg.nx;
    const double resolve = t_first > 0.0 ? std::sqrt(d0 * t_first) : length;
    Eigen::VectorXd x;
    for (;;) {
        info.stretch = cfg.stretch >= 0.0 ? cfg.stretch : auto_stretch(length, info.nx, resolve);
        x = fd_nodes(length, info.nx, info.stretch);
        const Eigen::VectorXd h = x.tail(x.size() - 1) - x.head(x.size() - 1);
        info.dx_min = h.minCoeff();
        info.dx_max = h.maxCoeff();
        info.peclet = std::abs(k0) * info.dx_max / (2.0 * d0);
        if (info.peclet < 1.0) break;
        if (2 * info.nx + 1 > cfg.max_nx) {
            std::ostringstream msg;
            msg << "fd: grid Peclet number " << info.peclet << " >= 1 at the node limit " << cfg.max_nx;
            throw Error(ErrorCode::UnstableDiscretization, msg.str());
        }
        info.nx = 2 * info.nx + 1;
    }

    std::size_t nt = cfg.nt;
    if (nt == 0 && t_max > 0.0) {
        double steps = 400.0;
        if (t_first > 0.0) steps = std::max(steps, 200.0 * t_max / t_first);
        nt = static_cast<std::size_t>(std::ceil(steps));
    }
    info.nt = nt;
    const double dt_target = nt ? t_max / static_cast<double>(nt) : 0.0;

    const Eigen::Index n = static_cast<Eigen::Index>(info.nx);
    const Tridiagonal op = build_operator(x, d0, k0);
    Eigen::VectorXd u(n);
    for (Eigen::Index i = 0; i < n; ++i) u[i] = evaluate(problem.initial, x[i + 1]);

    SolutionGrid grid(xs, ts, "fd_oracle", ValueKind::WaterContent);
    auto store = [&](Eigen::Index j, double t) {
        Eigen::VectorXd full(n + 2);
        full[0] = t > 0.0 ? evaluate(problem.left, t) : evaluate(problem.initial, 0.0);
        full[n + 1] = t > 0.0 ? evaluate(problem.right, t) : evaluate(problem.initial, length);
        full.segment(1, n) = u;
        for (Eigen::Index i = 0; i < xs.size(); ++i) {
            if (xs[i] < 0.0 || xs[i] > length) {
                throw Error(ErrorCode::InvalidArgument, "fd: output position outside [0, L]");
            }
            grid.values(i, j) = interpolate(x, full, xs[i]);
        }
    };

    double t = 0.0;
    double ul = evaluate(problem.initial, 0.0);
    double ur = evaluate(problem.initial, length);
    bool started = false;
    Eigen::VectorXd rhs(n), au(n);
    double cached_dt = -1.0;
    std::unique_ptr<ImplicitSolver> cn;

    auto backward_euler = [&](double dt, int substeps) {
        const double h = dt / substeps;
        const ImplicitSolver be(op, h);
        for (int k = 0; k < substeps; ++k) {
            t += h;
            const double nl = evaluate(problem.left, t);
            const double nr = evaluate(problem.right, t);
            rhs = u;
            rhs[0] -= be.lower0() * nl;
            rhs[n - 1] -= be.upper_last() * nr;
            be.solve(rhs);
            u = rhs;
            ul = nl;
            ur = nr;
        }
    };

    for (Eigen::Index j = 0; j < ts.size(); ++j) {
        const double target = ts[j];
        if (target > t) {
            const std::size_t steps =
                std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((target - t) / dt_target - 1e-9)));
            const double dt = (target - t) / static_cast<double>(steps);
            info.dt = std::max(info.dt, dt);
            const double t_start = t;
            for (std::size_t s = 0; s < steps; ++s) {
                const double t_next = (s + 1 == steps) ? target : t_start + dt * static_cast<double>(s + 1);
                if (!started && cfg.startup_substeps > 0) {
                    backward_euler(t_next - t, cfg.startup_substeps);
                    t = t_next;
                    started = true;
                    continue;
                }
                started = true;
                if (dt != cached_dt) {
                    cn = std::make_unique<ImplicitSolver>(op, 0.5 * dt);
                    cached_dt = dt;
                }
                const double nl = evaluate(problem.left, t_next);
                const double nr = evaluate(problem.right, t_next);
                apply(op, u, ul, ur, au);
                rhs = u + 0.5 * dt * au;
                rhs[0] -= cn->lower0() * nl;
                rhs[n - 1] -= cn->upper_last() * nr;
                cn->solve(rhs);
                u = rhs;
                ul = nl;
                ur = nr;
                t = t_next;
            }
        }
        store(j, target);
    }
    grid.validate();
    std::ostringstream snap;
    snap << "nx=" << info.nx << " nt=" << info.nt << " stretch=" << info.stretch;
    grid.config_snapshot = snap.str();
    return {std::move(grid), info};
}

FdSolution refine_until(const ProfileProblem& problem, FdConfig cfg, double target_tol,
                        const Eigen::VectorXd& xs, const Eigen::VectorXd& ts) {
    FdSolution prev = crank_nicolson(problem, cfg, xs, ts);
    // keep the mapping fixed so refinement shrinks every spacing
    cfg.stretch = prev.info.stretch;
    for (int r = 1; r <= cfg.max_refinements; ++r) {
        cfg.nx = static_cast<std::size_t>(std::ceil(cfg.refinement_factor * static_cast<double>(prev.info.nx + 1))) - 1;
        cfg.nt = static_cast<std::size_t>(std::ceil(cfg.refinement_factor * static_cast<double>(prev.info.nt)));
        if (cfg.nx > cfg.max_nx) break;
        FdSolution next = crank_nicolson(problem, cfg, xs, ts);
        const double diff = (next.grid.values - prev.grid.values).cwiseAbs().maxCoeff();
        next.info.achieved = diff;
        next.info.refinements = r;
        if (diff < target_tol) return next;
        prev = std::move(next);
    }
    std::ostringstream msg;
    msg << "fd: refinement did not reach " << target_tol << " (last difference " << prev.info.achieved << ")";
    throw Error(ErrorCode::NoConvergence, msg.str());
}

}  // namespace infil
