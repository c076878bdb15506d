#include "pmelab/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pmelab/kernels.hpp"
#include "pmelab/numerics.hpp"

namespace pmelab {

namespace {

using kernels::BCPack;
using kernels::PowCase;

BCPack make_bcpack(const SolverConfig& c, double m, PowCase pc) {
    BCPack bc;
    if (c.left.kind == BCKind::Dirichlet) {
        bc.left_dirichlet = true;
        bc.WgL = kernels::pow_m(c.left.value, m, pc);
    }
    if (c.right.kind == BCKind::Dirichlet) {
        bc.right_dirichlet = true;
        bc.WgR = kernels::pow_m(c.right.value, m, pc);
    }
    return bc;
}

double dirichlet_max(const SolverConfig& c) {
    double v = 0.0;
    if (c.left.kind == BCKind::Dirichlet) v = std::max(v, c.left.value);
    if (c.right.kind == BCKind::Dirichlet) v = std::max(v, c.right.value);
    return v;
}

bool zero_far_field(const BoundaryCondition& bc) {
    return bc.kind == BCKind::ZeroFlux || bc.value == 0.0;
}

double cfl_from_max(double wmax, double m, double h, int b, double safety, double dt_max) {
    const double stiffness = m * std::pow(wmax, m - 1.0) * (2.0 + b * h);
    if (stiffness <= 0.0) return dt_max;
    return std::min(safety * h * h / stiffness, dt_max);
}

}  // namespace

void SolverConfig::validate() const {
    if (!(cfl_safety > 0.0 && cfl_safety <= 1.0))
        throw std::invalid_argument("SolverConfig: cfl_safety must be in (0,1]");
    if (left.kind == BCKind::Dirichlet && left.value < 0.0)
        throw std::invalid_argument("SolverConfig: Dirichlet value must be >= 0");
    if (right.kind == BCKind::Dirichlet && right.value < 0.0)
        throw std::invalid_argument("SolverConfig: Dirichlet value must be >= 0");
    if (convection != 0 && convection != 1)
        throw std::invalid_argument("SolverConfig: convection flag must be 0 or 1");
    if (max_steps <= 0) throw std::invalid_argument("SolverConfig: max_steps must be positive");
    if (!(dt_max > 0.0)) throw std::invalid_argument("SolverConfig: dt_max must be > 0");
    if (!(margin_fraction >= 0.0 && margin_fraction < 0.5))
        throw std::invalid_argument("SolverConfig: margin_fraction must be in [0, 0.5)");
}

double cfl_dt(const Field& field, double m, double h, int b, double safety, double dt_max) {
    if (!(h > 0.0)) throw std::invalid_argument("cfl_dt: need h > 0");
    return cfl_from_max(field.max_value(), m, h, b, safety, dt_max);
}

Field step(const Field& field, double dt, double m, const SolverConfig& config) {
    validate_field(field, "step");
    config.validate();
    if (!(m >= 1.0)) throw std::invalid_argument("step: m must be >= 1");
    const double limit =
        cfl_dt(field, m, field.grid.h, config.convection, config.cfl_safety, config.dt_max);
    if (dt > limit * (1.0 + 1e-12))
        throw std::invalid_argument("step: dt exceeds the CFL limit");

    const int n = field.grid.n_cells;
    const PowCase pc = kernels::pow_case(m);
    const BCPack bc = make_bcpack(config, m, pc);
    std::vector<double> Wbuf(n), out(n);
    const kernels::StepStats st =
        (config.kernel == StepKernel::Serial)
            ? kernels::fv_step_serial(field.values.data(), Wbuf.data(), out.data(), n, m, pc,
                                      field.grid.h, dt, config.convection, bc)
            : kernels::fv_step_omp(field.values.data(), Wbuf.data(), out.data(), n, m, pc,
                                   field.grid.h, dt, config.convection, bc);
    if (st.nonfinite)
        throw NumericalError("step: non-finite value in update at t = " + std::to_string(field.t));
    if (st.min_unclamped < -config.clamp_tol)
        throw NumericalError("step: negativity " + std::to_string(st.min_unclamped) +
                             " beyond clamp tolerance");
    return Field(field.grid, field.t + dt, std::move(out));
}

Trajectory solve(const ProblemSpec& problem, const SolverConfig& config_in) {
    problem.validate();
    SolverConfig config = config_in;
    config.validate();
    config.convection = (problem.m > 1.0 && problem.dimension == 1) ? 1 : 0;

    const Grid1D grid = problem.grid();
    const int n = grid.n_cells;
    const double h = grid.h;
    const double m = problem.m;
    const PowCase pc = kernels::pow_case(m);
    const BCPack bc = make_bcpack(config, m, pc);
    const double bc_max = dirichlet_max(config);
    const bool use_omp = config.kernel == StepKernel::OpenMP ||
                         (config.kernel == StepKernel::Auto && n >= kOpenMPGridThreshold);

    Field initial = build_initial_field(problem.datum, grid);
    std::vector<double> w = initial.values, Wbuf(n), next(n);

    // Margin guard: the support must not reach the outer `margin_fraction` of
    // the domain at any end whose far-field is zero. Checked on the innermost
    // margin cell each step (explicit support moves at most one cell a step).
    const int mcount = std::max(1, static_cast<int>(std::floor(config.margin_fraction * n)));
    const bool guard_left = zero_far_field(config.left);
    const bool guard_right = zero_far_field(config.right);
    auto margin_hit = [&](const std::vector<double>& v) {
        return (guard_left && v[mcount - 1] > config.support_tol) ||
               (guard_right && v[n - mcount] > config.support_tol);
    };
    if (guard_left)
        for (int i = 0; i < mcount; ++i)
            if (w[i] > config.support_tol)
                throw NumericalError("domain too small: datum occupies the left margin");
    if (guard_right)
        for (int i = n - mcount; i < n; ++i)
            if (w[i] > config.support_tol)
                throw NumericalError("domain too small: datum occupies the right margin");

    Trajectory traj;
    traj.m = m;
    traj.dimension = problem.dimension;
    traj.convection = config.convection;
    traj.fields.reserve(problem.output_times.size());

    double t = 0.0;
    long long steps = 0;
    std::size_t next_out = 0;
    // the step kernel reports the max of its output, so the scan runs once
    double wmax = use_omp ? kernels::max_value_omp(w.data(), n)
                          : kernels::max_value_serial(w.data(), n);
    while (next_out < problem.output_times.size()) {
        const double t_target = problem.output_times[next_out];
        if (t >= t_target) {
            traj.fields.emplace_back(grid, t_target, w);
            ++next_out;
            continue;
        }
        double dt = cfl_from_max(std::max(wmax, bc_max), m, h, config.convection,
                                 config.cfl_safety, config.dt_max);
        const bool landing = (t + dt >= t_target);
        if (landing) dt = t_target - t;

        const kernels::StepStats st =
            use_omp ? kernels::fv_step_omp(w.data(), Wbuf.data(), next.data(), n, m, pc, h, dt,
                                           config.convection, bc)
                    : kernels::fv_step_serial(w.data(), Wbuf.data(), next.data(), n, m, pc, h,
                                              dt, config.convection, bc);
        if (st.nonfinite)
            throw NumericalError("solve: non-finite value at t = " + std::to_string(t) +
                                 ", step " + std::to_string(steps));
        if (st.min_unclamped < -config.clamp_tol)
            throw NumericalError("solve: negativity " + std::to_string(st.min_unclamped) +
                                 " beyond clamp tolerance at step " + std::to_string(steps));
        w.swap(next);
        wmax = st.max_w;
        t = landing ? t_target : t + dt;
        if (++steps > config.max_steps) throw NumericalError("solve: max_steps exceeded");
        if (margin_hit(w))
            throw NumericalError("domain too small: support reached a guarded margin at t = " +
                                 std::to_string(t));
    }
    return traj;
}

Trajectory solve_radial_direct(const ProblemSpec& problem, const SolverConfig& config_in,
                               double r_min, double r_max) {
    problem.validate();
    SolverConfig config = config_in;
    config.validate();
    if (!(0.0 < r_min && r_min < r_max))
        throw std::invalid_argument("solve_radial_direct: need 0 < r_min < r_max");

    const int n = problem.n_cells;
    const int N = problem.dimension;
    const double m = problem.m;
    const PowCase pc = kernels::pow_case(m);
    const Grid1D rgrid(r_min, r_max, n);  // grid of radii
    const double dr = rgrid.h;

    // geometric factors: u_t = r^{3-N} d/dr( r^{N-1} d(u^m)/dr )
    std::vector<double> coef(n), facew(n + 1), stiff_geo(n);
    for (int i = 0; i <= n; ++i) {
        const double rf = r_min + i * dr;
        facew[i] = (N == 1) ? 1.0 : rf;
    }
    for (int i = 0; i < n; ++i) {
        const double rc = rgrid.center(i);
        coef[i] = (N == 1) ? rc * rc : rc;
        stiff_geo[i] = coef[i] * (facew[i] + facew[i + 1]);
    }

    std::vector<double> u(n);
    if (const auto* table = std::get_if<TableDatum>(&problem.datum)) {
        u = resample_monotone(table->r, table->value, rgrid.centers());
        for (double& v : u) v = std::max(v, 0.0);
    } else {
        for (int i = 0; i < n; ++i) u[i] = datum_value_radial(problem.datum, rgrid.center(i));
    }
    for (double v : u)
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("solve_radial_direct: datum sample must be finite and >= 0");

    const double UgL = (config.left.kind == BCKind::Dirichlet)
                           ? kernels::pow_m(config.left.value, m, pc)
                           : 0.0;
    const double UgR = (config.right.kind == BCKind::Dirichlet)
                           ? kernels::pow_m(config.right.value, m, pc)
                           : 0.0;
    const bool dirL = config.left.kind == BCKind::Dirichlet;
    const bool dirR = config.right.kind == BCKind::Dirichlet;

    const int mcount = std::max(1, static_cast<int>(std::floor(config.margin_fraction * n)));
    const bool guard_left = zero_far_field(config.left);
    const bool guard_right = zero_far_field(config.right);

    std::vector<double> U(n), nextu(n);
    Trajectory traj;
    traj.m = m;
    traj.dimension = N;
    traj.convection = 0;
    traj.fields.reserve(problem.output_times.size());

    double t = 0.0;
    long long steps = 0;
    std::size_t next_out = 0;
    const PowCase pcm1 = kernels::pow_case(m - 1.0);
    const bool par = config.kernel == StepKernel::OpenMP ||
                     (config.kernel == StepKernel::Auto && n >= kOpenMPGridThreshold);
    double stiff_bc = 0.0;  // ghost-cell stiffness with its own end's geometry
    if (dirL) stiff_bc = std::max(stiff_bc, m * std::pow(config.left.value, m - 1.0) * stiff_geo[0]);
    if (dirR)
        stiff_bc = std::max(stiff_bc, m * std::pow(config.right.value, m - 1.0) * stiff_geo[n - 1]);
    double stiff = stiff_bc;
    for (int i = 0; i < n; ++i)
        stiff = std::max(stiff, m * kernels::pow_m(u[i], m - 1.0, pcm1) * stiff_geo[i]);
    while (next_out < problem.output_times.size()) {
        const double t_target = problem.output_times[next_out];
        if (t >= t_target) {
            traj.fields.emplace_back(rgrid, t_target, u);
            ++next_out;
            continue;
        }
        double dt = (stiff > 0.0) ? std::min(config.cfl_safety * dr * dr / stiff, config.dt_max)
                                  : config.dt_max;
        const bool landing = (t + dt >= t_target);
        if (landing) dt = t_target - t;

        bool bad = false;
        double stiff_next = stiff_bc;  // reduced over the values being written
#pragma omp parallel if (par)
        {
#pragma omp for schedule(static)
            for (int i = 0; i < n; ++i) U[i] = kernels::pow_m(u[i], m, pc);
#pragma omp for schedule(static) reduction(max : stiff_next) reduction(|| : bad)
            for (int i = 0; i < n; ++i) {
                double fl, fr;  // fluxes at faces i and i+1
                if (i == 0)
                    fl = dirL ? facew[0] * (U[0] - UgL) / dr : 0.0;
                else
                    fl = facew[i] * (U[i] - U[i - 1]) / dr;
                if (i == n - 1)
                    fr = dirR ? facew[n] * (UgR - U[n - 1]) / dr : 0.0;
                else
                    fr = facew[i + 1] * (U[i + 1] - U[i]) / dr;
                double v = u[i] + dt * coef[i] * (fr - fl) / dr;
                if (v < 0.0) v = 0.0;
                if (!std::isfinite(v)) bad = true;
                stiff_next = std::max(stiff_next,
                                      m * kernels::pow_m(v, m - 1.0, pcm1) * stiff_geo[i]);
                nextu[i] = v;
            }
        }
        if (bad)
            throw NumericalError("solve_radial_direct: non-finite value at t = " +
                                 std::to_string(t));
        u.swap(nextu);
        stiff = stiff_next;
        t = landing ? t_target : t + dt;
        if (++steps > config.max_steps)
            throw NumericalError("solve_radial_direct: max_steps exceeded");
        if ((guard_left && u[mcount - 1] > config.support_tol) ||
            (guard_right && u[n - mcount] > config.support_tol))
            throw NumericalError("domain too small: support reached a guarded margin at t = " +
                                 std::to_string(t));
    }
    return traj;
}

}  // namespace pmelab
