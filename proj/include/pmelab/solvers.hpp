// Time evolution of the transformed equations
//   w_t = (w^m)_ss            (b = 0, dimension N = 2)
//   w_t = (w^m)_ss - (w^m)_s  (b = 1, dimension N = 1)
//   w_t = w_ss                (m = 1; trajectory lives in the moving frame)
// with an explicit conservative finite-volume scheme, plus a direct solver of
// the radial form r^{-2} u_t = (u^m)_rr + (N-1)/r (u^m)_r for cross-checks.
#ifndef PMELAB_SOLVERS_HPP
#define PMELAB_SOLVERS_HPP

#include "pmelab/core.hpp"

namespace pmelab {

enum class BCKind { ZeroFlux, Dirichlet };

struct BoundaryCondition {
    BCKind kind = BCKind::ZeroFlux;
    double value = 0.0;  // Dirichlet ghost value, must be >= 0
};

// Auto resolves per grid: the OpenMP kernel pays a per-step region cost, so
// it only wins on grids large enough to amortize it (see bench/step_bench).
enum class StepKernel { Serial, OpenMP, Auto };

inline constexpr int kOpenMPGridThreshold = 65536;

struct SolverConfig {
    double cfl_safety = 0.4;  // in (0,1]
    BoundaryCondition left, right;
    int convection = 0;  // b flag: 0 plain diffusion, 1 adds -(w^m)_s
    long long max_steps = 2'000'000'000;
    double dt_max = 1e-2;           // step cap when the field is degenerate-flat
    double clamp_tol = 1e-14;       // rounding-negativity tolerance; below is fatal
    double support_tol = 1e-8;      // front-detection threshold for the margin guard
    double margin_fraction = 0.10;  // guarded fraction of the domain at each end
    StepKernel kernel = StepKernel::Auto;

    void validate() const;
};

// Largest stable explicit step: safety * h^2 / (m * max(w)^{m-1} * (2 + b h)),
// capped at dt_max; returns dt_max for a degenerate-flat field (max w = 0 and
// m > 1, where the equation has no stiffness).
double cfl_dt(const Field& field, double m, double h, int b, double safety,
              double dt_max = 1e-2);

// One explicit step. Rejects dt above the CFL limit; aborts on non-finite
// values; clamps rounding negativity within clamp_tol and fails hard beyond.
Field step(const Field& field, double dt, double m, const SolverConfig& config);

// Run to every requested output time (exact landing via a shortened final
// step). The equation is selected by (dimension, m); config.convection is
// overridden accordingly. Aborts when the support reaches the guarded margin
// of a zero-far-field end ("domain too small") or when max_steps is exceeded.
Trajectory solve(const ProblemSpec& problem, const SolverConfig& config);

// Direct explicit scheme on the radial form, on a uniform r-grid over
// [r_min, r_max]; the local step restriction carries the r^2 weight. The
// trajectory's fields store u at the r cell centers (grid holds r, not s).
Trajectory solve_radial_direct(const ProblemSpec& problem, const SolverConfig& config,
                               double r_min, double r_max);

}  // namespace pmelab

#endif
