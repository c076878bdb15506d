#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>

#include "doctest.h"
#include "oracles.hpp"
#include "pmelab/kernels.hpp"
#include "pmelab/metrics.hpp"
#include "pmelab/profiles.hpp"
#include "pmelab/solvers.hpp"
#include "pmelab/transforms.hpp"

using namespace pmelab;

namespace {

ProblemSpec base_problem() {
    ProblemSpec p;
    p.dimension = 2;
    p.m = 2.0;
    p.datum = BumpDatum{0.25, 2.0, true};
    p.s_min = -12;
    p.s_max = 12;
    p.n_cells = 512;
    p.t_end = 1.0;
    p.output_times = {0.25, 1.0};
    return p;
}

}  // namespace

TEST_CASE("cfl_dt formula and degenerate guard") {
    const Grid1D g(-1, 1, 64);
    const Field zero(g, 0.0, std::vector<double>(64, 0.0));
    CHECK(cfl_dt(zero, 2.0, 0.05, 0, 0.4, 1e-2) == 1e-2);  // no stiffness when m > 1

    std::vector<double> v(64, 0.7);
    const Field f(g, 0.0, v);
    CHECK(cfl_dt(f, 1.0, 0.1, 0, 0.4) == doctest::Approx(0.4 * 0.01 / 2.0).epsilon(1e-14));

    std::vector<double> ones(64, 1.0);
    const Field f1(g, 0.0, ones);
    const double got = cfl_dt(f1, 2.0, 0.01, 1, 0.4);
    CHECK(got == doctest::Approx(0.4e-4 / (4.0 + 0.02)).epsilon(1e-12));
    CHECK(got == doctest::Approx(9.95e-6).epsilon(1e-2));
}

TEST_CASE("step: constants are fixed points; CFL and NaN are rejected") {
    const Grid1D g(-2, 2, 128);
    std::vector<double> v(g.n_cells, 0.8);
    const Field f(g, 0.0, v);
    SolverConfig cfg;
    cfg.convection = 0;
    const double dt = cfl_dt(f, 2.0, g.h, 0, 0.4);

    const Field stepped = step(f, dt, 2.0, cfg);
    CHECK(stepped.values == f.values);  // zero-flux constants stay bitwise
    CHECK(stepped.t == dt);

    cfg.convection = 1;
    const Field conv = step(f, cfl_dt(f, 2.0, g.h, 1, 0.4), 2.0, cfg);
    for (int i = 1; i + 1 < g.n_cells; ++i) CHECK(conv.values[i] == 0.8);

    CHECK_THROWS_AS(step(f, 10.0 * dt, 2.0, cfg), std::invalid_argument);

    std::vector<double> huge(g.n_cells, 1e200);
    CHECK_THROWS_AS(step(Field(g, 0.0, huge), 1e-300, 2.0, cfg), NumericalError);
}

TEST_CASE("one step: interior mass change telescopes to the boundary fluxes") {
    const Grid1D g(-2, 2, 200);
    std::vector<double> v(g.n_cells);
    for (int i = 0; i < g.n_cells; ++i) v[i] = 0.4 + 0.3 * std::sin(0.7 * g.center(i));
    const Field f(g, 0.0, v);
    SolverConfig cfg;
    cfg.convection = 1;
    cfg.left = {BCKind::Dirichlet, 0.9};
    cfg.right = {BCKind::Dirichlet, 0.1};
    const double m = 2.0;
    const double dt = cfl_dt(f, m, g.h, 1, 0.4);
    const Field next = step(f, dt, m, cfg);

    auto W = [&](double w) { return w * w; };
    const double G0 = (W(v.front()) - W(0.9)) / g.h - W(0.9);
    const double Gn = (W(0.1) - W(v.back())) / g.h - W(v.back());
    const double mass_change = weighted_mass(next) - weighted_mass(f);
    CHECK(mass_change == doctest::Approx(dt * (Gn - G0)).epsilon(1e-10));
}

TEST_CASE("serial and OpenMP kernels agree bitwise") {
    oracle::Rng rng;
    for (int n : {17, 256, 4096}) {
        std::vector<double> w(n), Ws(n), Wo(n), outs(n), outo(n);
        for (auto& x : w) x = rng.uniform();
        kernels::BCPack bc;
        bc.left_dirichlet = true;
        bc.WgL = 0.64;
        const double h = 1.0 / n, dt = 0.2 * h * h / (2.0 * 2.0);
        const auto ss = kernels::fv_step_serial(w.data(), Ws.data(), outs.data(), n, 2.0,
                                                kernels::PowCase::Two, h, dt, 1.0, bc);
        const auto so = kernels::fv_step_omp(w.data(), Wo.data(), outo.data(), n, 2.0,
                                             kernels::PowCase::Two, h, dt, 1.0, bc);
        CHECK(std::memcmp(outs.data(), outo.data(), n * sizeof(double)) == 0);
        CHECK(ss.max_w == so.max_w);
        CHECK(ss.min_unclamped == so.min_unclamped);
        CHECK(kernels::max_value_serial(w.data(), n) == kernels::max_value_omp(w.data(), n));
    }
}

TEST_CASE("solve: zero datum gives the zero trajectory") {
    ProblemSpec p = base_problem();
    p.datum = BumpDatum{0.0, 1.0, true};
    const Trajectory traj = solve(p, SolverConfig{});
    REQUIRE(traj.fields.size() == 2);
    for (const Field& f : traj.fields)
        for (double v : f.values) CHECK(v == 0.0);
}

TEST_CASE("solve: serial and OpenMP trajectories are bit-identical") {
    ProblemSpec p = base_problem();
    SolverConfig a, b;
    a.kernel = StepKernel::Serial;
    b.kernel = StepKernel::OpenMP;
    const Trajectory ta = solve(p, a), tb = solve(p, b);
    REQUIRE(ta.fields.size() == tb.fields.size());
    for (std::size_t i = 0; i < ta.fields.size(); ++i)
        CHECK(ta.fields[i].values == tb.fields[i].values);
}

TEST_CASE("solve: mass conservation with zero-flux ends") {
    ProblemSpec p = base_problem();
    p.output_times = {2.0};
    p.t_end = 2.0;
    const Field w0 = build_initial_field(p.datum, p.grid());
    const double mass0 = weighted_mass(w0);
    const Trajectory traj = solve(p, SolverConfig{});
    CHECK(std::fabs(weighted_mass(traj.fields.back()) - mass0) <= 1e-10 * mass0);
}

TEST_CASE("solve: comparison principle on ordered data") {
    auto run = [](const InitialDatum& d, int dim) {
        ProblemSpec p = base_problem();
        p.dimension = dim;
        p.datum = d;
        return solve(p, SolverConfig{});
    };
    // three ordered pairs: nested bumps (N=2), nested bumps (N=1), plateaus
    {
        const auto lo = run(BumpDatum{0.2, 2.0, true}, 2);
        const auto hi = run(BumpDatum{0.4, 2.0, true}, 2);
        for (std::size_t k = 0; k < lo.fields.size(); ++k)
            for (int i = 0; i < 512; ++i)
                CHECK(lo.fields[k].values[i] <= hi.fields[k].values[i] + 1e-10);
    }
    {
        const auto lo = run(BumpDatum{0.2, 1.5, true}, 1);
        const auto hi = run(BumpDatum{0.3, 2.5, true}, 1);
        for (std::size_t k = 0; k < lo.fields.size(); ++k)
            for (int i = 0; i < 512; ++i)
                CHECK(lo.fields[k].values[i] <= hi.fields[k].values[i] + 1e-10);
    }
    {
        ProblemSpec p = base_problem();
        p.dimension = 1;
        SolverConfig cfg;
        cfg.left = {BCKind::Dirichlet, 1.0};
        cfg.right = {BCKind::Dirichlet, 0.0};
        p.datum = PlateauDatum{1.0, 4.0, 0.5};
        const auto lo = solve(p, cfg);
        p.datum = PlateauDatum{1.0, 4.0, 1.5};
        const auto hi = solve(p, cfg);
        for (std::size_t k = 0; k < lo.fields.size(); ++k)
            for (int i = 0; i < 512; ++i)
                CHECK(lo.fields[k].values[i] <= hi.fields[k].values[i] + 1e-10);
    }
}

TEST_CASE("solve: radial monotonicity is preserved") {
    ProblemSpec p = base_problem();
    p.dimension = 1;
    p.datum = PlateauDatum{1.0, 3.0, 1.0};
    SolverConfig cfg;
    cfg.left = {BCKind::Dirichlet, 1.0};
    cfg.right = {BCKind::Dirichlet, 0.0};
    const Trajectory traj = solve(p, cfg);
    for (const Field& f : traj.fields)
        for (int i = 0; i + 1 < 512; ++i)
            CHECK(f.values[i + 1] - f.values[i] <= 1e-12);
}

TEST_CASE("solve: L1 distance between two solutions contracts") {
    auto run = [](double amp, double radius) {
        ProblemSpec p = base_problem();
        p.output_times = {0.1, 0.5, 1.0, 2.0};
        p.t_end = 2.0;
        p.datum = BumpDatum{amp, radius, true};
        return solve(p, SolverConfig{});
    };
    const auto a = run(0.25, 2.0);
    const auto b = run(0.35, 1.2);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < a.fields.size(); ++k) {
        double l1 = 0.0;
        for (int i = 0; i < 512; ++i)
            l1 += std::fabs(a.fields[k].values[i] - b.fields[k].values[i]);
        l1 *= a.fields[k].grid.h;
        CHECK(l1 <= prev * (1.0 + 1e-8));
        prev = l1;
    }
}

TEST_CASE("solve: plateau keeps its origin value (left-region pin)") {
    ProblemSpec p;
    p.dimension = 1;
    p.m = 2.0;
    p.datum = PlateauDatum{1.0, 2.0, 1.0};
    p.s_min = -60;
    p.s_max = 60;
    p.n_cells = 1024;
    p.t_end = 10.0;
    p.output_times = {1.0, 10.0};
    SolverConfig cfg;
    cfg.left = {BCKind::Dirichlet, 1.0};
    cfg.right = {BCKind::Dirichlet, 0.0};
    const Trajectory traj = solve(p, cfg);
    const int mcount = 102;  // left 10%
    for (const Field& f : traj.fields)
        for (int i = 0; i < mcount; ++i) CHECK(std::fabs(f.values[i] - 1.0) <= 1e-3);
}

TEST_CASE("solve: coarse Barenblatt tracking sanity") {
    const double m = 2.0, C0 = calibrate_C0(1.0, m);
    ProblemSpec p;
    p.dimension = 2;
    p.m = m;
    p.datum = snapshot_datum(Profile{LogBarenblatt{C0, m}}, 1.0);
    p.s_min = -10;
    p.s_max = 10;
    p.n_cells = 1024;
    p.t_end = 1.0;
    p.output_times = {1.0};  // solver time; Barenblatt time 2
    const Trajectory traj = solve(p, SolverConfig{});
    auto prof = [&](double s) { return eval_log_barenblatt(C0, m, s, 2.0, Variable::Log); };
    const double sup = sup_error(traj.fields.back(), prof);
    CHECK(sup <= 0.03 * eval_log_barenblatt(C0, m, 0.0, 2.0, Variable::Log));
}

TEST_CASE("solve aborts: domain too small, max_steps") {
    ProblemSpec p = base_problem();
    p.datum = BumpDatum{0.25, 100.0, true};  // support reaches the margins
    CHECK_THROWS_AS(solve(p, SolverConfig{}), NumericalError);

    ProblemSpec q = base_problem();
    SolverConfig cfg;
    cfg.max_steps = 3;
    CHECK_THROWS_AS(solve(q, cfg), NumericalError);
}

TEST_CASE("solve_radial_direct: constant with matching Dirichlet ends is fixed") {
    ProblemSpec p;
    p.dimension = 1;
    p.m = 2.0;
    p.datum = SnapshotDatum{[](double) { return 0.5; }, "constant"};
    p.s_min = -1;
    p.s_max = 1;
    p.n_cells = 128;
    p.t_end = 0.01;
    p.output_times = {0.01};
    SolverConfig cfg;
    cfg.left = {BCKind::Dirichlet, 0.5};
    cfg.right = {BCKind::Dirichlet, 0.5};
    const Trajectory traj = solve_radial_direct(p, cfg, 0.5, 2.0);
    for (double v : traj.fields.back().values) CHECK(v == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("solve_radial_direct: traveling-wave front advances like x0 K^m e^{ct}") {
    const double m = 2.0, K = 1.0, x0 = 1.0, c = std::pow(K, m - 1.0);
    ProblemSpec p;
    p.dimension = 1;
    p.m = m;
    p.datum = snapshot_datum(Profile{make_traveling_wave(K, m, std::log(x0))}, 0.0);
    p.s_min = -1;  // unused by the radial grid but must satisfy validate()
    p.s_max = 1;
    p.n_cells = 512;
    p.t_end = 0.4;
    p.output_times = {0.1, 0.2, 0.4};
    SolverConfig cfg;
    const double r_min = 1e-3, r_max = 1.8;
    cfg.left = {BCKind::Dirichlet, eval_U_x0(K, m, x0, r_min, 0.0)};
    cfg.right = {BCKind::Dirichlet, 0.0};
    cfg.margin_fraction = 0.05;
    const Trajectory traj = solve_radial_direct(p, cfg, r_min, r_max);

    std::vector<std::pair<double, double>> fronts;
    for (const Field& f : traj.fields) {
        int last = -1;
        for (int i = 0; i < f.grid.n_cells; ++i)
            if (f.values[i] > 1e-6) last = i;
        REQUIRE(last >= 0);
        fronts.emplace_back(f.t, f.grid.center(last));
    }
    const double dr = traj.fields[0].grid.h;
    const double locus = x0 * std::pow(K, m) * std::exp(c * 0.4);
    CHECK(std::fabs(fronts.back().second - locus) <= 5.0 * dr);
    // log-front slope approximates the wave speed
    const double slope = (std::log(fronts.back().second) - std::log(fronts.front().second)) /
                         (fronts.back().first - fronts.front().first);
    CHECK(slope == doctest::Approx(c).epsilon(0.1));
}
