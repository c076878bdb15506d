#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "pmelab/profiles.hpp"
#include "pmelab/transforms.hpp"

using namespace pmelab;

namespace {

std::vector<std::pair<double, double>> sample_radial(const std::function<double(double)>& u,
                                                     double s_lo, double s_hi, int n) {
    std::vector<std::pair<double, double>> out;
    for (int i = 0; i <= n; ++i) {
        const double s = s_lo + (s_hi - s_lo) * i / n;
        out.emplace_back(std::exp(s), u(std::exp(s)));
    }
    return out;
}

}  // namespace

TEST_CASE("radial_to_log: constants and the log-square bump") {
    const Grid1D g(-2, 2, 256);
    auto c = sample_radial([](double) { return 0.7; }, -3, 3, 50);
    const Field fc = radial_to_log(c, g);
    for (double v : fc.values) CHECK(v == doctest::Approx(0.7).epsilon(1e-14));

    // u(r) = [1 - (log r)^2]_+^{1/(m-1)} becomes w(s) = [1 - s^2]_+^{1/(m-1)}
    const double m = 3.0;
    auto u = [m](double r) {
        const double b = 1.0 - std::log(r) * std::log(r);
        return b > 0 ? std::pow(b, 1.0 / (m - 1.0)) : 0.0;
    };
    const Field f = radial_to_log(sample_radial(u, -3, 3, 6000), g);
    for (int i = 0; i < g.n_cells; ++i) {
        const double s = g.center(i);
        if (std::fabs(s) <= 0.95) {
            CHECK(std::fabs(f.values[i] - std::pow(1 - s * s, 0.5)) <= 1e-5);
        } else if (std::fabs(s) >= 1.0 + 1e-3) {
            CHECK(f.values[i] == 0.0);  // no-overshoot interpolation
        }
    }
}

TEST_CASE("radial_to_log rejections") {
    const Grid1D g(-2, 2, 64);
    std::vector<std::pair<double, double>> bad = {{-1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
    CHECK_THROWS_AS(radial_to_log(bad, g), std::invalid_argument);
    std::vector<std::pair<double, double>> narrow = {{0.9, 0.0}, {1.0, 0.1}, {1.1, 0.0}};
    CHECK_THROWS_AS(radial_to_log(narrow, g), std::invalid_argument);
}

TEST_CASE("radial Barenblatt maps onto the log Barenblatt") {
    const double m = 2.0, C0 = calibrate_C0(1.0, m);
    const Grid1D g(-2, 2, 1024);
    const Field f =
        radial_to_log(sample_radial([&](double r) {
                          return eval_log_barenblatt(C0, m, r, 1.0, Variable::Radial);
                      },
                                    -3, 3, 8000),
                      g);
    for (int i = 0; i < g.n_cells; i += 37)
        CHECK(std::fabs(f.values[i] -
                        eval_log_barenblatt(C0, m, g.center(i), 1.0, Variable::Log)) <= 5e-4);
}

TEST_CASE("log_to_radial: constants, center value, and round trip") {
    const double m = 2.0, C0 = calibrate_C0(1.0, m);
    const Grid1D g(-6, 6, 1 << 11);
    std::vector<double> v(g.n_cells);
    for (int i = 0; i < g.n_cells; ++i)
        v[i] = eval_log_barenblatt(C0, m, g.center(i), 1.0, Variable::Log);
    const Field f(g, 1.0, v);

    auto at1 = log_to_radial(f, {1.0});
    CHECK(std::fabs(at1[0].second - std::pow(C0, 1.0 / (m - 1.0))) <= 1e-5);
    CHECK_THROWS_AS(log_to_radial(f, {1e9}), std::invalid_argument);
    CHECK_THROWS_AS(log_to_radial(f, {-1.0}), std::invalid_argument);

    // round trip at off-node radii on a smooth field, h = 2^-8
    const Grid1D g2(-4, 4, 2048);  // h = 2^-8
    std::vector<double> gvals(g2.n_cells);
    for (int i = 0; i < g2.n_cells; ++i) gvals[i] = std::exp(-g2.center(i) * g2.center(i));
    const Field smooth(g2, 0.0, gvals);
    double worst = 0.0;
    for (int i = 10; i + 10 < g2.n_cells; i += 7) {
        const double s = g2.center(i) + 0.37 * g2.h;
        const double got = log_to_radial(smooth, {std::exp(s)})[0].second;
        worst = std::max(worst, std::fabs(got - std::exp(-s * s)));
    }
    CHECK(worst <= 1e-3);
}

TEST_CASE("resampling error contracts like h^2 when h halves") {
    auto truth = [](double s) { return std::exp(-s * s); };
    auto measure = [&](int n) {
        const Grid1D g(-4, 4, n);
        std::vector<double> v(g.n_cells);
        for (int i = 0; i < g.n_cells; ++i) v[i] = truth(g.center(i));
        const Field f(g, 0.0, v);
        double worst = 0.0;
        for (int i = 5; i + 5 < g.n_cells; ++i) {
            const double s = g.center(i) + 0.5 * g.h;
            worst = std::max(worst, std::fabs(log_to_radial(f, {std::exp(s)})[0].second -
                                              truth(s)));
        }
        return worst;
    };
    const double e1 = measure(512), e2 = measure(1024);
    CHECK(e1 / e2 >= 3.5);
    CHECK(e1 / e2 <= 4.5);
}

TEST_CASE("moving frame shift") {
    const Grid1D g(-20, 20, 2048);
    std::vector<double> v(g.n_cells);
    for (int i = 0; i < g.n_cells; ++i)
        v[i] = std::exp(-0.5 * g.center(i) * g.center(i));
    const Field f(g, 0.0, v);

    const Field id2 = moving_frame_shift(f, 2, 7.5);
    CHECK(id2.values == f.values);
    const Field id0 = moving_frame_shift(f, 1, 0.0);
    CHECK(id0.values == f.values);

    // N=1, t=3: v(s) = w(s - 3)
    const Field sh = moving_frame_shift(f, 1, 3.0);
    for (int i = 0; i < g.n_cells; i += 11) {
        const double s = g.center(i);
        if (std::fabs(s) > 12) continue;
        CHECK(std::fabs(sh.values[i] - std::exp(-0.5 * (s - 3) * (s - 3))) <= 1e-4);
    }
}

TEST_CASE("self-similar rescaling: identity, constants, fixed point") {
    auto w = [](double s, double t) { return 1.3 + 0.0 * s * t; };
    auto w1 = self_similar_rescale_pme(w, 1.0);
    CHECK(w1(0.4, 2.0) == w(0.4, 2.0));
    auto w2 = self_similar_rescale_pme(w, 7.0);
    CHECK(w2(0.4, 2.0) == doctest::Approx(1.3));
    CHECK_THROWS_AS(self_similar_rescale_pme(w, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(self_similar_rescale_pme(w, -2.0), std::invalid_argument);

    // the Heaviside-trace self-similar solution is a fixed point of the rescaling
    const auto table = solve_heaviside_profile(2.0, 1e-4);
    SpaceTimeFn wss = [&](double s, double t) { return table.eval(s / std::sqrt(t)); };
    for (double lambda : {0.5, 2.0, 10.0}) {
        auto wl = self_similar_rescale_pme(wss, lambda);
        for (double s : {-1.0, -0.2, 0.3, 0.9}) {
            for (double t : {0.5, 1.0, 4.0}) {
                CHECK(std::fabs(wl(s, t) - wss(s, t)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("rescaling preserves the discrete PME residual up to the lambda factor") {
    const double m = 2.0, C0 = calibrate_C0(1.0, m);
    SpaceTimeFn w = [&](double s, double t) {
        return eval_log_barenblatt(C0, m, s, t, Variable::Log);
    };
    const std::vector<double> pts = {-0.5, -0.2, 0.0, 0.3, 0.6};
    const double h = 1e-3, dt = 1e-6, t0 = 2.0;
    for (double lambda : {2.0, 10.0}) {
        auto wl = self_similar_rescale_pme(w, lambda);
        const double r_lambda = discrete_pme_residual(wl, m, pts, t0, h, dt);
        std::vector<double> pts_scaled;
        for (double s : pts) pts_scaled.push_back(std::sqrt(lambda) * s);
        const double r_base =
            discrete_pme_residual(w, m, pts_scaled, lambda * t0, std::sqrt(lambda) * h,
                                  lambda * dt);
        CHECK(r_lambda <= 10.0 * r_base * (1.0 + 1e-3));
        CHECK(r_lambda == doctest::Approx(lambda * r_base).epsilon(1e-3));
    }
}

TEST_CASE("to_ssvar: zero field, t=1 identity, peak image, sup identity") {
    const double m = 2.0, M0 = 1.0;
    const Grid1D g(-3, 9, 512);
    std::vector<double> zeros(g.n_cells, 0.0);
    const auto z = to_ssvar(Field(g, 2.0, zeros), m);
    for (double v : z.value) CHECK(v == 0.0);

    std::vector<double> pv(g.n_cells);
    for (int i = 0; i < g.n_cells; ++i) pv[i] = eval_peak_log(M0, m, g.center(i), 1.0);
    const auto id = to_ssvar(Field(g, 1.0, pv), m);
    for (int i = 0; i < g.n_cells; ++i) {
        CHECK(id.x[i] == g.center(i));
        CHECK(id.value[i] == pv[i]);
    }

    const double t = 31.0;
    std::vector<double> pt(g.n_cells);
    for (int i = 0; i < g.n_cells; ++i) pt[i] = eval_peak_log(M0, m, g.center(i), t);
    const auto ss = to_ssvar(Field(g, t, pt), m);
    const double k = k_of_M0(M0, m);
    for (int i = 0; i < g.n_cells; ++i) {
        const double y = ss.x[i];
        if (y <= 0 || y >= k - 1e-9) continue;
        CHECK(ss.value[i] == doctest::Approx(std::pow(y / m, 1.0 / (m - 1.0))).epsilon(1e-12));
    }

    // sup-norm statements map exactly: sup |ubar - Fbar| = t^{1/m} sup |w - F|
    std::vector<double> wv(g.n_cells);
    for (int i = 0; i < g.n_cells; ++i) wv[i] = pt[i] + 1e-3 * std::fabs(std::sin(3.0 * i));
    const auto ssw = to_ssvar(Field(g, t, wv), m);
    double lhs = 0.0, rhs = 0.0;
    for (int i = 0; i < g.n_cells; ++i) {
        lhs = std::max(lhs, std::fabs(ssw.value[i] - ss.value[i]));
        rhs = std::max(rhs, std::fabs(wv[i] - pt[i]));
    }
    CHECK(lhs == doctest::Approx(std::pow(t, 1.0 / m) * rhs).epsilon(1e-13));

    CHECK_THROWS_AS(to_ssvar(Field(g, 0.0, pv), m), std::invalid_argument);
}
