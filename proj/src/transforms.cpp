#include "pmelab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pmelab/numerics.hpp"

namespace pmelab {

Field radial_to_log(const std::vector<std::pair<double, double>>& radial_samples,
                    const Grid1D& grid) {
    if (radial_samples.size() < 2)
        throw std::invalid_argument("radial_to_log: need at least two samples");
    std::vector<double> s, v;
    s.reserve(radial_samples.size());
    v.reserve(radial_samples.size());
    double prev_r = 0.0;
    for (const auto& [r, val] : radial_samples) {
        if (!(r > 0.0)) throw std::invalid_argument("radial_to_log: radii must be > 0");
        if (!(r > prev_r)) throw std::invalid_argument("radial_to_log: radii must strictly increase");
        if (!std::isfinite(val) || val < 0.0)
            throw std::invalid_argument("radial_to_log: values must be finite and >= 0");
        s.push_back(std::log(r));
        v.push_back(val);
        prev_r = r;
    }
    if (grid.s_min < s.front() || grid.s_max > s.back())
        throw std::invalid_argument("radial_to_log: grid outside sampled range (no extrapolation)");
    std::vector<double> w = resample_monotone(s, v, grid.centers());
    for (double& x : w) x = std::max(x, 0.0);
    return Field(grid, 0.0, std::move(w));
}

std::vector<std::pair<double, double>> log_to_radial(const Field& field,
                                                     const std::vector<double>& r_nodes) {
    validate_field(field, "log_to_radial");
    const MonotoneCubic interp(field.grid.centers(), field.values);
    std::vector<std::pair<double, double>> out;
    out.reserve(r_nodes.size());
    for (double r : r_nodes) {
        if (!(r > 0.0)) throw std::invalid_argument("log_to_radial: radii must be > 0");
        const double s = std::log(r);
        if (s < interp.x_min() || s > interp.x_max())
            throw std::invalid_argument("log_to_radial: radius outside grid range");
        out.emplace_back(r, interp(s));
    }
    return out;
}

Field moving_frame_shift(const Field& field, int N, double t) {
    validate_field(field, "moving_frame_shift");
    if (N != 1 && N != 2) throw std::invalid_argument("moving_frame_shift: N must be 1 or 2");
    const double shift = (N - 2) * t;
    if (shift == 0.0) return field;
    const MonotoneCubic interp(field.grid.centers(), field.values);
    std::vector<double> w(field.grid.n_cells);
    for (int i = 0; i < field.grid.n_cells; ++i) {
        const double q = std::clamp(field.grid.center(i) + shift, interp.x_min(), interp.x_max());
        w[i] = std::max(0.0, interp(q));
    }
    return Field(field.grid, field.t, std::move(w));
}

SpaceTimeFn self_similar_rescale_pme(SpaceTimeFn w, double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("self_similar_rescale_pme: lambda must be > 0");
    if (lambda == 1.0) return w;
    const double root = std::sqrt(lambda);
    return [w = std::move(w), lambda, root](double s, double t) {
        return w(root * s, lambda * t);
    };
}

SampledFunction to_ssvar(const Field& field, double m) {
    validate_field(field, "to_ssvar");
    if (!(field.t > 0.0)) throw std::invalid_argument("to_ssvar: need t > 0");
    const double scale = std::pow(field.t, 1.0 / m);
    SampledFunction out;
    out.x.resize(field.grid.n_cells);
    out.value.resize(field.grid.n_cells);
    for (int i = 0; i < field.grid.n_cells; ++i) {
        out.x[i] = field.grid.center(i) / scale;
        out.value[i] = scale * field.values[i];
    }
    return out;
}

double discrete_pme_residual(const SpaceTimeFn& w, double m,
                             const std::vector<double>& s_points, double t, double h,
                             double dt) {
    auto W = [&](double s, double tau) { return std::pow(w(s, tau), m); };
    double worst = 0.0;
    for (double s : s_points) {
        const double ddt = (w(s, t + dt) - w(s, t)) / dt;
        const double d2 = (W(s + h, t) - 2.0 * W(s, t) + W(s - h, t)) / (h * h);
        worst = std::max(worst, std::fabs(ddt - d2));
    }
    return worst;
}

}  // namespace pmelab
