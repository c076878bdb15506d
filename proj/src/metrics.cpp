#include "pmelab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pmelab {

namespace {

void require_same_grid(const Field& a, const Field& b, const char* where) {
    if (!(a.grid == b.grid)) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

}  // namespace

double sup_error(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sup_error: size mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::fabs(a[i] - b[i]));
    return worst;
}

double sup_error(const Field& a, const Field& b) {
    require_same_grid(a, b, "sup_error");
    return sup_error(a.values, b.values);
}

double sup_error(const Field& a, const std::function<double(double)>& profile_of_s) {
    double worst = 0.0;
    for (int i = 0; i < a.grid.n_cells; ++i)
        worst = std::max(worst, std::fabs(a.values[i] - profile_of_s(a.grid.center(i))));
    return worst;
}

double weighted_lp_error(const Field& a, const Field& b, double p) {
    require_same_grid(a, b, "weighted_lp_error");
    if (!(p >= 1.0)) throw std::invalid_argument("weighted_lp_error: need p >= 1");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        acc += std::pow(std::fabs(a.values[i] - b.values[i]), p);
    return std::pow(2.0 * a.grid.h * acc, 1.0 / p);
}

double weighted_lp_error(const Field& a, const std::function<double(double)>& profile_of_s,
                         double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("weighted_lp_error: need p >= 1");
    double acc = 0.0;
    for (int i = 0; i < a.grid.n_cells; ++i)
        acc += std::pow(std::fabs(a.values[i] - profile_of_s(a.grid.center(i))), p);
    return std::pow(2.0 * a.grid.h * acc, 1.0 / p);
}

GraphRef peak_ssvar_graph(double M0, double m) {
    const double k = k_of_M0(M0, m);
    GraphRef ref;
    ref.values = [M0, m](double y) { return peak_ssvar_value(M0, m, y); };
    ref.jumps.push_back({k, ValueSet{0.0, std::pow(k / m, 1.0 / (m - 1.0))}});
    return ref;
}

double graph_distance(const SampledFunction& fn, const GraphRef& ref) {
    if (fn.x.size() != fn.value.size() || fn.x.empty())
        throw std::invalid_argument("graph_distance: malformed samples");
    if (!ref.values) throw std::invalid_argument("graph_distance: empty reference");
    auto set_distance = [](double v, const ValueSet& s) {
        if (s.hi < s.lo) throw std::invalid_argument("graph_distance: empty value set");
        if (v < s.lo) return s.lo - v;
        if (v > s.hi) return v - s.hi;
        return 0.0;
    };
    double worst = 0.0;
    for (std::size_t i = 0; i < fn.x.size(); ++i) {
        double d = set_distance(fn.value[i], ref.values(fn.x[i]));
        for (const auto& jump : ref.jumps) {
            const double dv = set_distance(fn.value[i], jump.range);
            d = std::min(d, std::hypot(fn.x[i] - jump.x, dv));
        }
        worst = std::max(worst, d);
    }
    return worst;
}

double linfty_bound_from_l1(double l1_error, double H, double alpha) {
    if (!(l1_error > 0.0 && H > 0.0))
        throw std::invalid_argument("linfty_bound_from_l1: need positive arguments");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("linfty_bound_from_l1: need alpha in (0,1]");
    return std::pow(H, 1.0 / (1.0 + alpha)) *
           std::pow((1.0 + alpha) / alpha * l1_error, alpha / (1.0 + alpha));
}

RateEstimate rate_estimate(const std::vector<std::pair<double, double>>& t_and_error) {
    std::vector<double> x, y;
    RateEstimate est;
    for (const auto& [t, e] : t_and_error) {
        if (!(t > 0.0)) throw std::invalid_argument("rate_estimate: need t > 0");
        if (!(e > 0.0)) {
            ++est.points_dropped;
            continue;
        }
        x.push_back(std::log(t));
        y.push_back(std::log(e));
    }
    if (x.size() < 3)
        throw std::invalid_argument("rate_estimate: fewer than 3 usable points");
    const double n = static_cast<double>(x.size());
    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xbar += x[i];
        ybar += y[i];
    }
    xbar /= n;
    ybar /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - xbar) * (x[i] - xbar);
        sxy += (x[i] - xbar) * (y[i] - ybar);
    }
    if (sxx == 0.0) throw std::invalid_argument("rate_estimate: degenerate abscissae");
    est.slope = sxy / sxx;
    est.points_used = static_cast<int>(x.size());
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (ybar + est.slope * (x[i] - xbar));
        ss += r * r;
    }
    est.residual_rms = std::sqrt(ss / n);
    return est;
}

}  // namespace pmelab
