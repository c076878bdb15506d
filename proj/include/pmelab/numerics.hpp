// Small numerical utilities shared across the library: shape-preserving
// interpolation, adaptive quadrature, bracketed root finding and an embedded
// Runge-Kutta stepper.
#ifndef PMELAB_NUMERICS_HPP
#define PMELAB_NUMERICS_HPP

#include <array>
#include <functional>
#include <vector>

namespace pmelab {

// Fritsch-Carlson monotone piecewise cubic. No overshoot: on each interval the
// interpolant stays within [min,max] of the two data values, and monotone data
// yield a monotone interpolant.
class MonotoneCubic {
public:
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    // Evaluate at xq; throws std::domain_error outside [x.front(), x.back()].
    double operator()(double xq) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

private:
    std::vector<double> x_, y_, d_;  // nodes, values, node tangents
    double uniform_h_ = 0.0;         // >0 when nodes are uniformly spaced
};

// Resample (xs, ys) onto query points with the monotone cubic. Queries must
// lie inside the sampled range.
std::vector<double> resample_monotone(const std::vector<double>& xs,
                                      const std::vector<double>& ys,
                                      const std::vector<double>& queries);

// Adaptive Simpson quadrature to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 60);

// Brent's method on a bracketing interval [a,b] with f(a)*f(b) <= 0.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol = 1e-14, int max_iter = 200);

// Cash-Karp embedded RK45 for small fixed-size systems. Advances y from x0 to
// x1 (either direction) with adaptive steps meeting the local tolerance, and
// invokes on_node at exactly the points in `nodes` (ordered along the
// direction of integration).
template <std::size_t N>
struct Rk45 {
    using State = std::array<double, N>;
    using Rhs = std::function<void(double, const State&, State&)>;

    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    double initial_step = 1e-8;
    double max_step = 0.1;

    void integrate(const Rhs& rhs, double x0, double x1, State& y,
                   const std::vector<double>& nodes,
                   const std::function<void(double, const State&)>& on_node) const;
};

extern template struct Rk45<2>;

}  // namespace pmelab

#endif
