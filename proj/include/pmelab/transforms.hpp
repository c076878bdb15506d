// Changes of variable: radial <-> log resampling, the m=1 moving frame, the
// lambda-rescaling that leaves the porous medium equation invariant, and the
// self-similar variables (y, t^{1/m} w).
#ifndef PMELAB_TRANSFORMS_HPP
#define PMELAB_TRANSFORMS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "pmelab/core.hpp"

namespace pmelab {

// A function sampled at increasing abscissae.
struct SampledFunction {
    std::vector<double> x;
    std::vector<double> value;
};

// Resample radial data (r, u(r)) onto the log grid, w(s_i) = u(e^{s_i}).
// Monotone cubic: output stays within the bounds of the input samples.
// Rejects r <= 0 and grids that extend past the sampled range.
Field radial_to_log(const std::vector<std::pair<double, double>>& radial_samples,
                    const Grid1D& grid);

// Inverse resampling: values of the field at s = log r for each query radius.
// Rejects radii whose log falls outside the grid.
std::vector<std::pair<double, double>> log_to_radial(const Field& field,
                                                     const std::vector<double>& r_nodes);

// m=1 moving frame s = log r + (N-2)t: returns v with v(s) = w(s + (N-2)t),
// i.e. the field sampled at frame-shifted coordinates. Identity for N=2 or
// t=0. Queries beyond the grid clamp to the end cells (fields are constant
// past the truncation by design).
Field moving_frame_shift(const Field& field, int N, double t);

// Lazy rescaling w_lambda(s,t) = w(sqrt(lambda) s, lambda t); maps solutions
// of the porous medium equation to solutions. lambda must be positive.
using SpaceTimeFn = std::function<double(double, double)>;
SpaceTimeFn self_similar_rescale_pme(SpaceTimeFn w, double lambda);

// Self-similar variables of the peak regime: pairs (y_i, t^{1/m} w(s_i,t))
// with y_i = t^{-1/m} s_i. Requires field.t > 0.
SampledFunction to_ssvar(const Field& field, double m);

// Discrete residual of the porous medium equation for an evaluable solution,
// |(w(s,t+dt)-w(s,t))/dt - D2_h(w^m)(s,t)|, maximised over the given points.
// Used by the rescaling-invariance tests.
double discrete_pme_residual(const SpaceTimeFn& w, double m,
                             const std::vector<double>& s_points, double t, double h,
                             double dt);

}  // namespace pmelab

#endif
