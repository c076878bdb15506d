// Error norms, the graph-convergence distance, the L1 -> Linf interpolation
// bound, and decay-rate estimation.
#ifndef PMELAB_METRICS_HPP
#define PMELAB_METRICS_HPP

#include <functional>
#include <string>
#include <vector>

#include "pmelab/core.hpp"
#include "pmelab/profiles.hpp"
#include "pmelab/transforms.hpp"

namespace pmelab {

// sup_i |a_i - b_i| on a shared grid.
double sup_error(const Field& a, const Field& b);
double sup_error(const std::vector<double>& a, const std::vector<double>& b);
// against a profile sampled in the log variable at the field's time
double sup_error(const Field& a, const std::function<double(double)>& profile_of_s);

// Weighted norm ||a-b||_{p,1} = (int |a-b|^p / |x| dx)^{1/p} evaluated in log
// variables: (2 h sum |a_i-b_i|^p)^{1/p}; the factor 2 counts both signs of x.
double weighted_lp_error(const Field& a, const Field& b, double p);
double weighted_lp_error(const Field& a, const std::function<double(double)>& profile_of_s,
                         double p);

// A (possibly multivalued) reference graph: univalued branches given by
// `values`, plus explicit jump segments {x} x [lo, hi].
struct GraphRef {
    std::function<ValueSet(double)> values;
    struct Jump {
        double x;
        ValueSet range;
    };
    std::vector<Jump> jumps;
};

// Reference graph of the self-similar peak with its jump at y = k(M0).
GraphRef peak_ssvar_graph(double M0, double m);

// Sup over sample points of the distance from (x_i, fn(x_i)) to the reference
// graph: the vertical distance to values(x_i), reduced by the plane distance
// to any jump segment. Reduces to sup_error when the reference has no jumps
// and is univalued at every sample.
double graph_distance(const SampledFunction& fn, const GraphRef& ref);

// ||Phi||_inf <= H^{1/(1+a)} ((1+a)/a ||Phi||_1)^{a/(1+a)} for Holder-a Phi.
double linfty_bound_from_l1(double l1_error, double H, double alpha);

// Least-squares slope of log(error) against log(t); nonpositive errors are
// dropped with a warning count.
struct RateEstimate {
    double slope = 0.0;
    double residual_rms = 0.0;
    int points_used = 0;
    int points_dropped = 0;
};
RateEstimate rate_estimate(const std::vector<std::pair<double, double>>& t_and_error);

// Per-metric convergence record for one scenario run.
struct ConvergenceReport {
    std::string metric;
    struct Row {
        double t;
        double raw_error;
        double scaled_error;
    };
    std::vector<Row> rows;
    double rate = 0.0;
    double rate_residual = 0.0;
    bool pass = false;
    std::string threshold_note;
};

}  // namespace pmelab

#endif
