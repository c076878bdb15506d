// Domain types for the log-variable formulation: the radial half-line r in
// (0,inf) maps onto s = log r in R, where the singular weight |x|^-2
// disappears and all three evolution equations (porous medium, porous medium
// with convection, heat) live on a uniform 1-D grid.
#ifndef PMELAB_CORE_HPP
#define PMELAB_CORE_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pmelab {

// Scenario hypothesis violations (bad data for the selected regime).
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical aborts: CFL/NaN/support-reaching-boundary/max-steps.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Uniform cell-centered grid in the log variable s.
struct Grid1D {
    double s_min = -1.0;
    double s_max = 1.0;
    int n_cells = 0;
    double h = 0.0;

    Grid1D() = default;
    Grid1D(double smin, double smax, int n);

    double center(int i) const { return s_min + (i + 0.5) * h; }
    std::vector<double> centers() const;

    bool operator==(const Grid1D&) const = default;
};

// Nonnegative grid function w(s_i, t).
struct Field {
    Grid1D grid;
    double t = 0.0;
    std::vector<double> values;

    Field() = default;
    Field(Grid1D g, double time, std::vector<double> v);

    double max_value() const;
};

// Throws if the field violates its invariants (size, finiteness, sign).
void validate_field(const Field& f, const std::string& where);

// --- Initial data -----------------------------------------------------------
//
// Bump: u0(x) = A (R - x^2)_+ when vanish_at_origin is false (u0(0) = A R).
// With vanish_at_origin the bump lives in the log variable,
// u0(x) = A (R - (log x)^2)_+, so u0(0) = 0 and the weighted mass is exactly
// (4/3) A R^(3/2).
struct BumpDatum {
    double amplitude = 0.1;
    double radius = 0.5;
    bool vanish_at_origin = false;
};

// Plateau: u0(x) = K / (1 + (x/x_half)^q). u0(0) = K, u0 -> 0 at infinity,
// 0 <= u0 <= K, Holder continuous with exponent min(q,1) and constant
// K / x_half^q.
struct PlateauDatum {
    double K = 1.0;
    double decay_rate = 1.0;  // q
    double x_half = 1.0;
};

// Radial samples (r, value), r strictly increasing and positive.
struct TableDatum {
    std::vector<double> r;
    std::vector<double> value;
};

// Start exactly on a profile snapshot: w0(s) = eval(s). Built by
// profiles::snapshot_datum so that core stays independent of the profile
// library.
struct SnapshotDatum {
    std::function<double(double)> w0_of_s;
    std::string label;
};

using InitialDatum = std::variant<BumpDatum, PlateauDatum, TableDatum, SnapshotDatum>;

// Evaluate the datum in the log variable, w0(s) = u0(e^s) (analytic datums
// only; throws for Table), and at radius x > 0.
double datum_value_log(const InitialDatum& datum, double s);
double datum_value_radial(const InitialDatum& datum, double x);

// Problem definition: dimension and exponent select the transformed equation,
// the rest fixes the truncated log-domain and the output schedule.
struct ProblemSpec {
    int dimension = 2;         // N in {1,2}
    double m = 2.0;            // m >= 1
    InitialDatum datum;
    double s_min = -10.0;
    double s_max = 10.0;
    int n_cells = 256;
    double t_end = 1.0;
    std::vector<double> output_times;  // strictly increasing, in (0, t_end]

    Grid1D grid() const { return Grid1D(s_min, s_max, n_cells); }
    void validate() const;
};

// Sequence of fields at the requested output times.
struct Trajectory {
    std::vector<Field> fields;
    double m = 2.0;
    int dimension = 2;
    int convection = 0;  // b flag the run used
};

// Sample the datum onto the grid: w0(s_i) = u0(e^{s_i}). Table datums are
// resampled with the monotone cubic; rejects negative or non-finite samples.
Field build_initial_field(const InitialDatum& datum, const Grid1D& grid);

// Midpoint-rule value of the weighted mass int w ds = int_0^inf u0(x)/x dx
// over the truncated grid.
double weighted_mass(const Field& field);

}  // namespace pmelab

#endif
