// The asymptotic profiles and their calibrations.
//
// All profiles are stated in the radial variable x and equivalently in the
// log variable s = log|x|:
//
//   LogBarenblatt  B0(s,t) = t^-a [C0 - k (s/t^a)^2]_+^{1/(m-1)},
//                  a = 1/(m+1), k = (m-1)/(2m(m+1));  the source solution of
//                  w_t = (w^m)_ss with C0 fixed by the mass.
//   HeavisideSS    W(s,t) = f(s/sqrt(t)); f solves (f^m)'' + (xi/2) f' = 0
//                  with f(-inf)=1 and a degenerate contact f(xi*)=0;
//                  tabulated once per m. W_K scales it to left level K.
//   Peak           W(s,t) = t^{-1/m} [(1/m) s t^{-1/m}]_+^{1/(m-1)} cut at
//                  s = k t^{1/m}; the rarefaction/N-wave profile of the
//                  conservation law w_t + (w^m)_s = 0 with branching constant
//                  k = k(M0) fixed by the mass.
//   TravelingWave  W_{s0}(s,t) = [c - e^{(m-1)(s-s0-ct)/m}]_+^{1/(m-1)},
//                  c = K^{m-1}; exact solution of w_t = (w^m)_ss - (w^m)_s.
//   InnerLog       B_D(x,t) = t^{-1/(m-1)} [D + (1/m) log(|x| t^{1/(m-1)})]_+^{1/(m-1)},
//                  the faster-decaying inner-region profile; D is fitted.
//   LinGauss /     heat-kernel and erfc profiles of the m=1 case, with the
//   LinErfc        moving-frame argument (log|x| + (N-2)t)/(2 sqrt(t)).
//   HolderEnvelope stationary sub/supersolutions K -+ H x^alpha.
#ifndef PMELAB_PROFILES_HPP
#define PMELAB_PROFILES_HPP

#include <iosfwd>
#include <memory>
#include <variant>
#include <vector>

#include "pmelab/core.hpp"

namespace pmelab {

double barenblatt_alpha(double m);  // 1/(m+1)
double barenblatt_k(double m);      // (m-1)/(2m(m+1))

enum class Variable { Radial, Log };

// --- Heaviside-trace profile f ----------------------------------------------

// Monotone table xi -> f(xi) on a uniform grid whose last node is exactly the
// contact point xi*. Left of the table f is its left-end value (within tol of
// 1); right of xi* it is 0.
class HeavisideProfileTable {
public:
    HeavisideProfileTable(double m, double tol, std::vector<double> xi, std::vector<double> f);

    double m() const { return m_; }
    double tol() const { return tol_; }
    double xi_front() const { return xi_.back(); }
    double xi_left() const { return xi_.front(); }
    const std::vector<double>& xi() const { return xi_; }
    const std::vector<double>& f() const { return f_; }

    double eval(double xi) const;

    // Two-column text serialization (xi, f), 17 significant digits.
    void write(std::ostream& os) const;
    static HeavisideProfileTable read(std::istream& is);

private:
    double m_, tol_;
    std::vector<double> xi_, f_;
    std::shared_ptr<const class MonotoneCubic> interp_;
};

// Solve the profile ODE by shooting from the degenerate contact and rescaling
// so the left level is exactly 1. tol controls the ODE residual of the table
// and the left-end closeness to 1.
HeavisideProfileTable solve_heaviside_profile(double m, double tol);

// --- Profile family ----------------------------------------------------------

struct LogBarenblatt {
    double C0, m;
};
struct HeavisideSS {
    double K, m;
    std::shared_ptr<const HeavisideProfileTable> f;
};
struct Peak {
    double M0, k, m;  // k = k_of_M0(M0, m)
};
struct TravelingWave {
    double K, c, s0, m;  // c = K^{m-1}
};
struct InnerLog {
    double D, m;
};
struct LinGauss {
    double M, omega;  // prefactor M/omega multiplies the heat kernel
    int N;
};
struct LinErfc {
    double K;
    int N;
};
struct HolderEnvelope {
    double K, H, alpha;
    int sign;  // -1 lower envelope [K - H x^alpha]_+, +1 upper K + H x^alpha
};

using Profile = std::variant<LogBarenblatt, HeavisideSS, Peak, TravelingWave, InnerLog,
                             LinGauss, LinErfc, HolderEnvelope>;

TravelingWave make_traveling_wave(double K, double m, double s0);

// Generic evaluation in the log variable (time-dependent profiles need t > 0
// except TravelingWave, which is defined at t = 0 too).
double eval_profile_log(const Profile& p, double s, double t);
double eval_profile_radial(const Profile& p, double x, double t);

// Wrap a profile at a fixed time as an initial datum w0(s).
SnapshotDatum snapshot_datum(const Profile& p, double t0);

// --- Individual evaluators and calibrations ----------------------------------

double eval_log_barenblatt(double C0, double m, double x_or_s, double t, Variable var);

// C0 such that the Barenblatt mass at t=1 equals target_mass; bracketing
// root-find over adaptive quadrature of the closed form.
double calibrate_C0(double target_mass, double m);

// W_K(r,t) = K f(K^{-(m-1)/2} log(r)/sqrt(t)); W_K(0,t) = K.
double eval_WK(double K, double m, const HeavisideProfileTable& f, double x, double t);

// Branching constant: k = [M0 m^{m/(m-1)} / (m-1)]^{(m-1)/m}.
double k_of_M0(double M0, double m);

double eval_peak_profile(double M0, double m, double x, double t);
double eval_peak_log(double M0, double m, double s, double t);

// Value set of the self-similar peak: singleton {(y/m)^{1/(m-1)}} on (0,k),
// {0} outside, and the full jump interval [0, (k/m)^{1/(m-1)}] at y = k.
struct ValueSet {
    double lo, hi;
};
ValueSet peak_ssvar_value(double M0, double m, double y);

double eval_traveling_wave(double K, double m, double s0, double s, double t);
double eval_U_x0(double K, double m, double x0, double x, double t);

// Unique s0 with int (w0 - W_{s0}(.,0)) ds = 0 over the field's grid.
// Requires plateau-type data: w0 within 1% of K at s_min and of 0 at s_max.
double calibrate_s0(const Field& w0_field, double K, double m);

double eval_inner_profile(double D, double m, double x, double t);

// Least-squares D over the inner window {|x| <= delta t^{-1/(m-1)}} at the
// trajectory's final time; returns the estimate and the rms fit residual.
struct InnerFit {
    double D;
    double residual_rms;
    int cells_used;
};
InnerFit fit_D(const Trajectory& traj, double delta = 1.0);

enum class LinearProfileKind { Gauss, Erfc };
// params: Gauss uses (M, omega, N); Erfc uses (K, N). log_x = log|x| is taken
// directly so callers can form moving-frame arguments without exp overflow.
double eval_linear_profile_log(LinearProfileKind kind, double coef, int N, double log_x,
                               double t);
double eval_linear_profiles(LinearProfileKind kind, double coef, int N, double x, double t);

// Stationary Holder envelopes w_-= [K - H x^alpha]_+, w_+ = K + H x^alpha.
struct HolderEnvelopePair {
    double K, H, alpha;
    double lower_radial(double x) const;
    double upper_radial(double x) const;
    double lower_log(double s) const;
    double upper_log(double s) const;
    // supersolution admissibility: (m-1) alpha - H (1 - alpha) <= 0
    bool admissible_for(double m) const;
};
HolderEnvelopePair holder_envelopes(double K, double H, double alpha);

}  // namespace pmelab

#endif
