#include "pmelab/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "pmelab/numerics.hpp"

namespace pmelab {

double barenblatt_alpha(double m) { return 1.0 / (m + 1.0); }

double barenblatt_k(double m) { return (m - 1.0) / (2.0 * m * (m + 1.0)); }

namespace {

double pos_pow(double base, double expo) { return base > 0.0 ? std::pow(base, expo) : 0.0; }

}  // namespace

// --- Heaviside-trace profile --------------------------------------------------

HeavisideProfileTable::HeavisideProfileTable(double m, double tol, std::vector<double> xi,
                                             std::vector<double> f)
    : m_(m), tol_(tol), xi_(std::move(xi)), f_(std::move(f)) {
    if (xi_.size() != f_.size() || xi_.size() < 8)
        throw std::invalid_argument("HeavisideProfileTable: malformed table");
    for (std::size_t j = 0; j + 1 < xi_.size(); ++j)
        if (!(xi_[j] < xi_[j + 1]))
            throw std::invalid_argument("HeavisideProfileTable: nodes must increase");
    if (f_.back() != 0.0)
        throw std::invalid_argument("HeavisideProfileTable: contact node must carry f = 0");
    interp_ = std::make_shared<MonotoneCubic>(xi_, f_);
}

double HeavisideProfileTable::eval(double xi) const {
    if (xi <= xi_.front()) return f_.front();
    if (xi >= xi_.back()) return 0.0;
    return std::max(0.0, (*interp_)(xi));
}

void HeavisideProfileTable::write(std::ostream& os) const {
    char line[80];
    std::snprintf(line, sizeof line, "# m %.17g tol %.17g\n", m_, tol_);
    os << line;
    for (std::size_t j = 0; j < xi_.size(); ++j) {
        std::snprintf(line, sizeof line, "%.17g %.17g\n", xi_[j], f_[j]);
        os << line;
    }
}

HeavisideProfileTable HeavisideProfileTable::read(std::istream& is) {
    std::string hash, key1, key2;
    double m = 0.0, tol = 0.0;
    is >> hash >> key1 >> m >> key2 >> tol;
    if (hash != "#" || key1 != "m" || key2 != "tol")
        throw std::invalid_argument("HeavisideProfileTable::read: bad header");
    std::vector<double> xi, f;
    double a, b;
    while (is >> a >> b) {
        xi.push_back(a);
        f.push_back(b);
    }
    return HeavisideProfileTable(m, tol, std::move(xi), std::move(f));
}

HeavisideProfileTable solve_heaviside_profile(double m, double tol) {
    if (!(m > 1.0)) throw std::invalid_argument("solve_heaviside_profile: need m > 1");
    if (!(tol > 0.0 && tol < 1e-2))
        throw std::invalid_argument("solve_heaviside_profile: tol out of range");

    const double p = 1.0 / (m - 1.0);
    const double delta0 = 1e-9;  // offset of the shooting start from the contact

    // (f, I) with I = int_xi^{xi*} f; (f^m)' = -(xi f)/2 - I/2 follows from the
    // profile ODE integrated from the degenerate contact.
    auto rhs = [m](double xi, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        const double f = std::max(y[0], 1e-300);
        const double q = -0.5 * (xi * f + y[1]);
        dy[0] = q / (m * std::pow(f, m - 1.0));
        dy[1] = -f;
    };
    auto start_state = [&](double xi_star) {
        const double A = std::pow((m - 1.0) * xi_star / (2.0 * m), p);
        std::array<double, 2> y;
        y[0] = A * std::pow(delta0, p);
        y[1] = A * (m - 1.0) / m * std::pow(delta0, m / (m - 1.0));
        return y;
    };

    Rk45<2> rk;
    rk.rel_tol = 1e-12;
    rk.abs_tol = 1e-16;
    rk.initial_step = delta0 / 4.0;
    rk.max_step = 0.05;

    // Pass 1: front at xi* = 1, integrate left until f settles; its limit L
    // fixes the exact rescaling f -> f/L, xi -> xi L^{(m-1)/2}.
    double left_level = 0.0;
    {
        std::array<double, 2> y = start_state(1.0);
        double xi = 1.0 - delta0;
        for (int chunk = 0; chunk < 400; ++chunk) {
            const double xi_next = xi - 1.0;
            rk.integrate(rhs, xi, xi_next, y, {}, [](double, const std::array<double, 2>&) {});
            xi = xi_next;
            std::array<double, 2> dy;
            rhs(xi, y, dy);
            const double tail = std::fabs(dy[0]) * 2.0 * m * std::pow(y[0], m - 1.0) /
                                std::max(1.0, std::fabs(xi));
            if (xi <= -2.0 && tail <= 1e-13 * y[0]) {
                left_level = y[0];
                break;
            }
        }
        if (left_level <= 0.0)
            throw NumericalError("solve_heaviside_profile: shooting did not settle (m = " +
                                 std::to_string(m) + ")");
    }

    // Pass 2: integrate with the rescaled front so the left level is 1, and
    // collect f on a uniform table whose last node is exactly the contact.
    const double xi_star = std::pow(left_level, -(m - 1.0) / 2.0);
    const double spacing = std::clamp(0.5 * std::sqrt(tol), 1e-5, 2e-3);

    std::vector<double> xi_desc{xi_star}, f_desc{0.0};
    std::array<double, 2> y = start_state(xi_star);
    double xi = xi_star - delta0;
    {
        // march to the first table node, then chunk node-by-node leftward
        const int nodes_per_chunk = 512;
        long total_nodes = 1;
        bool settled = false;
        for (int chunk = 0; chunk < 4000 && !settled; ++chunk) {
            std::vector<double> nodes(nodes_per_chunk);
            for (int j = 0; j < nodes_per_chunk; ++j)
                nodes[j] = xi_star - (total_nodes + j) * spacing;
            rk.integrate(rhs, xi, nodes.back(), y, nodes,
                         [&](double node, const std::array<double, 2>& state) {
                             xi_desc.push_back(node);
                             f_desc.push_back(std::max(0.0, state[0]));
                         });
            xi = nodes.back();
            total_nodes += nodes_per_chunk;
            settled = (xi <= -2.0 && 1.0 - y[0] <= 0.25 * tol);
            if (xi < -300.0) break;
        }
        if (!settled)
            throw NumericalError(
                "solve_heaviside_profile: left level did not reach 1 within tol (m = " +
                std::to_string(m) + ", reached xi = " + std::to_string(xi) +
                ", f = " + std::to_string(y[0]) + ")");
    }

    std::reverse(xi_desc.begin(), xi_desc.end());
    std::reverse(f_desc.begin(), f_desc.end());
    // enforce exact uniform abscissae (integration nodes carry rounding)
    const std::size_t n = xi_desc.size();
    for (std::size_t j = 0; j < n; ++j)
        xi_desc[j] = xi_star - static_cast<double>(n - 1 - j) * spacing;

    HeavisideProfileTable table(m, tol, std::move(xi_desc), std::move(f_desc));

    // Internal residual audit of the tabulated ODE. For m > 2 the divided
    // differences themselves diverge at the degenerate contact (f' is not
    // finite there), so the audit stays away from it in that case.
    {
        const auto& X = table.xi();
        const auto& F = table.f();
        const double front_clear = (m > 2.0) ? 0.5 : 0.0;
        double worst = 0.0;
        for (std::size_t j = 1; j + 1 < X.size(); ++j) {
            if (table.xi_front() - X[j] < front_clear) continue;
            const double d2 = (std::pow(F[j + 1], m) - 2.0 * std::pow(F[j], m) +
                               std::pow(F[j - 1], m)) /
                              (spacing * spacing);
            const double d1 = (F[j + 1] - F[j - 1]) / (2.0 * spacing);
            worst = std::max(worst, std::fabs(d2 + 0.5 * X[j] * d1));
        }
        if (worst > tol)
            throw NumericalError("solve_heaviside_profile: table residual " +
                                 std::to_string(worst) + " exceeds tol");
    }
    return table;
}

double eval_WK(double K, double m, const HeavisideProfileTable& f, double x, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("eval_WK: need t > 0");
    if (!(K > 0.0)) throw std::invalid_argument("eval_WK: need K > 0");
    if (x == 0.0) return K;
    const double xi = std::pow(K, -(m - 1.0) / 2.0) * std::log(std::fabs(x)) / std::sqrt(t);
    return K * f.eval(xi);
}

// --- Barenblatt ----------------------------------------------------------------

double eval_log_barenblatt(double C0, double m, double x_or_s, double t, Variable var) {
    if (!(t > 0.0)) throw std::invalid_argument("eval_log_barenblatt: need t > 0");
    if (!(C0 > 0.0)) throw std::invalid_argument("eval_log_barenblatt: need C0 > 0");
    double s;
    if (var == Variable::Radial) {
        if (x_or_s == 0.0) return 0.0;  // s -> -inf limit
        s = std::log(std::fabs(x_or_s));
    } else {
        s = x_or_s;
    }
    const double a = barenblatt_alpha(m);
    const double k = barenblatt_k(m);
    const double sigma = s / std::pow(t, a);
    return std::pow(t, -a) * pos_pow(C0 - k * sigma * sigma, 1.0 / (m - 1.0));
}

double calibrate_C0(double target_mass, double m) {
    if (!(target_mass > 0.0)) throw std::invalid_argument("calibrate_C0: need positive mass");
    if (!(m > 1.0)) throw std::invalid_argument("calibrate_C0: need m > 1");
    const double k = barenblatt_k(m);
    // int [C - k s^2]_+^{1/(m-1)} ds via s = sqrt(C/k) sin(theta): the theta
    // integral is smooth and C-independent.
    const double expo = (m + 1.0) / (m - 1.0);
    const double itheta = adaptive_simpson(
        [expo](double th) { return std::pow(std::cos(th), expo); }, -M_PI / 2.0, M_PI / 2.0,
        1e-13);
    auto mass_of = [&](double C0) {
        return std::pow(C0, 1.0 / (m - 1.0)) * std::sqrt(C0 / k) * itheta;
    };
    double lo = 1.0, hi = 1.0;
    int guard = 0;
    while (mass_of(lo) > target_mass && ++guard < 600) lo *= 0.25;
    while (mass_of(hi) < target_mass && ++guard < 1200) hi *= 4.0;
    if (guard >= 1200) throw std::invalid_argument("calibrate_C0: could not bracket mass");
    return brent_root([&](double C0) { return mass_of(C0) - target_mass; }, lo, hi, 1e-15);
}

// --- Peak ------------------------------------------------------------------------

double k_of_M0(double M0, double m) {
    if (!(M0 > 0.0)) throw std::invalid_argument("k_of_M0: need M0 > 0");
    if (!(m > 1.0)) throw std::invalid_argument("k_of_M0: need m > 1");
    return std::pow(M0 * std::pow(m, m / (m - 1.0)) / (m - 1.0), (m - 1.0) / m);
}

double eval_peak_log(double M0, double m, double s, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("eval_peak_log: need t > 0");
    const double k = k_of_M0(M0, m);
    const double tm = std::pow(t, 1.0 / m);
    if (s >= k * tm) return 0.0;
    return pos_pow(s / (m * tm), 1.0 / (m - 1.0)) / tm;
}

double eval_peak_profile(double M0, double m, double x, double t) {
    if (x == 0.0) return 0.0;
    return eval_peak_log(M0, m, std::log(std::fabs(x)), t);
}

ValueSet peak_ssvar_value(double M0, double m, double y) {
    const double k = k_of_M0(M0, m);
    if (y > k) return {0.0, 0.0};
    const double v = pos_pow(y / m, 1.0 / (m - 1.0));
    if (y == k) return {0.0, v};
    return {v, v};
}

// --- Traveling waves ---------------------------------------------------------------

TravelingWave make_traveling_wave(double K, double m, double s0) {
    if (!(K > 0.0)) throw std::invalid_argument("make_traveling_wave: need K > 0");
    if (!(m > 1.0)) throw std::invalid_argument("make_traveling_wave: need m > 1");
    return TravelingWave{K, std::pow(K, m - 1.0), s0, m};
}

double eval_traveling_wave(double K, double m, double s0, double s, double t) {
    const double c = std::pow(K, m - 1.0);
    const double bracket = c - std::exp((m - 1.0) * (s - s0 - c * t) / m);
    return pos_pow(bracket, 1.0 / (m - 1.0));
}

double eval_U_x0(double K, double m, double x0, double x, double t) {
    if (!(x0 > 0.0)) throw std::invalid_argument("eval_U_x0: need x0 > 0");
    if (x == 0.0) return K;
    return eval_traveling_wave(K, m, std::log(x0), std::log(std::fabs(x)), t);
}

double calibrate_s0(const Field& w0_field, double K, double m) {
    validate_field(w0_field, "calibrate_s0");
    if (!(K > 0.0)) throw std::invalid_argument("calibrate_s0: need K > 0");
    if (!(m > 1.0)) throw std::invalid_argument("calibrate_s0: need m > 1");
    const auto& w = w0_field.values;
    if (std::fabs(w.front() - K) > 0.01 * K)
        throw HypothesisError("calibrate_s0: datum is not within 1% of K at s_min");
    if (w.back() > 0.01 * K)
        throw HypothesisError("calibrate_s0: datum is not within 1% of 0 at s_max");

    const Grid1D& g = w0_field.grid;
    double datum_mass = 0.0;
    for (double v : w) datum_mass += v;
    datum_mass *= g.h;

    // g(s0) = int (w0 - W_{s0}(.,0)) ds is strictly decreasing in s0
    auto imbalance = [&](double s0) {
        double tw_mass = 0.0;
        for (int i = 0; i < g.n_cells; ++i)
            tw_mass += eval_traveling_wave(K, m, s0, g.center(i), 0.0);
        return datum_mass - tw_mass * g.h;
    };
    const double span = g.s_max - g.s_min;
    double lo = g.s_min - span, hi = g.s_max + span;
    int expand = 0;
    while (imbalance(lo) < 0.0 && expand++ < 60) lo -= span;
    while (imbalance(hi) > 0.0 && expand++ < 60) hi += span;
    const double s0 =
        brent_root([&](double v) { return imbalance(v); }, lo, hi, 1e-13);
    if (std::fabs(imbalance(s0)) > 1e-8 * K * span)
        throw NumericalError("calibrate_s0: mass-matching residual above tolerance");
    return s0;
}

// --- Inner profile -------------------------------------------------------------------

double eval_inner_profile(double D, double m, double x, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("eval_inner_profile: need t > 0");
    if (!(m > 1.0)) throw std::invalid_argument("eval_inner_profile: need m > 1");
    if (x == 0.0) return 0.0;
    const double scale = std::pow(t, -1.0 / (m - 1.0));
    const double bracket = D + (std::log(std::fabs(x)) - std::log(scale)) / m;
    return scale * pos_pow(bracket, 1.0 / (m - 1.0));
}

InnerFit fit_D(const Trajectory& traj, double delta) {
    if (traj.fields.empty()) throw std::invalid_argument("fit_D: empty trajectory");
    if (!(traj.m > 1.0)) throw std::invalid_argument("fit_D: need m > 1");
    const Field& f = traj.fields.back();
    const double t = f.t;
    const double m = traj.m;
    const double s_cut = std::log(delta) - std::log(t) / (m - 1.0);
    const double tscale = std::pow(t, 1.0 / (m - 1.0));

    // in the inner window, z = (t^{1/(m-1)} w)^{m-1} is linear in s with slope
    // 1/m and intercept D; least squares reduces to a mean
    std::vector<double> resid;
    for (int i = 0; i < f.grid.n_cells; ++i) {
        const double s = f.grid.center(i);
        if (s > s_cut || f.values[i] <= 0.0) continue;
        const double z = std::pow(tscale * f.values[i], m - 1.0);
        resid.push_back(z - (s + std::log(t) / (m - 1.0)) / m);
    }
    if (resid.size() < 3) throw std::invalid_argument("fit_D: inner window is empty");
    double mean = 0.0;
    for (double r : resid) mean += r;
    mean /= static_cast<double>(resid.size());
    double rms = 0.0;
    for (double r : resid) rms += (r - mean) * (r - mean);
    rms = std::sqrt(rms / static_cast<double>(resid.size()));
    return InnerFit{mean, rms, static_cast<int>(resid.size())};
}

// --- Linear (m = 1) profiles ------------------------------------------------------------

double eval_linear_profile_log(LinearProfileKind kind, double coef, int N, double log_x,
                               double t) {
    if (!(t > 0.0)) throw std::invalid_argument("eval_linear_profile_log: need t > 0");
    if (N != 1 && N != 2) throw std::invalid_argument("eval_linear_profile_log: N in {1,2}");
    const double xi = (log_x + (N - 2) * t) / (2.0 * std::sqrt(t));
    if (kind == LinearProfileKind::Gauss)
        return coef / std::sqrt(4.0 * M_PI * t) * std::exp(-xi * xi);
    return coef * std::erfc(xi);
}

double eval_linear_profiles(LinearProfileKind kind, double coef, int N, double x, double t) {
    if (x == 0.0) {
        // conventions at the origin: the gauss profile vanishes, the erfc one
        // takes the plateau value K = 2 * coef
        return kind == LinearProfileKind::Gauss ? 0.0 : 2.0 * coef;
    }
    return eval_linear_profile_log(kind, coef, N, std::log(std::fabs(x)), t);
}

// --- Holder envelopes ----------------------------------------------------------------------

double HolderEnvelopePair::lower_radial(double x) const {
    return std::max(0.0, K - H * std::pow(std::fabs(x), alpha));
}
double HolderEnvelopePair::upper_radial(double x) const {
    return K + H * std::pow(std::fabs(x), alpha);
}
double HolderEnvelopePair::lower_log(double s) const {
    return std::max(0.0, K - H * std::exp(alpha * s));
}
double HolderEnvelopePair::upper_log(double s) const {
    return K + H * std::exp(alpha * s);
}
bool HolderEnvelopePair::admissible_for(double m) const {
    return (m - 1.0) * alpha - H * (1.0 - alpha) <= 0.0;
}

HolderEnvelopePair holder_envelopes(double K, double H, double alpha) {
    if (!(K > 0.0 && H > 0.0)) throw std::invalid_argument("holder_envelopes: need K, H > 0");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("holder_envelopes: need alpha in (0,1)");
    return HolderEnvelopePair{K, H, alpha};
}

// --- Generic dispatch -------------------------------------------------------------------------

double eval_profile_log(const Profile& p, double s, double t) {
    return std::visit(
        [s, t](const auto& prof) -> double {
            using T = std::decay_t<decltype(prof)>;
            if constexpr (std::is_same_v<T, LogBarenblatt>) {
                return eval_log_barenblatt(prof.C0, prof.m, s, t, Variable::Log);
            } else if constexpr (std::is_same_v<T, HeavisideSS>) {
                if (!prof.f) throw std::invalid_argument("HeavisideSS: missing f table");
                if (!(t > 0.0)) throw std::invalid_argument("HeavisideSS: need t > 0");
                const double xi =
                    std::pow(prof.K, -(prof.m - 1.0) / 2.0) * s / std::sqrt(t);
                return prof.K * prof.f->eval(xi);
            } else if constexpr (std::is_same_v<T, Peak>) {
                return eval_peak_log(prof.M0, prof.m, s, t);
            } else if constexpr (std::is_same_v<T, TravelingWave>) {
                return eval_traveling_wave(prof.K, prof.m, prof.s0, s, t);
            } else if constexpr (std::is_same_v<T, InnerLog>) {
                const double scale = std::pow(t, -1.0 / (prof.m - 1.0));
                const double bracket = prof.D + (s - std::log(scale)) / prof.m;
                return scale * pos_pow(bracket, 1.0 / (prof.m - 1.0));
            } else if constexpr (std::is_same_v<T, LinGauss>) {
                return eval_linear_profile_log(LinearProfileKind::Gauss,
                                               prof.M / prof.omega, prof.N, s, t);
            } else if constexpr (std::is_same_v<T, LinErfc>) {
                return eval_linear_profile_log(LinearProfileKind::Erfc, prof.K / 2.0, prof.N,
                                               s, t);
            } else {
                static_assert(std::is_same_v<T, HolderEnvelope>);
                HolderEnvelopePair pair{prof.K, prof.H, prof.alpha};
                return prof.sign < 0 ? pair.lower_log(s) : pair.upper_log(s);
            }
        },
        p);
}

double eval_profile_radial(const Profile& p, double x, double t) {
    if (x != 0.0) return eval_profile_log(p, std::log(std::fabs(x)), t);
    // origin conventions per profile
    return std::visit(
        [t](const auto& prof) -> double {
            using T = std::decay_t<decltype(prof)>;
            if constexpr (std::is_same_v<T, HeavisideSS>) {
                return prof.K;
            } else if constexpr (std::is_same_v<T, TravelingWave>) {
                return prof.K;
            } else if constexpr (std::is_same_v<T, LinErfc>) {
                return prof.K;
            } else if constexpr (std::is_same_v<T, HolderEnvelope>) {
                return prof.K;
            } else {
                (void)t;
                return 0.0;
            }
        },
        p);
}

SnapshotDatum snapshot_datum(const Profile& p, double t0) {
    std::ostringstream label;
    label << "profile-snapshot(t0=" << t0 << ")";
    return SnapshotDatum{[p, t0](double s) { return eval_profile_log(p, s, t0); },
                         label.str()};
}

}  // namespace pmelab
