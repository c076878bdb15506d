#include "pmelab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pmelab {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw std::invalid_argument("MonotoneCubic: need >= 2 nodes");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(x_[i] < x_[i + 1])) throw std::invalid_argument("MonotoneCubic: nodes must strictly increase");

    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        delta[i] = (y_[i + 1] - y_[i]) / h[i];
    }

    d_.assign(n, 0.0);
    if (n == 2) {
        d_[0] = d_[1] = delta[0];
    } else {
        // interior tangents: weighted harmonic mean where secants agree in sign
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (delta[i - 1] * delta[i] <= 0.0) {
                d_[i] = 0.0;
            } else {
                const double w1 = 2.0 * h[i] + h[i - 1];
                const double w2 = h[i] + 2.0 * h[i - 1];
                d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
            }
        }
        auto endpoint = [](double h0, double h1, double d0, double d1) {
            double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
            if (d * d0 <= 0.0) return 0.0;
            if (d0 * d1 < 0.0 && std::fabs(d) > 3.0 * std::fabs(d0)) return 3.0 * d0;
            return d;
        };
        d_[0] = endpoint(h[0], h[1], delta[0], delta[1]);
        d_[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    }

    // detect uniform spacing for O(1) interval lookup
    const double h0 = h[0];
    bool uniform = true;
    for (double hi : h)
        if (std::fabs(hi - h0) > 1e-12 * std::fabs(h0)) { uniform = false; break; }
    uniform_h_ = uniform ? h0 : 0.0;
}

double MonotoneCubic::operator()(double xq) const {
    if (xq < x_.front() || xq > x_.back())
        throw std::domain_error("MonotoneCubic: query outside sampled range");
    std::size_t i;
    if (uniform_h_ > 0.0) {
        i = static_cast<std::size_t>(std::min<double>(
            std::max(0.0, std::floor((xq - x_.front()) / uniform_h_)),
            static_cast<double>(x_.size() - 2)));
    } else {
        i = static_cast<std::size_t>(
            std::upper_bound(x_.begin(), x_.end(), xq) - x_.begin());
        i = std::min(std::max<std::size_t>(i, 1) - 1, x_.size() - 2);
    }
    const double h = x_[i + 1] - x_[i];
    const double u = (xq - x_[i]) / h;
    const double u2 = u * u, u3 = u2 * u;
    const double h00 = 2 * u3 - 3 * u2 + 1;
    const double h10 = u3 - 2 * u2 + u;
    const double h01 = -2 * u3 + 3 * u2;
    const double h11 = u3 - u2;
    return h00 * y_[i] + h * h10 * d_[i] + h01 * y_[i + 1] + h * h11 * d_[i + 1];
}

std::vector<double> resample_monotone(const std::vector<double>& xs,
                                      const std::vector<double>& ys,
                                      const std::vector<double>& queries) {
    const MonotoneCubic interp(xs, ys);
    std::vector<double> out;
    out.reserve(queries.size());
    for (double q : queries) out.push_back(interp(q));
    return out;
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double fa,
                            double b, double fb, double m, double fm, double whole,
                            double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double err = left + right - whole;
    if (depth <= 0 || std::fabs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    return adaptive_simpson_rec(f, a, fa, b, fb, m, fm, simpson(a, fa, b, fb, fm), tol,
                                max_depth);
}

double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol, int max_iter) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::invalid_argument("brent_root: interval does not bracket");
    if (std::fabs(fa) < std::fabs(fb)) { std::swap(a, b); std::swap(fa, fb); }
    double c = a, fc = fa, d = b - a;
    bool mflag = true;
    for (int it = 0; it < max_iter; ++it) {
        if (fb == 0.0 || std::fabs(b - a) < xtol) return b;
        double s;
        if (fa != fc && fb != fc) {
            s = a * fb * fc / ((fa - fb) * (fa - fc)) +
                b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa);
        }
        const double lo = (3.0 * a + b) / 4.0;
        const bool cond = !((s > std::min(lo, b) && s < std::max(lo, b))) ||
                          (mflag && std::fabs(s - b) >= std::fabs(b - c) / 2.0) ||
                          (!mflag && std::fabs(s - b) >= std::fabs(c - d) / 2.0) ||
                          (mflag && std::fabs(b - c) < xtol) ||
                          (!mflag && std::fabs(c - d) < xtol);
        if (cond) { s = 0.5 * (a + b); mflag = true; } else { mflag = false; }
        const double fs = f(s);
        d = c; c = b; fc = fb;
        if (fa * fs < 0.0) { b = s; fb = fs; } else { a = s; fa = fs; }
        if (std::fabs(fa) < std::fabs(fb)) { std::swap(a, b); std::swap(fa, fb); }
    }
    return b;
}

template <std::size_t N>
void Rk45<N>::integrate(const Rhs& rhs, double x0, double x1, State& y,
                        const std::vector<double>& nodes,
                        const std::function<void(double, const State&)>& on_node) const {
    // Cash-Karp coefficients
    static constexpr double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 0.875;
    static constexpr double b21 = 0.2;
    static constexpr double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
    static constexpr double b41 = 0.3, b42 = -0.9, b43 = 1.2;
    static constexpr double b51 = -11.0 / 54.0, b52 = 2.5, b53 = -70.0 / 27.0, b54 = 35.0 / 27.0;
    static constexpr double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0, b63 = 575.0 / 13824.0,
                            b64 = 44275.0 / 110592.0, b65 = 253.0 / 4096.0;
    static constexpr double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0, c4 = 125.0 / 594.0,
                            c6 = 512.0 / 1771.0;
    static constexpr double dc1 = c1 - 2825.0 / 27648.0, dc3 = c3 - 18575.0 / 48384.0,
                            dc4 = c4 - 13525.0 / 55296.0, dc5 = -277.0 / 14336.0,
                            dc6 = c6 - 0.25;

    const double dir = (x1 >= x0) ? 1.0 : -1.0;
    double x = x0;
    double hstep = dir * std::min(initial_step, max_step);
    std::size_t next_node = 0;

    State k1, k2, k3, k4, k5, k6, ytmp, yerr, ynew;
    int guard = 0;
    while (dir * (x1 - x) > 0.0) {
        if (++guard > 50'000'000) throw std::runtime_error("Rk45: step limit exceeded");
        double target = x1;
        if (next_node < nodes.size() && dir * (nodes[next_node] - x1) <= 0.0)
            target = nodes[next_node];
        if (dir * (x + hstep - target) > 0.0) hstep = target - x;

        rhs(x, y, k1);
        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + hstep * b21 * k1[i];
        rhs(x + a2 * hstep, ytmp, k2);
        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + hstep * (b31 * k1[i] + b32 * k2[i]);
        rhs(x + a3 * hstep, ytmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + hstep * (b41 * k1[i] + b42 * k2[i] + b43 * k3[i]);
        rhs(x + a4 * hstep, ytmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + hstep * (b51 * k1[i] + b52 * k2[i] + b53 * k3[i] + b54 * k4[i]);
        rhs(x + a5 * hstep, ytmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + hstep * (b61 * k1[i] + b62 * k2[i] + b63 * k3[i] + b64 * k4[i] +
                                      b65 * k5[i]);
        rhs(x + a6 * hstep, ytmp, k6);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            ynew[i] = y[i] + hstep * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
            yerr[i] = hstep * (dc1 * k1[i] + dc3 * k3[i] + dc4 * k4[i] + dc5 * k5[i] +
                               dc6 * k6[i]);
            const double scale = abs_tol + rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
            err = std::max(err, std::fabs(yerr[i]) / scale);
        }

        if (err <= 1.0) {
            x += hstep;
            y = ynew;
            while (next_node < nodes.size() &&
                   std::fabs(x - nodes[next_node]) <= 1e-14 * (1.0 + std::fabs(x))) {
                on_node(nodes[next_node], y);
                ++next_node;
            }
            const double grow = (err > 1e-10) ? 0.9 * std::pow(err, -0.2) : 5.0;
            hstep *= std::min(5.0, grow);
        } else {
            hstep *= std::max(0.1, 0.9 * std::pow(err, -0.25));
        }
        if (std::fabs(hstep) > max_step) hstep = dir * max_step;
        if (std::fabs(hstep) < 1e-16 * (1.0 + std::fabs(x)))
            throw std::runtime_error("Rk45: step underflow");
    }
}

template struct Rk45<2>;

}  // namespace pmelab
