// Test-only oracles, independent of the library's implementation paths:
// fixed-rule quadrature, long-double finite-difference PDE residuals, and a
// tiny deterministic RNG.
#ifndef PMELAB_TESTS_ORACLES_HPP
#define PMELAB_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

namespace oracle {

// Composite Simpson with a fixed (even) panel count; deliberately not the
// library's adaptive routine.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    double acc = f(a) + f(b);
    for (int i = 1; i < panels; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// |w_t - (w^m)_ss + b (w^m)_s| at (s,t) by long-double central differences.
inline double pde_residual(const std::function<long double(long double, long double)>& w,
                           double m, int b, double s, double t, double hs, double ht) {
    const long double S = s, T = t, H = hs, HT = ht, M = m;
    auto Wp = [&](long double x, long double tau) { return std::pow(w(x, tau), M); };
    const long double wt = (w(S, T + HT) - w(S, T - HT)) / (2.0L * HT);
    const long double wss = (Wp(S + H, T) - 2.0L * Wp(S, T) + Wp(S - H, T)) / (H * H);
    const long double ws = (Wp(S + H, T) - Wp(S - H, T)) / (2.0L * H);
    return static_cast<double>(std::fabs(wt - wss + static_cast<long double>(b) * ws));
}

// residual of the stationary conservation law w_t + (w^m)_s = 0
inline double conservation_residual(
    const std::function<long double(long double, long double)>& w, double m, double s,
    double t, double hs, double ht) {
    const long double S = s, T = t, H = hs, HT = ht, M = m;
    auto Wp = [&](long double x, long double tau) { return std::pow(w(x, tau), M); };
    const long double wt = (w(S, T + HT) - w(S, T - HT)) / (2.0L * HT);
    const long double ws = (Wp(S + H, T) - Wp(S - H, T)) / (2.0L * H);
    return static_cast<double>(std::fabs(wt + ws));
}

// deterministic xorshift for property-style inputs
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    double uniform() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<double>(state >> 11) * 0x1.0p-53;
    }
};

inline std::filesystem::path fresh_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("pmelab_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace oracle

#endif
