// Explicit finite-volume step kernels. The OpenMP kernel is the production
// path; the serial kernel is the reference the tests compare against. Both
// compute each output cell independently with identical arithmetic, so
// results are bit-identical regardless of thread count.
#ifndef PMELAB_KERNELS_HPP
#define PMELAB_KERNELS_HPP

#include <cmath>

namespace pmelab::kernels {

enum class PowCase { One, Two, Three, General };

inline PowCase pow_case(double m) {
    if (m == 1.0) return PowCase::One;
    if (m == 2.0) return PowCase::Two;
    if (m == 3.0) return PowCase::Three;
    return PowCase::General;
}

inline double pow_m(double w, double m, PowCase pc) {
    switch (pc) {
        case PowCase::One: return w;
        case PowCase::Two: return w * w;
        case PowCase::Three: return w * w * w;
        default: return std::pow(w, m);
    }
}

// Boundary data with the Dirichlet ghost values already raised to the m-th
// power; a non-Dirichlet side is a zero-flux face.
struct BCPack {
    bool left_dirichlet = false;
    double WgL = 0.0;
    bool right_dirichlet = false;
    double WgR = 0.0;
};

struct StepStats {
    double max_w = 0.0;          // max of the clamped output
    double min_unclamped = 0.0;  // most negative value before clamping
    bool nonfinite = false;
};

// Total face flux G = (W_R - W_L)/h - b*W_L (diffusive two-point flux plus
// upwind convective flux taken from the left cell; the wave speed of the
// convective part is nonnegative). Faces 0 and n honor the boundary pack.
inline double face_flux(const double* W, int face, int n, double inv_h, double b,
                        const BCPack& bc) {
    double Wl, Wr;
    if (face == 0) {
        if (!bc.left_dirichlet) return 0.0;
        Wl = bc.WgL;
        Wr = W[0];
    } else if (face == n) {
        if (!bc.right_dirichlet) return 0.0;
        Wl = W[n - 1];
        Wr = bc.WgR;
    } else {
        Wl = W[face - 1];
        Wr = W[face];
    }
    return (Wr - Wl) * inv_h - b * Wl;
}

// One conservative step w_out = w + (dt/h)(G_{i+1/2} - G_{i-1/2}) on W = w^m.
// Wbuf is scratch of size n. Output negativity in [-inf, 0) is clamped to 0;
// the most negative pre-clamp value is reported so the caller can distinguish
// rounding noise from scheme bugs.
StepStats fv_step_serial(const double* w, double* Wbuf, double* out, int n, double m,
                         PowCase pc, double h, double dt, double b, const BCPack& bc);
StepStats fv_step_omp(const double* w, double* Wbuf, double* out, int n, double m,
                      PowCase pc, double h, double dt, double b, const BCPack& bc);

// Max of w (serial and OpenMP variants; max reductions are order-independent).
double max_value_serial(const double* w, int n);
double max_value_omp(const double* w, int n);

}  // namespace pmelab::kernels

#endif
