#include "pmelab/kernels.hpp"

#include <algorithm>

namespace pmelab::kernels {

StepStats fv_step_serial(const double* w, double* Wbuf, double* out, int n, double m,
                         PowCase pc, double h, double dt, double b, const BCPack& bc) {
    const double inv_h = 1.0 / h;
    const double dt_over_h = dt * inv_h;
    for (int i = 0; i < n; ++i) Wbuf[i] = pow_m(w[i], m, pc);
    StepStats st;
    double maxw = 0.0, minu = 0.0;
    bool bad = false;
    for (int i = 0; i < n; ++i) {
        const double g = face_flux(Wbuf, i + 1, n, inv_h, b, bc) -
                         face_flux(Wbuf, i, n, inv_h, b, bc);
        double v = w[i] + dt_over_h * g;
        minu = std::min(minu, v);
        if (v < 0.0) v = 0.0;
        if (!std::isfinite(v)) bad = true;
        maxw = std::max(maxw, v);
        out[i] = v;
    }
    st.max_w = maxw;
    st.min_unclamped = minu;
    st.nonfinite = bad;
    return st;
}

StepStats fv_step_omp(const double* w, double* Wbuf, double* out, int n, double m,
                      PowCase pc, double h, double dt, double b, const BCPack& bc) {
    const double inv_h = 1.0 / h;
    const double dt_over_h = dt * inv_h;
    StepStats st;
    double maxw = 0.0, minu = 0.0;
    bool bad = false;
    // one parallel region; the implied barrier after the first loop makes the
    // full W array visible to the update loop
#pragma omp parallel
    {
#pragma omp for schedule(static)
        for (int i = 0; i < n; ++i) Wbuf[i] = pow_m(w[i], m, pc);
#pragma omp for schedule(static) reduction(max : maxw) reduction(min : minu) \
    reduction(|| : bad)
        for (int i = 0; i < n; ++i) {
            const double g = face_flux(Wbuf, i + 1, n, inv_h, b, bc) -
                             face_flux(Wbuf, i, n, inv_h, b, bc);
            double v = w[i] + dt_over_h * g;
            minu = std::min(minu, v);
            if (v < 0.0) v = 0.0;
            if (!std::isfinite(v)) bad = true;
            maxw = std::max(maxw, v);
            out[i] = v;
        }
    }
    st.max_w = maxw;
    st.min_unclamped = minu;
    st.nonfinite = bad;
    return st;
}

double max_value_serial(const double* w, int n) {
    double m = 0.0;
    for (int i = 0; i < n; ++i) m = std::max(m, w[i]);
    return m;
}

double max_value_omp(const double* w, int n) {
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (int i = 0; i < n; ++i) m = std::max(m, w[i]);
    return m;
}

}  // namespace pmelab::kernels
