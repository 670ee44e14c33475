// NEON variant of the modular axpy kernel (aarch64 only).

#include "strata/linalg/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace strata::linalg::kernels {

void axpy_mod_neon(double* y, const double* x, double c, std::size_t n, double p, double inv_p) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vp = vdupq_n_f64(p);
    const float64x2_t vinv = vdupq_n_f64(inv_p);
    const float64x2_t vzero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t vy = vld1q_f64(y + i);
        float64x2_t vx = vld1q_f64(x + i);
        float64x2_t t = vfmaq_f64(vy, vc, vx);
        float64x2_t q = vrndmq_f64(vmulq_f64(t, vinv));
        float64x2_t r = vsubq_f64(t, vmulq_f64(q, vp));
        uint64x2_t lt = vcltq_f64(r, vzero);
        r = vaddq_f64(r, vbslq_f64(lt, vp, vzero));
        uint64x2_t ge = vcgeq_f64(r, vp);
        r = vsubq_f64(r, vbslq_f64(ge, vp, vzero));
        vst1q_f64(y + i, r);
    }
    if (i < n) axpy_mod_scalar(y + i, x + i, c, n - i, p, inv_p);
}

} // namespace strata::linalg::kernels

#endif
