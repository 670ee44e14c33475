#include "strata/linalg/kernels.hpp"

#include <cmath>

namespace strata::linalg::kernels {

void axpy_mod_scalar(double* y, const double* x, double c, std::size_t n, double p,
                     double inv_p) {
    for (std::size_t i = 0; i < n; ++i) {
        double t = y[i] + c * x[i]; // < p^2 + p < 2^53, exact
        double q = std::floor(t * inv_p);
        double r = t - q * p;
        if (r < 0) r += p;
        if (r >= p) r -= p;
        y[i] = r;
    }
}

namespace {

AxpyModFn pick() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return axpy_mod_avx2;
#elif defined(__aarch64__)
    return axpy_mod_neon;
#endif
    return axpy_mod_scalar;
}

} // namespace

AxpyModFn select_axpy_mod() {
    static const AxpyModFn fn = pick();
    return fn;
}

const char* active_kernel_name() {
    AxpyModFn fn = select_axpy_mod();
#if defined(__x86_64__) || defined(_M_X64)
    if (fn == axpy_mod_avx2) return "avx2";
#elif defined(__aarch64__)
    if (fn == axpy_mod_neon) return "neon";
#endif
    return "scalar";
}

} // namespace strata::linalg::kernels
