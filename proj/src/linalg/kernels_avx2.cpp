// AVX2+FMA variant of the modular axpy kernel. Compiled with -mavx2 -mfma;
// callers reach it only after a cpuid check in select_axpy_mod().

#include "strata/linalg/kernels.hpp"

#include <immintrin.h>

namespace strata::linalg::kernels {

void axpy_mod_avx2(double* y, const double* x, double c, std::size_t n, double p, double inv_p) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vp = _mm256_set1_pd(p);
    const __m256d vinv = _mm256_set1_pd(inv_p);
    const __m256d vzero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d t = _mm256_fmadd_pd(vc, vx, vy);
        __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
        __m256d r = _mm256_fnmadd_pd(q, vp, t);
        // one floor-rounding correction in each direction
        __m256d lt = _mm256_cmp_pd(r, vzero, _CMP_LT_OQ);
        r = _mm256_add_pd(r, _mm256_and_pd(lt, vp));
        __m256d ge = _mm256_cmp_pd(r, vp, _CMP_GE_OQ);
        r = _mm256_sub_pd(r, _mm256_and_pd(ge, vp));
        _mm256_storeu_pd(y + i, r);
    }
    if (i < n) axpy_mod_scalar(y + i, x + i, c, n - i, p, inv_p);
}

} // namespace strata::linalg::kernels
