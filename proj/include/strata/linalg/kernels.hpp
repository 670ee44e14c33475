#pragma once

#include <cstddef>

// Inner-loop kernels for the dense phase of the modular rank engine.
// Residues live in [0, p) with p < 2^26, stored as doubles, so every product
// and the floor-based reduction are exact.

namespace strata::linalg::kernels {

/// y[i] <- (y[i] + c*x[i]) mod p for i in [0, n). inv_p must be 1.0/p.
using AxpyModFn = void (*)(double* y, const double* x, double c, std::size_t n, double p,
                           double inv_p);

void axpy_mod_scalar(double* y, const double* x, double c, std::size_t n, double p, double inv_p);

#if defined(__x86_64__) || defined(_M_X64)
void axpy_mod_avx2(double* y, const double* x, double c, std::size_t n, double p, double inv_p);
#endif
#if defined(__aarch64__)
void axpy_mod_neon(double* y, const double* x, double c, std::size_t n, double p, double inv_p);
#endif

/// Best kernel supported by the running CPU (cached after first call).
AxpyModFn select_axpy_mod();

/// Name of the kernel select_axpy_mod() returns: "scalar", "avx2" or "neon".
const char* active_kernel_name();

} // namespace strata::linalg::kernels
