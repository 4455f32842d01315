#pragma once

#include <span>
#include <vector>

#include "wlct/core.hpp"

namespace wlct {

/// Closed-form LCT of the Gaussian window: L_g^M(u) = C exp(P pi u^2).
struct KernelParams {
    cplx C;
    cplx P;
};

/// Square root with nonnegative real part (principal branch, ties on the
/// negative real axis resolved to +i sqrt|z|).
cplx sqrt_re_positive(cplx z) noexcept;

/// C = 1/sqrt(a + i alpha b), P = (i d alpha + c)/(b alpha - i a). Covers b = 0.
KernelParams cp_params(const ParamMatrix& M, double alpha);

/// Window coefficients of family n at chirp parameter lambda.
KernelParams cp_params(Variant n, double lambda, double alpha);

cplx gaussian_lct(const ParamMatrix& M, double alpha, double u);

/// Trapezoidal quadrature of the LCT integral on the signal's sample grid.
/// Oracle only; throws SmallBError when |b| <= 1e-6.
std::vector<cplx> numeric_lct(const ParamMatrix& M, const SampledSignal& x,
                              std::span<const double> uGrid);

/// tau_k^d * C_n(lambda) * exp(P_n(lambda) pi tau_k^2).
std::vector<cplx> window_samples(const WindowSpec& spec, double lambda,
                                 std::span<const double> tauGrid, int power);

/// tau_k = (k - floor(N/2)) dt for k = 0..N-1.
std::vector<double> window_time_grid(std::size_t N, double dt);

}  // namespace wlct
