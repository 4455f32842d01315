#include "wlct/kernels.hpp"

#include <cmath>

namespace wlct {

cplx sqrt_re_positive(cplx z) noexcept {
    cplx r = std::sqrt(z);
    if (r.real() < 0.0) r = -r;
    return r;
}

KernelParams cp_params(const ParamMatrix& M, double alpha) {
    const cplx I(0.0, 1.0);
    const cplx C = 1.0 / sqrt_re_positive(cplx(M.a(), alpha * M.b()));
    const cplx P = (I * M.d() * alpha + M.c()) / (M.b() * alpha - I * M.a());
    return {C, P};
}

KernelParams cp_params(Variant n, double lambda, double alpha) {
    return cp_params(matrix_for(n, lambda), alpha);
}

cplx gaussian_lct(const ParamMatrix& M, double alpha, double u) {
    const auto [C, P] = cp_params(M, alpha);
    return C * std::exp(P * (kPi * u * u));
}

std::vector<cplx> numeric_lct(const ParamMatrix& M, const SampledSignal& x,
                              std::span<const double> uGrid) {
    const double b = M.b();
    if (std::abs(b) <= 1e-6) {
        throw SmallBError("quadrature path needs |b| > 1e-6; use the b = 0 closed form");
    }
    // 1/sqrt(b i) = exp(-i pi/4 sign b)/sqrt|b|
    const double sgn = b > 0.0 ? 1.0 : -1.0;
    const cplx pre = std::polar(1.0 / std::sqrt(std::abs(b)), -kPi / 4.0 * sgn);
    const std::size_t N = x.size();

    std::vector<cplx> out(uGrid.size());
    for (std::size_t iu = 0; iu < uGrid.size(); ++iu) {
        const double u = uGrid[iu];
        cplx acc = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
            const double t = x.time(k);
            const double phase = kPi * (M.a() / b * t * t - 2.0 / b * u * t + M.d() / b * u * u);
            const double w = (k == 0 || k + 1 == N) ? 0.5 : 1.0;
            acc += w * x.samples[k] * std::polar(1.0, phase);
        }
        out[iu] = pre * acc * x.dt;
    }
    return out;
}

std::vector<cplx> window_samples(const WindowSpec& spec, double lambda,
                                 std::span<const double> tauGrid, int power) {
    if (power < 0 || power > 2) throw InvalidWindow("window power must be 0, 1 or 2");
    const auto [C, P] = cp_params(spec.n, lambda, spec.alpha);
    std::vector<cplx> w(tauGrid.size());
    for (std::size_t k = 0; k < tauGrid.size(); ++k) {
        const double tau = tauGrid[k];
        const double tp = power == 0 ? 1.0 : (power == 1 ? tau : tau * tau);
        w[k] = tp * C * std::exp(P * (kPi * tau * tau));
    }
    return w;
}

std::vector<double> window_time_grid(std::size_t N, double dt) {
    std::vector<double> tau(N);
    const auto half = static_cast<double>(N / 2);
    for (std::size_t k = 0; k < N; ++k) tau[k] = (static_cast<double>(k) - half) * dt;
    return tau;
}

}  // namespace wlct
