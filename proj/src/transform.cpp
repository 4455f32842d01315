#include "wlct/transform.hpp"

#include <cmath>

#include "wlct/simd/kernels.hpp"

namespace wlct {

namespace {

// tau of FFT position p
double position_tau(std::size_t p, std::size_t N, double dt) {
    const std::size_t half = N / 2;
    return p < N - half ? static_cast<double>(p) * dt
                        : (static_cast<double>(p) - static_cast<double>(N)) * dt;
}

}  // namespace

WindowBank::WindowBank(const WindowSpec& spec, const TFCGrid& grid, int maxPower)
    : N_(grid.N), maxPower_(maxPower) {
    validate(spec);
    if (maxPower < 0 || maxPower > 2) throw InvalidWindow("window power must be 0, 1 or 2");
    const std::size_t Nc = grid.Nc();
    cp_.reserve(Nc);
    for (int d = 0; d <= maxPower; ++d) w_[static_cast<std::size_t>(d)].resize(Nc * N_);

    std::vector<double> tau(N_);
    for (std::size_t p = 0; p < N_; ++p) tau[p] = position_tau(p, N_, grid.dt);

    for (std::size_t l = 0; l < Nc; ++l) {
        const KernelParams kp = cp_params(spec.n, grid.chirpAxis[l], spec.alpha);
        cp_.push_back(kp);
        for (std::size_t p = 0; p < N_; ++p) {
            const cplx w = kp.C * std::exp(kp.P * (kPi * tau[p] * tau[p]));
            w_[0][l * N_ + p] = w;
            if (maxPower >= 1) w_[1][l * N_ + p] = tau[p] * w;
            if (maxPower >= 2) w_[2][l * N_ + p] = tau[p] * tau[p] * w;
        }
    }
}

WlctEngine::WlctEngine(const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid,
                       int maxPower)
    : x_(x), spec_(spec), grid_(grid), bank_(spec, grid, maxPower), fft_(grid.N) {
    check_grid(grid, x);
}

void WlctEngine::load_frame(std::size_t m, Scratch& s) const {
    if (s.loadedFrame == m) return;
    const std::size_t N = grid_.N;
    const std::size_t half = N / 2;
    const auto center = static_cast<std::ptrdiff_t>(grid_.frameSample(m));
    // position p maps to sample center + p (p < N - half) or center + p - N
    for (std::size_t p = 0; p < N; ++p) {
        const std::ptrdiff_t idx = p < N - half ? center + static_cast<std::ptrdiff_t>(p)
                                                : center + static_cast<std::ptrdiff_t>(p) -
                                                      static_cast<std::ptrdiff_t>(N);
        s.segment[p] = (idx >= 0 && idx < static_cast<std::ptrdiff_t>(N))
                           ? x_.samples[static_cast<std::size_t>(idx)]
                           : cplx(0.0, 0.0);
    }
    s.loadedFrame = m;
}

void WlctEngine::column(std::size_t l, std::size_t m, Scratch& s, std::array<cplx*, 3> out) const {
    load_frame(m, s);
    const auto& k = simd::active();
    const std::size_t N = grid_.N;
    const std::size_t Nf = grid_.Nf();
    const double dt = grid_.dt;
    for (int d = 0; d <= bank_.maxPower(); ++d) {
        cplx* dst = out[static_cast<std::size_t>(d)];
        if (dst == nullptr) continue;
        k.cmul(s.segment.data(), bank_.window(l, d), s.buffer.data(), N);
        fft_.execute(s.buffer);
        for (std::size_t j = 0; j < Nf; ++j) dst[j] = s.buffer[j] * dt;
    }
}

ComplexCube wlct_cube(const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid, int power) {
    if (power < 0 || power > 2) throw InvalidWindow("window power must be 0, 1 or 2");
    check_grid(grid, x);
    // Only the requested power is needed; build a bank up to it and skip the rest.
    const WlctEngine engine(x, spec, grid, power);
    const std::size_t Nc = grid.Nc(), Nf = grid.Nf(), F = grid.frames();
    ComplexCube cube(Nc, Nf, F);

#pragma omp parallel
    {
        auto scratch = engine.make_scratch();
        std::vector<cplx> col(Nf);
        std::array<cplx*, 3> out{nullptr, nullptr, nullptr};
        out[static_cast<std::size_t>(power)] = col.data();
#pragma omp for schedule(static)
        for (std::ptrdiff_t mi = 0; mi < static_cast<std::ptrdiff_t>(F); ++mi) {
            const auto m = static_cast<std::size_t>(mi);
            for (std::size_t l = 0; l < Nc; ++l) {
                engine.column(l, m, scratch, out);
                for (std::size_t j = 0; j < Nf; ++j) cube(l, j, m) = col[j];
            }
        }
    }
    return cube;
}

RealCube magnitude_cube(const ComplexCube& cube) {
    RealCube out(cube.dim0(), cube.dim1(), cube.dim2());
    simd::active().cabs(cube.data().data(), out.data().data(), cube.size());
    return out;
}

cplx wlct_point(const SampledSignal& x, const WindowSpec& spec, std::size_t sample, double xi,
                double lambda, int power) {
    const auto [C, P] = cp_params(spec.n, lambda, spec.alpha);
    const std::size_t N = x.size();
    const auto half = static_cast<std::ptrdiff_t>(N / 2);
    cplx acc = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        const std::ptrdiff_t off = static_cast<std::ptrdiff_t>(k) - half;
        const std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(sample) + off;
        if (idx < 0 || idx >= static_cast<std::ptrdiff_t>(N)) continue;
        const double tau = static_cast<double>(off) * x.dt;
        const double tp = power == 0 ? 1.0 : (power == 1 ? tau : tau * tau);
        acc += x.samples[static_cast<std::size_t>(idx)] * tp * C * std::exp(P * (kPi * tau * tau)) *
               std::polar(1.0, -2.0 * kPi * xi * tau);
    }
    return acc * x.dt;
}

}  // namespace wlct
