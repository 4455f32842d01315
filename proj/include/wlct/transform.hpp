#pragma once

#include <array>
#include <vector>

#include "wlct/core.hpp"
#include "wlct/fft.hpp"
#include "wlct/kernels.hpp"

namespace wlct {

/// Precomputed discrete windows tau^d C_n(lambda_l) exp(P_n(lambda_l) pi tau^2)
/// for every chirp bin, stored in FFT position order: position p holds
/// tau = p dt for p < N - floor(N/2) and (p - N) dt otherwise, so the
/// (k - floor(N/2)) j / N modulation becomes a plain DFT.
class WindowBank {
public:
    WindowBank(const WindowSpec& spec, const TFCGrid& grid, int maxPower);

    const cplx* window(std::size_t l, int power) const noexcept {
        return w_[static_cast<std::size_t>(power)].data() + l * N_;
    }
    const KernelParams& params(std::size_t l) const noexcept { return cp_[l]; }
    int maxPower() const noexcept { return maxPower_; }
    std::size_t N() const noexcept { return N_; }
    std::size_t Nc() const noexcept { return cp_.size(); }

private:
    std::size_t N_;
    int maxPower_;
    std::array<std::vector<cplx>, 3> w_;
    std::vector<KernelParams> cp_;
};

/// Computes WLCT frequency columns (one per window power) for a given
/// (chirp bin, frame). The engine itself is immutable; per-thread state
/// lives in Scratch.
class WlctEngine {
public:
    WlctEngine(const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid, int maxPower);

    struct Scratch {
        explicit Scratch(std::size_t N) : segment(N), buffer(N) {}
        FftBuffer segment;  ///< x(t_m + tau) in position order
        FftBuffer buffer;
        std::size_t loadedFrame = static_cast<std::size_t>(-1);
    };

    Scratch make_scratch() const { return Scratch(grid_.N); }

    /// Writes Nf values of T^{tau^d g}(lambda_l, eta_j, t_m) * 1 for d = 0..maxPower into out[d].
    void column(std::size_t l, std::size_t m, Scratch& s, std::array<cplx*, 3> out) const;

    const TFCGrid& grid() const noexcept { return grid_; }
    const WindowBank& bank() const noexcept { return bank_; }
    const WindowSpec& spec() const noexcept { return spec_; }

private:
    void load_frame(std::size_t m, Scratch& s) const;

    const SampledSignal& x_;
    WindowSpec spec_;
    const TFCGrid& grid_;
    WindowBank bank_;
    ForwardFft fft_;
};

/// Full complex cube T^{tau^d g, n} indexed (l, j, m).
ComplexCube wlct_cube(const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid, int power);

/// Elementwise modulus.
RealCube magnitude_cube(const ComplexCube& cube);

/// Direct evaluation of the discrete transform at one off-grid point
/// (sample index, frequency xi, chirp parameter lambda).
cplx wlct_point(const SampledSignal& x, const WindowSpec& spec, std::size_t sample, double xi,
                double lambda, int power = 0);

}  // namespace wlct
