#pragma once

#include "wlct/core.hpp"

namespace wlct {

struct RidgeOptions {
    std::size_t maxJumpXi = 3;
    std::size_t maxJumpGamma = 3;
    std::size_t clearXi = 5;
    std::size_t clearGamma = 5;
};

/// Greedy peeling over a squeezed magnitude cube indexed (p, q, m).
RidgeSet extract_ridges(const RealCube& mag, const TFCGrid& grid, std::size_t K,
                        const RidgeOptions& opt = {});

/// Energy-weighted local polynomial fit of the frequency ridge: each frame gets
/// the fitted value as xi and its time derivative as gamma. Weights are |S|^2 at
/// the ridge bins of mag. Results are clamped to the squeeze axes.
struct RidgeFit {
    double halfWidth = 0.5;  ///< seconds; 0 disables
    int degree = 2;
};

RidgeSet fit_ridges(const RidgeSet& r, const RealCube& mag, const TFCGrid& grid, const RidgeFit& opt = {});

/// |S| of a complex squeezed cube.
RealCube squeezed_magnitude(const ComplexCube& S);

}  // namespace wlct
