#pragma once

#include <vector>

#include "wlct/core.hpp"

namespace wlct {

inline constexpr double kDefaultRenyiOrder = 2.5;

/// Per-chirp-bin measure. Reciprocal families keep only lambda > 0 with dl/l
/// (ln2 * da on dyadic axes); the others use the chirp spacing. Excluded bins get 0.
std::vector<double> chirp_weights(const TFCGrid& grid, Variant n);

double renyi_entropy(const ComplexCube& cube, const WindowSpec& spec, const TFCGrid& grid,
                     double ell = kDefaultRenyiOrder);

/// Same value as renyi_entropy(wlct_cube(x, spec, grid, 0), ...) without storing the cube.
double renyi_entropy(const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid,
                     double ell = kDefaultRenyiOrder);

/// 32 log-spaced points: [0.01, 1) for n = 1, 5; [1, 100] for n = 2 and (1, 100] for n = 6.
std::vector<double> default_alpha_grid(Variant n);

struct TuneResult {
    double alpha = 0.0;
    std::vector<double> alphas;
    std::vector<double> entropies;
};

/// Grid search; ties go to the smaller alpha.
TuneResult tune_alpha(const SampledSignal& x, Variant n, const std::vector<double>& alphaGrid,
                      const TFCGrid& grid, double ell = kDefaultRenyiOrder);

}  // namespace wlct
