#pragma once

#include <vector>

#include "wlct/core.hpp"

namespace wlct {

/// Gaussian taps h(v_p) at v_p = (p - N0 - 1) dv, p = 1..2 N0 + 1.
struct XrayWindow {
    std::size_t N0 = 64;
    double dv = 0.0;  ///< 0 selects 2 dt
    bool renormalize = false;

    std::vector<double> offsets(double dt) const;
    /// h(v_p) dv, optionally rescaled to unit sum.
    std::vector<double> weights(double dt) const;
};

/// Chirp direction of bin l: -lambda (n = 2, 6) or 1/lambda (n = 1, 5).
double xray_direction(Variant n, double lambda);

/// sum_p |T|(lambda_l, eta_j + Lambda_l v_p, t_m + v_p) h(v_p) dv with nearest-bin
/// lookups; out-of-range taps are skipped.
RealCube xray_cube(const RealCube& mag, const WindowSpec& spec, const TFCGrid& grid,
                   const XrayWindow& win = {});

/// One chirp slice (Nf x frames) of the above; out must hold Nf * frames values.
void xray_slice(const double* magSlice, double* out, double Lambda, const TFCGrid& grid,
                const XrayWindow& win);

}  // namespace wlct
