#pragma once

#include <cstdint>

#include "wlct/core.hpp"
#include "wlct/xray.hpp"

namespace wlct {

/// Omega in Hz; Lambda in the variant's own parameter domain, so the chirprate
/// is chirp_of(n, Lambda) = -Lambda (n = 2, 6) or 1/Lambda (n = 1, 5).
struct ReassignMaps {
    RealCube omega;
    RealCube lambda;
    Cube<std::uint8_t> mask;
};

double chirp_of(Variant n, double Lambda) noexcept;

/// Per-frame thresholds: epsilon >= 0 is absolute, epsilon < 0 selects
/// grid.epsilonRel * max_{l,j} |T(l, j, m)|.
std::vector<double> frame_thresholds(const ComplexCube& T, const TFCGrid& grid, double epsilon);

ReassignMaps reassignment_maps(const ComplexCube& T, const ComplexCube& Ttau, const ComplexCube& Ttau2,
                               const WindowSpec& spec, const TFCGrid& grid, double epsilon = -1.0);

/// Squeezed cubes are indexed (p, q, m) over (squeezeChirpAxis, squeezeFreqAxis, frames).
ComplexCube synchrosqueeze(const ComplexCube& source, const ReassignMaps& maps, const WindowSpec& spec,
                           const TFCGrid& grid);
RealCube synchrosqueeze(const RealCube& source, const ReassignMaps& maps, const WindowSpec& spec,
                        const TFCGrid& grid);

/// Half-open bin lookup; false when (chirp, omega) falls outside the squeeze axes.
bool squeeze_bin(const TFCGrid& grid, double chirp, double omega, std::size_t& p, std::size_t& q) noexcept;

/// Streaming SWLCT: same result as synchrosqueeze(wlct_cube(...), reassignment_maps(...)),
/// without materializing the three transform cubes.
ComplexCube swlct(const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid, double epsilon = -1.0);

/// Streaming SXWLCT: squeezes the X-ray cube of |T| with the maps of T.
RealCube sxwlct(const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid,
                const XrayWindow& win = {}, double epsilon = -1.0);

}  // namespace wlct
