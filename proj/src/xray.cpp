#include "wlct/xray.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wlct/simd/kernels.hpp"

namespace wlct {

std::vector<double> XrayWindow::offsets(double dt) const {
    const double step = dv > 0.0 ? dv : 2.0 * dt;
    std::vector<double> v(2 * N0 + 1);
    for (std::size_t p = 0; p < v.size(); ++p) {
        v[p] = (static_cast<double>(p) - static_cast<double>(N0)) * step;
    }
    return v;
}

std::vector<double> XrayWindow::weights(double dt) const {
    const double step = dv > 0.0 ? dv : 2.0 * dt;
    const auto v = offsets(dt);
    std::vector<double> w(v.size());
    const double norm = 1.0 / std::sqrt(2.0 * kPi);
    for (std::size_t p = 0; p < v.size(); ++p) w[p] = norm * std::exp(-0.5 * v[p] * v[p]) * step;
    if (renormalize) {
        const double s = std::accumulate(w.begin(), w.end(), 0.0);
        for (double& x : w) x /= s;
    }
    return w;
}

double xray_direction(Variant n, double lambda) {
    if (is_reciprocal(n)) {
        if (lambda == 0.0) throw DirectionError("reciprocal chirp direction undefined at lambda = 0");
        return 1.0 / lambda;
    }
    return -lambda;
}

void xray_slice(const double* magSlice, double* out, double Lambda, const TFCGrid& grid,
                const XrayWindow& win) {
    const auto Nf = static_cast<std::ptrdiff_t>(grid.Nf());
    const auto F = static_cast<std::ptrdiff_t>(grid.frames());
    const auto v = win.offsets(grid.dt);
    const auto w = win.weights(grid.dt);
    const double frameStep = static_cast<double>(grid.hop) * grid.dt;
    const auto& k = simd::active();
    std::fill(out, out + Nf * F, 0.0);

    for (std::size_t p = 0; p < v.size(); ++p) {
        const double sj = Lambda * v[p] / grid.deltaEta;
        const double sm = v[p] / frameStep;
        if (!std::isfinite(sj) || std::abs(sj) >= static_cast<double>(Nf)) continue;
        const auto dj = static_cast<std::ptrdiff_t>(std::floor(sj + 0.5));
        const auto dm = static_cast<std::ptrdiff_t>(std::floor(sm + 0.5));
        const std::ptrdiff_t jlo = std::max<std::ptrdiff_t>(0, -dj);
        const std::ptrdiff_t jhi = std::min<std::ptrdiff_t>(Nf, Nf - dj);
        const std::ptrdiff_t mlo = std::max<std::ptrdiff_t>(0, -dm);
        const std::ptrdiff_t mhi = std::min<std::ptrdiff_t>(F, F - dm);
        if (jlo >= jhi || mlo >= mhi) continue;
        for (std::ptrdiff_t j = jlo; j < jhi; ++j) {
            k.axpy(w[p], magSlice + (j + dj) * F + mlo + dm, out + j * F + mlo,
                   static_cast<std::size_t>(mhi - mlo));
        }
    }
}

RealCube xray_cube(const RealCube& mag, const WindowSpec& spec, const TFCGrid& grid,
                   const XrayWindow& win) {
    if (mag.dim0() != grid.Nc() || mag.dim1() != grid.Nf() || mag.dim2() != grid.frames()) {
        throw GridMismatch("magnitude cube does not match grid");
    }
    std::vector<double> dirs(grid.Nc());
    for (std::size_t l = 0; l < grid.Nc(); ++l) dirs[l] = xray_direction(spec.n, grid.chirpAxis[l]);
    RealCube out(mag.dim0(), mag.dim1(), mag.dim2());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t l = 0; l < static_cast<std::ptrdiff_t>(grid.Nc()); ++l) {
        const auto li = static_cast<std::size_t>(l);
        xray_slice(mag.slice(li), out.slice(li), dirs[li], grid, win);
    }
    return out;
}

}  // namespace wlct
