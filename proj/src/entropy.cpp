#include "wlct/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "wlct/simd/kernels.hpp"
#include "wlct/transform.hpp"

namespace wlct {

namespace {

void check_order(double ell) {
    if (!(ell > 2.0)) throw Error("Renyi order must exceed 2");
}

// |T|^2 and |T|^{2 ell} column sums
void column_moments(const cplx* a, std::size_t n, double ell, double& s2, double& sl) {
    if (ell == 2.5) {
        simd::active().moments25(a, n, s2, sl);
        return;
    }
    double acc2 = 0.0, accl = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double e = std::norm(a[k]);
        acc2 += e;
        accl += std::pow(e, ell);
    }
    s2 += acc2;
    sl += accl;
}

double finish(double s2, double sl, double ell) {
    if (!(s2 > 0.0)) throw EmptyCube("cube carries no energy");
    return (std::log2(sl) - ell * std::log2(s2)) / (1.0 - ell);
}

}  // namespace

std::vector<double> chirp_weights(const TFCGrid& grid, Variant n) {
    const auto& lam = grid.chirpAxis;
    const std::size_t Nc = lam.size();
    std::vector<double> w(Nc, 0.0);
    if (is_reciprocal(n)) {
        for (std::size_t l = 0; l < Nc; ++l) {
            if (lam[l] <= 0.0) continue;
            w[l] = grid.dyadic() ? std::log(2.0) * grid.deltaA : grid.deltaLambda / lam[l];
        }
        return w;
    }
    if (!grid.dyadic()) {
        std::fill(w.begin(), w.end(), grid.deltaLambda);
        return w;
    }
    for (std::size_t l = 0; l < Nc; ++l) {
        const double lo = l == 0 ? lam[0] : lam[l - 1];
        const double hi = l + 1 == Nc ? lam[Nc - 1] : lam[l + 1];
        w[l] = std::abs(hi - lo) / (l == 0 || l + 1 == Nc ? 1.0 : 2.0);
    }
    return w;
}

double renyi_entropy(const ComplexCube& cube, const WindowSpec& spec, const TFCGrid& grid, double ell) {
    check_order(ell);
    if (cube.dim0() != grid.Nc() || cube.dim1() != grid.Nf() || cube.dim2() != grid.frames()) {
        throw GridMismatch("cube does not match grid");
    }
    const auto w = chirp_weights(grid, spec.n);
    const double base = static_cast<double>(grid.hop) * grid.dt * grid.deltaEta;
    double s2 = 0.0, sl = 0.0;
    for (std::size_t l = 0; l < cube.dim0(); ++l) {
        if (w[l] == 0.0) continue;
        const std::size_t F = cube.dim2();
        // per-frame columns, same accumulation order as the streaming path
        std::vector<cplx> col(cube.dim1());
        double a2 = 0.0, al = 0.0;
        for (std::size_t m = 0; m < F; ++m) {
            for (std::size_t j = 0; j < cube.dim1(); ++j) col[j] = cube(l, j, m);
            column_moments(col.data(), col.size(), ell, a2, al);
        }
        s2 += a2 * w[l] * base;
        sl += al * w[l] * base;
    }
    return finish(s2, sl, ell);
}

double renyi_entropy(const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid, double ell) {
    check_order(ell);
    const WlctEngine engine(x, spec, grid, 0);
    const auto w = chirp_weights(grid, spec.n);
    const std::size_t Nc = grid.Nc(), Nf = grid.Nf(), F = grid.frames();
    // per (l, m) partials so the reduction order does not depend on threads
    std::vector<double> p2(Nc * F, 0.0), pl(Nc * F, 0.0);
#pragma omp parallel
    {
        auto scratch = engine.make_scratch();
        std::vector<cplx> col(Nf);
#pragma omp for schedule(static)
        for (std::ptrdiff_t mi = 0; mi < static_cast<std::ptrdiff_t>(F); ++mi) {
            const auto m = static_cast<std::size_t>(mi);
            for (std::size_t l = 0; l < Nc; ++l) {
                if (w[l] == 0.0) continue;
                engine.column(l, m, scratch, {col.data(), nullptr, nullptr});
                column_moments(col.data(), Nf, ell, p2[l * F + m], pl[l * F + m]);
            }
        }
    }
    const double base = static_cast<double>(grid.hop) * grid.dt * grid.deltaEta;
    double s2 = 0.0, sl = 0.0;
    for (std::size_t l = 0; l < Nc; ++l) {
        if (w[l] == 0.0) continue;
        double a2 = 0.0, al = 0.0;
        for (std::size_t m = 0; m < F; ++m) {
            a2 += p2[l * F + m];
            al += pl[l * F + m];
        }
        s2 += a2 * w[l] * base;
        sl += al * w[l] * base;
    }
    return finish(s2, sl, ell);
}

std::vector<double> default_alpha_grid(Variant n) {
    std::vector<double> g(32);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double kk = static_cast<double>(k);
        switch (n) {
            case Variant::N1:
            case Variant::N5: g[k] = 0.01 * std::pow(100.0, kk / 32.0); break;
            case Variant::N2: g[k] = std::pow(100.0, kk / 31.0); break;
            case Variant::N6: g[k] = std::pow(100.0, (kk + 1.0) / 32.0); break;
        }
    }
    return g;
}

TuneResult tune_alpha(const SampledSignal& x, Variant n, const std::vector<double>& alphaGrid,
                      const TFCGrid& grid, double ell) {
    if (alphaGrid.empty()) throw InvalidWindow("alpha grid is empty");
    TuneResult r;
    double best = 0.0;
    for (double a : alphaGrid) {
        const WindowSpec spec = make_window_spec(n, a);
        const double e = renyi_entropy(x, spec, grid, ell);
        r.alphas.push_back(a);
        r.entropies.push_back(e);
        if (r.alphas.size() == 1 || e < best || (e == best && a < r.alpha)) {
            best = e;
            r.alpha = a;
        }
    }
    return r;
}

}  // namespace wlct
