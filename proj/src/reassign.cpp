#include "wlct/reassign.hpp"

#include <algorithm>
#include <cmath>

#include "wlct/kernels.hpp"
#include "wlct/simd/kernels.hpp"
#include "wlct/transform.hpp"

namespace wlct {

namespace {

struct ColumnMaps {
    std::vector<double> omega, mu, lambda;
    std::vector<std::uint8_t> valid;
    explicit ColumnMaps(std::size_t n) : omega(n), mu(n), lambda(n), valid(n) {}
};

// Reassigns one frequency column and converts Re(mu) into the lambda domain.
void reassign_column(const cplx* T, const cplx* T1, const cplx* T2, const TFCGrid& grid, Variant n,
                     const KernelParams& kp, double eps, ColumnMaps& c) {
    const std::size_t Nf = grid.Nf();
    simd::ReassignArgs a{T, T1, T2, grid.freqAxis.data(), cplx(0.0, 1.0) * kp.P, eps, eps,
                         c.omega.data(), c.mu.data(), c.valid.data(), Nf};
    simd::active().reassign(a);
    const bool recip = is_reciprocal(n);
    for (std::size_t j = 0; j < Nf; ++j) {
        if (!c.valid[j]) {
            c.lambda[j] = 0.0;
            continue;
        }
        const double L = recip ? 1.0 / c.mu[j] : -c.mu[j];
        if (!std::isfinite(L) || !std::isfinite(c.omega[j])) {
            c.valid[j] = 0;
            c.lambda[j] = 0.0;
            c.omega[j] = 0.0;
        } else {
            c.lambda[j] = L;
        }
    }
}

void check_same(const ComplexCube& a, const TFCGrid& grid) {
    if (a.dim0() != grid.Nc() || a.dim1() != grid.Nf() || a.dim2() != grid.frames()) {
        throw GridMismatch("cube does not match grid");
    }
}

template <class V>
Cube<V> squeeze_impl(const Cube<V>& source, const ReassignMaps& maps, const WindowSpec& spec,
                     const TFCGrid& grid) {
    if (source.dim0() != maps.mask.dim0() || source.dim1() != maps.mask.dim1() ||
        source.dim2() != maps.mask.dim2()) {
        throw GridMismatch("squeeze source and maps disagree");
    }
    const std::size_t Nc = source.dim0(), Nf = source.dim1(), F = source.dim2();
    Cube<V> out(grid.squeezeChirpAxis.size(), grid.squeezeFreqAxis.size(), F);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t mi = 0; mi < static_cast<std::ptrdiff_t>(F); ++mi) {
        const auto m = static_cast<std::size_t>(mi);
        for (std::size_t l = 0; l < Nc; ++l) {
            for (std::size_t j = 0; j < Nf; ++j) {
                if (!maps.mask(l, j, m)) continue;
                std::size_t p, q;
                if (squeeze_bin(grid, chirp_of(spec.n, maps.lambda(l, j, m)), maps.omega(l, j, m), p, q)) {
                    out(p, q, m) += source(l, j, m);
                }
            }
        }
    }
    return out;
}

// Per-thread frame slab for the streaming paths.
struct Slab {
    std::vector<cplx> T, T1, T2;
    ColumnMaps maps;
    Slab(std::size_t Nc, std::size_t Nf) : T(Nc * Nf), T1(Nc * Nf), T2(Nc * Nf), maps(Nf) {}
};

void fill_slab(const WlctEngine& e, std::size_t m, WlctEngine::Scratch& s, Slab& slab) {
    const std::size_t Nf = e.grid().Nf();
    for (std::size_t l = 0; l < e.grid().Nc(); ++l) {
        e.column(l, m, s, {slab.T.data() + l * Nf, slab.T1.data() + l * Nf, slab.T2.data() + l * Nf});
    }
}

double slab_threshold(const Slab& slab, const TFCGrid& grid, double epsilon) {
    if (epsilon >= 0.0) return epsilon;
    double mx = 0.0;
    for (const cplx& v : slab.T) mx = std::max(mx, std::abs(v));
    return grid.epsilonRel * mx;
}

}  // namespace

double chirp_of(Variant n, double Lambda) noexcept { return is_reciprocal(n) ? 1.0 / Lambda : -Lambda; }

bool squeeze_bin(const TFCGrid& grid, double chirp, double omega, std::size_t& p, std::size_t& q) noexcept {
    if (grid.squeezeChirpAxis.empty() || grid.squeezeFreqAxis.empty()) return false;
    const double fp = std::floor((chirp - grid.squeezeChirpAxis.front()) / grid.deltaGamma + 0.5);
    const double fq = std::floor((omega - grid.squeezeFreqAxis.front()) / grid.deltaXi + 0.5);
    if (!(fp >= 0.0 && fp < static_cast<double>(grid.squeezeChirpAxis.size()))) return false;
    if (!(fq >= 0.0 && fq < static_cast<double>(grid.squeezeFreqAxis.size()))) return false;
    p = static_cast<std::size_t>(fp);
    q = static_cast<std::size_t>(fq);
    return true;
}

std::vector<double> frame_thresholds(const ComplexCube& T, const TFCGrid& grid, double epsilon) {
    const std::size_t F = T.dim2();
    std::vector<double> eps(F, epsilon);
    if (epsilon >= 0.0) return eps;
    std::vector<double> mx(F, 0.0);
    for (std::size_t l = 0; l < T.dim0(); ++l)
        for (std::size_t j = 0; j < T.dim1(); ++j)
            for (std::size_t m = 0; m < F; ++m) mx[m] = std::max(mx[m], std::abs(T(l, j, m)));
    for (std::size_t m = 0; m < F; ++m) eps[m] = grid.epsilonRel * mx[m];
    return eps;
}

ReassignMaps reassignment_maps(const ComplexCube& T, const ComplexCube& Ttau, const ComplexCube& Ttau2,
                               const WindowSpec& spec, const TFCGrid& grid, double epsilon) {
    check_same(T, grid);
    check_same(Ttau, grid);
    check_same(Ttau2, grid);
    const std::size_t Nc = grid.Nc(), Nf = grid.Nf(), F = grid.frames();
    const auto eps = frame_thresholds(T, grid, epsilon);
    ReassignMaps r{RealCube(Nc, Nf, F), RealCube(Nc, Nf, F), Cube<std::uint8_t>(Nc, Nf, F)};

#pragma omp parallel
    {
        std::vector<cplx> a(Nf), b(Nf), c(Nf);
        ColumnMaps cm(Nf);
#pragma omp for schedule(static)
        for (std::ptrdiff_t mi = 0; mi < static_cast<std::ptrdiff_t>(F); ++mi) {
            const auto m = static_cast<std::size_t>(mi);
            for (std::size_t l = 0; l < Nc; ++l) {
                for (std::size_t j = 0; j < Nf; ++j) {
                    a[j] = T(l, j, m);
                    b[j] = Ttau(l, j, m);
                    c[j] = Ttau2(l, j, m);
                }
                const KernelParams kp = cp_params(spec.n, grid.chirpAxis[l], spec.alpha);
                reassign_column(a.data(), b.data(), c.data(), grid, spec.n, kp, eps[m], cm);
                for (std::size_t j = 0; j < Nf; ++j) {
                    r.omega(l, j, m) = cm.omega[j];
                    r.lambda(l, j, m) = cm.lambda[j];
                    r.mask(l, j, m) = cm.valid[j];
                }
            }
        }
    }
    return r;
}

ComplexCube synchrosqueeze(const ComplexCube& source, const ReassignMaps& maps, const WindowSpec& spec,
                           const TFCGrid& grid) {
    return squeeze_impl(source, maps, spec, grid);
}

RealCube synchrosqueeze(const RealCube& source, const ReassignMaps& maps, const WindowSpec& spec,
                        const TFCGrid& grid) {
    return squeeze_impl(source, maps, spec, grid);
}

ComplexCube swlct(const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid, double epsilon) {
    const WlctEngine engine(x, spec, grid, 2);
    const std::size_t Nc = grid.Nc(), Nf = grid.Nf(), F = grid.frames();
    ComplexCube out(grid.squeezeChirpAxis.size(), grid.squeezeFreqAxis.size(), F);

#pragma omp parallel
    {
        auto scratch = engine.make_scratch();
        Slab slab(Nc, Nf);
#pragma omp for schedule(static)
        for (std::ptrdiff_t mi = 0; mi < static_cast<std::ptrdiff_t>(F); ++mi) {
            const auto m = static_cast<std::size_t>(mi);
            fill_slab(engine, m, scratch, slab);
            const double eps = slab_threshold(slab, grid, epsilon);
            for (std::size_t l = 0; l < Nc; ++l) {
                const std::size_t o = l * Nf;
                reassign_column(slab.T.data() + o, slab.T1.data() + o, slab.T2.data() + o, grid, spec.n,
                                engine.bank().params(l), eps, slab.maps);
                for (std::size_t j = 0; j < Nf; ++j) {
                    if (!slab.maps.valid[j]) continue;
                    std::size_t p, q;
                    if (squeeze_bin(grid, chirp_of(spec.n, slab.maps.lambda[j]), slab.maps.omega[j], p, q)) {
                        out(p, q, m) += slab.T[o + j];
                    }
                }
            }
        }
    }
    return out;
}

RealCube sxwlct(const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid, const XrayWindow& win,
                double epsilon) {
    const std::size_t Nc = grid.Nc(), Nf = grid.Nf(), F = grid.frames();
    std::vector<double> dirs(Nc);
    for (std::size_t l = 0; l < Nc; ++l) dirs[l] = xray_direction(spec.n, grid.chirpAxis[l]);

    // pass 1: |T| cube and per-frame maxima, then X-ray in place
    RealCube mag(Nc, Nf, F);
    std::vector<double> frameMax(F, 0.0);
    {
        const WlctEngine e0(x, spec, grid, 0);
#pragma omp parallel
        {
            auto scratch = e0.make_scratch();
            std::vector<cplx> col(Nf);
            std::vector<double> a(Nf);
#pragma omp for schedule(static)
            for (std::ptrdiff_t mi = 0; mi < static_cast<std::ptrdiff_t>(F); ++mi) {
                const auto m = static_cast<std::size_t>(mi);
                double mx = 0.0;
                for (std::size_t l = 0; l < Nc; ++l) {
                    e0.column(l, m, scratch, {col.data(), nullptr, nullptr});
                    simd::active().cabs(col.data(), a.data(), Nf);
                    for (std::size_t j = 0; j < Nf; ++j) {
                        mag(l, j, m) = a[j];
                        mx = std::max(mx, std::abs(col[j]));
                    }
                }
                frameMax[m] = mx;
            }
        }
#pragma omp parallel
        {
            std::vector<double> tmp(Nf * F);
#pragma omp for schedule(dynamic)
            for (std::ptrdiff_t l = 0; l < static_cast<std::ptrdiff_t>(Nc); ++l) {
                const auto li = static_cast<std::size_t>(l);
                xray_slice(mag.slice(li), tmp.data(), dirs[li], grid, win);
                std::copy(tmp.begin(), tmp.end(), mag.slice(li));
            }
        }
    }

    // pass 2: maps per frame, squeeze the X-ray values
    const WlctEngine engine(x, spec, grid, 2);
    RealCube out(grid.squeezeChirpAxis.size(), grid.squeezeFreqAxis.size(), F);
#pragma omp parallel
    {
        auto scratch = engine.make_scratch();
        Slab slab(Nc, Nf);
#pragma omp for schedule(static)
        for (std::ptrdiff_t mi = 0; mi < static_cast<std::ptrdiff_t>(F); ++mi) {
            const auto m = static_cast<std::size_t>(mi);
            fill_slab(engine, m, scratch, slab);
            const double eps = epsilon >= 0.0 ? epsilon : grid.epsilonRel * frameMax[m];
            for (std::size_t l = 0; l < Nc; ++l) {
                const std::size_t o = l * Nf;
                reassign_column(slab.T.data() + o, slab.T1.data() + o, slab.T2.data() + o, grid, spec.n,
                                engine.bank().params(l), eps, slab.maps);
                for (std::size_t j = 0; j < Nf; ++j) {
                    if (!slab.maps.valid[j]) continue;
                    std::size_t p, q;
                    if (squeeze_bin(grid, chirp_of(spec.n, slab.maps.lambda[j]), slab.maps.omega[j], p, q)) {
                        out(p, q, m) += mag(l, j, m);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace wlct
