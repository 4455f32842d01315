#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "wlct/reassign.hpp"
#include "wlct/signals.hpp"
#include "wlct/transform.hpp"
#include "wlct/xray.hpp"

using namespace wlct;
using oracle::cplx;

namespace {

struct Cubes {
    ComplexCube T, T1, T2;
};

Cubes cubes_for(const support::ChirpCase& c) {
    return {wlct_cube(c.x, c.spec, c.grid, 0), wlct_cube(c.x, c.spec, c.grid, 1), wlct_cube(c.x, c.spec, c.grid, 2)};
}

// Squeeze written straight from the binning rule, l-major then j.
template <class Src, class Acc>
Cube<Acc> squeeze_reference(const Cube<Src>& src, const ReassignMaps& maps, Variant n, const TFCGrid& g) {
    Cube<Acc> out(g.squeezeChirpAxis.size(), g.squeezeFreqAxis.size(), g.frames());
    for (std::size_t m = 0; m < g.frames(); ++m) {
        for (std::size_t l = 0; l < g.Nc(); ++l) {
            for (std::size_t j = 0; j < g.Nf(); ++j) {
                if (!maps.mask(l, j, m)) continue;
                const double L = maps.lambda(l, j, m);
                const double chirp = is_reciprocal(n) ? 1.0 / L : -L;
                const double fp = std::floor((chirp + g.R0) / g.deltaGamma + 0.5);
                const double fq = std::floor(maps.omega(l, j, m) / g.deltaXi + 0.5);
                if (fp < 0 || fp >= static_cast<double>(g.squeezeChirpAxis.size())) continue;
                if (fq < 0 || fq >= static_cast<double>(g.squeezeFreqAxis.size())) continue;
                out(static_cast<std::size_t>(fp), static_cast<std::size_t>(fq), m) += src(l, j, m);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("chirp mapping") {
    CHECK(chirp_of(Variant::N2, 3.0) == -3.0);
    CHECK(chirp_of(Variant::N6, -0.5) == 0.5);
    CHECK(chirp_of(Variant::N1, 0.125) == 8.0);
    CHECK(chirp_of(Variant::N5, -0.25) == -4.0);
}

TEST_CASE("closed-form operators at every voxel") {
    for (Variant n : {Variant::N1, Variant::N2, Variant::N5, Variant::N6}) {
        CAPTURE(to_int(n));
        const auto c = support::chirp_case(n, 3.0, 1.1, 256, 1.0 / 32, 8, 8);
        const auto k = cubes_for(c);
        const auto maps = reassignment_maps(k.T, k.T1, k.T2, c.spec, c.grid);
        const auto eps = frame_thresholds(k.T, c.grid, -1.0);
        const cplx i(0.0, 1.0);
        std::size_t valid = 0;
        for (std::size_t l = 0; l < c.grid.Nc(); ++l) {
            const cplx P = cp_params(n, c.grid.chirpAxis[l], c.spec.alpha).P;
            for (std::size_t j = 0; j < c.grid.Nf(); ++j) {
                for (std::size_t m = 0; m < c.grid.frames(); ++m) {
                    const cplx T = k.T(l, j, m), T1 = k.T1(l, j, m), T2 = k.T2(l, j, m);
                    const cplx D = T1 * T1 - T * T2;
                    const bool ok = std::abs(T) > eps[m] && std::abs(D) > eps[m];
                    CHECK(static_cast<bool>(maps.mask(l, j, m)) == ok);
                    if (!ok) continue;
                    ++valid;
                    const double rate = std::real(i * P + T * T / (2.0 * oracle::pi * i * D));
                    const double om = c.grid.freqAxis[j] - std::real(T * T1 / (2.0 * oracle::pi * i * D));
                    CHECK(maps.omega(l, j, m) == doctest::Approx(om).epsilon(1e-9));
                    CHECK(chirp_of(n, maps.lambda(l, j, m)) == doctest::Approx(rate).epsilon(1e-9));
                }
            }
        }
        CHECK(valid > 0);
    }
}

TEST_CASE("exact on linear chirps") {
    std::mt19937_64 rng(41);
    for (Variant n : {Variant::N1, Variant::N2, Variant::N5, Variant::N6}) {
        for (int r = 0; r < 2; ++r) {
            const auto [beta, gamma] = support::random_chirp(rng);
            CAPTURE(to_int(n));
            CAPTURE(gamma);
            const auto c = support::chirp_case(n, beta, gamma);
            const auto k = cubes_for(c);
            const auto maps = reassignment_maps(k.T, k.T1, k.T2, c.spec, c.grid);
            double eo = 0.0, eg = 0.0;
            std::size_t count = 0;
            for (std::size_t m = 0; m < c.grid.frames(); ++m) {
                if (!c.interior(m)) continue;
                const double t = c.grid.timeAxis[m];
                for (std::size_t l = 0; l < c.grid.Nc(); ++l)
                    for (std::size_t j = 0; j < c.grid.Nf(); ++j) {
                        if (!maps.mask(l, j, m)) continue;
                        ++count;
                        eo = std::max(eo, std::abs(maps.omega(l, j, m) - (beta + gamma * t)));
                        eg = std::max(eg, std::abs(chirp_of(n, maps.lambda(l, j, m)) - gamma));
                    }
            }
            CHECK(count > 1000);
            CHECK(eo <= 1e-3 * 32.0);
            CHECK(eg <= 1e-3 * std::abs(gamma));
        }
    }
}

TEST_CASE("reciprocal map recovers a component chirprate") {
    // first y2 component alone, chirprate 8
    const auto b = gen_benchmark("y2");
    const auto x = make_signal(b.trueModes[0], b.signal.dt);
    GridParams p;
    p.N = x.size();
    p.dt = x.dt;
    p.Nc = 64;
    p.hop = 32;
    p.kind = GridKind::DyadicPositive;
    p.a0 = 1.0 / 32;
    p.deltaA = 0.1;
    const auto g = build_grid(p);
    const auto spec = make_window_spec(Variant::N1, 0.017);
    const auto maps = reassignment_maps(wlct_cube(x, spec, g, 0), wlct_cube(x, spec, g, 1), wlct_cube(x, spec, g, 2),
                                        spec, g);
    const auto mag = magnitude_cube(wlct_cube(x, spec, g, 0));
    for (std::size_t m = 4; m + 4 < g.frames(); ++m) {
        std::size_t bl = 0, bj = 0;
        for (std::size_t l = 0; l < g.Nc(); ++l)
            for (std::size_t j = 0; j < g.Nf(); ++j)
                if (mag(l, j, m) > mag(bl, bj, m)) bl = l, bj = j;
        REQUIRE(maps.mask(bl, bj, m));
        CHECK(1.0 / maps.lambda(bl, bj, m) == doctest::Approx(8.0).epsilon(0.02));
    }
}

TEST_CASE("zero signal masks everything") {
    const auto x = make_signal(std::vector<cplx>(64), 0.01);
    GridParams p;
    p.N = 64;
    p.dt = 0.01;
    p.Nc = 6;
    const auto g = build_grid(p);
    const auto spec = make_window_spec(Variant::N2, 1.0);
    const auto T = wlct_cube(x, spec, g, 0);
    const auto maps = reassignment_maps(T, T, T, spec, g);
    for (auto v : maps.mask.data()) CHECK(v == 0);
    const auto S = synchrosqueeze(T, maps, spec, g);
    for (const auto& v : S.data()) CHECK(v == cplx(0.0));
    for (const auto& v : swlct(x, spec, g).data()) CHECK(v == cplx(0.0));
    for (double v : sxwlct(x, spec, g).data()) CHECK(v == 0.0);
}

TEST_CASE("half-open bins") {
    GridParams p;
    p.N = 64;
    p.dt = 1.0 / 64;
    p.Nc = 9;
    p.R0 = 4.0;
    const auto g = build_grid(p);
    std::size_t a = 0, b = 0;
    REQUIRE(g.deltaGamma == 1.0);
    REQUIRE(g.deltaXi == 1.0);
    CHECK(squeeze_bin(g, -4.0, 0.0, a, b));
    CHECK(a == 0);
    CHECK(b == 0);
    CHECK(squeeze_bin(g, -3.5, 2.5, a, b));
    CHECK(a == 1);
    CHECK(b == 3);
    CHECK(squeeze_bin(g, -3.5000001, 2.4999999, a, b));
    CHECK(a == 0);
    CHECK(b == 2);
    CHECK_FALSE(squeeze_bin(g, -4.5000001, 3.0, a, b));
    CHECK_FALSE(squeeze_bin(g, 4.5, 3.0, a, b));
    CHECK_FALSE(squeeze_bin(g, 0.0, -0.6, a, b));
    CHECK_FALSE(squeeze_bin(g, 0.0, 31.5, a, b));
    CHECK(squeeze_bin(g, 4.4999, 31.4999, a, b));
    CHECK(a == 8);
    CHECK(b == 31);
}

TEST_CASE("squeeze follows the binning rule") {
    // two-component signal so that voxels land in many bins
    const auto b = gen_benchmark("x1");
    GridParams p;
    p.N = b.signal.size();
    p.dt = b.signal.dt;
    p.Nc = 48;
    p.hop = 16;
    const auto g = build_grid(p);
    const auto spec = make_window_spec(Variant::N2, 6.2);
    const auto T = wlct_cube(b.signal, spec, g, 0);
    const auto maps = reassignment_maps(T, wlct_cube(b.signal, spec, g, 1), wlct_cube(b.signal, spec, g, 2), spec, g);

    const auto S = synchrosqueeze(T, maps, spec, g);
    const auto Sref = squeeze_reference<cplx, cplx>(T, maps, spec.n, g);
    CHECK(S.data() == Sref.data());

    const auto mag = magnitude_cube(T);
    const auto R = synchrosqueeze(mag, maps, spec, g);
    const auto Rref = squeeze_reference<double, double>(mag, maps, spec.n, g);
    CHECK(R.data() == Rref.data());

    // bookkeeping: |S| mass bounded by unmasked |T| mass, real path conserves in-range mass
    double sAbs = 0.0, rSum = 0.0, unmasked = 0.0, inRange = 0.0;
    for (const auto& v : S.data()) sAbs += std::abs(v);
    for (double v : R.data()) rSum += v;
    for (std::size_t i = 0; i < mag.size(); ++i) {
        if (!maps.mask.data()[i]) continue;
        unmasked += mag.data()[i];
        std::size_t pp = 0, qq = 0;
        if (squeeze_bin(g, chirp_of(spec.n, maps.lambda.data()[i]), maps.omega.data()[i], pp, qq))
            inRange += mag.data()[i];
    }
    CHECK(sAbs <= unmasked * (1.0 + 1e-12));
    CHECK(rSum == doctest::Approx(inRange).epsilon(1e-12));
}

TEST_CASE("streaming paths equal the modular ones") {
    for (Variant n : {Variant::N1, Variant::N2, Variant::N5, Variant::N6}) {
        CAPTURE(to_int(n));
        const auto c = support::chirp_case(n, 4.0, 1.2, 256, 1.0 / 32, 12, 4);
        const auto k = cubes_for(c);
        for (double eps : {-1.0, 1e-3}) {
            const auto maps = reassignment_maps(k.T, k.T1, k.T2, c.spec, c.grid, eps);
            CHECK(swlct(c.x, c.spec, c.grid, eps).data() == synchrosqueeze(k.T, maps, c.spec, c.grid).data());
            const XrayWindow win{20, 0.0, false};
            const auto X = xray_cube(magnitude_cube(k.T), c.spec, c.grid, win);
            const auto ref = synchrosqueeze(X, maps, c.spec, c.grid);
            const auto got = sxwlct(c.x, c.spec, c.grid, win, eps);
            double err = 0.0, scale = 0.0;
            for (std::size_t i = 0; i < ref.size(); ++i) {
                err = std::max(err, std::abs(got.data()[i] - ref.data()[i]));
                scale = std::max(scale, ref.data()[i]);
            }
            CHECK(err <= 1e-12 * scale);
        }
    }
}

TEST_CASE("squeezed mass concentrates on a linear chirp") {
    for (Variant n : {Variant::N1, Variant::N2, Variant::N5, Variant::N6}) {
        CAPTURE(to_int(n));
        const auto c = support::chirp_case(n, 3.0, 1.3);
        const auto S = swlct(c.x, c.spec, c.grid);
        std::size_t frames = 0;
        for (std::size_t m = 0; m < c.grid.frames(); ++m) {
            if (!c.interior(m)) continue;
            ++frames;
            double total = 0.0, top = 0.0;
            std::size_t bp = 0, bq = 0;
            for (std::size_t p = 0; p < S.dim0(); ++p)
                for (std::size_t q = 0; q < S.dim1(); ++q) {
                    const double a = std::abs(S(p, q, m));
                    total += a;
                    if (a > top) top = a, bp = p, bq = q;
                }
            CHECK(top >= 0.95 * total);
            const double t = c.grid.timeAxis[m];
            CHECK(std::abs(c.grid.squeezeFreqAxis[bq] - (3.0 + 1.3 * t)) <= c.grid.deltaXi);
            CHECK(std::abs(c.grid.squeezeChirpAxis[bp] - 1.3) <= c.grid.deltaGamma);
        }
        CHECK(frames > 10);
    }
}
