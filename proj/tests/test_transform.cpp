#include <doctest.h>

#include <chrono>

#include "oracles.hpp"
#include "support.hpp"
#include "wlct/signals.hpp"
#include "wlct/transform.hpp"

using namespace wlct;
using oracle::cplx;

namespace {

TFCGrid small_grid(std::size_t N, double dt, Variant n, std::size_t Nc, std::size_t hop = 1) {
    GridParams p;
    p.N = N;
    p.dt = dt;
    p.Nc = Nc;
    p.hop = hop;
    p.kind = default_grid_kind(n, false);
    p.deltaA = 0.25;
    return build_grid(p);
}

double alpha_for(Variant n) {
    switch (n) {
        case Variant::N1: return 0.3;
        case Variant::N5: return 0.6;
        case Variant::N2: return 2.0;
        default: return 3.0;
    }
}

}  // namespace

TEST_CASE("zero signal gives a zero cube") {
    const auto x = make_signal(std::vector<cplx>(64), 0.01);
    const auto g = small_grid(64, 0.01, Variant::N2, 8);
    const auto T = wlct_cube(x, make_window_spec(Variant::N2, 1.0), g, 0);
    for (const auto& v : T.data()) CHECK(v == cplx(0.0));
    CHECK(T.dim0() == 8);
    CHECK(T.dim1() == 33);
    CHECK(T.dim2() == 64);
}

TEST_CASE("FFT path equals the direct sum") {
    const std::size_t N = 128;
    const double dt = 1.0 / 32;
    const auto x = make_signal(oracle::random_signal(N, 77), dt);
    for (Variant n : {Variant::N1, Variant::N2, Variant::N5, Variant::N6}) {
        CAPTURE(to_int(n));
        const auto g = small_grid(N, dt, n, 6, 9);
        const auto spec = make_window_spec(n, alpha_for(n));
        for (int d = 0; d <= 2; ++d) {
            const auto T = wlct_cube(x, spec, g, d);
            double err = 0.0, scale = 0.0;
            for (std::size_t l = 0; l < g.Nc(); ++l) {
                for (std::size_t j = 0; j < g.Nf(); j += 3) {
                    for (std::size_t m = 0; m < g.frames(); ++m) {
                        const cplx ref = oracle::wlct_direct(x, to_int(n), spec.alpha, g.frameSample(m), g.freqAxis[j],
                                                             g.chirpAxis[l], d);
                        err = std::max(err, std::abs(T(l, j, m) - ref));
                        scale = std::max(scale, std::abs(ref));
                    }
                }
            }
            CHECK(err <= 1e-9 * scale);
        }
    }
}

TEST_CASE("single-point evaluation matches cube entries") {
    const std::size_t N = 96;
    const auto x = make_signal(oracle::random_signal(N, 5), 0.02);
    const auto g = small_grid(N, 0.02, Variant::N1, 6, 7);
    const auto spec = make_window_spec(Variant::N1, 0.4);
    const auto T = wlct_cube(x, spec, g, 1);
    for (std::size_t l = 0; l < g.Nc(); ++l) {
        for (std::size_t m = 0; m < g.frames(); m += 3) {
            const std::size_t j = (l * 7 + m) % g.Nf();
            const cplx p = wlct_point(x, spec, g.frameSample(m), g.freqAxis[j], g.chirpAxis[l], 1);
            CHECK(std::abs(p - T(l, j, m)) <= 1e-12 * (1.0 + std::abs(p)));
        }
    }
}

TEST_CASE("linearity") {
    const std::size_t N = 128;
    const auto a = oracle::random_signal(N, 1);
    const auto b = oracle::random_signal(N, 2);
    const cplx ca(0.7, -1.1), cb(-2.0, 0.3);
    std::vector<cplx> s(N);
    for (std::size_t i = 0; i < N; ++i) s[i] = ca * a[i] + cb * b[i];
    const auto g = small_grid(N, 0.01, Variant::N6, 8, 4);
    const auto spec = make_window_spec(Variant::N6, 2.5);
    const auto Ta = wlct_cube(make_signal(a, 0.01), spec, g, 2);
    const auto Tb = wlct_cube(make_signal(b, 0.01), spec, g, 2);
    const auto Ts = wlct_cube(make_signal(s, 0.01), spec, g, 2);
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        err = std::max(err, std::abs(Ts.data()[i] - (ca * Ta.data()[i] + cb * Tb.data()[i])));
        scale = std::max(scale, std::abs(Ts.data()[i]));
    }
    CHECK(err <= 1e-10 * scale);
}

TEST_CASE("pure tone") {
    const std::size_t N = 512;
    const double dt = 1.0 / 64, f0 = 10.0, alpha = 1.5;
    std::vector<cplx> s(N);
    for (std::size_t k = 0; k < N; ++k) s[k] = std::polar(1.0, 2.0 * oracle::pi * f0 * static_cast<double>(k) * dt);
    const auto x = make_signal(std::move(s), dt);
    const auto g = small_grid(N, dt, Variant::N2, 9, 32);
    const auto T = magnitude_cube(wlct_cube(x, make_window_spec(Variant::N2, alpha), g, 0));
    for (std::size_t l = 0; l < g.Nc(); ++l) {
        const double lam = g.chirpAxis[l];
        const double L = alpha * alpha + lam * lam;
        for (std::size_t m = 4; m + 4 < g.frames(); ++m) {
            std::size_t best = 0;
            for (std::size_t j = 0; j < g.Nf(); ++j)
                if (T(l, j, m) > T(l, best, m)) best = j;
            CHECK(g.freqAxis[best] == doctest::Approx(f0));
            for (std::size_t j : {best - 3, best, best + 5}) {
                const double d = g.freqAxis[j] - f0;
                const double ref = std::pow(L, -0.25) * std::exp(-oracle::pi * alpha * d * d / L);
                CHECK(T(l, j, m) == doctest::Approx(ref).epsilon(1e-3));
            }
        }
    }
}

TEST_CASE("linear chirp peak height") {
    for (Variant n : {Variant::N1, Variant::N2, Variant::N5, Variant::N6}) {
        CAPTURE(to_int(n));
        const auto c = support::chirp_case(n, 4.0, 1.3);
        const auto T = magnitude_cube(wlct_cube(c.x, c.spec, c.grid, 0));
        std::size_t checked = 0;
        for (std::size_t m = 0; m < c.grid.frames(); ++m) {
            if (!c.interior(m)) continue;
            for (std::size_t l = 0; l < c.grid.Nc(); ++l) {
                double peak = 0.0;
                for (std::size_t j = 0; j < c.grid.Nf(); ++j) peak = std::max(peak, T(l, j, m));
                const double ref = oracle::chirp_peak(to_int(n), c.spec.alpha, c.grid.chirpAxis[l], c.gamma);
                CHECK(std::abs(peak - ref) <= 0.02 * ref);
                ++checked;
            }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("two chirp components separate in the chirp profile at the crossing") {
    const auto b = gen_benchmark("x1");
    GridParams p;
    p.N = b.signal.size();
    p.dt = b.signal.dt;
    const auto g = build_grid(p);
    const auto spec = make_window_spec(Variant::N2, 6.2);
    const WlctEngine e(b.signal, spec, g, 0);
    auto scratch = e.make_scratch();
    std::vector<cplx> col(g.Nf());
    const std::size_t m = 256;
    const auto j = static_cast<std::size_t>(std::llround(34.0 / g.deltaEta));
    std::vector<double> prof(g.Nc());
    for (std::size_t l = 0; l < g.Nc(); ++l) {
        e.column(l, m, scratch, {col.data(), nullptr, nullptr});
        prof[l] = std::abs(col[j]);
    }
    const double top = *std::max_element(prof.begin(), prof.end());
    std::vector<double> peaks;
    for (std::size_t l = 1; l + 1 < g.Nc(); ++l)
        if (prof[l] > prof[l - 1] && prof[l] >= prof[l + 1] && prof[l] > 0.5 * top) peaks.push_back(g.chirpAxis[l]);
    REQUIRE(peaks.size() == 2);
    // chirprates -8 and 12, i.e. lambda = 8 and -12, pulled toward each other by overlap
    CHECK(peaks[0] == doctest::Approx(8.0).epsilon(0.1));
    CHECK(peaks[1] == doctest::Approx(-12.0).epsilon(0.1));
}

TEST_CASE("magnitude cube") {
    ComplexCube c(1, 2, 2);
    c(0, 1, 0) = cplx(3.0, 4.0);
    const auto m = magnitude_cube(c);
    CHECK(m(0, 1, 0) == 5.0);
    CHECK(m(0, 0, 0) == 0.0);
}

TEST_CASE("grid must match the signal") {
    const auto x = make_signal(std::vector<cplx>(64, 1.0), 0.01);
    const auto g = small_grid(32, 0.01, Variant::N2, 4);
    CHECK_THROWS_AS(wlct_cube(x, make_window_spec(Variant::N2, 1.0), g, 0), GridMismatch);
    CHECK_THROWS_AS(wlct_cube(x, make_window_spec(Variant::N2, 1.0), small_grid(64, 0.01, Variant::N2, 4), 3),
                    InvalidWindow);
}

TEST_CASE("cost grows slower than quadratically in N") {
    // fixed chirp-bin and frame counts; per-column work is N log N
    auto seconds = [](std::size_t N) {
        const auto x = make_signal(oracle::random_signal(N, 3), 1.0 / 128);
        const auto g = small_grid(N, 1.0 / 128, Variant::N2, 32, N / 32);
        const auto spec = make_window_spec(Variant::N2, 2.0);
        double best = 1e9;
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto T = wlct_cube(x, spec, g, 0);
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
            CHECK(T.size() > 0);
        }
        return best;
    };
    const double small = seconds(1024);
    const double large = seconds(8192);
    MESSAGE("N=1024: " << small << " s, N=8192: " << large << " s");
    CHECK(large / small < 32.0);
}
