#pragma once
// Shared scenario builders for unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wlct/kernels.hpp"
#include "wlct/transform.hpp"

namespace support {

using oracle::cplx;

struct RandomLct {
    oracle::Mat m;
    double alpha;
    double u;
};

// Unit-determinant matrix with |b| >= 0.1, alpha in [0.05, 50], |u| <= 5.
inline RandomLct random_lct(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto sign = [&] { return unit(rng) < 0.5 ? -1.0 : 1.0; };
    RandomLct r{};
    r.m.a = sign() * (0.3 + 1.7 * unit(rng));
    r.m.b = sign() * (0.1 + 1.9 * unit(rng));
    r.m.c = -1.0 + 2.0 * unit(rng);
    r.m.d = (1.0 + r.m.b * r.m.c) / r.m.a;
    r.alpha = 0.05 * std::pow(1000.0, unit(rng));
    r.u = -5.0 + 10.0 * unit(rng);
    return r;
}

// Quadrature of the Gaussian's LCT at u on a grid fine enough for the
// integrand's local frequency, compared to the closed form. The error is
// relative to the transform's peak modulus |C|: far in the tail the value
// itself drops below the quadrature's rounding floor.
inline double quadrature_error(const RandomLct& r) {
    const double halfWidth = std::sqrt(32.0 / (oracle::pi * r.alpha));
    const double fmax =
        std::abs(r.m.a / r.m.b) * halfWidth + std::abs(r.u / r.m.b) + 4.0 * std::sqrt(r.alpha);
    const double dt = 1.0 / (4.0 * fmax);
    const auto x = oracle::gaussian_signal(r.alpha, halfWidth, dt);
    const auto M = wlct::make_param_matrix(r.m.a, r.m.b, r.m.c, r.m.d);
    const double u[1] = {r.u};
    const cplx numeric = wlct::numeric_lct(M, x, u)[0];
    return std::abs(wlct::gaussian_lct(M, r.alpha, r.u) - numeric) / std::abs(wlct::cp_params(M, r.alpha).C);
}

inline wlct::ParamMatrix to_matrix(const oracle::Mat& m) { return wlct::make_param_matrix(m.a, m.b, m.c, m.d); }

// L^A (L^B g) against L^{AB} g at a few u, with the inner transform sampled from
// its closed form. The metaplectic composition holds up to a global sign.
inline double composition_error(const RandomLct& ra, const RandomLct& rb) {
    const double alpha = 1.0;
    const auto inner = oracle::gaussian_lct(rb.m, alpha);
    const double decay = -std::real(inner.P);
    const double half = std::sqrt(32.0 / (oracle::pi * decay));
    const double fmax = (std::abs(std::imag(inner.P)) + std::abs(ra.m.a / ra.m.b)) * half + 3.0 / std::abs(ra.m.b) +
                        4.0 * std::sqrt(decay);
    const double dt = 1.0 / (4.0 * fmax);
    const auto N = static_cast<std::size_t>(2.0 * half / dt) + 1;
    std::vector<cplx> s(N);
    for (std::size_t i = 0; i < N; ++i) s[i] = oracle::eval(inner, -half + static_cast<double>(i) * dt);
    const auto x = wlct::make_signal(std::move(s), dt, -half);
    const auto A = to_matrix(ra.m);
    const auto AB = A * to_matrix(rb.m);
    const std::vector<double> us = {-1.0, 0.0, 0.7};
    const auto got = wlct::numeric_lct(A, x, us);
    double worst = 0.0;
    for (std::size_t i = 0; i < us.size(); ++i) {
        const cplx ref = wlct::gaussian_lct(AB, alpha, us[i]);
        worst = std::max(worst, std::min(oracle::rel_err(got[i], ref), oracle::rel_err(-got[i], ref)));
    }
    return worst;
}

// Relative energy mismatch between a sampled Gaussian and its numeric transform.
inline double parseval_error() {
    const auto M = wlct::make_param_matrix(0.6, 1.2, -0.5, (1.0 + 1.2 * -0.5) / 0.6);
    const auto x = oracle::gaussian_signal(0.8, 6.0, 1.0 / 64);
    std::vector<double> us;
    const double du = 1.0 / 32;
    for (double u = -8.0; u <= 8.0; u += du) us.push_back(u);
    const auto L = wlct::numeric_lct(M, x, us);
    double eu = 0.0, et = 0.0;
    for (const auto& v : L) eu += std::norm(v) * du;
    for (const auto& v : x.samples) et += std::norm(v) * x.dt;
    return std::abs(eu - et) / et;
}

// d/du of the closed form by central differences against 2 pi P u L(u), relative
// to the value, floored at 1e-3 of the peak where L itself vanishes.
inline double derivative_error(const RandomLct& r, double u) {
    const auto M = to_matrix(r.m);
    const double alpha = std::min(r.alpha, 5.0);
    const double h = 1e-5;
    const cplx fd = (wlct::gaussian_lct(M, alpha, u + h) - wlct::gaussian_lct(M, alpha, u - h)) / (2.0 * h);
    const cplx an = 2.0 * oracle::pi * wlct::cp_params(M, alpha).P * u * wlct::gaussian_lct(M, alpha, u);
    const double scale = std::max(std::abs(an), 1e-3 * std::abs(wlct::gaussian_lct(M, alpha, 0.0)));
    return std::abs(fd - an) / scale;
}

// Linear chirp scenario on which every chirp bin's window fits inside the
// signal for a band of interior frames (the window's 1e-8 support).
struct ChirpCase {
    double beta, gamma;
    wlct::SampledSignal x;
    wlct::WindowSpec spec;
    wlct::TFCGrid grid;
    double support = 0.0;  // seconds, largest window half-support over the chirp axis
    bool interior(std::size_t m) const {
        const double t = grid.timeAxis[m];
        return t - support >= 0.0 && t + support <= static_cast<double>(x.size() - 1) * x.dt;
    }
};

inline double window_support(const wlct::WindowSpec& spec, double lambda) {
    const double rp = -std::real(wlct::cp_params(spec.n, lambda, spec.alpha).P);
    return std::sqrt(std::log(1e8) / (oracle::pi * rp));
}

inline ChirpCase chirp_case(wlct::Variant n, double beta, double gamma, std::size_t N = 1024, double dt = 1.0 / 64,
                            std::size_t Nc = 32, std::size_t hop = 16) {
    ChirpCase c{beta, gamma, {}, {}, {}, 0.0};
    std::vector<cplx> s(N);
    for (std::size_t k = 0; k < N; ++k) {
        const double t = static_cast<double>(k) * dt;
        s[k] = std::polar(1.0, 2.0 * oracle::pi * (beta * t + 0.5 * gamma * t * t));
    }
    c.x = wlct::make_signal(std::move(s), dt);
    wlct::GridParams gp;
    gp.N = N;
    gp.dt = dt;
    gp.Nc = Nc;
    gp.hop = hop;
    if (wlct::is_reciprocal(n)) {
        // chirp axis brackets the matched lambda = 1/gamma
        gp.kind = wlct::GridKind::Dyadic;
        gp.a0 = 0.5 / std::abs(gamma);
        gp.deltaA = 1.0 / 8.0;
        c.spec = wlct::make_window_spec(n, std::min(0.9, 1.0 / std::abs(gamma)));
    } else {
        gp.kind = wlct::GridKind::Uniform;
        gp.R0 = 4.0;
        c.spec = wlct::make_window_spec(n, n == wlct::Variant::N2 ? 4.0 : 2.0);
    }
    c.grid = wlct::build_grid(gp);
    for (double l : c.grid.chirpAxis) c.support = std::max(c.support, window_support(c.spec, l));
    return c;
}

// Random (beta, gamma) keeping the instantaneous frequency inside (2, 30) Hz over 16 s.
inline std::pair<double, double> random_chirp(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double g = 1.0 + 0.5 * unit(rng);
    if (unit(rng) < 0.5) return {2.0 + unit(rng), g};
    return {29.0 - unit(rng), -g};
}

}  // namespace support
