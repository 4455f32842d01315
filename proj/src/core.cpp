#include "wlct/core.hpp"

#include <cmath>
#include <string>

namespace wlct {

ParamMatrix ParamMatrix::operator*(const ParamMatrix& o) const noexcept {
    return ParamMatrix(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                       c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

ParamMatrix make_param_matrix(double a, double b, double c, double d) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
        throw DeterminantError("parameter matrix entries must be finite");
    }
    const double det = a * d - b * c;
    if (std::abs(det - 1.0) > kDeterminantTolerance) {
        throw DeterminantError("parameter matrix determinant is " + std::to_string(det) +
                               ", expected 1");
    }
    return ParamMatrix(a, b, c, d);
}

Variant variant_from_int(int n) {
    switch (n) {
        case 1: return Variant::N1;
        case 2: return Variant::N2;
        case 5: return Variant::N5;
        case 6: return Variant::N6;
        default: throw UnknownVariant("unknown transform variant " + std::to_string(n));
    }
}

int to_int(Variant v) noexcept { return static_cast<int>(v); }

ParamMatrix matrix_for(Variant n, double lambda) {
    switch (n) {
        case Variant::N1: return make_param_matrix(lambda, 1.0, -1.0, 0.0);
        case Variant::N2: return make_param_matrix(1.0, 0.0, lambda, 1.0);
        case Variant::N5:
        case Variant::N6: {
            // cot(theta) = lambda with theta in (0, pi)
            const double theta = std::atan2(1.0, lambda);
            const double c = std::cos(theta), s = std::sin(theta);
            // renormalize so the determinant is 1 to rounding
            const double r = std::sqrt(c * c + s * s);
            return make_param_matrix(c / r, s / r, -s / r, c / r);
        }
    }
    throw UnknownVariant("unknown transform variant");
}

ParamMatrix matrix_for(int n, double lambda) { return matrix_for(variant_from_int(n), lambda); }

void validate(const WindowSpec& spec) {
    if (!(spec.alpha > 0.0) || !std::isfinite(spec.alpha)) {
        throw InvalidWindow("window width alpha must be positive");
    }
    if (spec.n == Variant::N5 && !(spec.alpha < 1.0)) {
        throw InvalidWindow("variant 5 requires alpha < 1");
    }
    if (spec.n == Variant::N6 && !(spec.alpha > 1.0)) {
        throw InvalidWindow("variant 6 requires alpha > 1");
    }
}

WindowSpec make_window_spec(Variant n, double alpha) {
    WindowSpec s{n, alpha};
    validate(s);
    return s;
}

SampledSignal make_signal(std::vector<cplx> samples, double dt, double t0) {
    if (samples.size() < 2) throw InvalidSignal("signal needs at least two samples");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidSignal("sample step must be positive");
    return SampledSignal{std::move(samples), dt, t0};
}

GridKind grid_kind_from_string(const std::string& s) {
    if (s == "uniform") return GridKind::Uniform;
    if (s == "dyadic") return GridKind::Dyadic;
    if (s == "uniform-pos") return GridKind::UniformPositive;
    if (s == "dyadic-pos") return GridKind::DyadicPositive;
    throw GridError("unknown grid kind '" + s + "'");
}

std::string to_string(GridKind k) {
    switch (k) {
        case GridKind::Uniform: return "uniform";
        case GridKind::Dyadic: return "dyadic";
        case GridKind::UniformPositive: return "uniform-pos";
        case GridKind::DyadicPositive: return "dyadic-pos";
    }
    return "?";
}

GridKind default_grid_kind(Variant n, bool positiveOnly) {
    if (is_reciprocal(n)) return positiveOnly ? GridKind::DyadicPositive : GridKind::Dyadic;
    return positiveOnly ? GridKind::UniformPositive : GridKind::Uniform;
}

TFCGrid build_grid(const GridParams& p) {
    if (p.N < 2) throw GridError("grid needs N >= 2");
    if (!(p.dt > 0.0)) throw GridError("sample step must be positive");
    if (p.hop < 1) throw GridError("hop must be >= 1");

    TFCGrid g;
    g.N = p.N;
    g.dt = p.dt;
    g.t0 = p.t0;
    g.hop = p.hop;
    g.kind = p.kind;
    g.epsilonRel = p.epsilonRel;

    const std::size_t Nc = p.Nc == 0 ? 2 * (p.N / 2) : p.Nc;
    if (Nc < 2) throw GridError("chirp axis needs Nc >= 2");
    const double nyquist = 0.5 / p.dt;
    g.R0 = p.R0 > 0.0 ? p.R0 : nyquist / 4.0;
    g.a0 = p.a0 > 0.0 ? p.a0 : p.dt;
    g.deltaA = p.deltaA;
    if (p.R0 < 0.0 || p.a0 < 0.0) throw GridError("R0 and a0 must be positive");
    if (g.dyadic() && !(g.deltaA > 0.0)) throw GridError("dyadic step must be positive");

    for (std::size_t m = 0; m * p.hop < p.N; ++m) {
        g.timeAxis.push_back(p.t0 + static_cast<double>(m * p.hop) * p.dt);
    }

    g.deltaEta = 1.0 / (static_cast<double>(p.N) * p.dt);
    for (std::size_t j = 0; j <= p.N / 2; ++j) g.freqAxis.push_back(static_cast<double>(j) * g.deltaEta);

    g.deltaLambda = 2.0 * g.R0 / static_cast<double>(Nc - 1);
    const std::size_t half = Nc / 2;
    switch (p.kind) {
        case GridKind::Uniform:
            for (std::size_t l = 1; l <= Nc; ++l) {
                g.chirpAxis.push_back(g.R0 + (1.0 - static_cast<double>(l)) * g.deltaLambda);
            }
            break;
        case GridKind::UniformPositive:
            for (std::size_t l = 1; l <= half; ++l) {
                g.chirpAxis.push_back(-static_cast<double>(l) * g.deltaLambda);
            }
            break;
        case GridKind::Dyadic:
            for (std::size_t l = 1; l <= half; ++l) {
                g.chirpAxis.push_back(-g.a0 * std::exp2(static_cast<double>(half + 1 - l) * g.deltaA));
            }
            for (std::size_t k = 1; k <= Nc - half; ++k) {
                g.chirpAxis.push_back(g.a0 * std::exp2(static_cast<double>(k) * g.deltaA));
            }
            break;
        case GridKind::DyadicPositive:
            for (std::size_t l = 1; l <= half; ++l) {
                g.chirpAxis.push_back(g.a0 * std::exp2(static_cast<double>(l) * g.deltaA));
            }
            break;
    }
    if (g.chirpAxis.empty()) throw GridError("chirp axis is empty");

    g.deltaGamma = p.deltaGamma > 0.0 ? p.deltaGamma : g.deltaLambda;
    g.deltaXi = p.deltaXi > 0.0 ? p.deltaXi : g.deltaEta;
    if (p.deltaGamma < 0.0 || p.deltaXi < 0.0) throw GridError("squeeze steps must be positive");

    const auto N1 = static_cast<std::size_t>(std::llround(2.0 * g.R0 / g.deltaGamma)) + 1;
    const auto N2 = static_cast<std::size_t>(
        std::llround(static_cast<double>(p.N / 2) * g.deltaEta / g.deltaXi));
    if (N2 == 0) throw GridError("squeeze frequency axis is empty");
    g.squeezeChirpAxis.reserve(N1);
    for (std::size_t q = 0; q < N1; ++q) {
        g.squeezeChirpAxis.push_back(-g.R0 + static_cast<double>(q) * g.deltaGamma);
    }
    g.squeezeFreqAxis.reserve(N2);
    for (std::size_t q = 0; q < N2; ++q) g.squeezeFreqAxis.push_back(static_cast<double>(q) * g.deltaXi);
    return g;
}

void check_grid(const TFCGrid& grid, const SampledSignal& x) {
    if (grid.N != x.size() || std::abs(grid.dt - x.dt) > 1e-12 * x.dt) {
        throw GridMismatch("grid built for N=" + std::to_string(grid.N) +
                           " does not match signal of length " + std::to_string(x.size()));
    }
}

}  // namespace wlct
