#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wlct/core.hpp"

namespace wlct {

struct Crossing {
    double t = 0.0;
    double eta = 0.0;
};

struct BenchmarkSignal {
    std::string id;
    SampledSignal signal;
    std::vector<std::vector<double>> trueIF;     ///< K x N, Hz
    std::vector<std::vector<double>> trueChirp;  ///< K x N, Hz/s
    std::vector<std::vector<cplx>> trueModes;
    std::optional<Crossing> crossing;

    std::size_t K() const noexcept { return trueModes.size(); }
};

/// "x1", "y2" or "z3"; throws UnknownId otherwise.
BenchmarkSignal gen_benchmark(const std::string& id);

/// Unit-amplitude linear chirp exp(2 pi i (beta t + gamma t^2 / 2)).
BenchmarkSignal linear_chirp(double beta, double gamma, std::size_t N, double dt);

/// RMS of f - fhat over indices floor(N/8) .. floor(7N/8).
double rmse_central(const std::vector<cplx>& f, const std::vector<cplx>& fhat);

/// Indices [lo, hi] retained by rmse_central.
std::pair<std::size_t, std::size_t> central_range(std::size_t N) noexcept;

/// Deterministic standard normals: mt19937_64 feeding Box-Muller
/// (u1 in (0, 1], u2 in [0, 1) from 53-bit draws; both outputs of each pair used).
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed);
    double next();

private:
    std::mt19937_64 eng_;
    bool hasSpare_ = false;
    double spare_ = 0.0;
};

/// series + noise scaled so 10 log10(P_series / P_noise) = snrDb exactly;
/// snrDb = +inf returns the input.
std::vector<double> perturb_series(const std::vector<double>& series, double snrDb, std::uint64_t seed);

/// CSV rows "t,re,im" (optional header). dt and t0 come from the first two rows.
SampledSignal load_signal_csv(const std::string& path);

/// Interleaved little-endian float64 (re, im) with sidecar path + ".json" holding dt and t0.
SampledSignal load_signal_raw(const std::string& path);

/// Picks the loader by extension (.csv, otherwise raw).
SampledSignal load_signal(const std::string& path);

}  // namespace wlct
