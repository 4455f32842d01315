#pragma once

#include <optional>
#include <vector>

#include "wlct/config.hpp"
#include "wlct/entropy.hpp"
#include "wlct/ridge.hpp"
#include "wlct/signals.hpp"
#include "wlct/xray.hpp"

namespace wlct {

/// Benchmark id or signal file; file inputs carry no ground truth.
BenchmarkSignal load_input(const std::string& signal);

bool positive_chirp_benchmark(const std::string& signal) noexcept;

GridParams grid_params(const RunConfig& c, const SampledSignal& x, std::size_t hop);
TFCGrid make_grid(const RunConfig& c, const SampledSignal& x);

std::vector<double> alpha_grid(const RunConfig& c);

/// Tunes on a grid with hop = tune_hop.
TuneResult tune(const RunConfig& c, const SampledSignal& x);

XrayWindow xray_window(const RunConfig& c);

/// Squeezed magnitude |S| (SWLCT) or SXWLCT per c.xray.
RealCube squeezed_cube(const RunConfig& c, const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid);

/// truth index k -> ridge index, minimizing the mean IF gap.
std::vector<std::size_t> match_ridges(const RidgeSet& r, const BenchmarkSignal& b, const TFCGrid& grid);

/// sqrt(mean_k |x_k - xhat_k|^2) at every sample; modes in truth order.
std::vector<double> sample_errors(const BenchmarkSignal& b, const std::vector<std::vector<cplx>>& modes);

struct PipelineReport {
    double alpha = 0.0;
    std::optional<TuneResult> tuning;
    RidgeSet rawRidges;                  ///< greedy peeling output
    RidgeSet ridges;                     ///< after fit_ridges
    ModeSet modes;                       ///< ridge order
    std::vector<std::size_t> assignment; ///< truth k -> ridge index
    std::vector<double> rmse;            ///< per truth component
    double seconds = 0.0;
    RealCube squeezed;
};

PipelineReport run_pipeline(const BenchmarkSignal& b, const RunConfig& c);

struct PerturbationReport {
    RidgeSet perturbed;
    std::vector<double> cleanError;      ///< per sample
    std::vector<double> perturbedError;  ///< per sample
    std::vector<double> rmse;            ///< per truth component, perturbed run
};

/// Ridge series k uses seeds seed + 2k (xi) and seed + 2k + 1 (gamma).
PerturbationReport perturbation_study(const BenchmarkSignal& b, const WindowSpec& spec, const TFCGrid& grid,
                                      const RidgeSet& ridges, const std::vector<std::size_t>& assignment,
                                      double snrDb, std::uint64_t seed);

}  // namespace wlct
