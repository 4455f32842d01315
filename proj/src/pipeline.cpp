#include "wlct/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "wlct/reassign.hpp"
#include "wlct/reconstruct.hpp"
#include "wlct/transform.hpp"

namespace wlct {

BenchmarkSignal load_input(const std::string& signal) {
    if (signal == "x1" || signal == "y2" || signal == "z3") return gen_benchmark(signal);
    BenchmarkSignal b;
    b.id = signal;
    b.signal = load_signal(signal);
    return b;
}

bool positive_chirp_benchmark(const std::string& signal) noexcept { return signal == "y2" || signal == "z3"; }

GridParams grid_params(const RunConfig& c, const SampledSignal& x, std::size_t hop) {
    const Variant n = variant_from_int(c.variant);
    GridParams p;
    p.N = x.size();
    p.dt = x.dt;
    p.t0 = x.t0;
    p.Nc = c.nc;
    p.kind = c.grid.empty() ? default_grid_kind(n, positive_chirp_benchmark(c.signal)) : grid_kind_from_string(c.grid);
    p.R0 = c.r0;
    p.a0 = c.a0;
    p.deltaA = c.da;
    p.hop = hop;
    p.deltaGamma = c.dgamma;
    p.deltaXi = c.dxi;
    p.epsilonRel = c.epsilon;
    return p;
}

TFCGrid make_grid(const RunConfig& c, const SampledSignal& x) { return build_grid(grid_params(c, x, c.hop)); }

std::vector<double> alpha_grid(const RunConfig& c) {
    if (!c.alphas.empty()) return parse_list(c.alphas);
    return default_alpha_grid(variant_from_int(c.variant));
}

TuneResult tune(const RunConfig& c, const SampledSignal& x) {
    const TFCGrid g = build_grid(grid_params(c, x, c.tuneHop));
    return tune_alpha(x, variant_from_int(c.variant), alpha_grid(c), g, c.ell);
}

XrayWindow xray_window(const RunConfig& c) {
    XrayWindow w;
    w.N0 = c.n0;
    w.dv = c.dv;
    return w;
}

RealCube squeezed_cube(const RunConfig& c, const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid) {
    if (c.xray) return sxwlct(x, spec, grid, xray_window(c));
    return magnitude_cube(swlct(x, spec, grid));
}

std::vector<std::size_t> match_ridges(const RidgeSet& r, const BenchmarkSignal& b, const TFCGrid& grid) {
    const std::size_t K = std::min(r.K, b.K());
    std::vector<std::size_t> perm(r.K);
    std::iota(perm.begin(), perm.end(), 0);
    if (K == 0) return {};
    auto gap = [&](std::size_t truth, std::size_t ridge) {
        double s = 0.0;
        for (std::size_t m = 0; m < grid.frames(); ++m) {
            s += std::abs(r.xi[ridge][m] - b.trueIF[truth][grid.frameSample(m)]);
        }
        return s;
    };
    std::vector<std::size_t> best(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(K));
    double bestCost = INFINITY;
    if (r.K <= 6) {
        do {
            double cost = 0.0;
            for (std::size_t k = 0; k < K; ++k) cost += gap(k, perm[k]);
            if (cost < bestCost) {
                bestCost = cost;
                best.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(K));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return best;
}

std::vector<double> sample_errors(const BenchmarkSignal& b, const std::vector<std::vector<cplx>>& modes) {
    const std::size_t N = b.signal.size(), K = std::min(b.K(), modes.size());
    std::vector<double> e(N, 0.0);
    if (K == 0) return e;
    for (std::size_t s = 0; s < N; ++s) {
        double acc = 0.0;
        for (std::size_t k = 0; k < K; ++k) acc += std::norm(b.trueModes[k][s] - modes[k][s]);
        e[s] = std::sqrt(acc / static_cast<double>(K));
    }
    return e;
}

PipelineReport run_pipeline(const BenchmarkSignal& b, const RunConfig& c) {
    const auto start = std::chrono::steady_clock::now();
    PipelineReport rep;
    const Variant n = variant_from_int(c.variant);
    if (c.alpha > 0.0) {
        rep.alpha = c.alpha;
    } else {
        rep.tuning = tune(c, b.signal);
        rep.alpha = rep.tuning->alpha;
    }
    const WindowSpec spec = make_window_spec(n, rep.alpha);
    const TFCGrid grid = make_grid(c, b.signal);
    rep.squeezed = squeezed_cube(c, b.signal, spec, grid);
    const std::size_t K = c.k > 0 ? c.k : (b.K() > 0 ? b.K() : 2);
    rep.rawRidges = extract_ridges(rep.squeezed, grid, K);
    rep.ridges = fit_ridges(rep.rawRidges, rep.squeezed, grid, RidgeFit{c.ridgeFit, 2});
    rep.modes = retrieve_modes(b.signal, spec, grid, rep.ridges);
    if (b.K() > 0) {
        rep.assignment = match_ridges(rep.ridges, b, grid);
        for (std::size_t k = 0; k < rep.assignment.size(); ++k) {
            rep.rmse.push_back(rmse_central(b.trueModes[k], rep.modes.modes[rep.assignment[k]]));
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

PerturbationReport perturbation_study(const BenchmarkSignal& b, const WindowSpec& spec, const TFCGrid& grid,
                                      const RidgeSet& ridges, const std::vector<std::size_t>& assignment,
                                      double snrDb, std::uint64_t seed) {
    PerturbationReport rep;
    rep.perturbed = ridges;
    for (std::size_t k = 0; k < ridges.K; ++k) {
        rep.perturbed.xi[k] = perturb_series(ridges.xi[k], snrDb, seed + 2 * k);
        rep.perturbed.gamma[k] = perturb_series(ridges.gamma[k], snrDb, seed + 2 * k + 1);
    }
    auto ordered = [&](const ModeSet& m) {
        std::vector<std::vector<cplx>> out;
        for (std::size_t r : assignment) out.push_back(m.modes[r]);
        return out;
    };
    const ModeSet clean = retrieve_modes(b.signal, spec, grid, ridges);
    const ModeSet pert = retrieve_modes(b.signal, spec, grid, rep.perturbed);
    const auto co = ordered(clean), po = ordered(pert);
    rep.cleanError = sample_errors(b, co);
    rep.perturbedError = sample_errors(b, po);
    for (std::size_t k = 0; k < po.size(); ++k) rep.rmse.push_back(rmse_central(b.trueModes[k], po[k]));
    return rep;
}

}  // namespace wlct
