#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "wlct/io.hpp"
#include "wlct/pipeline.hpp"
#include "wlct/reassign.hpp"
#include "wlct/reconstruct.hpp"
#include "wlct/simd/kernels.hpp"
#include "wlct/transform.hpp"
#include "wlct/xray.hpp"

namespace fs = std::filesystem;
using namespace wlct;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// flag name -> config key
const std::pair<const char*, const char*> kFlags[] = {
    {"--signal", "signal"}, {"--variant", "variant"}, {"--alpha", "alpha"},     {"--alphas", "alphas"},
    {"--nc", "nc"},         {"--grid", "grid"},       {"--r0", "r0"},           {"--a0", "a0"},
    {"--da", "da"},         {"--hop", "hop"},         {"--tune-hop", "tune_hop"}, {"--dgamma", "dgamma"},
    {"--dxi", "dxi"},       {"--epsilon", "epsilon"}, {"--xray", "xray"},       {"--n0", "n0"},
    {"--dv", "dv"},         {"--k", "k"},             {"--seed", "seed"},       {"--snr", "snr"},
    {"--ell", "ell"},       {"--out", "out"},     {"--ridge-fit", "ridge_fit"},
};

struct Args {
    std::string config;
    std::map<std::string, std::string> values;
};

void add_common(CLI::App* sub, Args& a) {
    sub->add_option("--config", a.config, "key = value file; flags override it");
    for (const auto& [flag, key] : kFlags) sub->add_option(flag, a.values[key]);
}

RunConfig resolve(const CLI::App* sub, const Args& a) {
    RunConfig c;
    if (!a.config.empty()) apply_settings(c, read_config_file(a.config));
    for (const auto& [flag, key] : kFlags) {
        if (sub->count(flag) > 0) apply_setting(c, key, a.values.at(key));
    }
    return c;
}

fs::path prepare_out(const RunConfig& c) {
    fs::path out(c.out);
    fs::create_directories(out);
    write_text((out / "config.resolved").string(), to_text(c));
    return out;
}

nlohmann::json provenance(const RunConfig& c, const WindowSpec& spec) {
    return {{"signal", c.signal}, {"variant", to_int(spec.n)}, {"alpha", spec.alpha}, {"xray", c.xray}};
}

std::string tune_csv(const TuneResult& t) {
    std::ostringstream o;
    o << "alpha,entropy,selected\n";
    for (std::size_t i = 0; i < t.alphas.size(); ++i) {
        o << fmt(t.alphas[i]) << ',' << fmt(t.entropies[i]) << ',' << (t.alphas[i] == t.alpha ? 1 : 0) << '\n';
    }
    return o.str();
}

WindowSpec resolve_window(const RunConfig& c, const SampledSignal& x, const fs::path& out) {
    const Variant n = variant_from_int(c.variant);
    if (c.alpha > 0.0) return make_window_spec(n, c.alpha);
    const TuneResult t = tune(c, x);
    write_text((out / "tune.csv").string(), tune_csv(t));
    return make_window_spec(n, t.alpha);
}

int cmd_tune(const RunConfig& c) {
    const auto out = prepare_out(c);
    const BenchmarkSignal b = load_input(c.signal);
    const TuneResult t = tune(c, b.signal);
    const std::string csv = tune_csv(t);
    write_text((out / "tune.csv").string(), csv);
    std::cout << csv;
    return 0;
}

int cmd_analyze(const RunConfig& c) {
    const auto out = prepare_out(c);
    const BenchmarkSignal b = load_input(c.signal);
    const WindowSpec spec = resolve_window(c, b.signal, out);
    const TFCGrid grid = make_grid(c, b.signal);
    const auto prov = provenance(c, spec);

    const ComplexCube T = wlct_cube(b.signal, spec, grid, 0);
    write_cube((out / "wlct.bin").string(), T, grid, CubeAxes::Analysis, prov);
    const ComplexCube T1 = wlct_cube(b.signal, spec, grid, 1);
    const ComplexCube T2 = wlct_cube(b.signal, spec, grid, 2);
    const ReassignMaps maps = reassignment_maps(T, T1, T2, spec, grid, -1.0);
    if (c.xray) {
        const RealCube X = xray_cube(magnitude_cube(T), spec, grid, xray_window(c));
        write_cube((out / "xwlct.bin").string(), X, grid, CubeAxes::Analysis, prov);
        const RealCube S = synchrosqueeze(X, maps, spec, grid);
        write_cube((out / "sxwlct.bin").string(), S, grid, CubeAxes::Squeezed, prov);
        write_squeezed_pgm((out / "squeezed.pgm").string(), S);
    } else {
        const ComplexCube S = synchrosqueeze(T, maps, spec, grid);
        write_cube((out / "swlct.bin").string(), S, grid, CubeAxes::Squeezed, prov);
        write_squeezed_pgm((out / "squeezed.pgm").string(), magnitude_cube(S));
    }
    std::cout << "alpha = " << fmt(spec.alpha) << "\nwrote " << out.string() << '\n';
    return 0;
}

std::string rmse_csv(const PipelineReport& r) {
    std::ostringstream o;
    o << "k,ridge,rmse\n";
    for (std::size_t k = 0; k < r.rmse.size(); ++k) o << k + 1 << ',' << r.assignment[k] + 1 << ',' << fmt(r.rmse[k]) << '\n';
    return o.str();
}

std::string condition_csv(const ModeSet& m) {
    std::ostringstream o;
    o << "t,kappa\n";
    for (std::size_t i = 0; i < m.frameTimes.size(); ++i) o << fmt(m.frameTimes[i]) << ',' << fmt(m.condition[i]) << '\n';
    return o.str();
}

int cmd_ridges(const RunConfig& c) {
    const auto out = prepare_out(c);
    BenchmarkSignal b = load_input(c.signal);
    const WindowSpec spec = resolve_window(c, b.signal, out);
    const TFCGrid grid = make_grid(c, b.signal);
    const RealCube S = squeezed_cube(c, b.signal, spec, grid);
    const std::size_t K = c.k > 0 ? c.k : (b.K() > 0 ? b.K() : 2);
    const RidgeSet r = fit_ridges(extract_ridges(S, grid, K), S, grid, RidgeFit{c.ridgeFit, 2});
    write_ridges_csv((out / "ridges.csv").string(), r);
    write_squeezed_pgm((out / "squeezed.pgm").string(), S);
    std::cout << "alpha = " << fmt(spec.alpha) << "\nridges = " << r.K << "\nwrote " << out.string() << '\n';
    return 0;
}

PipelineReport pipeline(RunConfig c, const BenchmarkSignal& b, const fs::path& out) {
    if (c.alpha <= 0.0) {
        const TuneResult t = tune(c, b.signal);
        write_text((out / "tune.csv").string(), tune_csv(t));
        c.alpha = t.alpha;
    }
    return run_pipeline(b, c);
}

void write_report(const PipelineReport& r, const BenchmarkSignal& b, const fs::path& out) {
    write_ridges_csv((out / "ridges.csv").string(), r.ridges);
    write_modes_csv((out / "modes.csv").string(), r.modes, b.signal);
    write_text((out / "condition.csv").string(), condition_csv(r.modes));
    if (!r.rmse.empty()) write_text((out / "rmse.csv").string(), rmse_csv(r));
    write_squeezed_pgm((out / "squeezed.pgm").string(), r.squeezed);
}

int cmd_reconstruct(const RunConfig& c) {
    const auto out = prepare_out(c);
    const BenchmarkSignal b = load_input(c.signal);
    const PipelineReport r = pipeline(c, b, out);
    write_report(r, b, out);
    std::cout << "alpha = " << fmt(r.alpha) << '\n';
    for (std::size_t k = 0; k < r.rmse.size(); ++k) std::cout << "rmse[" << k + 1 << "] = " << fmt(r.rmse[k]) << '\n';
    return 0;
}

int cmd_bench(const RunConfig& c) {
    const auto out = prepare_out(c);
    const BenchmarkSignal b = load_input(c.signal);
    if (b.K() == 0) throw UsageError("bench needs a benchmark signal (x1, y2 or z3)");
    const PipelineReport r = pipeline(c, b, out);
    write_report(r, b, out);

    const WindowSpec spec = make_window_spec(variant_from_int(c.variant), r.alpha);
    const TFCGrid grid = make_grid(c, b.signal);
    const PerturbationReport p = perturbation_study(b, spec, grid, r.ridges, r.assignment, c.snr, c.seed);
    std::ostringstream pc;
    pc << "t,clean,perturbed\n";
    for (std::size_t s = 0; s < b.signal.size(); ++s) {
        pc << fmt(b.signal.time(s)) << ',' << fmt(p.cleanError[s]) << ',' << fmt(p.perturbedError[s]) << '\n';
    }
    write_text((out / "perturbation.csv").string(), pc.str());

    std::ostringstream row;
    row << "signal,n,source,alpha";
    for (std::size_t k = 0; k < r.rmse.size(); ++k) row << ",rmse" << k + 1;
    row << '\n' << b.id << ',' << c.variant << ',' << (c.xray ? "SXWLCT" : "SWLCT") << ',' << fmt(r.alpha);
    for (double e : r.rmse) row << ',' << fmt(e);
    row << '\n';
    write_text((out / "bench.csv").string(), row.str());
    std::cout << row.str();
    std::fprintf(stderr, "wall time %.2f s (%s kernels)\n", r.seconds,
                 std::string(simd::to_string(simd::active().backend)).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Windowed linear canonical transform analysis"};
    app.require_subcommand(1);
    Args a;
    CLI::App* tuneCmd = app.add_subcommand("tune", "entropy search over the window width");
    CLI::App* analyzeCmd = app.add_subcommand("analyze", "emit transform, X-ray and squeezed cubes");
    CLI::App* ridgesCmd = app.add_subcommand("ridges", "extract ridge curves");
    CLI::App* reconCmd = app.add_subcommand("reconstruct", "retrieve modes along the ridges");
    CLI::App* benchCmd = app.add_subcommand("bench", "full benchmark run with perturbation study");
    for (CLI::App* s : {tuneCmd, analyzeCmd, ridgesCmd, reconCmd, benchCmd}) add_common(s, a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const RunConfig c = resolve(sub, a);
        if (sub == tuneCmd) return cmd_tune(c);
        if (sub == analyzeCmd) return cmd_analyze(c);
        if (sub == ridgesCmd) return cmd_ridges(c);
        if (sub == reconCmd) return cmd_reconstruct(c);
        return cmd_bench(c);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const UnknownId& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const UnknownVariant& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return 2;
    }
}
