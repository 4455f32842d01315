#include "wlct/signals.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wlct {

namespace {

struct Component {
    double (*phase)(double);
    double (*freq)(double);
    double (*chirp)(double);
};

BenchmarkSignal assemble(const std::string& id, const std::vector<Component>& comps, double duration,
                         double fs, std::optional<Crossing> crossing) {
    const auto N = static_cast<std::size_t>(std::llround(duration * fs));
    const double dt = 1.0 / fs;
    BenchmarkSignal b;
    b.id = id;
    b.crossing = crossing;
    std::vector<cplx> sum(N, cplx(0.0, 0.0));
    for (const Component& c : comps) {
        std::vector<cplx> mode(N);
        std::vector<double> f(N), g(N);
        for (std::size_t k = 0; k < N; ++k) {
            const double t = static_cast<double>(k) * dt;
            mode[k] = std::polar(1.0, 2.0 * kPi * c.phase(t));
            f[k] = c.freq(t);
            g[k] = c.chirp(t);
            sum[k] += mode[k];
        }
        b.trueModes.push_back(std::move(mode));
        b.trueIF.push_back(std::move(f));
        b.trueChirp.push_back(std::move(g));
    }
    b.signal = make_signal(std::move(sum), dt, 0.0);
    return b;
}

}  // namespace

BenchmarkSignal gen_benchmark(const std::string& id) {
    if (id == "x1") {
        return assemble(id,
                        {{[](double t) { return -4.0 * t * t + 50.0 * t; }, [](double t) { return -8.0 * t + 50.0; },
                          [](double) { return -8.0; }},
                         {[](double t) { return 6.0 * t * t + 10.0 * t; }, [](double t) { return 12.0 * t + 10.0; },
                          [](double) { return 12.0; }}},
                        4.0, 128.0, Crossing{2.0, 34.0});
    }
    if (id == "y2") {
        return assemble(id,
                        {{[](double t) { return 4.0 * t * t + 20.0 * t; }, [](double t) { return 8.0 * t + 20.0; },
                          [](double) { return 8.0; }},
                         {[](double t) { return 6.0 * t * t + 12.0 * t; }, [](double t) { return 12.0 * t + 12.0; },
                          [](double) { return 12.0; }}},
                        4.0, 128.0, Crossing{2.0, 36.0});
    }
    if (id == "z3") {
        return assemble(
            id,
            {{[](double t) { return 2.0 * t * t + 18.0 * t; }, [](double t) { return 4.0 * t + 18.0; },
              [](double) { return 4.0; }},
             {[](double t) { return 2.0 * t * t + 18.0 * t + 64.0 / kPi * std::cos(kPi * t / 8.0 + kPi / 2.0); },
              [](double t) { return 4.0 * t + 18.0 - 8.0 * std::sin(kPi * t / 8.0 + kPi / 2.0); },
              [](double t) { return 4.0 - kPi * std::cos(kPi * t / 8.0 + kPi / 2.0); }}},
            8.0, 128.0, Crossing{4.0, 34.0});
    }
    throw UnknownId("unknown benchmark signal '" + id + "'");
}

BenchmarkSignal linear_chirp(double beta, double gamma, std::size_t N, double dt) {
    BenchmarkSignal b;
    b.id = "chirp";
    std::vector<cplx> s(N);
    std::vector<double> f(N), g(N, gamma);
    for (std::size_t k = 0; k < N; ++k) {
        const double t = static_cast<double>(k) * dt;
        s[k] = std::polar(1.0, 2.0 * kPi * (beta * t + 0.5 * gamma * t * t));
        f[k] = beta + gamma * t;
    }
    b.trueModes.push_back(s);
    b.trueIF.push_back(std::move(f));
    b.trueChirp.push_back(std::move(g));
    b.signal = make_signal(std::move(s), dt, 0.0);
    return b;
}

std::pair<std::size_t, std::size_t> central_range(std::size_t N) noexcept { return {N / 8, (7 * N) / 8}; }

double rmse_central(const std::vector<cplx>& f, const std::vector<cplx>& fhat) {
    if (f.size() != fhat.size()) throw LengthMismatch("rmse inputs differ in length");
    if (f.empty()) throw LengthMismatch("rmse of empty arrays");
    const auto [lo, hi] = central_range(f.size());
    double acc = 0.0;
    for (std::size_t k = lo; k <= hi && k < f.size(); ++k) acc += std::norm(f[k] - fhat[k]);
    const std::size_t count = std::min(hi, f.size() - 1) - lo + 1;
    return std::sqrt(acc / static_cast<double>(count));
}

GaussianSource::GaussianSource(std::uint64_t seed) : eng_(seed) {}

double GaussianSource::next() {
    if (hasSpare_) {
        hasSpare_ = false;
        return spare_;
    }
    constexpr double scale = 1.0 / 9007199254740992.0;  // 2^-53
    const double u1 = static_cast<double>((eng_() >> 11) + 1) * scale;
    const double u2 = static_cast<double>(eng_() >> 11) * scale;
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    hasSpare_ = true;
    return r * std::cos(2.0 * kPi * u2);
}

std::vector<double> perturb_series(const std::vector<double>& series, double snrDb, std::uint64_t seed) {
    double ps = 0.0;
    for (double v : series) ps += v * v;
    if (series.empty() || ps == 0.0) throw ZeroSeries("cannot perturb an all-zero series");
    if (std::isinf(snrDb) && snrDb > 0.0) return series;
    ps /= static_cast<double>(series.size());

    GaussianSource g(seed);
    std::vector<double> noise(series.size());
    double pn = 0.0;
    for (double& v : noise) {
        v = g.next();
        pn += v * v;
    }
    pn /= static_cast<double>(noise.size());
    const double target = ps / std::pow(10.0, snrDb / 10.0);
    const double s = std::sqrt(target / pn);
    std::vector<double> out(series.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = series[k] + s * noise[k];
    return out;
}

SampledSignal load_signal_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<double> t;
    std::vector<cplx> v;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty() || line[0] == '#') continue;
        for (char& c : line)
            if (c == ',' || c == ';' || c == '\t') c = ' ';
        std::istringstream ss(line);
        double a, b, c;
        if (!(ss >> a >> b >> c)) {
            if (t.empty() && lineNo == 1) continue;  // header
            throw ParseError(path + ":" + std::to_string(lineNo) + ": expected t,re,im");
        }
        t.push_back(a);
        v.emplace_back(b, c);
    }
    if (v.size() < 2) throw ParseError(path + ": need at least two samples");
    const double dt = t[1] - t[0];
    if (!(dt > 0.0)) throw ParseError(path + ": time column must increase");
    return make_signal(std::move(v), dt, t[0]);
}

SampledSignal load_signal_raw(const std::string& path) {
    std::ifstream side(path + ".json");
    if (!side) throw ParseError("missing sidecar " + path + ".json");
    nlohmann::json meta;
    try {
        side >> meta;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ".json: " + e.what());
    }
    if (!meta.contains("dt")) throw ParseError(path + ".json: missing dt");
    const double dt = meta.at("dt").get<double>();
    const double t0 = meta.value("t0", 0.0);

    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() % 16 != 0) throw ParseError(path + ": size is not a multiple of 16 bytes");
    std::vector<cplx> v(bytes.size() / 16);
    for (std::size_t k = 0; k < v.size(); ++k) {
        double re, im;
        std::memcpy(&re, bytes.data() + 16 * k, 8);
        std::memcpy(&im, bytes.data() + 16 * k + 8, 8);
        v[k] = {re, im};
    }
    if (v.size() < 2) throw ParseError(path + ": need at least two samples");
    return make_signal(std::move(v), dt, t0);
}

SampledSignal load_signal(const std::string& path) {
    const auto dot = path.rfind('.');
    if (dot != std::string::npos && path.substr(dot) == ".csv") return load_signal_csv(path);
    return load_signal_raw(path);
}

}  // namespace wlct
