#include "wlct/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>

namespace wlct {

static_assert(std::endian::native == std::endian::little, "cube export assumes a little-endian host");

namespace {

std::ofstream open_out(const std::string& path, bool binary = false) {
    std::ofstream out(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
    if (!out) throw Error("cannot write " + path);
    return out;
}

void write_sidecar(const std::string& path, std::size_t d0, std::size_t d1, std::size_t d2, const char* kind,
                   const TFCGrid& grid, CubeAxes which, const nlohmann::json& provenance) {
    nlohmann::json j;
    j["shape"] = {d0, d1, d2};
    j["order"] = "row-major, last index fastest";
    j["dtype"] = "float64-le";
    j["valueKind"] = kind;
    j["axes"] = axes_json(grid, which);
    j["provenance"] = provenance;
    auto out = open_out(path + ".json");
    out << j.dump(2) << '\n';
}

}  // namespace

std::string fmt(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

nlohmann::json axes_json(const TFCGrid& grid, CubeAxes which) {
    nlohmann::json a;
    if (which == CubeAxes::Analysis) {
        a["chirp"] = grid.chirpAxis;
        a["freq"] = grid.freqAxis;
    } else {
        a["chirp"] = grid.squeezeChirpAxis;
        a["freq"] = grid.squeezeFreqAxis;
    }
    a["time"] = grid.timeAxis;
    a["gridKind"] = to_string(grid.kind);
    a["hop"] = grid.hop;
    return a;
}

void write_cube(const std::string& path, const ComplexCube& cube, const TFCGrid& grid, CubeAxes which,
                const nlohmann::json& provenance) {
    auto out = open_out(path, true);
    out.write(reinterpret_cast<const char*>(cube.data().data()),
              static_cast<std::streamsize>(cube.size() * sizeof(cplx)));
    write_sidecar(path, cube.dim0(), cube.dim1(), cube.dim2(), "complex", grid, which, provenance);
}

void write_cube(const std::string& path, const RealCube& cube, const TFCGrid& grid, CubeAxes which,
                const nlohmann::json& provenance) {
    auto out = open_out(path, true);
    out.write(reinterpret_cast<const char*>(cube.data().data()),
              static_cast<std::streamsize>(cube.size() * sizeof(double)));
    write_sidecar(path, cube.dim0(), cube.dim1(), cube.dim2(), "nonneg-real", grid, which, provenance);
}

ComplexCube read_complex_cube(const std::string& path, std::size_t d0, std::size_t d1, std::size_t d2) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    ComplexCube c(d0, d1, d2);
    in.read(reinterpret_cast<char*>(c.data().data()), static_cast<std::streamsize>(c.size() * sizeof(cplx)));
    if (in.gcount() != static_cast<std::streamsize>(c.size() * sizeof(cplx))) {
        throw ParseError(path + ": truncated cube");
    }
    return c;
}

void write_slice_csv(const std::string& path, const RealCube& cube, std::size_t i0,
                     const std::vector<double>& rowAxis, const std::vector<double>& colAxis) {
    auto out = open_out(path);
    out << "row,col,value\n";
    for (std::size_t r = 0; r < cube.dim1(); ++r)
        for (std::size_t c = 0; c < cube.dim2(); ++c)
            out << fmt(rowAxis[r]) << ',' << fmt(colAxis[c]) << ',' << fmt(cube(i0, r, c)) << '\n';
}

void write_pgm(const std::string& path, const std::vector<double>& values, std::size_t rows, std::size_t cols) {
    const double mx = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
    auto out = open_out(path, true);
    out << "P5\n" << cols << ' ' << rows << "\n255\n";
    std::vector<unsigned char> px(rows * cols);
    for (std::size_t k = 0; k < px.size(); ++k) {
        const double v = mx > 0.0 ? values[k] / mx : 0.0;
        px[k] = static_cast<unsigned char>(std::clamp(v, 0.0, 1.0) * 255.0 + 0.5);
    }
    out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
}

void write_squeezed_pgm(const std::string& path, const RealCube& mag) {
    const std::size_t Q = mag.dim1(), F = mag.dim2();
    std::vector<double> img(Q * F, 0.0);
    for (std::size_t p = 0; p < mag.dim0(); ++p)
        for (std::size_t q = 0; q < Q; ++q)
            for (std::size_t m = 0; m < F; ++m) {
                double& px = img[(Q - 1 - q) * F + m];
                px = std::max(px, mag(p, q, m));
            }
    write_pgm(path, img, Q, F);
}

void write_ridges_csv(const std::string& path, const RidgeSet& r) {
    auto out = open_out(path);
    out << "t,k,xi,gamma\n";
    for (std::size_t m = 0; m < r.frameTimes.size(); ++m)
        for (std::size_t k = 0; k < r.K; ++k)
            out << fmt(r.frameTimes[m]) << ',' << k + 1 << ',' << fmt(r.xi[k][m]) << ',' << fmt(r.gamma[k][m])
                << '\n';
}

void write_modes_csv(const std::string& path, const ModeSet& m, const SampledSignal& x) {
    auto out = open_out(path);
    out << "t,k,re,im\n";
    for (std::size_t s = 0; s < x.size(); ++s)
        for (std::size_t k = 0; k < m.modes.size(); ++k)
            out << fmt(x.time(s)) << ',' << k + 1 << ',' << fmt(m.modes[k][s].real()) << ','
                << fmt(m.modes[k][s].imag()) << '\n';
}

void write_text(const std::string& path, const std::string& text) {
    auto out = open_out(path);
    out << text;
}

}  // namespace wlct
