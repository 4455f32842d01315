#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wlct/core.hpp"

namespace wlct {

enum class CubeAxes { Analysis, Squeezed };

/// Axes of a cube as JSON (chirp, freq, time).
nlohmann::json axes_json(const TFCGrid& grid, CubeAxes which);

/// Raw little-endian float64 (re, im) pairs in (i0, i1, i2) order at path, sidecar at path + ".json".
void write_cube(const std::string& path, const ComplexCube& cube, const TFCGrid& grid, CubeAxes which,
                const nlohmann::json& provenance);
/// Real cubes store one float64 per voxel.
void write_cube(const std::string& path, const RealCube& cube, const TFCGrid& grid, CubeAxes which,
                const nlohmann::json& provenance);

ComplexCube read_complex_cube(const std::string& path, std::size_t d0, std::size_t d1, std::size_t d2);

/// One i0 slice as CSV with columns (freq, time, value...).
void write_slice_csv(const std::string& path, const RealCube& cube, std::size_t i0,
                     const std::vector<double>& rowAxis, const std::vector<double>& colAxis);

/// Binary PGM (P5), linear grey scale of rows x cols, max mapped to 255.
void write_pgm(const std::string& path, const std::vector<double>& values, std::size_t rows, std::size_t cols);

/// Max over the first axis of a squeezed cube, as a (freq x time) image with low frequency at the bottom.
void write_squeezed_pgm(const std::string& path, const RealCube& mag);

void write_ridges_csv(const std::string& path, const RidgeSet& r);
void write_modes_csv(const std::string& path, const ModeSet& m, const SampledSignal& x);
void write_text(const std::string& path, const std::string& text);

/// Shortest round-trip decimal representation.
std::string fmt(double v);

}  // namespace wlct
