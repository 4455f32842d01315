#pragma once

// Data-parallel inner loops of the transform pipeline. Each kernel has a
// scalar reference implementation and, on x86-64, an AVX2+FMA variant. The
// active table is chosen once at startup from CPUID; WLCT_SIMD=scalar in the
// environment pins the reference path.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace wlct::simd {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b) noexcept;

struct ReassignArgs {
    const cplx* T;    ///< window g
    const cplx* T1;   ///< window tau g
    const cplx* T2;   ///< window tau^2 g
    const double* eta;
    cplx iP;          ///< i * P_n(lambda)
    double epsT;      ///< |T| threshold
    double epsD;      ///< |T1^2 - T T2| threshold
    double* omega;    ///< out: frequency reassignment
    double* mu;       ///< out: Re(mu), the chirprate estimate
    std::uint8_t* valid;
    std::size_t n;
};

struct KernelTable {
    Backend backend;

    /// out[k] = a[k] * b[k]
    void (*cmul)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
    /// out[k] = a[k] * s[k] with real s
    void (*cmul_real)(const cplx* a, const double* s, cplx* out, std::size_t n);
    /// out[k] = |a[k]|
    void (*cabs)(const cplx* a, double* out, std::size_t n);
    /// y[k] += s * x[k]
    void (*axpy)(double s, const double* x, double* y, std::size_t n);
    /// Per-voxel frequency/chirprate reassignment over one frequency column.
    void (*reassign)(const ReassignArgs& args);
    /// Accumulates sum |a|^2 and sum |a|^5 (Renyi order 2.5 moments).
    void (*moments25)(const cplx* a, std::size_t n, double& s2, double& s5);
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the variant was not compiled in or the CPU lacks the ISA.
const KernelTable* avx2_table() noexcept;

/// The table selected for this process.
const KernelTable& active() noexcept;

/// Test hook; returns false if the requested backend is unavailable.
bool select(Backend b) noexcept;

}  // namespace wlct::simd
