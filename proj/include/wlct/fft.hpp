#pragma once

#include <cstddef>
#include <memory>

#include "wlct/core.hpp"

namespace wlct {

/// SIMD-aligned scratch array for FFT work; move-only.
class FftBuffer {
public:
    explicit FftBuffer(std::size_t n);
    ~FftBuffer();
    FftBuffer(FftBuffer&& o) noexcept;
    FftBuffer& operator=(FftBuffer&& o) noexcept;
    FftBuffer(const FftBuffer&) = delete;
    FftBuffer& operator=(const FftBuffer&) = delete;

    cplx* data() noexcept { return data_; }
    const cplx* data() const noexcept { return data_; }
    std::size_t size() const noexcept { return n_; }
    cplx& operator[](std::size_t k) noexcept { return data_[k]; }
    const cplx& operator[](std::size_t k) const noexcept { return data_[k]; }

private:
    cplx* data_ = nullptr;
    std::size_t n_ = 0;
};

/// In-place forward DFT, X[j] = sum_k x[k] exp(-2 pi i j k / n).
/// Plans use FFTW_ESTIMATE so results do not depend on timing; execute() is
/// safe to call concurrently on distinct FftBuffers.
class ForwardFft {
public:
    explicit ForwardFft(std::size_t n);
    ~ForwardFft();
    ForwardFft(const ForwardFft&) = delete;
    ForwardFft& operator=(const ForwardFft&) = delete;

    std::size_t size() const noexcept { return n_; }
    void execute(FftBuffer& buf) const;

private:
    std::size_t n_;
    void* plan_;
};

}  // namespace wlct
