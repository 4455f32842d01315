#include "wlct/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <new>
#include <utility>

namespace wlct {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

FftBuffer::FftBuffer(std::size_t n) : n_(n) {
    data_ = reinterpret_cast<cplx*>(fftw_malloc(sizeof(fftw_complex) * (n == 0 ? 1 : n)));
    if (data_ == nullptr) throw std::bad_alloc();
    for (std::size_t k = 0; k < n; ++k) new (data_ + k) cplx(0.0, 0.0);
}

FftBuffer::~FftBuffer() {
    if (data_ != nullptr) fftw_free(data_);
}

FftBuffer::FftBuffer(FftBuffer&& o) noexcept
    : data_(std::exchange(o.data_, nullptr)), n_(std::exchange(o.n_, 0)) {}

FftBuffer& FftBuffer::operator=(FftBuffer&& o) noexcept {
    if (this != &o) {
        if (data_ != nullptr) fftw_free(data_);
        data_ = std::exchange(o.data_, nullptr);
        n_ = std::exchange(o.n_, 0);
    }
    return *this;
}

ForwardFft::ForwardFft(std::size_t n) : n_(n), plan_(nullptr) {
    FftBuffer probe(n);
    std::lock_guard<std::mutex> lock(planner_mutex());
    auto* p = reinterpret_cast<fftw_complex*>(probe.data());
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_FORWARD, FFTW_ESTIMATE);
    if (plan_ == nullptr) throw Error("failed to create FFT plan");
}

ForwardFft::~ForwardFft() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

void ForwardFft::execute(FftBuffer& buf) const {
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_execute_dft(static_cast<fftw_plan>(plan_), p, p);
}

}  // namespace wlct
