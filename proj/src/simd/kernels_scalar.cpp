#include <cmath>

#include "wlct/simd/kernels.hpp"

namespace wlct::simd {

namespace {

void cmul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const double ar = a[k].real(), ai = a[k].imag();
        const double br = b[k].real(), bi = b[k].imag();
        out[k] = cplx(ar * br - ai * bi, ar * bi + ai * br);
    }
}

void cmul_real(const cplx* a, const double* s, cplx* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) out[k] = cplx(a[k].real() * s[k], a[k].imag() * s[k]);
}

void cabs(const cplx* a, double* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = std::sqrt(a[k].real() * a[k].real() + a[k].imag() * a[k].imag());
    }
}

void axpy(double s, const double* x, double* y, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) y[k] += s * x[k];
}

// mu    = iP + T^2 / (2 pi i D)
// omega = eta - Re(T T1 / (2 pi i D))
// D     = T1^2 - T T2
void reassign(const ReassignArgs& r) {
    constexpr double twoPi = 6.283185307179586476925;
    for (std::size_t k = 0; k < r.n; ++k) {
        const double tr = r.T[k].real(), ti = r.T[k].imag();
        const double ar = r.T1[k].real(), ai = r.T1[k].imag();
        const double br = r.T2[k].real(), bi = r.T2[k].imag();
        const double dr = (ar * ar - ai * ai) - (tr * br - ti * bi);
        const double di = (2.0 * ar * ai) - (tr * bi + ti * br);
        const double absT2 = tr * tr + ti * ti;
        const double absD2 = dr * dr + di * di;
        const bool ok = absT2 > r.epsT * r.epsT && absD2 > r.epsD * r.epsD;
        r.valid[k] = ok ? 1 : 0;
        if (!ok) {
            r.omega[k] = 0.0;
            r.mu[k] = 0.0;
            continue;
        }
        // 1/(2 pi i D) = -i conj(D) / (2 pi |D|^2)
        const double s = 1.0 / (twoPi * absD2);
        const double qr = -di * s;   // real part of 1/(2 pi i D)
        const double qi = -dr * s;   // imag part
        // T^2
        const double t2r = tr * tr - ti * ti, t2i = 2.0 * tr * ti;
        // T T1
        const double ptr = tr * ar - ti * ai, pti = tr * ai + ti * ar;
        r.mu[k] = r.iP.real() + (t2r * qr - t2i * qi);
        r.omega[k] = r.eta[k] - (ptr * qr - pti * qi);
    }
}

void moments25(const cplx* a, std::size_t n, double& s2, double& s5) {
    double acc2 = 0.0, acc5 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double e = a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
        acc2 += e;
        acc5 += e * e * std::sqrt(e);
    }
    s2 += acc2;
    s5 += acc5;
}

constexpr KernelTable kScalar{Backend::Scalar, cmul, cmul_real, cabs, axpy, reassign, moments25};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace wlct::simd
