// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the dispatcher has confirmed CPU support.

#include <immintrin.h>

#include <cmath>

#include "wlct/simd/kernels.hpp"

namespace wlct::simd {

namespace {

// Two interleaved loads [r0 i0 r1 i1], [r2 i2 r3 i3] -> re = [r0 r2 r1 r3],
// im = [i0 i2 i1 i3]. Lane order is permuted but identical for every operand,
// so elementwise arithmetic is unaffected; fix_order() restores it for real
// outputs.
inline void load4(const cplx* p, __m256d& re, __m256d& im) {
    const double* d = reinterpret_cast<const double*>(p);
    const __m256d lo = _mm256_loadu_pd(d);
    const __m256d hi = _mm256_loadu_pd(d + 4);
    re = _mm256_unpacklo_pd(lo, hi);
    im = _mm256_unpackhi_pd(lo, hi);
}

inline void store4(cplx* p, __m256d re, __m256d im) {
    double* d = reinterpret_cast<double*>(p);
    _mm256_storeu_pd(d, _mm256_unpacklo_pd(re, im));
    _mm256_storeu_pd(d + 4, _mm256_unpackhi_pd(re, im));
}

inline __m256d fix_order(__m256d v) { return _mm256_permute4x64_pd(v, 0b11011000); }

// permuted lane order [0 2 1 3] for loading real arrays alongside load4()
inline __m256d load_real_perm(const double* p) { return fix_order(_mm256_loadu_pd(p)); }

void cmul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d ar, ai, br, bi;
        load4(a + k, ar, ai);
        load4(b + k, br, bi);
        const __m256d re = _mm256_fmsub_pd(ar, br, _mm256_mul_pd(ai, bi));
        const __m256d im = _mm256_fmadd_pd(ar, bi, _mm256_mul_pd(ai, br));
        store4(out + k, re, im);
    }
    for (; k < n; ++k) {
        const double ar = a[k].real(), ai = a[k].imag();
        const double br = b[k].real(), bi = b[k].imag();
        out[k] = cplx(ar * br - ai * bi, ar * bi + ai * br);
    }
}

void cmul_real(const cplx* a, const double* s, cplx* out, std::size_t n) {
    const double* ad = reinterpret_cast<const double*>(a);
    double* od = reinterpret_cast<double*>(out);
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m128d s2 = _mm_loadu_pd(s + k);
        // [s0 s0 s1 s1]
        const __m256d ss = _mm256_permute4x64_pd(_mm256_castpd128_pd256(s2), 0b01010000);
        _mm256_storeu_pd(od + 2 * k, _mm256_mul_pd(_mm256_loadu_pd(ad + 2 * k), ss));
    }
    for (; k < n; ++k) out[k] = cplx(a[k].real() * s[k], a[k].imag() * s[k]);
}

void cabs(const cplx* a, double* out, std::size_t n) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d re, im;
        load4(a + k, re, im);
        const __m256d e = _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im));
        _mm256_storeu_pd(out + k, fix_order(_mm256_sqrt_pd(e)));
    }
    for (; k < n; ++k) {
        out[k] = std::sqrt(a[k].real() * a[k].real() + a[k].imag() * a[k].imag());
    }
}

void axpy(double s, const double* x, double* y, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        const __m256d y0 = _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k));
        const __m256d y1 = _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + k + 4), _mm256_loadu_pd(y + k + 4));
        _mm256_storeu_pd(y + k, y0);
        _mm256_storeu_pd(y + k + 4, y1);
    }
    for (; k + 4 <= n; k += 4) {
        _mm256_storeu_pd(y + k, _mm256_fmadd_pd(vs, _mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k)));
    }
    for (; k < n; ++k) y[k] += s * x[k];
}

void reassign_tail(const ReassignArgs& r, std::size_t k0) {
    constexpr double twoPi = 6.283185307179586476925;
    for (std::size_t k = k0; k < r.n; ++k) {
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
        const double s = 1.0 / (twoPi * absD2);
        const double qr = -di * s, qi = -dr * s;
        const double t2r = tr * tr - ti * ti, t2i = 2.0 * tr * ti;
        const double ptr = tr * ar - ti * ai, pti = tr * ai + ti * ar;
        r.mu[k] = r.iP.real() + (t2r * qr - t2i * qi);
        r.omega[k] = r.eta[k] - (ptr * qr - pti * qi);
    }
}

void reassign(const ReassignArgs& r) {
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d twoPi = _mm256_set1_pd(6.283185307179586476925);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d epsT2 = _mm256_set1_pd(r.epsT * r.epsT);
    const __m256d epsD2 = _mm256_set1_pd(r.epsD * r.epsD);
    const __m256d iPr = _mm256_set1_pd(r.iP.real());

    std::size_t k = 0;
    for (; k + 4 <= r.n; k += 4) {
        __m256d tr, ti, ar, ai, br, bi;
        load4(r.T + k, tr, ti);
        load4(r.T1 + k, ar, ai);
        load4(r.T2 + k, br, bi);

        const __m256d dr = _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(ar, ar), _mm256_mul_pd(ai, ai)),
                                         _mm256_sub_pd(_mm256_mul_pd(tr, br), _mm256_mul_pd(ti, bi)));
        const __m256d di = _mm256_sub_pd(_mm256_mul_pd(two, _mm256_mul_pd(ar, ai)),
                                         _mm256_add_pd(_mm256_mul_pd(tr, bi), _mm256_mul_pd(ti, br)));
        const __m256d absT2 = _mm256_add_pd(_mm256_mul_pd(tr, tr), _mm256_mul_pd(ti, ti));
        const __m256d absD2 = _mm256_add_pd(_mm256_mul_pd(dr, dr), _mm256_mul_pd(di, di));
        const __m256d ok = _mm256_and_pd(_mm256_cmp_pd(absT2, epsT2, _CMP_GT_OQ),
                                         _mm256_cmp_pd(absD2, epsD2, _CMP_GT_OQ));

        // guard the division on masked lanes
        const __m256d den = _mm256_blendv_pd(one, _mm256_mul_pd(twoPi, absD2), ok);
        const __m256d s = _mm256_div_pd(one, den);
        const __m256d qr = _mm256_mul_pd(_mm256_sub_pd(zero, di), s);
        const __m256d qi = _mm256_mul_pd(_mm256_sub_pd(zero, dr), s);
        const __m256d t2r = _mm256_sub_pd(_mm256_mul_pd(tr, tr), _mm256_mul_pd(ti, ti));
        const __m256d t2i = _mm256_mul_pd(two, _mm256_mul_pd(tr, ti));
        const __m256d ptr = _mm256_sub_pd(_mm256_mul_pd(tr, ar), _mm256_mul_pd(ti, ai));
        const __m256d pti = _mm256_add_pd(_mm256_mul_pd(tr, ai), _mm256_mul_pd(ti, ar));

        const __m256d mu = _mm256_add_pd(iPr, _mm256_sub_pd(_mm256_mul_pd(t2r, qr), _mm256_mul_pd(t2i, qi)));
        const __m256d eta = load_real_perm(r.eta + k);
        const __m256d om = _mm256_sub_pd(eta, _mm256_sub_pd(_mm256_mul_pd(ptr, qr), _mm256_mul_pd(pti, qi)));

        _mm256_storeu_pd(r.mu + k, fix_order(_mm256_and_pd(mu, ok)));
        _mm256_storeu_pd(r.omega + k, fix_order(_mm256_and_pd(om, ok)));
        const int bits = _mm256_movemask_pd(fix_order(ok));
        for (int q = 0; q < 4; ++q) r.valid[k + q] = static_cast<std::uint8_t>((bits >> q) & 1);
    }
    reassign_tail(r, k);
}

void moments25(const cplx* a, std::size_t n, double& s2, double& s5) {
    __m256d acc2 = _mm256_setzero_pd(), acc5 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d re, im;
        load4(a + k, re, im);
        const __m256d e = _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im));
        acc2 = _mm256_add_pd(acc2, e);
        acc5 = _mm256_fmadd_pd(_mm256_mul_pd(e, e), _mm256_sqrt_pd(e), acc5);
    }
    alignas(32) double b2[4], b5[4];
    _mm256_store_pd(b2, acc2);
    _mm256_store_pd(b5, acc5);
    double t2 = (b2[0] + b2[1]) + (b2[2] + b2[3]);
    double t5 = (b5[0] + b5[1]) + (b5[2] + b5[3]);
    for (; k < n; ++k) {
        const double e = a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
        t2 += e;
        t5 += e * e * std::sqrt(e);
    }
    s2 += t2;
    s5 += t5;
}

constexpr KernelTable kAvx2{Backend::Avx2, cmul, cmul_real, cabs, axpy, reassign, moments25};

}  // namespace

const KernelTable* avx2_table_unchecked() noexcept { return &kAvx2; }

}  // namespace wlct::simd
