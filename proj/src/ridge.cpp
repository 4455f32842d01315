#include "wlct/ridge.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "wlct/reassign.hpp"
#include "wlct/transform.hpp"

namespace wlct {

namespace {

struct Pos {
    std::size_t p, q;
};

// Windowed argmax in frame m; ties go to lower q, then lower p.
Pos window_argmax(const RealCube& c, std::size_t m, Pos prev, const RidgeOptions& o) {
    const std::size_t P = c.dim0(), Q = c.dim1();
    const std::size_t plo = prev.p > o.maxJumpGamma ? prev.p - o.maxJumpGamma : 0;
    const std::size_t phi = std::min(P - 1, prev.p + o.maxJumpGamma);
    const std::size_t qlo = prev.q > o.maxJumpXi ? prev.q - o.maxJumpXi : 0;
    const std::size_t qhi = std::min(Q - 1, prev.q + o.maxJumpXi);
    Pos best = prev;
    double bv = 0.0;
    for (std::size_t q = qlo; q <= qhi; ++q) {
        for (std::size_t p = plo; p <= phi; ++p) {
            const double v = c(p, q, m);
            if (v > bv) {
                bv = v;
                best = {p, q};
            }
        }
    }
    return best;
}

}  // namespace

RealCube squeezed_magnitude(const ComplexCube& S) { return magnitude_cube(S); }

RidgeSet extract_ridges(const RealCube& mag, const TFCGrid& grid, std::size_t K, const RidgeOptions& opt) {
    if (K == 0) throw Error("ridge count must be positive");
    const std::size_t P = mag.dim0(), Q = mag.dim1(), F = mag.dim2();
    if (P != grid.squeezeChirpAxis.size() || Q != grid.squeezeFreqAxis.size() || F != grid.frames()) {
        throw GridMismatch("squeezed cube does not match grid");
    }
    RealCube work = mag;
    RidgeSet rs;
    rs.K = K;
    rs.frameTimes = grid.timeAxis;

    for (std::size_t k = 0; k < K; ++k) {
        // global maximum, scanning m, then q, then p so ties resolve to lower q, lower p
        double bv = 0.0;
        std::size_t bm = 0;
        Pos bp{0, 0};
        for (std::size_t m = 0; m < F; ++m) {
            for (std::size_t q = 0; q < Q; ++q) {
                for (std::size_t p = 0; p < P; ++p) {
                    const double v = work(p, q, m);
                    if (v > bv) {
                        bv = v;
                        bm = m;
                        bp = {p, q};
                    }
                }
            }
        }
        if (!(bv > 0.0)) {
            throw InsufficientEnergy("only " + std::to_string(k) + " of " + std::to_string(K) +
                                     " ridges carry energy");
        }
        std::vector<Pos> path(F);
        path[bm] = bp;
        for (std::size_t m = bm + 1; m < F; ++m) path[m] = window_argmax(work, m, path[m - 1], opt);
        for (std::size_t m = bm; m-- > 0;) path[m] = window_argmax(work, m, path[m + 1], opt);

        std::vector<double> xi(F), gamma(F);
        for (std::size_t m = 0; m < F; ++m) {
            xi[m] = grid.squeezeFreqAxis[path[m].q];
            gamma[m] = grid.squeezeChirpAxis[path[m].p];
            const std::size_t plo = path[m].p > opt.clearGamma ? path[m].p - opt.clearGamma : 0;
            const std::size_t phi = std::min(P - 1, path[m].p + opt.clearGamma);
            const std::size_t qlo = path[m].q > opt.clearXi ? path[m].q - opt.clearXi : 0;
            const std::size_t qhi = std::min(Q - 1, path[m].q + opt.clearXi);
            for (std::size_t p = plo; p <= phi; ++p)
                for (std::size_t q = qlo; q <= qhi; ++q) work(p, q, m) = 0.0;
        }
        rs.xi.push_back(std::move(xi));
        rs.gamma.push_back(std::move(gamma));
        rs.peakEnergy.push_back(bv);
    }
    return rs;
}

RidgeSet fit_ridges(const RidgeSet& r, const RealCube& mag, const TFCGrid& grid, const RidgeFit& opt) {
    if (opt.halfWidth <= 0.0) return r;
    if (opt.degree < 1) throw Error("ridge fit degree must be at least 1");
    const std::size_t F = grid.frames();
    const double step = static_cast<double>(grid.hop) * grid.dt;
    const auto W = static_cast<std::ptrdiff_t>(std::llround(opt.halfWidth / step));
    const double xlo = grid.squeezeFreqAxis.front(), xhi = grid.squeezeFreqAxis.back();
    const double glo = grid.squeezeChirpAxis.front(), ghi = grid.squeezeChirpAxis.back();
    const auto D = static_cast<Eigen::Index>(opt.degree) + 1;

    RidgeSet out = r;
    for (std::size_t k = 0; k < r.K; ++k) {
        std::vector<double> w(F, 0.0);
        for (std::size_t m = 0; m < F; ++m) {
            std::size_t p, q;
            if (squeeze_bin(grid, r.gamma[k][m], r.xi[k][m], p, q)) w[m] = mag(p, q, m);
        }
        for (std::size_t m = 0; m < F; ++m) {
            const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(m) - W);
            const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(F) - 1,
                                                               static_cast<std::ptrdiff_t>(m) + W);
            const auto rows = static_cast<Eigen::Index>(hi - lo + 1);
            if (rows < D) continue;
            bool anyWeight = false;
            for (std::ptrdiff_t i = lo; i <= hi; ++i) anyWeight = anyWeight || w[static_cast<std::size_t>(i)] > 0.0;
            Eigen::MatrixXd A(rows, D);
            Eigen::VectorXd y(rows);
            for (std::ptrdiff_t i = lo; i <= hi; ++i) {
                const auto ii = static_cast<std::size_t>(i);
                const double s = anyWeight ? w[ii] : 1.0;
                const double dt = grid.timeAxis[ii] - grid.timeAxis[m];
                double pw = 1.0;
                for (Eigen::Index d = 0; d < D; ++d, pw *= dt) A(i - lo, d) = s * pw;
                y(i - lo) = s * r.xi[k][ii];
            }
            const Eigen::VectorXd c = A.colPivHouseholderQr().solve(y);
            if (!std::isfinite(c(0)) || !std::isfinite(c(1))) continue;
            out.xi[k][m] = std::clamp(c(0), xlo, xhi);
            const double g = std::clamp(c(1), glo, ghi);
            if (g != 0.0) out.gamma[k][m] = g;
        }
    }
    return out;
}

}  // namespace wlct
