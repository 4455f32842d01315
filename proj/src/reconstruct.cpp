#include "wlct/reconstruct.hpp"

#include <cmath>

#include "wlct/kernels.hpp"
#include "wlct/transform.hpp"

namespace wlct {

double ridge_lambda(Variant n, double gamma) {
    if (is_reciprocal(n)) {
        if (gamma == 0.0) throw ZeroChirprate("ridge chirprate is zero");
        return 1.0 / gamma;
    }
    return -gamma;
}

CMatrix coeff_entries(const WindowSpec& spec, const std::vector<double>& xi, const std::vector<double>& gamma) {
    if (xi.size() != gamma.size()) throw LengthMismatch("ridge arrays differ in length");
    const auto K = static_cast<Eigen::Index>(xi.size());
    CMatrix c(K, K);
    const cplx I(0.0, 1.0);
    for (Eigen::Index i = 0; i < K; ++i) {
        const auto ii = static_cast<std::size_t>(i);
        const KernelParams kp = cp_params(spec.n, ridge_lambda(spec.n, gamma[ii]), spec.alpha);
        for (Eigen::Index j = 0; j < K; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            const cplx A = -kp.P - I * gamma[jj];
            const double d = xi[ii] - xi[jj];
            c(i, j) = kp.C / sqrt_re_positive(A) * std::exp(-kPi * d * d / A);
        }
    }
    return c;
}

CoeffMatrix coeff_matrix(const WindowSpec& spec, const RidgeSet& ridges, std::size_t frame) {
    std::vector<double> xi(ridges.K), gamma(ridges.K);
    for (std::size_t k = 0; k < ridges.K; ++k) {
        xi[k] = ridges.xi[k].at(frame);
        gamma[k] = ridges.gamma[k].at(frame);
    }
    return {coeff_entries(spec, xi, gamma), spec.n, frame};
}

double condition_number(const CMatrix& m) {
    if (m.size() == 0) return 1.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    const auto& s = svd.singularValues();
    const double smax = s(0), smin = s(s.size() - 1);
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return smax / smin;
}

CVector solve_modes(const CMatrix& c, const CVector& rhs) {
    Eigen::JacobiSVD<CMatrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
    svd.setThreshold(kPinvThreshold);
    return svd.solve(rhs);
}

void ridge_at_sample(const RidgeSet& r, const TFCGrid& grid, std::size_t sample, std::vector<double>& xi,
                     std::vector<double>& gamma) {
    xi.resize(r.K);
    gamma.resize(r.K);
    const std::size_t F = grid.frames();
    const std::size_t m0 = std::min(sample / grid.hop, F - 1);
    const std::size_t m1 = std::min(m0 + 1, F - 1);
    const double f = m0 == m1 ? 0.0
                              : static_cast<double>(sample - grid.frameSample(m0)) /
                                    static_cast<double>(grid.hop);
    for (std::size_t k = 0; k < r.K; ++k) {
        xi[k] = (1.0 - f) * r.xi[k][m0] + f * r.xi[k][m1];
        gamma[k] = (1.0 - f) * r.gamma[k][m0] + f * r.gamma[k][m1];
    }
}

ModeSet retrieve_modes(const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid,
                       const RidgeSet& ridges) {
    check_grid(grid, x);
    validate(spec);
    const std::size_t N = x.size(), K = ridges.K;
    if (ridges.xi.size() != K || ridges.gamma.size() != K) throw LengthMismatch("ridge set is inconsistent");
    for (std::size_t k = 0; k < K; ++k) {
        if (ridges.xi[k].size() != grid.frames() || ridges.gamma[k].size() != grid.frames()) {
            throw LengthMismatch("ridges do not span all frames");
        }
        if (is_reciprocal(spec.n)) {
            for (double g : ridges.gamma[k])
                if (g == 0.0) throw ZeroChirprate("ridge chirprate is zero");
        }
    }

    ModeSet out;
    out.modes.assign(K, std::vector<cplx>(N));
    out.frameTimes = grid.timeAxis;
    out.condition.assign(grid.frames(), 0.0);

#pragma omp parallel
    {
        std::vector<double> xi, gamma;
        CVector rhs(static_cast<Eigen::Index>(K));
#pragma omp for schedule(static)
        for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(N); ++si) {
            const auto s = static_cast<std::size_t>(si);
            ridge_at_sample(ridges, grid, s, xi, gamma);
            const CMatrix c = coeff_entries(spec, xi, gamma);
            for (std::size_t k = 0; k < K; ++k) {
                rhs(static_cast<Eigen::Index>(k)) = wlct_point(x, spec, s, xi[k], ridge_lambda(spec.n, gamma[k]));
            }
            const CVector sol = solve_modes(c, rhs);
            for (std::size_t k = 0; k < K; ++k) out.modes[k][s] = sol(static_cast<Eigen::Index>(k));
            if (s % grid.hop == 0 && s / grid.hop < grid.frames()) out.condition[s / grid.hop] = condition_number(c);
        }
    }
    return out;
}

}  // namespace wlct
