#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "wlct/core.hpp"

namespace wlct {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct CoeffMatrix {
    CMatrix entries;
    Variant n = Variant::N2;
    std::size_t frame = 0;
};

/// lambda at which the transform is evaluated for a ridge chirprate.
double ridge_lambda(Variant n, double gamma);

/// c_ij = C(l_i) A^{-1/2} exp(-pi (xi_i - xi_j)^2 / A), A = -P(l_i) - i gamma_j, l_i = ridge_lambda(gamma_i):
/// the local response of component j at ridge point i.
CMatrix coeff_entries(const WindowSpec& spec, const std::vector<double>& xi, const std::vector<double>& gamma);

CoeffMatrix coeff_matrix(const WindowSpec& spec, const RidgeSet& ridges, std::size_t frame);

/// sigma_max / sigma_min; +inf when sigma_min = 0.
double condition_number(const CMatrix& m);

inline constexpr double kPinvThreshold = 1e-8;

/// Least squares with singular values below kPinvThreshold * sigma_max dropped.
CVector solve_modes(const CMatrix& c, const CVector& rhs);

/// Ridge values at every sample (linear in time between frames).
void ridge_at_sample(const RidgeSet& r, const TFCGrid& grid, std::size_t sample, std::vector<double>& xi,
                     std::vector<double>& gamma);

ModeSet retrieve_modes(const SampledSignal& x, const WindowSpec& spec, const TFCGrid& grid,
                       const RidgeSet& ridges);

}  // namespace wlct
