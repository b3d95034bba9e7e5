#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "permutent/spectrum.hpp"

namespace permutent {

/// Mean and covariance of the composition vector k under spectrum weights.
struct CompositionMoments {
    Eigen::VectorXd mean;        // length d
    Eigen::MatrixXd covariance;  // d x d
};

/// Multivariate normal approximation of the multinomial eigenvalue
/// distribution, over the d-1 composition coordinates that remain after one
/// level is eliminated through the constraint sum(k) = n.
struct GaussianModel {
    int dim = 0;  // 2 sigma
    int block_size = 0;
    int eliminated = 0;
    std::vector<int> retained;  // level index of each coordinate
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;
    Eigen::MatrixXd precision;  // A = covariance^-1
    double det_precision = 0.0;
    double inverse_residual = 0.0;  // max |A * covariance - I|
};

CompositionMoments composition_moments(const Spectrum& s);

/// Throws DomainError when a density vanishes (the covariance is singular;
/// reduce the sector with effective_spin) or the inverse residual exceeds 1e-9.
GaussianModel build_gaussian(std::span<const double> densities, int n, int eliminated = 0);

/// Differential entropy sigma log2(2 pi e) + 1/2 log2(1 / det A), in bits.
double gaussian_entropy(const GaussianModel& model);

/// Normal density at composition k (full length d; the eliminated level is ignored).
double gaussian_density(const GaussianModel& model, std::span<const int> composition);

}  // namespace permutent
