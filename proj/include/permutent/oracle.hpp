#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permutent/spectrum.hpp"

/// Brute-force reference path: dense state vectors over all d^L basis
/// strings, explicit partial traces, and a Jacobi eigensolver. Nothing here
/// relies on closed-form spectrum expressions.
namespace permutent::oracle {

inline constexpr std::size_t kMaxAmplitudes = 2'000'000;
inline constexpr std::size_t kMaxReducedDim = 2000;
inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr double kDefaultMatchTolerance = 1e-10;

/// Real amplitudes indexed by base-d strings, site 0 most significant.
/// The states handled here have nonnegative real amplitudes, so no complex
/// arithmetic is needed.
struct DenseState {
    int sites = 0;
    int dim = 0;
    std::vector<double> amplitudes;
};

/// Row-major symmetric matrix over the d^n block basis.
struct DenseDensityMatrix {
    int block = 0;
    int dim = 0;
    std::size_t size = 0;
    std::vector<double> entries;

    double operator()(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
    double trace() const;
};

/// Equal-amplitude superposition of every basis string whose letter counts
/// equal `occupations`. Throws ResourceError when d^L exceeds kMaxAmplitudes.
DenseState build_state(std::span<const int> occupations);

/// Traces out sites n..L-1. Throws ResourceError when d^n exceeds kMaxReducedDim.
DenseDensityMatrix partial_trace(const DenseState& state, int n);

/// Cyclic Jacobi diagonalization of a symmetric row-major matrix. Returns all
/// eigenvalues (unsorted). Stops once the off-diagonal Frobenius norm drops
/// below tol * |trace|; throws std::runtime_error after max_rotations.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t size, double tol,
                                       std::size_t max_rotations);

/// Eigenvalues above tol * trace, descending. Sweep budget 100 * dim^2 rotations.
std::vector<double> dense_eigenvalues(const DenseDensityMatrix& rho, double tol = kDefaultEigenTolerance);

struct MatchReport {
    std::string kind;  // "theorem" or "uniform_mixture"
    int sites = 0;
    int dim = 0;
    std::vector<int> occupations;  // theorem checks only
    int block = 0;
    double max_abs_dev = 0.0;
    std::size_t support_size_formula = 0;
    std::size_t support_size_dense = 0;
    bool pass = false;
};

/// Compares the closed-form spectrum against a dense partial trace.
/// `fault` adds a perturbation to the largest closed-form weight (harness self-test).
MatchReport verify_theorem(const SectorConfig& cfg, int n, double tol = kDefaultMatchTolerance,
                           std::optional<double> fault = std::nullopt);

/// Checks that the block spectrum of the equal-weight mixture over all
/// sectors of L sites is flat: binom(n+d-1, d-1) eigenvalues, each 1/binom(n+d-1, d-1).
MatchReport verify_uniform_mixture(int sites, int dim, int n, double tol = kDefaultMatchTolerance);

}  // namespace permutent::oracle
