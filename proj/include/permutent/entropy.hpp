#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "permutent/spectrum.hpp"

namespace permutent {

/// Entropies are reported in bits throughout.
struct EntropyReport {
    double exact_bits = 0.0;
    std::optional<double> asymptotic_bits;
    std::optional<double> gaussian_bits;
    double sup_bound_bits = 0.0;
    std::optional<double> constant_C_bits;
    std::optional<double> prefactor_gamma;
    /// False when n * prod(p) < 10, where the large-n formula is not expected
    /// to be accurate.
    bool within_validity = false;
};

struct CorrectionReport {
    double n_over_L = 0.0;
    double delta_per_bits = 0.0;
    double delta_per_leading_bits = 0.0;
    double delta_cr_bits = 0.0;
    double delta_cr_leading_bits = 0.0;
    double central_charge = 1.0;
};

struct EffectiveSpin {
    int twice_sigma_eff = 0;
    int vanished_levels = 0;
    std::vector<double> reduced_densities;

    double sigma_eff() const { return 0.5 * twice_sigma_eff; }
};

inline constexpr double kDefaultZeroTolerance = 1e-12;
inline constexpr double kDefaultCentralCharge = 1.0;
inline constexpr double kValidityThreshold = 10.0;

/// -sum w log2 w over the support. Throws DomainError when the weights (plus
/// any recorded truncated mass) are not normalized within `tolerance`.
double entropy_of_spectrum(const Spectrum& s, double tolerance = 1e-9);

/// Exact block entropy computed without enumerating the spectrum.
///
/// Uses the chain rule H(k_0, ..., k_{d-1}) = H(k_0) + E[H(k_1, ... | k_0)]:
/// conditioned on k_0 the remaining levels are again hypergeometric (finite L)
/// or multinomial (infinite L) over the smaller population, so a table over
/// (level, remaining block size) gives the entropy in O(d n^2).
double block_entropy(const SectorConfig& cfg, int n);

/// C = 1/2 log2(prod p_i). Requires every density to be positive.
double constant_c(std::span<const double> densities);

/// C + sigma log2(2 pi e n (L - n) / L), or C + sigma log2(2 pi e n) for L = inf.
double asymptotic_entropy(const SectorConfig& cfg, int n);

bool asymptotic_within_validity(const SectorConfig& cfg, int n);

/// log2 binom(n + d - 1, d - 1).
double max_entropy_bound(int n, int d);

EffectiveSpin effective_spin(std::span<const double> densities, double zero_tol = kDefaultZeroTolerance);

CorrectionReport finite_size_corrections(const SectorConfig& cfg, int n,
                                         double central_charge = kDefaultCentralCharge);

/// Least-squares slope of S against log2 n.
double fit_prefactor(std::span<const std::pair<int, double>> points);

EntropyReport entropy_report(const SectorConfig& cfg, int n);

}  // namespace permutent
