#pragma once

#include <climits>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "permutent/combinatorics.hpp"

namespace permutent {

/// Largest system size for which exact rational weights are materialized.
inline constexpr int kMaxExactRationalSize = 300;

/// Global sector of a permutation-invariant state: either a finite chain of L
/// sites with fixed occupations N_0..N_{d-1}, or the thermodynamic limit with
/// level densities p_0..p_{d-1}.
class SectorConfig {
public:
    static SectorConfig finite(std::vector<int> occupations);
    static SectorConfig infinite(std::vector<double> densities);

    bool is_finite() const { return std::holds_alternative<Finite>(data_); }
    int dim() const;
    int twice_sigma() const { return dim() - 1; }
    double sigma() const { return 0.5 * twice_sigma(); }

    /// Site count L; throws DomainError in the thermodynamic limit.
    int size() const;
    const std::vector<int>& occupations() const;

    /// p_i = N_i / L for finite sectors, the stored densities otherwise.
    std::vector<double> densities() const;

    friend bool operator==(const SectorConfig&, const SectorConfig&) = default;

private:
    struct Finite {
        std::vector<int> occupations;
        int size = 0;
        friend bool operator==(const Finite&, const Finite&) = default;
    };
    struct Infinite {
        std::vector<double> densities;
        friend bool operator==(const Infinite&, const Infinite&) = default;
    };
    explicit SectorConfig(std::variant<Finite, Infinite> d) : data_(std::move(d)) {}

    std::variant<Finite, Infinite> data_;
};

enum class SpectrumSource { FiniteExact, Thermodynamic, UniformMixed };

std::string_view to_string(SpectrumSource s);

enum class ExactWeights { Off, On };

struct SpectrumEntry {
    Composition composition;
    LogWeight weight;
    std::optional<Rational> exact;
};

/// Nonzero eigenvalues of an n-site reduced density matrix, one per
/// composition of the block.
struct Spectrum {
    SpectrumSource source = SpectrumSource::FiniteExact;
    int block_size = 0;
    int dim = 0;
    std::optional<SectorConfig> sector;  // empty for UniformMixed
    std::vector<SpectrumEntry> entries;
    long double dropped_mass = 0.0L;     // thermodynamic tail truncation only

    long double total_weight() const;
    bool has_exact() const;
    std::vector<long double> weights() const;
};

/// Contiguous window on the leading composition coordinate, used to split a
/// stream into independent chunks.
struct LeadingRange {
    int lo = 0;
    int hi = INT_MAX;
};

/// binom(n + d - 1, d - 1): dimension of the symmetric subspace of n sites.
BigInt dimension_symmetric_subspace(int n, int d);

/// Reduced spectrum of an n-site block of a finite sector:
/// weight(k) = prod_i binom(N_i, k_i) / binom(L, n).
Spectrum exact_spectrum(const SectorConfig& cfg, int n, ExactWeights exact = ExactWeights::Off);

using WeightVisitor = std::function<void(const Composition&, LogWeight)>;
using NumeratorVisitor = std::function<void(const Composition&, const BigInt&)>;

/// Streams the finite-sector weights in lexicographic order without
/// materializing the spectrum.
void for_each_finite_weight(const SectorConfig& cfg, int n, const WeightVisitor& visit, LeadingRange range = {});

/// Streams integer numerators prod_i binom(N_i, k_i). Returns the common
/// denominator binom(L, n).
BigInt for_each_finite_numerator(const SectorConfig& cfg, int n, const NumeratorVisitor& visit,
                                 LeadingRange range = {});

/// Multinomial spectrum of the thermodynamic limit. With cutoff > 0, entries
/// below cutoff * (max weight) are dropped and their mass is recorded.
Spectrum thermo_spectrum(std::span<const double> densities, int n, double cutoff = 0.0);

/// Flat spectrum of the uniformly mixed global state: binom(n+d-1, d-1)
/// equal weights.
Spectrum uniform_mixed_spectrum(int n, int d, ExactWeights exact = ExactWeights::Off);

}  // namespace permutent
