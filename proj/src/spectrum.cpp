#include "permutent/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace permutent {

SectorConfig SectorConfig::finite(std::vector<int> occupations) {
    if (occupations.size() < 2) throw DomainError("sector needs at least two local levels");
    long total = 0;
    for (int n : occupations) {
        if (n < 0) throw DomainError("negative occupation");
        total += n;
    }
    if (total <= 0) throw DomainError("sector must contain at least one site");
    if (total > INT_MAX) throw DomainError("sector too large");
    return SectorConfig(Finite{std::move(occupations), static_cast<int>(total)});
}

SectorConfig SectorConfig::infinite(std::vector<double> densities) {
    if (densities.size() < 2) throw DomainError("sector needs at least two local levels");
    double total = 0.0;
    for (double p : densities) {
        if (!std::isfinite(p)) throw DomainError("density is not finite");
        if (p < 0.0) throw DomainError("negative density");
        if (p > 1.0) throw DomainError("density exceeds 1");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("densities must sum to 1");
    return SectorConfig(Infinite{std::move(densities)});
}

int SectorConfig::dim() const {
    return std::visit([](const auto& s) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Finite>)
            return static_cast<int>(s.occupations.size());
        else
            return static_cast<int>(s.densities.size());
    }, data_);
}

int SectorConfig::size() const {
    if (const auto* f = std::get_if<Finite>(&data_)) return f->size;
    throw DomainError("sector is in the thermodynamic limit");
}

const std::vector<int>& SectorConfig::occupations() const {
    if (const auto* f = std::get_if<Finite>(&data_)) return f->occupations;
    throw DomainError("sector is in the thermodynamic limit");
}

std::vector<double> SectorConfig::densities() const {
    if (const auto* f = std::get_if<Finite>(&data_)) {
        std::vector<double> p;
        p.reserve(f->occupations.size());
        for (int n : f->occupations) p.push_back(static_cast<double>(n) / f->size);
        return p;
    }
    return std::get<Infinite>(data_).densities;
}

std::string_view to_string(SpectrumSource s) {
    switch (s) {
        case SpectrumSource::FiniteExact: return "FiniteExact";
        case SpectrumSource::Thermodynamic: return "Thermodynamic";
        case SpectrumSource::UniformMixed: return "UniformMixed";
    }
    return "?";
}

long double Spectrum::total_weight() const {
    // Neumaier summation; spectra can hold millions of small terms.
    long double sum = 0.0L, comp = 0.0L;
    for (const auto& e : entries) {
        const long double x = e.weight.value();
        const long double t = sum + x;
        comp += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

bool Spectrum::has_exact() const {
    return !entries.empty() && entries.front().exact.has_value();
}

std::vector<long double> Spectrum::weights() const {
    std::vector<long double> w;
    w.reserve(entries.size());
    for (const auto& e : entries) w.push_back(e.weight.value());
    return w;
}

BigInt dimension_symmetric_subspace(int n, int d) {
    if (n < 0) throw DomainError("negative block size");
    if (d < 2) throw DomainError("local dimension must be at least 2");
    return binom_exact(static_cast<long>(n) + d - 1, d - 1);
}

namespace {

void check_block(const SectorConfig& cfg, int n) {
    if (!cfg.is_finite()) throw DomainError("exact spectrum needs a finite sector");
    if (n < 0) throw DomainError("negative block size");
    if (n > cfg.size()) throw DomainError("n exceeds L");
}

std::vector<int> block_bounds(const SectorConfig& cfg, int n) {
    std::vector<int> bounds;
    for (int occ : cfg.occupations()) bounds.push_back(std::min(occ, n));
    return bounds;
}

}  // namespace

void for_each_finite_weight(const SectorConfig& cfg, int n, const WeightVisitor& visit, LeadingRange range) {
    check_block(cfg, n);
    const auto bounds = block_bounds(cfg, n);
    const auto& occ = cfg.occupations();
    const std::size_t d = bounds.size();

    // Per-level tables log2 binom(N_i, k) for k <= bounds[i].
    const auto table_ptr = log2_factorial_table(cfg.size());
    const auto& lf = *table_ptr;
    std::vector<std::vector<long double>> level(d);
    for (std::size_t i = 0; i < d; ++i) {
        level[i].resize(static_cast<std::size_t>(bounds[i]) + 1);
        for (int k = 0; k <= bounds[i]; ++k) level[i][k] = lf[occ[i]] - lf[k] - lf[occ[i] - k];
    }
    const long double log_norm = lf[cfg.size()] - lf[n] - lf[cfg.size() - n];

    // prefix[i] = sum_{j<i} log2 binom(N_j, k_j); only the tail past the
    // first changed coordinate is refreshed between neighbours.
    std::vector<long double> prefix(d + 1, 0.0L);
    for (BoundedCompositionIter it(n, bounds, range.lo, range.hi); it.valid(); it.advance()) {
        const auto& k = it.current();
        for (std::size_t i = it.first_changed(); i < d; ++i) prefix[i + 1] = prefix[i] + level[i][k[i]];
        visit(k, LogWeight::from_log2(prefix[d] - log_norm));
    }
}

BigInt for_each_finite_numerator(const SectorConfig& cfg, int n, const NumeratorVisitor& visit, LeadingRange range) {
    check_block(cfg, n);
    const auto bounds = block_bounds(cfg, n);
    const auto& occ = cfg.occupations();
    const std::size_t d = bounds.size();

    std::vector<std::vector<BigInt>> level(d);
    for (std::size_t i = 0; i < d; ++i) {
        level[i].reserve(static_cast<std::size_t>(bounds[i]) + 1);
        for (int k = 0; k <= bounds[i]; ++k) level[i].push_back(binom_exact(occ[i], k));
    }

    std::vector<BigInt> prefix(d + 1, 1);
    for (BoundedCompositionIter it(n, bounds, range.lo, range.hi); it.valid(); it.advance()) {
        const auto& k = it.current();
        for (std::size_t i = it.first_changed(); i < d; ++i) prefix[i + 1] = prefix[i] * level[i][k[i]];
        visit(k, prefix[d]);
    }
    return binom_exact(cfg.size(), n);
}

Spectrum exact_spectrum(const SectorConfig& cfg, int n, ExactWeights exact) {
    check_block(cfg, n);
    if (exact == ExactWeights::On && cfg.size() > kMaxExactRationalSize)
        throw DomainError("exact rational weights are limited to L <= 300");

    Spectrum s;
    s.source = SpectrumSource::FiniteExact;
    s.block_size = n;
    s.dim = cfg.dim();
    s.sector = cfg;
    if (exact == ExactWeights::On) {
        BigInt denom = for_each_finite_numerator(cfg, n, [&](const Composition& k, const BigInt& num) {
            s.entries.push_back({k, LogWeight{}, Rational(num)});
        });
        for (auto& e : s.entries) {
            e.exact->get_den() = denom;
            e.exact->canonicalize();
            e.weight = LogWeight::from_log2(log2_of(e.exact->get_num()) - log2_of(e.exact->get_den()));
        }
    } else {
        for_each_finite_weight(cfg, n, [&](const Composition& k, LogWeight w) {
            s.entries.push_back({k, w, std::nullopt});
        });
    }
    return s;
}

namespace {

// Depth-first multinomial enumeration in lexicographic order. Each prefix
// carries its exact marginal probability, which bounds every completion, so a
// whole subtree is discarded once its marginal falls below the threshold.
class ThermoEnumerator {
public:
    ThermoEnumerator(std::span<const double> p, int n, long double log_threshold, Spectrum& out)
        : p_(p.begin(), p.end()), n_(n), log_threshold_(log_threshold), out_(out), lf_(log2_factorial_table(n)) {
        const std::size_t d = p_.size();
        log_p_.resize(d);
        for (std::size_t i = 0; i < d; ++i)
            log_p_[i] = p_[i] > 0 ? std::log2(static_cast<long double>(p_[i])) : -INFINITY;
        // Suffix masses R_j = sum_{i>=j} p_i.
        log_rest_.assign(d + 1, -INFINITY);
        long double rest = 0.0L;
        for (std::size_t j = d; j-- > 0;) {
            rest += p_[j];
            log_rest_[j] = rest > 0 ? std::log2(rest) : -INFINITY;
        }
        current_.assign(d, 0);
    }

    void run() { descend(0, n_, (*lf_)[n_]); }

private:
    // partial = log2 n! - sum_{i<j} log2 k_i! + sum_{i<j} k_i log2 p_i
    void descend(std::size_t j, int remaining, long double partial) {
        const std::size_t d = p_.size();
        const auto& lf = *lf_;
        if (j + 1 == d) {
            if (remaining > 0 && p_[j] == 0.0) return;
            current_[j] = remaining;
            const long double w = partial - lf[remaining] + (remaining ? remaining * log_p_[j] : 0.0L);
            out_.entries.push_back({current_, LogWeight::from_log2(w), std::nullopt});
            return;
        }
        const int max_k = (p_[j] == 0.0) ? 0 : remaining;
        for (int k = 0; k <= max_k; ++k) {
            const int rest = remaining - k;
            if (rest > 0 && log_rest_[j + 1] == -INFINITY) continue;
            const long double next = partial - lf[k] + (k ? k * log_p_[j] : 0.0L);
            const long double marginal = next - lf[rest] + (rest ? rest * log_rest_[j + 1] : 0.0L);
            if (marginal < log_threshold_) {
                pruned_ += std::exp2(marginal);
                continue;
            }
            current_[j] = k;
            descend(j + 1, rest, next);
        }
    }

public:
    long double pruned_ = 0.0L;

private:
    std::vector<double> p_;
    int n_;
    long double log_threshold_;
    Spectrum& out_;
    std::shared_ptr<const Log2FactorialTable> lf_;
    std::vector<long double> log_p_;
    std::vector<long double> log_rest_;
    Composition current_;
};

// Weight of the rounded-mean composition; a lower bound on the maximum weight.
long double log2_mode_estimate(std::span<const double> p, int n) {
    const std::size_t d = p.size();
    Composition k(d);
    std::vector<std::pair<double, std::size_t>> frac;
    int assigned = 0;
    for (std::size_t i = 0; i < d; ++i) {
        const double x = n * p[i];
        k[i] = static_cast<int>(std::floor(x));
        assigned += k[i];
        frac.emplace_back(x - k[i], i);
    }
    std::sort(frac.begin(), frac.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t r = 0; assigned < n; ++r, ++assigned) ++k[frac[r % d].second];
    long double w = multinomial_log2(n, k).log2();
    for (std::size_t i = 0; i < d; ++i)
        if (k[i] > 0) w += k[i] * std::log2(static_cast<long double>(p[i]));
    return w;
}

}  // namespace

Spectrum thermo_spectrum(std::span<const double> densities, int n, double cutoff) {
    const auto cfg = SectorConfig::infinite({densities.begin(), densities.end()});
    if (n < 0) throw DomainError("negative block size");
    if (!(cutoff >= 0.0) || cutoff >= 1.0) throw DomainError("cutoff must lie in [0, 1)");

    Spectrum s;
    s.source = SpectrumSource::Thermodynamic;
    s.block_size = n;
    s.dim = cfg.dim();
    s.sector = cfg;

    long double log_threshold = -INFINITY;
    if (cutoff > 0.0) log_threshold = std::log2(static_cast<long double>(cutoff)) + log2_mode_estimate(densities, n);

    ThermoEnumerator walker(densities, n, log_threshold, s);
    walker.run();
    s.dropped_mass = walker.pruned_;

    if (cutoff > 0.0 && !s.entries.empty()) {
        const auto max_it = std::max_element(s.entries.begin(), s.entries.end(),
                                             [](const auto& a, const auto& b) { return a.weight < b.weight; });
        const long double keep = max_it->weight.log2() + std::log2(static_cast<long double>(cutoff));
        std::erase_if(s.entries, [&](const SpectrumEntry& e) {
            if (e.weight.log2() >= keep) return false;
            s.dropped_mass += e.weight.value();
            return true;
        });
    }
    return s;
}

Spectrum uniform_mixed_spectrum(int n, int d, ExactWeights exact) {
    const BigInt kappa = dimension_symmetric_subspace(n, d);
    Spectrum s;
    s.source = SpectrumSource::UniformMixed;
    s.block_size = n;
    s.dim = d;
    const LogWeight w = LogWeight::from_log2(-log2_of(kappa));
    std::optional<Rational> q;
    if (exact == ExactWeights::On) q = Rational(BigInt(1), kappa);
    for (BoundedCompositionIter it(n, std::vector<int>(static_cast<std::size_t>(d), n)); it.valid(); it.advance())
        s.entries.push_back({it.current(), w, q});
    return s;
}

}  // namespace permutent
