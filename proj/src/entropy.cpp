#include "permutent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "permutent/gaussian.hpp"

namespace permutent {

namespace {

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(long double x) {
        const long double t = sum_ + x;
        comp_ += (std::abs(sum_) >= std::abs(x)) ? (sum_ - t) + x : (x - t) + sum_;
        sum_ = t;
    }
    long double value() const { return sum_ + comp_; }

private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

bool all_positive(std::span<const double> p) {
    return std::all_of(p.begin(), p.end(), [](double x) { return x > 0.0; });
}

double block_entropy_finite(const SectorConfig& cfg, int n) {
    const auto& occ = cfg.occupations();
    const std::size_t d = occ.size();
    const auto table = log2_factorial_table(cfg.size());
    const auto& lf = *table;
    auto lbinom = [&](int a, int b) { return lf[a] - lf[b] - lf[a - b]; };

    // population[j] = sum_{i>=j} N_i
    std::vector<int> population(d + 1, 0);
    for (std::size_t j = d; j-- > 0;) population[j] = population[j + 1] + occ[j];

    // tail[m]: entropy of levels j+1.. given m sites remain for them.
    std::vector<long double> tail(static_cast<std::size_t>(n) + 1, 0.0L);
    std::vector<long double> here(tail.size(), 0.0L);
    for (std::size_t j = d - 1; j-- > 0;) {
        const int nj = occ[j];
        const int rest_pop = population[j + 1];
        const int upto = std::min(n, population[j]);
        for (int m = 0; m <= upto; ++m) {
            const long double norm = lbinom(population[j], m);
            CompensatedSum h;
            for (int k = std::max(0, m - rest_pop); k <= std::min(m, nj); ++k) {
                const long double lp = lbinom(nj, k) + lbinom(rest_pop, m - k) - norm;
                const long double p = std::exp2(lp);
                h.add(p * (tail[static_cast<std::size_t>(m - k)] - lp));
            }
            here[static_cast<std::size_t>(m)] = h.value();
        }
        std::swap(tail, here);
    }
    return static_cast<double>(std::max(0.0L, tail[static_cast<std::size_t>(n)]));
}

double block_entropy_infinite(std::span<const double> p, int n) {
    const std::size_t d = p.size();
    const auto table = log2_factorial_table(n);
    const auto& lf = *table;

    std::vector<long double> rest(d + 1, 0.0L);
    for (std::size_t j = d; j-- > 0;) rest[j] = rest[j + 1] + p[j];

    std::vector<long double> tail(static_cast<std::size_t>(n) + 1, 0.0L);
    std::vector<long double> here(tail.size(), 0.0L);
    for (std::size_t j = d - 1; j-- > 0;) {
        // Conditional probability of level j among the levels j, j+1, ...
        const long double q = rest[j] > 0 ? static_cast<long double>(p[j]) / rest[j] : 0.0L;
        const bool degenerate = (q <= 0.0L || q >= 1.0L);
        const long double lq = degenerate ? 0.0L : std::log2(q);
        const long double l1q = degenerate ? 0.0L : std::log2(rest[j + 1] / rest[j]);
        for (int m = 0; m <= n; ++m) {
            if (degenerate) {
                // All m sites go to level j (q = 1) or to the tail (q = 0).
                here[static_cast<std::size_t>(m)] = (q >= 1.0L) ? 0.0L : tail[static_cast<std::size_t>(m)];
                continue;
            }
            CompensatedSum h;
            for (int k = 0; k <= m; ++k) {
                const long double lp = lf[m] - lf[k] - lf[m - k] + k * lq + (m - k) * l1q;
                const long double prob = std::exp2(lp);
                h.add(prob * (tail[static_cast<std::size_t>(m - k)] - lp));
            }
            here[static_cast<std::size_t>(m)] = h.value();
        }
        std::swap(tail, here);
    }
    return static_cast<double>(std::max(0.0L, tail[static_cast<std::size_t>(n)]));
}

}  // namespace

double entropy_of_spectrum(const Spectrum& s, double tolerance) {
    const long double total = s.total_weight() + s.dropped_mass;
    if (std::abs(total - 1.0L) > tolerance)
        throw DomainError("spectrum is not normalized (total weight " + std::to_string(static_cast<double>(total)) + ")");
    CompensatedSum h;
    for (const auto& e : s.entries) {
        if (e.weight.is_zero()) continue;
        h.add(-e.weight.value() * e.weight.log2());
    }
    return static_cast<double>(std::max(0.0L, h.value()));
}

double block_entropy(const SectorConfig& cfg, int n) {
    if (n < 0) throw DomainError("negative block size");
    if (cfg.is_finite()) {
        if (n > cfg.size()) throw DomainError("n exceeds L");
        return block_entropy_finite(cfg, n);
    }
    return block_entropy_infinite(cfg.densities(), n);
}

double constant_c(std::span<const double> densities) {
    if (!all_positive(densities))
        throw DomainError("a level has zero density; reduce the sector with effective_spin first");
    long double s = 0.0L;
    for (double p : densities) s += std::log2(static_cast<long double>(p));
    return static_cast<double>(0.5L * s);
}

double asymptotic_entropy(const SectorConfig& cfg, int n) {
    const double c = constant_c(cfg.densities());
    if (cfg.is_finite()) {
        const int L = cfg.size();
        if (n <= 0 || n >= L) throw DomainError("asymptotic entropy needs 0 < n < L");
        const double eff = static_cast<double>(n) * (L - n) / L;
        return c + cfg.sigma() * std::log2(kTwoPiE * eff);
    }
    if (n <= 0) throw DomainError("asymptotic entropy needs n > 0");
    return c + cfg.sigma() * std::log2(kTwoPiE * n);
}

bool asymptotic_within_validity(const SectorConfig& cfg, int n) {
    double prod = n;
    for (double p : cfg.densities()) prod *= p;
    return prod >= kValidityThreshold;
}

double max_entropy_bound(int n, int d) {
    return static_cast<double>(log2_of(dimension_symmetric_subspace(n, d)));
}

EffectiveSpin effective_spin(std::span<const double> densities, double zero_tol) {
    if (densities.size() < 2) throw DomainError("need at least two levels");
    double total = 0.0;
    for (double p : densities) {
        if (p < 0.0) throw DomainError("negative density");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) throw DomainError("densities must sum to 1");

    EffectiveSpin out;
    for (double p : densities) {
        if (p <= zero_tol)
            ++out.vanished_levels;
        else
            out.reduced_densities.push_back(p);
    }
    if (out.reduced_densities.empty()) throw DomainError("all densities vanish");
    out.twice_sigma_eff = static_cast<int>(densities.size()) - 1 - out.vanished_levels;
    return out;
}

CorrectionReport finite_size_corrections(const SectorConfig& cfg, int n, double central_charge) {
    const int L = cfg.size();
    if (n <= 0 || n >= L) throw DomainError("corrections need 0 < n < L");
    const double x = static_cast<double>(n) / L;
    const double y = std::numbers::pi * x;

    CorrectionReport r;
    r.n_over_L = x;
    r.central_charge = central_charge;
    r.delta_per_bits = cfg.sigma() * std::log1p(-x) / std::numbers::ln2;
    r.delta_per_leading_bits = -cfg.sigma() * x / std::numbers::ln2;
    r.delta_cr_bits = central_charge / 3.0 * std::log2(std::sin(y) / y);
    // log2(sin y / y) = -y^2 / (6 ln 2) + O(y^4)
    r.delta_cr_leading_bits = -central_charge / 18.0 * y * y / std::numbers::ln2;
    return r;
}

double fit_prefactor(std::span<const std::pair<int, double>> points) {
    if (points.size() < 3) throw DomainError("prefactor fit needs at least 3 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].first < 2) throw DomainError("prefactor fit needs n >= 2");
        if (i > 0 && points[i].first <= points[i - 1].first) throw DomainError("n must be strictly increasing");
    }
    double mx = 0.0, my = 0.0;
    for (const auto& [n, s] : points) {
        mx += std::log2(static_cast<double>(n));
        my += s;
    }
    mx /= points.size();
    my /= points.size();
    double sxy = 0.0, sxx = 0.0;
    for (const auto& [n, s] : points) {
        const double dx = std::log2(static_cast<double>(n)) - mx;
        sxy += dx * (s - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

EntropyReport entropy_report(const SectorConfig& cfg, int n) {
    EntropyReport r;
    r.exact_bits = block_entropy(cfg, n);
    r.sup_bound_bits = max_entropy_bound(n, cfg.dim());
    const auto p = cfg.densities();
    if (all_positive(p)) {
        r.constant_C_bits = constant_c(p);
        const bool interior = cfg.is_finite() ? (n > 0 && n < cfg.size()) : n > 0;
        if (interior) r.asymptotic_bits = asymptotic_entropy(cfg, n);
        if (n > 0) r.gaussian_bits = gaussian_entropy(build_gaussian(p, n));
    }
    r.within_validity = asymptotic_within_validity(cfg, n);
    return r;
}

}  // namespace permutent
