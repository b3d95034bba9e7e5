#include "permutent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace permutent::oracle {

namespace {

// d^exponent, or nullopt past `limit`.
std::optional<std::size_t> checked_power(int base, int exponent, std::size_t limit) {
    std::size_t v = 1;
    for (int i = 0; i < exponent; ++i) {
        v *= static_cast<std::size_t>(base);
        if (v > limit) return std::nullopt;
    }
    return v;
}

std::vector<int> letter_counts(std::size_t index, int sites, int dim) {
    std::vector<int> counts(static_cast<std::size_t>(dim), 0);
    for (int s = 0; s < sites; ++s) {
        ++counts[index % static_cast<std::size_t>(dim)];
        index /= static_cast<std::size_t>(dim);
    }
    return counts;
}

double deviation(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    const std::size_t n = std::max(a.size(), b.size());
    a.resize(n, 0.0);
    b.resize(n, 0.0);
    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
    return dev;
}

}  // namespace

double DenseDensityMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < size; ++i) t += entries[i * size + i];
    return t;
}

DenseState build_state(std::span<const int> occupations) {
    const int dim = static_cast<int>(occupations.size());
    if (dim < 2) throw DomainError("state needs at least two local levels");
    int sites = 0;
    for (int n : occupations) {
        if (n < 0) throw DomainError("negative occupation");
        sites += n;
    }
    const auto total = checked_power(dim, sites, kMaxAmplitudes);
    if (!total) throw ResourceError("dense state exceeds 2e6 amplitudes");

    DenseState st{sites, dim, std::vector<double>(*total, 0.0)};
    std::vector<std::size_t> support;
    for (std::size_t idx = 0; idx < *total; ++idx) {
        const auto counts = letter_counts(idx, sites, dim);
        if (std::equal(counts.begin(), counts.end(), occupations.begin())) support.push_back(idx);
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(support.size()));
    for (std::size_t idx : support) st.amplitudes[idx] = amp;
    return st;
}

DenseDensityMatrix partial_trace(const DenseState& state, int n) {
    if (n < 0 || n > state.sites) throw DomainError("block size outside [0, L]");
    const auto block_dim = checked_power(state.dim, n, kMaxReducedDim);
    if (!block_dim) throw ResourceError("reduced density matrix exceeds 2000 x 2000");
    const std::size_t env_dim = state.amplitudes.size() / *block_dim;

    DenseDensityMatrix rho{n, state.dim, *block_dim, std::vector<double>(*block_dim * *block_dim, 0.0)};
    std::vector<std::pair<std::size_t, double>> column;
    for (std::size_t e = 0; e < env_dim; ++e) {
        column.clear();
        for (std::size_t a = 0; a < *block_dim; ++a) {
            const double psi = state.amplitudes[a * env_dim + e];
            if (psi != 0.0) column.emplace_back(a, psi);
        }
        for (const auto& [a, pa] : column)
            for (const auto& [b, pb] : column) rho.entries[a * rho.size + b] += pa * pb;
    }
    return rho;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t size, double tol, std::size_t max_rotations) {
    if (a.size() != size * size) throw DomainError("matrix storage does not match its size");
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
            if (std::abs(a[i * size + j] - a[j * size + i]) > 1e-12) throw DomainError("matrix is not symmetric");

    double trace = 0.0;
    for (std::size_t i = 0; i < size; ++i) trace += a[i * size + i];
    const double target = tol * std::max(std::abs(trace), 1e-300);

    std::size_t rotations = 0;
    for (int sweep = 0;; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < size; ++p)
            for (std::size_t q = p + 1; q < size; ++q) off += a[p * size + q] * a[p * size + q];
        if (std::sqrt(2.0 * off) < target) break;

        for (std::size_t p = 0; p + 1 < size; ++p) {
            for (std::size_t q = p + 1; q < size; ++q) {
                const double apq = a[p * size + q];
                if (apq == 0.0) continue;
                const double app = a[p * size + p];
                const double aqq = a[q * size + q];
                // Negligible against both diagonal entries: drop without rotating.
                const double g = 100.0 * std::abs(apq);
                if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
                    a[p * size + q] = a[q * size + p] = 0.0;
                    continue;
                }
                if (++rotations > max_rotations) throw std::runtime_error("Jacobi eigensolver did not converge");

                const double theta = (aqq - app) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t r = 0; r < size; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[r * size + p];
                    const double arq = a[r * size + q];
                    if (arp == 0.0 && arq == 0.0) continue;
                    const double np = c * arp - s * arq;
                    const double nq = s * arp + c * arq;
                    a[r * size + p] = a[p * size + r] = np;
                    a[r * size + q] = a[q * size + r] = nq;
                }
                a[p * size + p] = app - t * apq;
                a[q * size + q] = aqq + t * apq;
                a[p * size + q] = a[q * size + p] = 0.0;
            }
        }
    }

    std::vector<double> eig(size);
    for (std::size_t i = 0; i < size; ++i) eig[i] = a[i * size + i];
    return eig;
}

std::vector<double> dense_eigenvalues(const DenseDensityMatrix& rho, double tol) {
    const std::size_t budget = 100 * rho.size * rho.size;
    auto eig = jacobi_eigenvalues(rho.entries, rho.size, tol, budget);
    const double cut = tol * std::abs(rho.trace());
    std::erase_if(eig, [cut](double x) { return x <= cut; });
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

MatchReport verify_theorem(const SectorConfig& cfg, int n, double tol, std::optional<double> fault) {
    const auto& occ = cfg.occupations();
    const auto dense = dense_eigenvalues(partial_trace(build_state(occ), n));

    std::vector<double> formula;
    for (long double w : exact_spectrum(cfg, n).weights()) formula.push_back(static_cast<double>(w));
    std::sort(formula.begin(), formula.end(), std::greater<>());
    if (fault && !formula.empty()) formula.front() += *fault;

    MatchReport r;
    r.kind = "theorem";
    r.sites = cfg.size();
    r.dim = cfg.dim();
    r.occupations = occ;
    r.block = n;
    r.support_size_formula = formula.size();
    r.support_size_dense = dense.size();
    r.max_abs_dev = deviation(formula, dense);
    r.pass = r.support_size_formula == r.support_size_dense && r.max_abs_dev < tol;
    return r;
}

MatchReport verify_uniform_mixture(int sites, int dim, int n, double tol) {
    if (sites < 1 || dim < 2) throw DomainError("uniform mixture needs L >= 1 and d >= 2");
    if (n < 0 || n > sites) throw DomainError("block size outside [0, L]");
    const auto total = checked_power(dim, sites, kMaxAmplitudes);
    if (!total) throw ResourceError("dense state exceeds 2e6 amplitudes");

    // Every distinct letter-count vector is one sector of the mixture.
    std::set<std::vector<int>> sectors;
    for (std::size_t idx = 0; idx < *total; ++idx) sectors.insert(letter_counts(idx, sites, dim));

    DenseDensityMatrix rho;
    for (const auto& occ : sectors) {
        auto part = partial_trace(build_state(occ), n);
        if (rho.entries.empty()) {
            rho = std::move(part);
        } else {
            for (std::size_t i = 0; i < rho.entries.size(); ++i) rho.entries[i] += part.entries[i];
        }
    }
    for (double& x : rho.entries) x /= static_cast<double>(sectors.size());
    const auto dense = dense_eigenvalues(rho);

    const auto kappa = dimension_symmetric_subspace(n, dim);
    const std::size_t count = kappa.get_ui();
    const std::vector<double> flat(count, 1.0 / static_cast<double>(count));

    MatchReport r;
    r.kind = "uniform_mixture";
    r.sites = sites;
    r.dim = dim;
    r.block = n;
    r.support_size_formula = count;
    r.support_size_dense = dense.size();
    r.max_abs_dev = deviation(flat, dense);
    r.pass = r.support_size_formula == r.support_size_dense && r.max_abs_dev < tol;
    return r;
}

}  // namespace permutent::oracle
