#include "permutent/gaussian.hpp"

#include <cmath>
#include <numbers>

namespace permutent {

CompositionMoments composition_moments(const Spectrum& s) {
    const auto d = static_cast<std::size_t>(s.dim);
    std::vector<long double> mean(d, 0.0L);
    std::vector<long double> w;
    w.reserve(s.entries.size());
    for (const auto& e : s.entries) {
        const long double x = e.weight.value();
        w.push_back(x);
        for (std::size_t i = 0; i < d; ++i) mean[i] += x * e.composition[i];
    }

    std::vector<long double> cov(d * d, 0.0L);
    std::vector<long double> delta(d);
    for (std::size_t t = 0; t < s.entries.size(); ++t) {
        const auto& k = s.entries[t].composition;
        for (std::size_t i = 0; i < d; ++i) delta[i] = k[i] - mean[i];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) cov[i * d + j] += w[t] * delta[i] * delta[j];
    }

    CompositionMoments m;
    m.mean.resize(static_cast<Eigen::Index>(d));
    m.covariance.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) {
        m.mean(i) = static_cast<double>(mean[i]);
        for (std::size_t j = i; j < d; ++j) {
            m.covariance(i, j) = m.covariance(j, i) = static_cast<double>(cov[i * d + j]);
        }
    }
    return m;
}

GaussianModel build_gaussian(std::span<const double> densities, int n, int eliminated) {
    const auto cfg = SectorConfig::infinite({densities.begin(), densities.end()});
    if (n < 1) throw DomainError("gaussian model needs n >= 1");
    const int d = cfg.dim();
    if (eliminated < 0 || eliminated >= d) throw DomainError("eliminated level out of range");
    for (double p : densities)
        if (p <= 0.0) throw DomainError("singular covariance: a level has zero density; use effective_spin to reduce the sector");

    GaussianModel g;
    g.dim = d - 1;
    g.block_size = n;
    g.eliminated = eliminated;
    for (int i = 0; i < d; ++i)
        if (i != eliminated) g.retained.push_back(i);

    g.mean.resize(g.dim);
    g.covariance.resize(g.dim, g.dim);
    for (int a = 0; a < g.dim; ++a) {
        const double pa = densities[g.retained[a]];
        g.mean(a) = n * pa;
        for (int b = 0; b < g.dim; ++b) {
            const double pb = densities[g.retained[b]];
            g.covariance(a, b) = (a == b) ? n * pa * (1.0 - pa) : -n * pa * pb;
        }
    }

    const Eigen::LLT<Eigen::MatrixXd> chol(g.covariance);
    if (chol.info() != Eigen::Success) throw DomainError("covariance is not positive definite");
    g.precision = chol.solve(Eigen::MatrixXd::Identity(g.dim, g.dim));
    g.precision = 0.5 * (g.precision + g.precision.transpose()).eval();

    const Eigen::LLT<Eigen::MatrixXd> chol_a(g.precision);
    if (chol_a.info() != Eigen::Success) throw DomainError("precision matrix is not positive definite");
    const Eigen::VectorXd diag = chol_a.matrixL().toDenseMatrix().diagonal();
    g.det_precision = diag.array().square().prod();

    const Eigen::MatrixXd residual = g.precision * g.covariance - Eigen::MatrixXd::Identity(g.dim, g.dim);
    g.inverse_residual = residual.cwiseAbs().maxCoeff();
    if (g.inverse_residual > 1e-9) throw DomainError("covariance is too ill-conditioned to invert");
    return g;
}

double gaussian_entropy(const GaussianModel& model) {
    const double sigma = 0.5 * model.dim;
    return sigma * std::log2(2.0 * std::numbers::pi * std::numbers::e) - 0.5 * std::log2(model.det_precision);
}

double gaussian_density(const GaussianModel& model, std::span<const int> composition) {
    Eigen::VectorXd x(model.dim);
    for (int a = 0; a < model.dim; ++a) x(a) = composition[model.retained[a]] - model.mean(a);
    const double quad = x.dot(model.precision * x);
    return std::sqrt(model.det_precision) / std::pow(2.0 * std::numbers::pi, 0.5 * model.dim) * std::exp(-0.5 * quad);
}

}  // namespace permutent
