#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "permutent/entropy.hpp"

using namespace permutent;

namespace {

double shannon_bits(const std::vector<double>& w) {
    double s = 0;
    for (double x : w)
        if (x > 0) s -= x * std::log2(x);
    return s;
}

}  // namespace

TEST_CASE("entropy_of_spectrum listed values") {
    CHECK(entropy_of_spectrum(uniform_mixed_spectrum(1, 2)) == doctest::Approx(1.0).epsilon(1e-15));

    const auto worked = exact_spectrum(SectorConfig::finite({2, 2}), 2);
    const double want = std::log2(6.0) / 3 + 2 * std::log2(1.5) / 3;
    CHECK(std::abs(entropy_of_spectrum(worked) - want) < 1e-12);
    CHECK(want == doctest::Approx(1.2516291673878228));

    CHECK(entropy_of_spectrum(exact_spectrum(SectorConfig::finite({3, 5, 2}), 0)) == 0.0);
}

TEST_CASE("entropy_of_spectrum rejects unnormalized input") {
    auto s = exact_spectrum(SectorConfig::finite({2, 2}), 2);
    s.entries.pop_back();
    CHECK_THROWS_AS(entropy_of_spectrum(s), DomainError);
}

TEST_CASE("block_entropy agrees with the enumerated spectrum") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = std::uniform_int_distribution<int>(2, 5)(rng);
        std::vector<int> occ(static_cast<std::size_t>(d));
        for (auto& x : occ) x = std::uniform_int_distribution<int>(0, 25)(rng);
        if (std::accumulate(occ.begin(), occ.end(), 0) == 0) occ[0] = 1;
        const auto cfg = SectorConfig::finite(occ);
        const int n = std::uniform_int_distribution<int>(0, cfg.size())(rng);
        const double enumerated = entropy_of_spectrum(exact_spectrum(cfg, n));
        REQUIRE(std::abs(block_entropy(cfg, n) - enumerated) < 1e-10);
    }
    for (const std::vector<double>& p :
         {std::vector<double>{0.5, 0.5}, {0.2, 0.3, 0.5}, {0.1, 0.2, 0.3, 0.4}, {0.25, 0.25, 0.0, 0.5},
          {0.2, 0.2, 0.2, 0.2, 0.2}}) {
        for (int n : {0, 1, 7, 40, 64}) {
            const double enumerated = entropy_of_spectrum(thermo_spectrum(p, n));
            REQUIRE(std::abs(block_entropy(SectorConfig::infinite(p), n) - enumerated) < 1e-10);
        }
    }
}

TEST_CASE("asymptotic_entropy listed values") {
    const auto half = SectorConfig::infinite({0.5, 0.5});
    const double a = asymptotic_entropy(half, 100);
    const double want_a = 0.5 * std::log2(0.25) + 0.5 * std::log2(2 * std::numbers::pi * std::numbers::e * 100);
    CHECK(std::abs(a - want_a) < 1e-12);
    CHECK(a == doctest::Approx(4.3690).epsilon(1e-5));
    const std::vector<double> p{0.5, 0.5};
    CHECK(std::abs(entropy_of_spectrum(thermo_spectrum(p, 100)) - a) < 0.01);

    const auto third = SectorConfig::infinite({1.0 / 3, 1.0 / 3, 1.0 / 3});
    const double b = asymptotic_entropy(third, 100);
    const double want_b = 0.5 * std::log2(1.0 / 27) + std::log2(2 * std::numbers::pi * std::numbers::e * 100);
    CHECK(std::abs(b - want_b) < 1e-12);
    CHECK(b == doctest::Approx(8.3606).epsilon(1e-5));

    CHECK_THROWS_AS(asymptotic_entropy(SectorConfig::infinite({0.5, 0.5, 0.0}), 10), DomainError);
    CHECK_THROWS_AS(asymptotic_entropy(SectorConfig::finite({5, 5}), 0), DomainError);
    CHECK_THROWS_AS(asymptotic_entropy(SectorConfig::finite({5, 5}), 10), DomainError);
}

TEST_CASE("asymptotic_entropy is symmetric in n and L - n and reduces to the qubit form") {
    const auto cfg = SectorConfig::finite({30, 50});
    for (int n = 1; n < 80; ++n) {
        CHECK(asymptotic_entropy(cfg, n) == doctest::Approx(asymptotic_entropy(cfg, 80 - n)).epsilon(1e-14));
        const double p = 30.0 / 80, q = 50.0 / 80;
        const double qubit =
            0.5 * std::log2(p * q) + 0.5 * std::log2(2 * std::numbers::pi * std::numbers::e * n * (80.0 - n) / 80.0);
        CHECK(asymptotic_entropy(cfg, n) == doctest::Approx(qubit).epsilon(1e-14));
    }
}

TEST_CASE("validity flag") {
    const auto cfg = SectorConfig::infinite({1.0 / 3, 1.0 / 3, 1.0 / 3});
    CHECK_FALSE(asymptotic_within_validity(cfg, 100));  // 100/27 < 10
    CHECK(asymptotic_within_validity(cfg, 300));
    CHECK_FALSE(entropy_report(cfg, 100).within_validity);
    CHECK(entropy_report(cfg, 100).asymptotic_bits.has_value());
}

TEST_CASE("max_entropy_bound") {
    CHECK(max_entropy_bound(2, 2) == doctest::Approx(std::log2(3.0)).epsilon(1e-15));
    CHECK(max_entropy_bound(0, 4) == 0.0);
    // log2 binom(n+2, 2) - 2 log2 n -> -1 for d = 3.
    double prev_gap = 1e9;
    for (int n : {100, 1000, 10000, 100000}) {
        const double gap = std::abs(max_entropy_bound(n, 3) - 2 * std::log2(n) + 1);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-4);
}

TEST_CASE("bound chain 0 <= S <= log2(support) <= sup bound") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 80; ++trial) {
        const int d = std::uniform_int_distribution<int>(2, 5)(rng);
        std::vector<int> occ(static_cast<std::size_t>(d));
        for (auto& x : occ) x = std::uniform_int_distribution<int>(0, 15)(rng);
        occ[0] += 1;
        const auto cfg = SectorConfig::finite(occ);
        const int n = std::uniform_int_distribution<int>(0, cfg.size())(rng);
        const auto s = exact_spectrum(cfg, n);
        const double S = entropy_of_spectrum(s);
        const double support = std::log2(static_cast<double>(s.entries.size()));
        REQUIRE(S >= -1e-12);
        REQUIRE(S <= support + 1e-12);
        REQUIRE(support <= max_entropy_bound(n, d) + 1e-12);
    }
}

TEST_CASE("pure-state duality S(n) = S(L - n)") {
    const auto cfg = SectorConfig::finite({12, 7, 9, 4});
    for (int n = 0; n <= cfg.size(); ++n)
        REQUIRE(std::abs(block_entropy(cfg, n) - block_entropy(cfg, cfg.size() - n)) < 1e-11);
}

TEST_CASE("uniform mixture saturates the bound") {
    for (int d = 2; d <= 5; ++d)
        for (int n = 0; n <= 30; n += 3)
            REQUIRE(std::abs(entropy_of_spectrum(uniform_mixed_spectrum(n, d)) - max_entropy_bound(n, d)) < 1e-12);
}

TEST_CASE("effective_spin") {
    const std::vector<double> a{0.5, 0.5, 0.0};
    const auto ea = effective_spin(a);
    CHECK(ea.sigma_eff() == 0.5);
    CHECK(ea.vanished_levels == 1);
    CHECK(ea.reduced_densities == std::vector<double>{0.5, 0.5});

    const std::vector<double> b{1.0, 0.0};
    CHECK(effective_spin(b).sigma_eff() == 0.0);
    CHECK(block_entropy(SectorConfig::infinite(b), 50) == doctest::Approx(0.0));

    const std::vector<double> c{1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0, 0.0};
    CHECK(effective_spin(c).sigma_eff() == 1.0);
    std::vector<std::pair<int, double>> pts;
    for (int n : {64, 128, 256, 512, 1024}) pts.emplace_back(n, block_entropy(SectorConfig::infinite(c), n));
    CHECK(fit_prefactor(pts) == doctest::Approx(1.0).epsilon(0.02));

    const std::vector<double> none{0.0, 0.0};
    CHECK_THROWS_AS(effective_spin(none), DomainError);
    const std::vector<double> bad{0.5, 0.6};
    CHECK_THROWS_AS(effective_spin(bad), DomainError);
}

TEST_CASE("finite_size_corrections") {
    const auto spin1 = SectorConfig::finite({10, 10, 10});
    CHECK(finite_size_corrections(spin1, 15).delta_per_bits == doctest::Approx(-1.0).epsilon(1e-15));

    const auto qubit = SectorConfig::finite({50, 50});
    const auto r = finite_size_corrections(qubit, 10);
    CHECK(r.n_over_L == doctest::Approx(0.1));
    CHECK(r.delta_per_bits == doctest::Approx(-0.0760).epsilon(1e-3));
    CHECK(r.delta_per_leading_bits == doctest::Approx(-0.0721).epsilon(1e-3));
    CHECK(r.delta_per_bits == doctest::Approx(0.5 * std::log2(0.9)).epsilon(1e-14));
    const double cr = std::log2(std::sin(std::numbers::pi * 0.1) / (std::numbers::pi * 0.1)) / 3;
    CHECK(r.delta_cr_bits == doctest::Approx(cr).epsilon(1e-12));

    // Leading-order limits at n/L = 1e-3.
    const auto big = SectorConfig::finite({500000, 500000});
    const auto small = finite_size_corrections(big, 1000);
    CHECK(small.delta_per_bits / 1e-3 == doctest::Approx(-0.5 / std::numbers::ln2).epsilon(0.01));
    CHECK(small.delta_cr_bits / 1e-6 ==
          doctest::Approx(-std::numbers::pi * std::numbers::pi / 18 / std::numbers::ln2).epsilon(0.01));
    CHECK(small.delta_cr_leading_bits == doctest::Approx(small.delta_cr_bits).epsilon(1e-5));
    CHECK(small.delta_per_leading_bits == doctest::Approx(small.delta_per_bits).epsilon(1e-3));

    // The permutation-invariant correction dominates as n/L -> 0.
    double prev = 0;
    for (int n : {20, 10, 5, 2, 1}) {
        const auto c = finite_size_corrections(SectorConfig::finite({50, 50}), n);
        const double ratio = c.delta_per_bits / c.delta_cr_bits;
        CHECK(ratio > prev);
        prev = ratio;
    }

    CHECK(finite_size_corrections(qubit, 10, 2.0).delta_cr_bits == doctest::Approx(2 * cr));
    CHECK_THROWS_AS(finite_size_corrections(qubit, 0), DomainError);
    CHECK_THROWS_AS(finite_size_corrections(qubit, 100), DomainError);
    CHECK_THROWS_AS(finite_size_corrections(SectorConfig::infinite({0.5, 0.5}), 3), DomainError);
}

TEST_CASE("fit_prefactor") {
    std::vector<std::pair<int, double>> line;
    for (int n : {2, 5, 9, 40}) line.emplace_back(n, 0.5 * std::log2(n) + 7);
    CHECK(fit_prefactor(line) == doctest::Approx(0.5).epsilon(1e-12));

    std::vector<std::pair<int, double>> thermo, mixed;
    const std::vector<double> p{0.5, 0.5};
    for (int n : {64, 128, 256, 512}) {
        thermo.emplace_back(n, entropy_of_spectrum(thermo_spectrum(p, n)));
        mixed.emplace_back(n, entropy_of_spectrum(uniform_mixed_spectrum(n, 2)));
    }
    CHECK(std::abs(fit_prefactor(thermo) - 0.5) < 0.02);
    CHECK(std::abs(fit_prefactor(mixed) - 1.0) < 0.05);

    const std::vector<std::pair<int, double>> two{{2, 1.0}, {4, 2.0}};
    CHECK_THROWS_AS(fit_prefactor(two), DomainError);
    const std::vector<std::pair<int, double>> unordered{{4, 1.0}, {2, 2.0}, {8, 3.0}};
    CHECK_THROWS_AS(fit_prefactor(unordered), DomainError);
    const std::vector<std::pair<int, double>> tiny{{1, 1.0}, {2, 2.0}, {8, 3.0}};
    CHECK_THROWS_AS(fit_prefactor(tiny), DomainError);
}

TEST_CASE("entropy_report fields") {
    const auto r = entropy_report(SectorConfig::finite({40, 40, 40}), 60);
    CHECK(r.exact_bits == doctest::Approx(block_entropy(SectorConfig::finite({40, 40, 40}), 60)));
    REQUIRE(r.asymptotic_bits.has_value());
    CHECK(r.sup_bound_bits == doctest::Approx(max_entropy_bound(60, 3)));
    CHECK(r.constant_C_bits.has_value());
    CHECK(r.exact_bits <= r.sup_bound_bits);

    const auto z = entropy_report(SectorConfig::infinite({0.5, 0.5, 0.0}), 20);
    CHECK_FALSE(z.asymptotic_bits.has_value());
    CHECK_FALSE(z.within_validity);
    CHECK(z.exact_bits == doctest::Approx(shannon_bits([] {
              std::vector<double> w;
              const std::vector<double> p{0.5, 0.5};
              for (const auto& e : thermo_spectrum(p, 20).entries) w.push_back(static_cast<double>(e.weight.value()));
              return w;
          }())));
}
