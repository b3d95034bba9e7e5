#include <doctest.h>

#include <cmath>
#include <random>

#include "permutent/combinatorics.hpp"

using namespace permutent;

namespace {

// Pascal's triangle in 128-bit integers; independent of the GMP path.
unsigned __int128 pascal(int n, int k) {
    std::vector<unsigned __int128> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<unsigned __int128> next(row.size() + 1, 0);
        for (std::size_t j = 0; j < next.size(); ++j)
            next[j] = (j < row.size() ? row[j] : 0) + (j > 0 ? row[j - 1] : 0);
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Coefficients of prod_i (1 + x + ... + x^{b_i}) by direct multiplication.
std::vector<BigInt> composition_polynomial(const std::vector<int>& bounds) {
    std::vector<BigInt> poly{1};
    for (int b : bounds) {
        std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(b), 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (int j = 0; j <= b; ++j) next[i + static_cast<std::size_t>(j)] += poly[i];
        poly = std::move(next);
    }
    return poly;
}

std::vector<int> random_bounds(std::mt19937& rng, int max_total) {
    std::uniform_int_distribution<int> dim(1, 5);
    const int d = dim(rng);
    std::vector<int> b(static_cast<std::size_t>(d));
    int budget = max_total;
    for (auto& x : b) {
        x = std::uniform_int_distribution<int>(0, std::max(0, budget / 2))(rng);
        budget -= x;
    }
    return b;
}

}  // namespace

TEST_CASE("binom_exact small values and boundaries") {
    CHECK(binom_exact(4, 2) == 6);
    CHECK(binom_exact(10, 0) == 1);
    CHECK(binom_exact(10, 10) == 1);
    CHECK(binom_exact(5, -1) == 0);
    CHECK(binom_exact(5, 9) == 0);
    CHECK(binom_exact(0, 0) == 1);
    CHECK_THROWS_AS(binom_exact(-1, 0), DomainError);
}

TEST_CASE("binom_exact(60, 30) against Pascal's triangle") {
    const auto oracle = pascal(60, 30);
    CHECK(static_cast<unsigned long long>(oracle) == 118264581564861424ULL);
    CHECK(binom_exact(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("Pascal recurrence holds up to n = 120") {
    for (int n = 1; n <= 120; ++n)
        for (int k = 1; k < n; ++k) REQUIRE(binom_exact(n, k) == binom_exact(n - 1, k) + binom_exact(n - 1, k - 1));
}

TEST_CASE("log2_binom") {
    CHECK(static_cast<double>(log2_binom(4, 2).log2()) == doctest::Approx(2.5849625007211562).epsilon(1e-15));
    CHECK(log2_binom(5, 9).is_zero());
    CHECK(log2_binom(5, -1).is_zero());
    CHECK(log2_binom(7, 0) == LogWeight::one());
    CHECK_THROWS_AS(log2_binom(-3, 1), DomainError);

    const long double exact = log2_of(binom_exact(1000, 500));
    const long double logd = log2_binom(1000, 500).log2();
    CHECK(std::abs(logd - exact) / exact < 1e-10);

    // Wide sweep against the big-integer path.
    for (int n : {1, 2, 17, 64, 300, 999}) {
        for (int k = 0; k <= n; k += std::max(1, n / 13)) {
            const long double a = log2_of(binom_exact(n, k));
            const long double b = log2_binom(n, k).log2();
            REQUIRE(std::abs(a - b) <= 1e-10 * std::max(1.0L, std::abs(a)));
        }
    }
}

TEST_CASE("LogWeight round trip over 2^-1000 .. 2^1000") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> expo(-1000.0, 1000.0);
    for (int i = 0; i < 2000; ++i) {
        const long double x = std::exp2(static_cast<long double>(expo(rng)));
        const long double back = LogWeight::from_value(x).value();
        REQUIRE(std::abs(back - x) / x < 1e-12);
    }
    CHECK(LogWeight::from_value(0).is_zero());
    CHECK(LogWeight::zero().value() == 0.0L);
    CHECK((LogWeight::zero() * LogWeight::one()).is_zero());
    CHECK_THROWS_AS(LogWeight::from_value(-1), DomainError);
}

TEST_CASE("multinomial_log2") {
    const std::vector<int> two_two{2, 2};
    CHECK(static_cast<double>(multinomial_log2(4, two_two).log2()) == doctest::Approx(std::log2(6.0)));
    const std::vector<int> ones{1, 1, 1};
    CHECK(static_cast<double>(multinomial_log2(3, ones).log2()) == doctest::Approx(std::log2(6.0)));

    const std::vector<int> tens{10, 10, 10};
    const BigInt exact = factorial(30) / (factorial(10) * factorial(10) * factorial(10));
    const long double want = log2_of(exact);
    CHECK(std::abs(multinomial_log2(30, tens).log2() - want) / want < 1e-10);

    const std::vector<int> bad{1, 1};
    CHECK_THROWS_AS(multinomial_log2(3, bad), DomainError);
    const std::vector<int> neg{4, -1};
    CHECK_THROWS_AS(multinomial_log2(3, neg), DomainError);
}

TEST_CASE("enumerate_compositions listed cases") {
    const std::vector<int> b22{2, 2};
    CHECK(enumerate_compositions(2, b22) == std::vector<Composition>{{0, 2}, {1, 1}, {2, 0}});
    const std::vector<int> b333{3, 3, 3};
    CHECK(enumerate_compositions(0, b333) == std::vector<Composition>{{0, 0, 0}});
    const std::vector<int> b111{1, 1, 1};
    CHECK(enumerate_compositions(3, b111) == std::vector<Composition>{{1, 1, 1}});
    CHECK(enumerate_compositions(4, b111).empty());
    const std::vector<int> none{};
    CHECK(enumerate_compositions(0, none).size() == 1);
    CHECK(enumerate_compositions(1, none).empty());
}

TEST_CASE("enumeration: exact set, lexicographic, count matches polynomial product") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto bounds = random_bounds(rng, 60);
        int cap = 0;
        for (int b : bounds) cap += b;
        const auto poly = composition_polynomial(bounds);
        for (int n = 0; n <= cap + 1; ++n) {
            const auto all = enumerate_compositions(n, bounds);
            const BigInt want = n <= cap ? poly[static_cast<std::size_t>(n)] : BigInt(0);
            REQUIRE(BigInt(static_cast<unsigned long>(all.size())) == want);
            REQUIRE(count_compositions(n, bounds) == want);
            for (std::size_t i = 0; i < all.size(); ++i) {
                int sum = 0;
                for (std::size_t j = 0; j < bounds.size(); ++j) {
                    REQUIRE(all[i][j] >= 0);
                    REQUIRE(all[i][j] <= bounds[j]);
                    sum += all[i][j];
                }
                REQUIRE(sum == n);
                if (i > 0) REQUIRE(all[i - 1] < all[i]);  // strictly increasing => distinct
            }
        }
    }
}

TEST_CASE("first_changed marks the only coordinates that moved") {
    const std::vector<int> bounds{3, 2, 4, 3};
    Composition prev;
    for (BoundedCompositionIter it(6, bounds); it.valid(); it.advance()) {
        const auto& cur = it.current();
        if (!prev.empty())
            for (std::size_t i = 0; i < it.first_changed(); ++i) REQUIRE(prev[i] == cur[i]);
        prev = cur;
    }
}

TEST_CASE("leading-coordinate chunks partition the stream") {
    const std::vector<int> bounds{5, 4, 6};
    const auto full = enumerate_compositions(8, bounds);
    std::vector<Composition> joined;
    for (auto [lo, hi] : {std::pair{0, 1}, std::pair{2, 2}, std::pair{3, 5}})
        for (BoundedCompositionIter it(8, bounds, lo, hi); it.valid(); it.advance()) joined.push_back(it.current());
    CHECK(joined == full);
}

TEST_CASE("Vandermonde: sum of prod binom(N_i, k_i) equals binom(L, n)") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        auto occ = random_bounds(rng, 60);
        if (occ.size() < 2) occ.push_back(1);
        int L = 0;
        for (int x : occ) L += x;
        for (int n = 0; n <= L; ++n) {
            BigInt total = 0;
            for (const auto& k : enumerate_compositions(n, occ)) {
                BigInt prod = 1;
                for (std::size_t i = 0; i < occ.size(); ++i) prod *= binom_exact(occ[i], k[i]);
                total += prod;
            }
            REQUIRE(total == binom_exact(L, n));
        }
    }
}

TEST_CASE("log2 factorial table grows on demand and stays consistent") {
    const auto small = log2_factorial_table(10);
    const auto large = log2_factorial_table(5000);
    CHECK(large->size() > 5000);
    for (int m = 0; m <= 10; ++m) CHECK((*small)[m] == doctest::Approx(static_cast<double>((*large)[m])));
    CHECK(static_cast<double>(log2_factorial(5)) == doctest::Approx(std::log2(120.0)));
    CHECK_THROWS_AS(log2_factorial(-1), DomainError);
}
