#include "permutent/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

namespace permutent {

LogWeight LogWeight::from_value(long double x) {
    if (x < 0) throw DomainError("LogWeight: negative value");
    if (x == 0) return zero();
    return LogWeight(std::log2(x));
}

long double LogWeight::value() const {
    if (is_zero()) return 0.0L;
    return std::exp2(log2_);
}

namespace {

std::mutex g_table_mutex;
std::shared_ptr<const Log2FactorialTable> g_table = std::make_shared<const Log2FactorialTable>(1, 0.0L);

}  // namespace

std::shared_ptr<const Log2FactorialTable> log2_factorial_table(int max_m) {
    if (max_m < 0) throw DomainError("log2_factorial_table: negative size");
    std::lock_guard lock(g_table_mutex);
    if (static_cast<std::size_t>(max_m) < g_table->size()) return g_table;

    // Grow geometrically so repeated small extensions stay cheap.
    const std::size_t new_size = std::max<std::size_t>(static_cast<std::size_t>(max_m) + 1, 2 * g_table->size());
    auto table = std::make_shared<Log2FactorialTable>(new_size);
    long double sum = 0.0L;
    long double carry = 0.0L;  // Kahan compensation
    (*table)[0] = 0.0L;
    for (std::size_t m = 1; m < new_size; ++m) {
        const long double y = std::log2(static_cast<long double>(m)) - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        (*table)[m] = sum;
    }
    g_table = std::move(table);
    return g_table;
}

long double log2_factorial(int m) {
    if (m < 0) throw DomainError("log2_factorial: negative argument");
    return (*log2_factorial_table(m))[static_cast<std::size_t>(m)];
}

BigInt binom_exact(long n, long k) {
    if (n < 0) throw DomainError("binom: negative n");
    if (k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

LogWeight log2_binom(long n, long k) {
    if (n < 0) throw DomainError("binom: negative n");
    if (k < 0 || k > n) return LogWeight::zero();
    if (k == 0 || k == n) return LogWeight::one();
    const auto table = log2_factorial_table(static_cast<int>(n));
    const auto& t = *table;
    return LogWeight::from_log2(t[n] - t[k] - t[n - k]);
}

LogWeight multinomial_log2(long n, std::span<const int> parts) {
    if (n < 0) throw DomainError("multinomial: negative n");
    long sum = 0;
    for (int p : parts) {
        if (p < 0) throw DomainError("multinomial: negative part");
        sum += p;
    }
    if (sum != n) throw DomainError("multinomial: parts do not sum to n");
    const auto table = log2_factorial_table(static_cast<int>(n));
    const auto& t = *table;
    long double l = t[n];
    for (int p : parts) l -= t[p];
    return LogWeight::from_log2(l);
}

long double log2_of(const BigInt& value) {
    if (sgn(value) <= 0) throw DomainError("log2_of: nonpositive value");
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
    return std::log2(static_cast<long double>(mant)) + static_cast<long double>(exp);
}

BoundedCompositionIter::BoundedCompositionIter(int total, std::vector<int> bounds)
    : BoundedCompositionIter(total, std::move(bounds), 0, total) {}

BoundedCompositionIter::BoundedCompositionIter(int total, std::vector<int> bounds, int first_lo, int first_hi)
    : total_(total), bounds_(std::move(bounds)), first_hi_(first_hi) {
    if (total < 0) throw DomainError("compositions: negative total");
    for (int b : bounds_)
        if (b < 0) throw DomainError("compositions: negative bound");

    const std::size_t d = bounds_.size();
    suffix_capacity_.assign(d + 1, 0);
    for (std::size_t i = d; i-- > 0;) suffix_capacity_[i] = suffix_capacity_[i + 1] + bounds_[i];
    current_.assign(d, 0);

    if (d == 0) {
        valid_ = (total == 0);
        return;
    }
    const int lo = std::max({first_lo, 0, total - suffix_capacity_[1]});
    const int hi = std::min({first_hi, bounds_[0], total});
    if (lo > hi) return;
    current_[0] = lo;
    valid_ = fill_minimal_from(1, total - lo);
}

bool BoundedCompositionIter::fill_minimal_from(std::size_t pos, int remaining) {
    for (std::size_t i = pos; i < bounds_.size(); ++i) {
        const int k = std::max(0, remaining - suffix_capacity_[i + 1]);
        if (k > bounds_[i]) return false;
        current_[i] = k;
        remaining -= k;
    }
    return remaining == 0;
}

void BoundedCompositionIter::advance() {
    if (!valid_) return;
    const std::size_t d = bounds_.size();
    int suffix = 0;
    for (std::size_t i = d; i-- > 0;) {
        if (i + 1 < d && suffix >= 1 && current_[i] < bounds_[i] && (i != 0 || current_[0] < first_hi_)) {
            ++current_[i];
            fill_minimal_from(i + 1, suffix - 1);
            first_changed_ = i;
            return;
        }
        suffix += current_[i];
    }
    valid_ = false;
}

std::vector<Composition> enumerate_compositions(int n, std::span<const int> bounds) {
    std::vector<Composition> out;
    for (BoundedCompositionIter it(n, {bounds.begin(), bounds.end()}); it.valid(); it.advance())
        out.push_back(it.current());
    return out;
}

BigInt count_compositions(int n, std::span<const int> bounds) {
    if (n < 0) throw DomainError("compositions: negative total");
    std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int b : bounds) {
        if (b < 0) throw DomainError("compositions: negative bound");
        // Sliding-window sum: next[m] = ways[m-b..m].
        std::vector<BigInt> next(ways.size(), 0);
        BigInt window = 0;
        for (std::size_t m = 0; m < ways.size(); ++m) {
            window += ways[m];
            if (m >= static_cast<std::size_t>(b) + 1) window -= ways[m - b - 1];
            next[m] = window;
        }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(n)];
}

}  // namespace permutent
