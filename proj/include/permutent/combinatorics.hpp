#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace permutent {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Occupation-like vector: one nonnegative count per local level.
using Composition = std::vector<int>;

/// Precondition or argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A computation would exceed a configured resource guard.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Positive real stored as its base-2 logarithm in extended precision.
/// The default-constructed value represents zero (log2 = -inf).
class LogWeight {
public:
    constexpr LogWeight() = default;

    static constexpr LogWeight from_log2(long double l) { return LogWeight(l); }
    static LogWeight from_value(long double x);
    static constexpr LogWeight zero() { return LogWeight(); }
    static constexpr LogWeight one() { return LogWeight(0.0L); }

    constexpr long double log2() const { return log2_; }
    constexpr bool is_zero() const { return log2_ == -std::numeric_limits<long double>::infinity(); }
    long double value() const;

    friend constexpr LogWeight operator*(LogWeight a, LogWeight b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return LogWeight(a.log2_ + b.log2_);
    }
    friend constexpr LogWeight operator/(LogWeight a, LogWeight b) {
        if (b.is_zero()) throw DomainError("LogWeight: division by zero");
        if (a.is_zero()) return zero();
        return LogWeight(a.log2_ - b.log2_);
    }
    friend constexpr bool operator==(LogWeight, LogWeight) = default;
    friend constexpr auto operator<=>(LogWeight a, LogWeight b) { return a.log2_ <=> b.log2_; }

private:
    constexpr explicit LogWeight(long double l) : log2_(l) {}
    long double log2_ = -std::numeric_limits<long double>::infinity();
};

/// Cumulative table log2(m!) for m = 0..size()-1. Immutable once handed out.
using Log2FactorialTable = std::vector<long double>;

/// Returns a table covering at least 0..max_m. The shared table grows lazily;
/// callers keep the returned pointer for the duration of a hot loop.
std::shared_ptr<const Log2FactorialTable> log2_factorial_table(int max_m);

long double log2_factorial(int m);

/// Exact n!/(k!(n-k)!); zero when k is outside [0, n].
BigInt binom_exact(long n, long k);

LogWeight log2_binom(long n, long k);

/// log2 of n!/(parts_0! parts_1! ...). Parts must sum to n.
LogWeight multinomial_log2(long n, std::span<const int> parts);

/// log2 of a positive big integer, accurate to double rounding.
long double log2_of(const BigInt& value);

/// Lexicographic stream of bounded compositions of `total`.
///
/// Yields every vector k with sum(k) == total and 0 <= k[i] <= bounds[i],
/// ascending in lexicographic order. An optional [first_lo, first_hi] window on
/// k[0] selects a contiguous chunk of the full stream, so disjoint windows
/// partition the stream for data-parallel reductions.
class BoundedCompositionIter {
public:
    BoundedCompositionIter(int total, std::vector<int> bounds);
    BoundedCompositionIter(int total, std::vector<int> bounds, int first_lo, int first_hi);

    /// False once the stream is exhausted.
    bool valid() const { return valid_; }
    const Composition& current() const { return current_; }

    /// Lowest index whose value changed in the last advance(); 0 on the first item.
    std::size_t first_changed() const { return first_changed_; }

    /// Move to the next composition.
    void advance();

    int total() const { return total_; }
    const std::vector<int>& bounds() const { return bounds_; }

private:
    bool fill_minimal_from(std::size_t pos, int remaining);

    int total_;
    std::vector<int> bounds_;
    std::vector<int> suffix_capacity_;  // sum of bounds[i..]
    int first_hi_;
    Composition current_;
    std::size_t first_changed_ = 0;
    bool valid_ = false;
};

/// Materializes the full stream. Empty when sum(bounds) < n.
std::vector<Composition> enumerate_compositions(int n, std::span<const int> bounds);

/// Number of bounded compositions, counted by dynamic programming (no enumeration).
BigInt count_compositions(int n, std::span<const int> bounds);

}  // namespace permutent
