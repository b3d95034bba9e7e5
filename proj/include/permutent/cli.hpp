#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <iosfwd>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "permutent/spectrum.hpp"

namespace permutent::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationError = 1,
    kVerificationMismatch = 2,
    kResourceGuard = 3,
};

/// Entry point shared by the `permutent` binary and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated occupation numbers, e.g. "40,40,40".
std::vector<int> parse_occupations(std::string_view text);

/// Comma-separated densities; each may be a fraction ("1/3") or a decimal.
/// Parsed as rationals; the exact sum must lie within 1e-9 of 1 and the
/// vector is renormalized exactly before rounding to double.
std::vector<double> parse_densities(std::string_view text);

/// Builds the sector from the --L/--d/--occ/--dens flag values.
SectorConfig make_sector(const std::string& size, int dim, const std::string& occupations,
                         const std::string& densities);

/// Worker count: PERMUTENT_THREADS when set to a positive integer, otherwise
/// the hardware concurrency.
unsigned thread_count();

/// Calls fn(i) for i in [0, count) on up to thread_count() threads. The first
/// exception thrown by any call is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(thread_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace permutent::cli
