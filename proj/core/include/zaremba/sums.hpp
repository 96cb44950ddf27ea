#pragma once

#include "zaremba/kappa.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace zaremba {

// One prefix-sum record: S(n) = sum of kappa(0..n), with S(n)/n^gamma_k.
struct SumEntry {
    std::uint64_t n = 0;
    std::uint64_t s = 0;
    double normalized = 0.0;
};

struct SumProfile {
    int k = 2;
    double gamma = 0.0;
    std::vector<SumEntry> entries; // consecutive n over the requested window
};

// Streams (n, S(n)) for n = 0..n_max to the visitor without materializing
// per-n records; the kappa table itself is the only large allocation.
template <typename F>
void scan_partial_sums(int k, std::uint64_t n_max, F&& visit);

// Materialized window lo..hi (lo >= 1 so the normalization is defined).
SumProfile partial_sums_window(int k, std::uint64_t lo, std::uint64_t hi);
// Full profile for n = 1..n_max.
SumProfile partial_sums(int k, std::uint64_t n_max);

// Normalized prefix sums resampled onto the self-similarity window:
// g(x) = S(floor(x * k^level)) / (x * k^level)^gamma for x on an even grid
// of [1, k]. Successive levels converge to the periodic limit profile.
struct ProfilePoint {
    double x = 0.0;
    double g = 0.0;
};

std::vector<ProfilePoint> oscillation_profile(int k, int level, std::size_t samples);

// Takagi function tau(x) = sum_n 2^-n * dist(2^n x, Z), truncated when the
// geometric tail bound 2^-n falls below tol (capped at 64 terms).
struct TakagiSample {
    double x = 0.0;
    double value = 0.0;
    int terms = 0;
};

TakagiSample takagi(double x, double tol);

// Evenly spaced samples of tau over [0, 1].
std::vector<TakagiSample> takagi_grid(std::size_t samples, double tol);

// Side-by-side CSV (x, norm_sum, takagi) for equal-length grids; x is the
// shared grid parameter in [0, 1]. Written atomically.
void export_comparison(const std::vector<ProfilePoint>& profile,
                       const std::vector<TakagiSample>& grid,
                       const std::filesystem::path& path);

std::string to_csv(const SumProfile& profile);                          // N,S,normalized
std::string to_csv(const std::vector<ProfilePoint>& profile);           // x,g_m
std::string to_csv(const std::vector<TakagiSample>& grid);              // x,tau
std::string comparison_csv(const std::vector<ProfilePoint>& profile,
                           const std::vector<TakagiSample>& grid);      // x,norm_sum,takagi

// --- implementation ---

namespace detail {
std::uint64_t checked_sum_limit(int k, std::uint64_t n_max);
}

template <typename F>
void scan_partial_sums(int k, std::uint64_t n_max, F&& visit) {
    const std::uint64_t count = detail::checked_sum_limit(k, n_max);
    const KappaTable table = kappa_range(k, count);
    const auto vals = table.values_u64();
    std::uint64_t s = 0;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (__builtin_add_overflow(s, vals[n], &s)) {
            throw std::overflow_error("partial_sums: prefix sum exceeded 64 bits");
        }
        visit(n, s);
    }
}

} // namespace zaremba
