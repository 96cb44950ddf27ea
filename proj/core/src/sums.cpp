#include "zaremba/sums.hpp"

#include "zaremba/errors.hpp"
#include "zaremba/io.hpp"
#include "zaremba/resource.hpp"
#include "zaremba/spectrum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace zaremba {

namespace detail {

std::uint64_t checked_sum_limit(int k, std::uint64_t n_max) {
    if (k < 2) {
        throw std::invalid_argument("partial_sums: base must be >= 2");
    }
    if (n_max >= (std::uint64_t{1} << 24)) {
        throw std::invalid_argument("partial_sums: n_max capped at 2^24");
    }
    return n_max + 1;
}

} // namespace detail

SumProfile partial_sums_window(int k, std::uint64_t lo, std::uint64_t hi) {
    if (lo < 1 || hi < lo) {
        throw std::invalid_argument("partial_sums: need 1 <= lo <= hi");
    }
    SumProfile profile;
    profile.k = k;
    profile.gamma = critical_exponent(k);
    resource::require((hi - lo + 1) * sizeof(SumEntry), "partial_sums");
    profile.entries.reserve(hi - lo + 1);
    scan_partial_sums(k, hi, [&](std::uint64_t n, std::uint64_t s) {
        if (n < lo) {
            return;
        }
        SumEntry e;
        e.n = n;
        e.s = s;
        e.normalized = static_cast<double>(s) / std::pow(static_cast<double>(n), profile.gamma);
        profile.entries.push_back(e);
    });
    return profile;
}

SumProfile partial_sums(int k, std::uint64_t n_max) {
    return partial_sums_window(k, 1, n_max);
}

std::vector<ProfilePoint> oscillation_profile(int k, int level, std::size_t samples) {
    if (k < 2) {
        throw std::invalid_argument("oscillation_profile: base must be >= 2");
    }
    if (level < 4) {
        throw std::invalid_argument("oscillation_profile: level must be >= 4");
    }
    if (samples < 16) {
        throw std::invalid_argument("oscillation_profile: need at least 16 samples");
    }
    // Needs S up to k^(level+1); keep the table within the sums cap.
    double top = std::pow(static_cast<double>(k), level + 1);
    if (top >= std::ldexp(1.0, 24)) {
        throw std::invalid_argument("oscillation_profile: k^(level+1) capped at 2^24");
    }
    const auto block = static_cast<std::uint64_t>(top);
    const double gamma = critical_exponent(k);
    const double scale = std::pow(static_cast<double>(k), level);

    std::vector<std::uint64_t> prefix(block + 1);
    scan_partial_sums(k, block, [&](std::uint64_t n, std::uint64_t s) { prefix[n] = s; });

    std::vector<ProfilePoint> out;
    out.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = 1.0 + (static_cast<double>(k) - 1.0) *
                                   (static_cast<double>(i) / static_cast<double>(samples - 1));
        const double pos = x * scale;
        const auto idx = static_cast<std::uint64_t>(std::floor(pos));
        ProfilePoint p;
        p.x = x;
        p.g = static_cast<double>(prefix[idx]) / std::pow(pos, gamma);
        out.push_back(p);
    }
    return out;
}

TakagiSample takagi(double x, double tol) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("takagi: x must lie in [0, 1]");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("takagi: tol must be positive");
    }
    TakagiSample out;
    out.x = x;
    double y = x;      // frac(2^n x)
    double w = 1.0;    // 2^-n
    int n = 0;
    while (w > tol && n < 64) {
        const double dist = std::min(y, 1.0 - y);
        out.value += w * dist;
        y *= 2.0;
        if (y >= 1.0) {
            y -= 1.0;
        }
        w *= 0.5;
        ++n;
    }
    out.terms = n;
    return out;
}

std::vector<TakagiSample> takagi_grid(std::size_t samples, double tol) {
    if (samples < 2) {
        throw std::invalid_argument("takagi_grid: need at least 2 samples");
    }
    std::vector<TakagiSample> out;
    out.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        out.push_back(takagi(static_cast<double>(i) / static_cast<double>(samples - 1), tol));
    }
    return out;
}

std::string to_csv(const SumProfile& profile) {
    std::ostringstream out;
    out << "N,S,normalized\n";
    for (const SumEntry& e : profile.entries) {
        out << e.n << ',' << e.s << ',' << io::format_double(e.normalized) << '\n';
    }
    return out.str();
}

std::string to_csv(const std::vector<ProfilePoint>& profile) {
    std::ostringstream out;
    out << "x,g_m\n";
    for (const ProfilePoint& p : profile) {
        out << io::format_double(p.x) << ',' << io::format_double(p.g) << '\n';
    }
    return out.str();
}

std::string to_csv(const std::vector<TakagiSample>& grid) {
    std::ostringstream out;
    out << "x,tau\n";
    for (const TakagiSample& s : grid) {
        out << io::format_double(s.x) << ',' << io::format_double(s.value) << '\n';
    }
    return out.str();
}

std::string comparison_csv(const std::vector<ProfilePoint>& profile,
                           const std::vector<TakagiSample>& grid) {
    if (profile.size() != grid.size()) {
        throw std::invalid_argument("comparison: grids must have equal length");
    }
    std::ostringstream out;
    out << "x,norm_sum,takagi\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << io::format_double(grid[i].x) << ',' << io::format_double(profile[i].g) << ','
            << io::format_double(grid[i].value) << '\n';
    }
    return out.str();
}

void export_comparison(const std::vector<ProfilePoint>& profile,
                       const std::vector<TakagiSample>& grid,
                       const std::filesystem::path& path) {
    io::atomic_write_text(path, comparison_csv(profile, grid));
}

} // namespace zaremba
