#include "zaremba/kappa.hpp"

#include "zaremba/errors.hpp"
#include "zaremba/resource.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zaremba {

namespace {

// Seed values below k^2 from the two closed forms.
std::uint64_t seed_value(int k, std::uint64_t n) {
    const auto kk = static_cast<std::uint64_t>(k);
    if (n < kk) {
        return n + 1;
    }
    const std::uint64_t a = n / kk;
    const std::uint64_t b = n % kk;
    return (a + 1) * (b + 1) + 1;
}

} // namespace

KappaTable KappaTable::compute_impl(int k, std::size_t count, bool force_big) {
    if (k < 2) {
        throw std::invalid_argument("kappa_range: base must be >= 2, got " + std::to_string(k));
    }
    if (count == 0) {
        throw std::invalid_argument("kappa_range: count must be >= 1");
    }
    resource::require(count * (force_big ? sizeof(Int) : sizeof(std::uint64_t)), "kappa_range");

    KappaTable t;
    t.k_ = k;
    t.big_mode_ = force_big;

    const auto kk = static_cast<std::uint64_t>(k);
    const std::uint64_t k2 = kk * kk;

    if (!force_big) {
        t.small_.resize(count);
        for (std::size_t n = 0; n < count && n < k2; ++n) {
            t.small_[n] = seed_value(k, n);
        }
        for (std::size_t n = k2; n < count; ++n) {
            const std::uint64_t a = n % kk;
            std::uint64_t prod = 0;
            std::uint64_t val = 0;
            // kappa(n) = (a+1)*kappa(n/k) + kappa(n/k^2)
            if (__builtin_mul_overflow(a + 1, t.small_[n / kk], &prod) ||
                __builtin_add_overflow(prod, t.small_[n / k2], &val)) {
                // Promote everything computed so far and continue exactly.
                resource::require(count * sizeof(Int), "kappa_range");
                t.big_mode_ = true;
                t.big_.reserve(count);
                for (std::size_t i = 0; i < n; ++i) {
                    t.big_.emplace_back(t.small_[i]);
                }
                t.small_.clear();
                t.small_.shrink_to_fit();
                break;
            }
            t.small_[n] = val;
        }
        if (!t.big_mode_) {
            return t;
        }
    } else {
        t.big_.reserve(count);
    }

    for (std::size_t n = t.big_.size(); n < count; ++n) {
        if (n < k2) {
            t.big_.emplace_back(seed_value(k, n));
        } else {
            const std::uint64_t a = n % kk;
            t.big_.push_back(Int(a + 1) * t.big_[n / kk] + t.big_[n / k2]);
        }
    }
    return t;
}

KappaTable KappaTable::compute(int k, std::size_t count) {
    return compute_impl(k, count, false);
}

KappaTable KappaTable::compute_big(int k, std::size_t count) {
    return compute_impl(k, count, true);
}

Int KappaTable::value(std::size_t n) const {
    if (n >= size()) {
        throw std::out_of_range("KappaTable::value: index " + std::to_string(n) + " out of range");
    }
    return big_mode_ ? big_[n] : Int(small_[n]);
}

std::uint64_t KappaTable::value_u64(std::size_t n) const {
    if (big_mode_) {
        throw std::overflow_error("KappaTable: values exceeded 64 bits");
    }
    if (n >= small_.size()) {
        throw std::out_of_range("KappaTable::value_u64: index out of range");
    }
    return small_[n];
}

std::span<const std::uint64_t> KappaTable::values_u64() const {
    if (big_mode_) {
        throw std::overflow_error("KappaTable: values exceeded 64 bits");
    }
    return {small_.data(), small_.size()};
}

KappaTable kappa_range(int k, std::size_t count) {
    return KappaTable::compute(k, count);
}

Int continuant(const DigitWord& w) {
    if (!is_valid(w)) {
        throw std::invalid_argument("continuant: invalid digit word");
    }
    Int q = 1;
    Int q_prev = 0;
    for (int d : w.digits) {
        Int next = Int(d + 1) * q + q_prev;
        q_prev = std::move(q);
        q = std::move(next);
    }
    return q;
}

GrowthReport growth_report(int m_max) {
    if (m_max < 2 || m_max > 40) {
        throw std::invalid_argument("growth_report: m_max must be in [2, 40], got " + std::to_string(m_max));
    }
    constexpr int exhaustive_cutoff = 24;
    const double exponent = std::log2(1.0 + std::sqrt(2.0));

    GrowthReport report;
    report.k = 2;
    report.limit = (2.0 + std::sqrt(2.0)) / 4.0;

    const int scan_max = std::min(m_max, exhaustive_cutoff);
    const KappaTable table = kappa_range(2, std::size_t{1} << scan_max);
    const auto vals = table.values_u64();

    // All-ones-digit value q_m = 2 q_{m-1} + q_{m-2}; q_1 = 2, q_2 = 5.
    std::uint64_t rep_prev = 1; // q_0
    std::uint64_t rep_cur = 2;  // q_1

    for (int m = 2; m <= m_max; ++m) {
        const std::uint64_t rep_next = 2 * rep_cur + rep_prev;
        rep_prev = rep_cur;
        rep_cur = rep_next;

        GrowthRecord rec;
        rec.m = m;
        if (m <= scan_max) {
            const std::uint64_t lo = std::uint64_t{1} << (m - 1);
            const std::uint64_t hi = std::uint64_t{1} << m;
            std::uint64_t best = 0;
            std::uint64_t best_at = lo;
            for (std::uint64_t n = lo; n < hi; ++n) {
                if (vals[n] > best) {
                    best = vals[n];
                    best_at = n;
                }
            }
            rec.argmax = best_at;
            rec.max_value = best;
            rec.exhaustive = true;
        } else {
            rec.argmax = (std::uint64_t{1} << m) - 1;
            rec.max_value = rep_cur;
            rec.exhaustive = false;
        }
        const double top = static_cast<double>((std::uint64_t{1} << m) - 1);
        rec.ratio = static_cast<double>(rec.max_value) / std::pow(top, exponent);
        report.records.push_back(rec);
    }
    return report;
}

} // namespace zaremba
