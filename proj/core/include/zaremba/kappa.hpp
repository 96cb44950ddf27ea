#pragma once

#include "zaremba/bigint.hpp"
#include "zaremba/linrep.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace zaremba {

// Table of kappa(0..N-1) filled by the index recurrence
//   kappa(n) = (n mod k + 1) * kappa(n div k) + kappa(n div k^2)   for n >= k^2,
// seeded by kappa(n) = n+1 for n < k and
// kappa(a*k + b) = (a+1)*(b+1) + 1 for 1 <= a < k, 0 <= b < k.
//
// Values are held in overflow-checked 64-bit words and promoted wholesale to
// big integers the first time a value no longer fits.
class KappaTable {
public:
    // Auto-promoting computation (64-bit until overflow).
    static KappaTable compute(int k, std::size_t count);
    // Forced big-integer computation; same values, used for consistency checks.
    static KappaTable compute_big(int k, std::size_t count);

    int base() const { return k_; }
    std::size_t size() const { return big_mode_ ? big_.size() : small_.size(); }
    bool uses_bigint() const { return big_mode_; }

    // Exact value in either mode.
    Int value(std::size_t n) const;
    // 64-bit view; throws std::overflow_error in big mode.
    std::uint64_t value_u64(std::size_t n) const;
    std::span<const std::uint64_t> values_u64() const;

private:
    KappaTable() = default;
    static KappaTable compute_impl(int k, std::size_t count, bool force_big);

    int k_ = 2;
    bool big_mode_ = false;
    std::vector<std::uint64_t> small_;
    std::vector<Int> big_;
};

// Shorthand for KappaTable::compute.
KappaTable kappa_range(int k, std::size_t count);

// Denominator of the continued fraction whose partial quotients are
// digit+1 over the word, via q_j = a_j*q_{j-1} + q_{j-2}.
Int continuant(const DigitWord& w);

// Extremal statistics of the k=2 sequence over dyadic blocks [2^{m-1}, 2^m).
struct GrowthRecord {
    int m = 0;
    std::uint64_t argmax = 0;    // index attaining the block maximum
    std::uint64_t max_value = 0; // kappa_2(argmax)
    double ratio = 0.0;          // max_value / (2^m - 1)^{log2(1+sqrt 2)}
    bool exhaustive = false;     // full scan vs all-ones-digits recurrence
};

struct GrowthReport {
    int k = 2;                         // the facts below are specific to base 2
    std::vector<GrowthRecord> records; // m = 2 .. m_max
    double limit = 0.0;                // (2 + sqrt 2) / 4
};

// Blocks up to m <= 24 are scanned exhaustively; beyond that the block
// maximum is taken at 2^m - 1 and its value advanced by the two-term
// recurrence q_m = 2 q_{m-1} + q_{m-2}.
GrowthReport growth_report(int m_max);

} // namespace zaremba
