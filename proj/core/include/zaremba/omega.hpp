#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace zaremba {

// Root of unity exp(2*pi*i * index / k^level). Indices divisible by k alias
// the same root one level down; lookups normalize, never compare floats.
struct RootIndex {
    int level = 0;
    std::uint64_t index = 0;
};

// Oscillation values Omega(xi) for all xi of degree dividing k^depth,
// generated bottom-up from Omega(1) = 1 by
//   Omega(xi) = (sum_{a<k} (a+1) xi^a) Omega(xi^k)/alpha
//             + (sum_{a<k^2} xi^a) Omega(xi^{k^2})/alpha^2.
class OmegaTable {
public:
    OmegaTable(int k, int depth, std::vector<std::complex<double>> values);

    int base() const { return k_; }
    int depth() const { return depth_; }
    std::uint64_t size() const { return values_.size(); }

    // Omega at exp(2*pi*i * pos / k^depth).
    std::complex<double> value_at(std::uint64_t pos) const;
    // Omega at an arbitrary (level, index) with level <= depth.
    std::complex<double> value(const RootIndex& root) const;

private:
    int k_;
    int depth_;
    std::vector<std::complex<double>> values_;
};

OmegaTable build_omega(int k, int depth);

// Max residual over all table roots of the product-form identity
//   (z-1) Omega(z) = (k z^k - sum_{a<k} z^a) Omega(z^k)/alpha
//                  + (z^{k^2} - 1) Omega(z^{k^2})/alpha^2.
double check_omega_fe(const OmegaTable& table);

// Same check, also reporting the root attaining the max residual.
struct FeResidual {
    double max = 0.0;
    RootIndex argmax; // canonical (level, index)
};

FeResidual check_omega_fe_detail(const OmegaTable& table);

// Exact expansion of (z-1) * sum_{a<k} (a+1) z^a. `holds` reports the
// k z^k - sum_{a<k} z^a form; `variant_holds` reports the plausible-looking
// (k+2) z^k + sum_{a<k} z^a form, which does not expand correctly and is
// kept as a negative control.
struct WeightCheck {
    bool holds = false;
    bool variant_holds = false;
};

WeightCheck check_weight_identity(int k);

// K(xi z)/K(z) from the truncated series at z = 1 - 2^-j; approaches
// Omega(xi) as j grows. order == 0 selects the rule order ceil(40/(1-z)).
std::complex<double> omega_radial_estimate(int k, const RootIndex& root, int j,
                                           std::size_t order = 0);

// CSV with columns m, j, re_omega, im_omega, fe_residual.
std::string to_csv(const OmegaTable& table);

} // namespace zaremba
