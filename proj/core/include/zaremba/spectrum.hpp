#pragma once

#include "zaremba/bigint.hpp"
#include "zaremba/kappa.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace zaremba {

// Characteristic data of the four-iterate equation satisfied by the
// continuant generating function. The cubic factors exactly as
//   chi(x) = -k (x - 1) (x^2 - (k(k+1)/2) x - k^2),
// and the dominant root alpha_k = [k(k+1) + k*sqrt((k+1)^2 + 16)] / 4 drives
// the radial blow-up exponent gamma_k = log_k alpha_k.
struct SpectrumReport {
    int k = 2;
    std::array<Int, 4> chi_monic{}; // ascending powers; leading coefficient 1
    Int lead;                       // overall integer factor (-k)
    double alpha = 0.0;             // dominant root
    double minor_root = 0.0;        // the negative root
    double gamma = 0.0;             // log_k alpha
    bool expansion_consistent = false; // factored form re-expands to chi_monic
};

SpectrumReport char_poly(int k);

double dominant_eigenvalue(int k);
double critical_exponent(int k);

// Truncation order rule for radial evaluation: ceil(40/(1-z)), so the
// neglected tail is below 1e-6 relative for the polynomially growing
// coefficients at hand.
std::size_t radial_order(double z);

// Truncated generating-function value sum_{n<order} kappa(n) z^n with
// compensated summation. The table overload reuses a precomputed range.
double eval_radial(const KappaTable& table, double z, std::size_t order);
double eval_radial(int k, double z, std::size_t order);
double eval_radial(int k, double z); // order by rule

// K(z) * (1-z)^gamma_k, the bounded oscillatory prefactor estimate.
double c_estimate(const KappaTable& table, int k, double z, std::size_t order);
double c_estimate(int k, double z);

struct RadialPoint {
    int j = 0;          // radius index, z = 1 - 2^-j
    double z = 0.0;
    std::size_t order = 0;
    double value = 0.0;      // truncated K(z)
    double c_estimate = 0.0; // value * (1-z)^gamma
};

struct RadialProfile {
    int k = 2;
    double gamma = 0.0;
    std::vector<RadialPoint> points; // j = 2 .. j_max
};

RadialProfile radial_profile(int k, int j_max);

// |(1 - z^{k^m})^gamma / ((1-z)^gamma alpha^m) - 1| at z = 1 - 2^-j; the
// scaling identity behind transporting asymptotics across iterates.
double check_scaling(int k, int m, int j);

// CSV with columns j, z, order, K, C_est.
std::string to_csv(const RadialProfile& profile);

} // namespace zaremba
