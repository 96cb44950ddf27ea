#pragma once

#include "zaremba/bigint.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace zaremba {

// Truncated power series with exact integer coefficients. The truncation
// order is the number of valid coefficients; arithmetic never reads past it
// and results carry the minimum of the operand orders.
class IntSeries {
public:
    explicit IntSeries(std::size_t order);
    static IntSeries constant(const Int& c, std::size_t order);

    std::size_t order() const { return c_.size(); }
    Int& operator[](std::size_t n) { return c_[n]; }
    const Int& operator[](std::size_t n) const { return c_[n]; }

    bool is_zero() const;
    // Index of the first nonzero coefficient; order() when identically zero.
    std::size_t first_nonzero() const;

private:
    std::vector<Int> c_;
};

IntSeries add(const IntSeries& a, const IntSeries& b);
IntSeries sub(const IntSeries& a, const IntSeries& b);
// Exact Cauchy product truncated to the common order.
IntSeries mul(const IntSeries& a, const IntSeries& b);
// Substitution z -> z^k: coefficient n lands at index k*n, order preserved.
IntSeries upsample(const IntSeries& s, int k);
IntSeries negate(const IntSeries& s);

inline IntSeries operator+(const IntSeries& a, const IntSeries& b) { return add(a, b); }
inline IntSeries operator-(const IntSeries& a, const IntSeries& b) { return sub(a, b); }
inline IntSeries operator*(const IntSeries& a, const IntSeries& b) { return mul(a, b); }

// Generating function of the continuant sequence, coefficient n = kappa(n).
IntSeries kappa_series(int k, std::size_t order);

// Residual of the functional equation
//   K(z) - (sum_{a<k} (a+1) z^a) K(z^k) - (sum_{a<k^2} z^a) K(z^{k^2}) = -sum_{n<k} z^n,
// as left side minus right side. Identically zero on correct input.
IntSeries check_mfe(int k, std::size_t order);

// Residual of the homogeneous four-iterate equation obtained by eliminating
// the inhomogeneous term between the equation above and its z -> z^k image.
IntSeries check_homogeneous(int k, std::size_t order);

// A relation among truncated series: one polynomial (coefficient vector of
// length poly_degree+1) per basis function, with sum p_i(z) F_i(z) = 0 mod z^N.
using SeriesRelation = std::vector<std::vector<Int>>;

// All polynomial relations of degree <= poly_degree among the given series,
// modulo z^order: exact rational kernel, returned as primitive integer
// vectors. Throws std::invalid_argument when unknowns exceed the order.
std::vector<SeriesRelation> series_relation_kernel(const std::vector<IntSeries>& funcs,
                                                   int poly_degree,
                                                   std::size_t order);

struct RelationBasis {
    int k = 2;
    int degree_bound = 0;      // total degree bound in the two series unknowns
    int poly_degree = 0;       // degree bound of the polynomial coefficients
    std::size_t order = 0;     // truncation order of the probe
    std::vector<std::pair<int, int>> monomials; // exponents (m0, m1) of K(z)^m0 K(z^k)^m1
    std::vector<SeriesRelation> basis;          // empty when no relation exists
};

// Searches for polynomial relations among K(z) and K(z^k): monomials
// K^{m0} K(z^k)^{m1} with m0+m1 <= degree_bound, polynomial coefficients of
// degree <= poly_degree, matched exactly modulo z^order.
RelationBasis relation_probe(int k, int degree_bound, int poly_degree, std::size_t order);

// Positive control: the kernel over {1, K(z), K(z^k), K(z^{k^2})} with
// polynomial coefficients of degree <= poly_degree. The unique relation is
// the functional equation itself.
std::vector<SeriesRelation> mfe_control_probe(int k, int poly_degree, std::size_t order);

// The functional equation as a primitive relation over {1, K, K(z^k),
// K(z^{k^2})}, padded to poly_degree: what mfe_control_probe must recover.
SeriesRelation mfe_expected_relation(int k, int poly_degree);

// True when the control kernel is exactly the functional equation up to
// scalar: at the minimal degree bound k^2 - 1 the basis is that single
// relation; above it the kernel must coincide with the forced span of
// z^e-multiples of the same relation, nothing else.
bool mfe_control_recovered(int k, int poly_degree, std::size_t order);

// JSON with decimal-string coefficients (interchange-safe for big integers).
std::string to_json(const IntSeries& s);
std::string to_json(const RelationBasis& b);

} // namespace zaremba
