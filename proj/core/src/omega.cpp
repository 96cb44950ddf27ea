#include "zaremba/omega.hpp"

#include "zaremba/bigint.hpp"
#include "zaremba/errors.hpp"
#include "zaremba/io.hpp"
#include "zaremba/kappa.hpp"
#include "zaremba/resource.hpp"
#include "zaremba/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zaremba {

namespace {

constexpr int max_depth = 8;

std::uint64_t pow_u64(int k, int e) {
    std::uint64_t p = 1;
    for (int i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(p, static_cast<std::uint64_t>(k), &p)) {
            throw resource_error("omega: k^depth does not fit 64 bits");
        }
    }
    return p;
}

// exp(2*pi*i * num / den) with the index reduced exactly, never by
// accumulated multiplication.
std::complex<double> unit_root(std::uint64_t num, std::uint64_t den) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(num % den) / static_cast<double>(den));
    return std::polar(1.0, angle);
}

std::complex<double> ramp_at(int k, std::complex<double> z) {
    // sum_{a<k} (a+1) z^a by Horner
    std::complex<double> acc = 0.0;
    for (int a = k - 1; a >= 0; --a) {
        acc = acc * z + static_cast<double>(a + 1);
    }
    return acc;
}

std::complex<double> ones_at(std::uint64_t count, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (std::uint64_t a = 0; a < count; ++a) {
        acc = acc * z + 1.0;
    }
    return acc;
}

// Residual of the product-form identity at flat position pos.
double fe_residual_at(const OmegaTable& t, std::uint64_t pos, double alpha) {
    const int k = t.base();
    const std::uint64_t den = t.size();
    const std::complex<double> z = unit_root(pos, den);
    const std::complex<double> zk = unit_root(pos * static_cast<std::uint64_t>(k), den);
    const std::complex<double> zk2 =
        unit_root(pos * static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k), den);

    const std::complex<double> lhs = (z - 1.0) * t.value_at(pos);
    const std::complex<double> weight = static_cast<double>(k) * zk - ones_at(static_cast<std::uint64_t>(k), z);
    const std::complex<double> rhs =
        weight * t.value_at(pos * static_cast<std::uint64_t>(k) % den) / alpha +
        (zk2 - 1.0) * t.value_at(pos * static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k) % den) /
            (alpha * alpha);
    return std::abs(lhs - rhs);
}

} // namespace

OmegaTable::OmegaTable(int k, int depth, std::vector<std::complex<double>> values)
    : k_(k), depth_(depth), values_(std::move(values)) {}

std::complex<double> OmegaTable::value_at(std::uint64_t pos) const {
    if (pos >= values_.size()) {
        throw std::out_of_range("OmegaTable::value_at: position out of range");
    }
    return values_[pos];
}

std::complex<double> OmegaTable::value(const RootIndex& root) const {
    if (root.level < 0 || root.level > depth_) {
        throw std::invalid_argument("OmegaTable::value: level outside table depth");
    }
    const std::uint64_t den = pow_u64(k_, root.level);
    if (root.index >= den) {
        throw std::invalid_argument("OmegaTable::value: index not below k^level");
    }
    return values_[root.index * (values_.size() / den)];
}

OmegaTable build_omega(int k, int depth) {
    if (k < 2) {
        throw std::invalid_argument("build_omega: base must be >= 2, got " + std::to_string(k));
    }
    if (depth < 0 || depth > max_depth) {
        throw std::invalid_argument("build_omega: depth must be in [0, " + std::to_string(max_depth) + "]");
    }
    const std::uint64_t size = pow_u64(k, depth);
    resource::require(size * sizeof(std::complex<double>), "build_omega");

    const double alpha = dominant_eigenvalue(k);
    std::vector<std::complex<double>> values(size);
    values[0] = 1.0;

    // Level by level: position j * k^{depth-m} holds the root of exact degree
    // k^m at index j (k does not divide j), and depends only on the two
    // lower levels through xi^k and xi^{k^2}.
    for (int m = 1; m <= depth; ++m) {
        const std::uint64_t den = pow_u64(k, m);
        const std::uint64_t stride = size / den;
        for (std::uint64_t j = 1; j < den; ++j) {
            if (j % static_cast<std::uint64_t>(k) == 0) {
                continue;
            }
            const std::complex<double> xi = unit_root(j, den);
            const std::complex<double> om_k = values[j * static_cast<std::uint64_t>(k) % den * stride];
            const std::complex<double> om_k2 =
                values[j * static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k) % den * stride];
            values[j * stride] = ramp_at(k, xi) * om_k / alpha +
                                 ones_at(static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k), xi) *
                                     om_k2 / (alpha * alpha);
        }
    }
    return OmegaTable(k, depth, std::move(values));
}

double check_omega_fe(const OmegaTable& table) {
    return check_omega_fe_detail(table).max;
}

FeResidual check_omega_fe_detail(const OmegaTable& table) {
    const double alpha = dominant_eigenvalue(table.base());
    FeResidual out;
    std::uint64_t argmax_pos = 0;
    for (std::uint64_t pos = 0; pos < table.size(); ++pos) {
        const double res = fe_residual_at(table, pos, alpha);
        if (res > out.max) {
            out.max = res;
            argmax_pos = pos;
        }
    }
    // Reduce the flat position to its canonical (level, index) pair.
    int level = table.depth();
    std::uint64_t index = argmax_pos;
    const auto k = static_cast<std::uint64_t>(table.base());
    while (level > 0 && index % k == 0) {
        index /= k;
        --level;
    }
    out.argmax = RootIndex{level, index};
    return out;
}

WeightCheck check_weight_identity(int k) {
    if (k < 2) {
        throw std::invalid_argument("check_weight_identity: base must be >= 2");
    }
    // (z-1) * sum_{a<k} (a+1) z^a, exactly.
    std::vector<Int> prod(static_cast<std::size_t>(k) + 1);
    for (int a = 0; a < k; ++a) {
        prod[static_cast<std::size_t>(a) + 1] += a + 1; // z * (a+1) z^a
        prod[static_cast<std::size_t>(a)] -= a + 1;     // -1 * (a+1) z^a
    }

    std::vector<Int> expected(static_cast<std::size_t>(k) + 1);
    expected[static_cast<std::size_t>(k)] = k;
    for (int a = 0; a < k; ++a) {
        expected[static_cast<std::size_t>(a)] = -1;
    }

    std::vector<Int> variant(static_cast<std::size_t>(k) + 1);
    variant[static_cast<std::size_t>(k)] = k + 2;
    for (int a = 0; a < k; ++a) {
        variant[static_cast<std::size_t>(a)] = 1;
    }

    WeightCheck out;
    out.holds = (prod == expected);
    out.variant_holds = (prod == variant);
    return out;
}

std::complex<double> omega_radial_estimate(int k, const RootIndex& root, int j, std::size_t order) {
    if (k < 2) {
        throw std::invalid_argument("omega_radial_estimate: base must be >= 2");
    }
    if (root.level < 0 || root.level > max_depth) {
        throw std::invalid_argument("omega_radial_estimate: level must be in [0, 8]");
    }
    if (j < 1 || j > 18) {
        throw std::invalid_argument("omega_radial_estimate: radius index must be in [1, 18]");
    }
    const std::uint64_t den = pow_u64(k, root.level);
    if (root.index >= den) {
        throw std::invalid_argument("omega_radial_estimate: index not below k^level");
    }
    const double z = 1.0 - std::ldexp(1.0, -j);
    if (order == 0) {
        order = radial_order(z);
    }

    const KappaTable table = kappa_range(k, order);
    const auto vals = table.values_u64();

    // Split the series by residue of the root exponent: K(xi z) equals
    // sum_t xi_t * B_t with B_t = sum over n with index*n = t (mod k^level)
    // of kappa(n) z^n. Buckets are real and compensated; the exact unit
    // roots multiply in afterwards.
    std::vector<double> bucket(den, 0.0);
    std::vector<double> comp(den, 0.0);
    double zn = 1.0;
    std::uint64_t t = 0;
    for (std::size_t n = 0; n < order; ++n) {
        const double term = static_cast<double>(vals[n]) * zn;
        const double s = bucket[t] + term;
        if (std::abs(bucket[t]) >= std::abs(term)) {
            comp[t] += (bucket[t] - s) + term;
        } else {
            comp[t] += (term - s) + bucket[t];
        }
        bucket[t] = s;
        zn *= z;
        t += root.index;
        if (t >= den) {
            t -= den;
        }
    }

    std::complex<double> num = 0.0;
    double denom = 0.0;
    for (std::uint64_t r = 0; r < den; ++r) {
        const double b = bucket[r] + comp[r];
        num += unit_root(r, den) * b;
        denom += b;
    }
    return num / denom;
}

std::string to_csv(const OmegaTable& table) {
    const double alpha = dominant_eigenvalue(table.base());
    std::ostringstream out;
    out << "m,j,re_omega,im_omega,fe_residual\n";
    const auto k = static_cast<std::uint64_t>(table.base());
    for (int m = 0; m <= table.depth(); ++m) {
        const std::uint64_t den = pow_u64(table.base(), m);
        const std::uint64_t stride = table.size() / den;
        for (std::uint64_t j = 0; j < den; ++j) {
            if (m > 0 && j % k == 0) {
                continue; // alias of a lower level
            }
            const std::uint64_t pos = j * stride;
            const std::complex<double> v = table.value_at(pos);
            out << m << ',' << j << ',' << io::format_double(v.real()) << ','
                << io::format_double(v.imag()) << ','
                << io::format_double(fe_residual_at(table, pos, alpha)) << '\n';
        }
    }
    return out.str();
}

} // namespace zaremba
