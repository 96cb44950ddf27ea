#include "zaremba/spectrum.hpp"

#include "zaremba/errors.hpp"
#include "zaremba/io.hpp"
#include "zaremba/resource.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace zaremba {

namespace {

constexpr std::size_t max_radial_order = std::size_t{1} << 24;

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

} // namespace

SpectrumReport char_poly(int k) {
    if (k < 2) {
        throw std::invalid_argument("char_poly: base must be >= 2, got " + std::to_string(k));
    }
    const Int s = Int(k) * (k + 1) / 2;
    const Int k2 = Int(k) * k;

    SpectrumReport r;
    r.k = k;
    r.lead = -Int(k);
    // x^3 - (s+1) x^2 - (k^2 - s) x + k^2, ascending
    r.chi_monic = {k2, -(k2 - s), -(s + 1), Int(1)};

    // Re-expand -k (x-1)(x^2 - s x - k^2) and compare with lead * chi_monic.
    const std::vector<Int> factored =
        poly_mul({Int(-1), Int(1)}, {-k2, -s, Int(1)});
    r.expansion_consistent = true;
    for (std::size_t i = 0; i < 4; ++i) {
        if (r.lead * factored[i] != r.lead * r.chi_monic[i]) {
            r.expansion_consistent = false;
        }
    }

    const double sd = static_cast<double>(s);
    const double disc = std::sqrt(sd * sd + 4.0 * static_cast<double>(k) * k);
    r.alpha = (sd + disc) / 2.0;
    r.minor_root = (sd - disc) / 2.0;
    r.gamma = std::log(r.alpha) / std::log(static_cast<double>(k));
    return r;
}

double dominant_eigenvalue(int k) {
    return char_poly(k).alpha;
}

double critical_exponent(int k) {
    return char_poly(k).gamma;
}

std::size_t radial_order(double z) {
    if (!(z > 0.0 && z < 1.0)) {
        throw std::invalid_argument("radial_order: z must lie in (0, 1)");
    }
    const double n = std::ceil(40.0 / (1.0 - z));
    if (n > static_cast<double>(max_radial_order)) {
        throw resource_error("radial_order: required order " + io::format_double(n) +
                             " exceeds cap " + std::to_string(max_radial_order));
    }
    return static_cast<std::size_t>(n);
}

double eval_radial(const KappaTable& table, double z, std::size_t order) {
    if (order > table.size()) {
        throw std::invalid_argument("eval_radial: order exceeds table size");
    }
    const auto vals = table.values_u64();
    // Neumaier compensated summation; terms are kappa(n) z^n with a running
    // power to avoid per-term pow calls.
    double sum = 0.0;
    double comp = 0.0;
    double zn = 1.0;
    for (std::size_t n = 0; n < order; ++n) {
        const double term = static_cast<double>(vals[n]) * zn;
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        zn *= z;
    }
    return sum + comp;
}

double eval_radial(int k, double z, std::size_t order) {
    if (order > max_radial_order) {
        throw resource_error("eval_radial: order exceeds cap");
    }
    return eval_radial(kappa_range(k, order), z, order);
}

double eval_radial(int k, double z) {
    return eval_radial(k, z, radial_order(z));
}

double c_estimate(const KappaTable& table, int k, double z, std::size_t order) {
    return eval_radial(table, z, order) * std::pow(1.0 - z, critical_exponent(k));
}

double c_estimate(int k, double z) {
    const std::size_t order = radial_order(z);
    return c_estimate(kappa_range(k, order), k, z, order);
}

RadialProfile radial_profile(int k, int j_max) {
    if (j_max < 2 || j_max > 18) {
        throw std::invalid_argument("radial_profile: j_max must be in [2, 18], got " +
                                    std::to_string(j_max));
    }
    RadialProfile profile;
    profile.k = k;
    profile.gamma = critical_exponent(k);

    const double z_top = 1.0 - std::ldexp(1.0, -j_max);
    const std::size_t max_order = radial_order(z_top);
    const KappaTable table = kappa_range(k, max_order);

    for (int j = 2; j <= j_max; ++j) {
        RadialPoint p;
        p.j = j;
        p.z = 1.0 - std::ldexp(1.0, -j);
        p.order = radial_order(p.z);
        p.value = eval_radial(table, p.z, p.order);
        p.c_estimate = p.value * std::pow(1.0 - p.z, profile.gamma);
        profile.points.push_back(p);
    }
    return profile;
}

double check_scaling(int k, int m, int j) {
    if (k < 2 || m < 1 || m > 3 || j < 1 || j > 16) {
        throw std::invalid_argument("check_scaling: need k >= 2, m in [1,3], j in [1,16]");
    }
    const double z = 1.0 - std::ldexp(1.0, -j);
    const double gamma = critical_exponent(k);
    const double alpha = dominant_eigenvalue(k);
    double zkm = z;
    for (int i = 0; i < m; ++i) {
        double p = 1.0;
        for (int a = 0; a < k; ++a) {
            p *= zkm;
        }
        zkm = p;
    }
    const double lhs = std::pow(1.0 - zkm, gamma);
    const double rhs = std::pow(1.0 - z, gamma) * std::pow(alpha, m);
    return std::abs(lhs / rhs - 1.0);
}

std::string to_csv(const RadialProfile& profile) {
    std::ostringstream out;
    out << "j,z,order,K,C_est\n";
    for (const RadialPoint& p : profile.points) {
        out << p.j << ',' << io::format_double(p.z) << ',' << p.order << ','
            << io::format_double(p.value) << ',' << io::format_double(p.c_estimate) << '\n';
    }
    return out.str();
}

} // namespace zaremba
