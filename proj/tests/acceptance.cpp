// Acceptance suite: one criterion per check, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include "zaremba/kappa.hpp"
#include "zaremba/linrep.hpp"
#include "zaremba/omega.hpp"
#include "zaremba/series.hpp"
#include "zaremba/spectrum.hpp"
#include "zaremba/sums.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace {

using zaremba::Int;

struct Failure {
    std::string detail;
};

using CriterionFn = std::function<bool(std::string&)>;

// Frozen regression anchors from the first correct run (Release build,
// deterministic order rules); the statements behind them guarantee
// boundedness, not values.
constexpr double frozen_radial_lo = 1.2533678244316218;   // C_est at j = 8
constexpr double frozen_radial_hi = 1.2553756078765839;   // C_est at j = 14
constexpr double frozen_norm_lo = 0.61372696424778694;    // min over [2^10, 2^22]
constexpr double frozen_norm_hi = 0.66731826503164882;    // max over [2^10, 2^22]

bool criterion_three_way(std::string& detail) {
    for (int k = 2; k <= 6; ++k) {
        const zaremba::KappaTable table = zaremba::kappa_range(k, std::size_t{1} << 16);
        const zaremba::LinearRep rep = zaremba::kappa_rep(k);
        for (std::uint64_t n = 0; n < (std::uint64_t{1} << 16); ++n) {
            const zaremba::DigitWord w = zaremba::to_digits(n, k);
            const Int by_table = table.value(n);
            const Int by_matrix = zaremba::eval_word(rep, w);
            const Int by_continuant = zaremba::continuant(w);
            if (by_table != by_matrix || by_table != by_continuant) {
                detail = "disagreement at k=" + std::to_string(k) + ", n=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = "recurrence = matrix product = continuant for n < 2^16, k = 2..6";
    return true;
}

bool criterion_functional_equations(std::string& detail) {
    for (int k = 2; k <= 6; ++k) {
        const zaremba::IntSeries mfe = zaremba::check_mfe(k, 10000);
        if (!mfe.is_zero()) {
            detail = "MFE residual nonzero at k=" + std::to_string(k) +
                     ", z^" + std::to_string(mfe.first_nonzero());
            return false;
        }
        const zaremba::IntSeries hom = zaremba::check_homogeneous(k, 1000);
        if (!hom.is_zero()) {
            detail = "homogeneous residual nonzero at k=" + std::to_string(k) +
                     ", z^" + std::to_string(hom.first_nonzero());
            return false;
        }
    }
    detail = "exact zero residuals, k = 2..6 (orders 10^4 and 10^3)";
    return true;
}

bool criterion_spectrum(std::string& detail) {
    for (int k = 2; k <= 8; ++k) {
        const zaremba::SpectrumReport r = zaremba::char_poly(k);
        if (!r.expansion_consistent) {
            detail = "cubic expansion mismatch at k=" + std::to_string(k);
            return false;
        }
        const double s = static_cast<double>(k) * (k + 1) / 2.0;
        const double quad = r.alpha * r.alpha - s * r.alpha - static_cast<double>(k) * k;
        if (std::abs(quad) >= 1e-9) {
            detail = "alpha root residual " + std::to_string(quad) + " at k=" + std::to_string(k);
            return false;
        }
    }
    if (zaremba::char_poly(2).alpha != 4.0) {
        detail = "alpha_2 != 4 exactly";
        return false;
    }
    detail = "cubic matches symbolically for k = 2..8; alpha_2 = 4 exactly";
    return true;
}

bool criterion_growth(std::string& detail) {
    const zaremba::GrowthReport g = zaremba::growth_report(40);
    for (const zaremba::GrowthRecord& rec : g.records) {
        if (rec.m <= 20) {
            if (!rec.exhaustive) {
                detail = "block m=" + std::to_string(rec.m) + " not scanned exhaustively";
                return false;
            }
            if (rec.argmax != (std::uint64_t{1} << rec.m) - 1) {
                detail = "argmax off the all-ones word at m=" + std::to_string(rec.m) +
                         ": " + std::to_string(rec.argmax);
                return false;
            }
        }
    }
    const zaremba::GrowthRecord& last = g.records.back();
    const double err = std::abs(last.ratio - 0.8535533905932737);
    if (last.m != 40 || err >= 1e-3) {
        detail = "ratio at m=40 off by " + std::to_string(err);
        return false;
    }
    detail = "argmax = 2^m - 1 exhaustively for m <= 20; m=40 ratio within 1e-3 of (2+sqrt 2)/4";
    return true;
}

bool criterion_omega(std::string& detail) {
    const zaremba::OmegaTable t2 = zaremba::build_omega(2, 6);
    if (t2.value(zaremba::RootIndex{0, 0}) != std::complex<double>(1.0, 0.0)) {
        detail = "Omega(1) != 1";
        return false;
    }
    if (std::abs(t2.value(zaremba::RootIndex{1, 1}) - std::complex<double>(-0.25, 0.0)) >= 1e-12) {
        detail = "Omega(-1) != -1/4";
        return false;
    }
    if (std::abs(t2.value(zaremba::RootIndex{2, 1}) -
                 std::complex<double>(-1.0 / 16.0, -2.0 / 16.0)) >= 1e-12) {
        detail = "Omega(i) != -(1+2i)/16";
        return false;
    }
    const double res2 = zaremba::check_omega_fe(t2);
    const double res3 = zaremba::check_omega_fe(zaremba::build_omega(3, 6));
    if (res2 >= 1e-10 || res3 >= 1e-10) {
        detail = "equation residual " + std::to_string(std::max(res2, res3));
        return false;
    }
    for (int k = 2; k <= 12; ++k) {
        const zaremba::WeightCheck w = zaremba::check_weight_identity(k);
        if (!w.holds || w.variant_holds) {
            detail = "weight identity check failed at k=" + std::to_string(k);
            return false;
        }
    }
    detail = "table values, equation residual < 1e-10 (k = 2,3, depth 6), weights k = 2..12";
    return true;
}

bool criterion_radial(std::string& detail) {
    const int j_top = 14;
    const double z_top = 1.0 - std::ldexp(1.0, -j_top);
    const std::size_t top_order = zaremba::radial_order(z_top);
    const zaremba::KappaTable table = zaremba::kappa_range(2, top_order);

    for (int j = 8; j <= 14; ++j) {
        const double z = 1.0 - std::ldexp(1.0, -j);
        const double c = zaremba::c_estimate(table, 2, z, zaremba::radial_order(z));
        if (!(c > 0.0) || c < frozen_radial_lo - 1e-9 || c > frozen_radial_hi + 1e-9) {
            detail = "C_est(j=" + std::to_string(j) + ") = " + std::to_string(c) +
                     " outside frozen band";
            return false;
        }
        const double c_sq = zaremba::c_estimate(table, 2, z * z, zaremba::radial_order(z * z));
        if (std::abs(c_sq / c - 1.0) > 0.05) {
            detail = "C_est periodicity broken at j=" + std::to_string(j);
            return false;
        }
    }

    const double z12 = 1.0 - std::ldexp(1.0, -12);
    const double k_z = zaremba::eval_radial(table, z12, zaremba::radial_order(z12));
    const double k_z2 = zaremba::eval_radial(table, z12 * z12, zaremba::radial_order(z12 * z12));
    if (std::abs(4.0 * k_z2 / k_z - 1.0) > 0.05) {
        detail = "alpha * K(z^2)/K(z) off at j=12: " + std::to_string(4.0 * k_z2 / k_z);
        return false;
    }

    const std::complex<double> est = zaremba::omega_radial_estimate(2, zaremba::RootIndex{1, 1}, 14);
    if (std::abs(est - std::complex<double>(-0.25, 0.0)) > 0.1 * 0.25) {
        detail = "K(-z)/K(z) at j=14 = " + std::to_string(est.real()) + " not near -1/4";
        return false;
    }
    detail = "C_est in frozen band with C(z^2)/C(z) within 5%; iterate ratio within 5%; K(-z)/K(z) near -1/4";
    return true;
}

bool criterion_probe(std::string& detail) {
    const zaremba::RelationBasis b2 = zaremba::relation_probe(2, 2, 8, 200);
    if (!b2.basis.empty()) {
        detail = "unexpected relation for k=2, D=2, d=8, N=200";
        return false;
    }
    const zaremba::RelationBasis b3 = zaremba::relation_probe(3, 2, 6, 200);
    if (!b3.basis.empty()) {
        detail = "unexpected relation for k=3, D=2, d=6, N=200";
        return false;
    }
    if (!zaremba::mfe_control_recovered(2, 3, 100)) {
        detail = "control probe did not recover the functional equation (minimal degree)";
        return false;
    }
    if (!zaremba::mfe_control_recovered(2, 4, 100)) {
        detail = "control probe kernel exceeded the forced shifts at degree 4";
        return false;
    }
    detail = "empty kernels (k=2 and k=3); control recovers the functional equation up to scalar";
    return true;
}

bool criterion_sums_takagi(std::string& detail) {
    const std::uint64_t n_top = std::uint64_t{1} << 22;
    const double gamma = zaremba::critical_exponent(2);
    const zaremba::KappaTable table = zaremba::kappa_range(2, n_top + 1);
    std::uint64_t prev = 0;
    double lo = 1e300;
    double hi = -1e300;
    bool prefix_ok = true;
    std::uint64_t bad_n = 0;
    zaremba::scan_partial_sums(2, n_top, [&](std::uint64_t n, std::uint64_t s) {
        if (prefix_ok && s - prev != table.value_u64(n)) {
            prefix_ok = false;
            bad_n = n;
        }
        prev = s;
        if (n >= (std::uint64_t{1} << 10)) {
            const double norm = static_cast<double>(s) / std::pow(static_cast<double>(n), gamma);
            lo = std::min(lo, norm);
            hi = std::max(hi, norm);
        }
    });
    if (!prefix_ok) {
        detail = "prefix property broken at n=" + std::to_string(bad_n);
        return false;
    }
    if (!(lo > 0.0) || lo < frozen_norm_lo - 1e-9 || hi > frozen_norm_hi + 1e-9) {
        detail = "normalized sums left the frozen band: [" + std::to_string(lo) + ", " +
                 std::to_string(hi) + "]";
        return false;
    }

    const std::size_t samples = 1024;
    const auto g8 = zaremba::oscillation_profile(2, 8, samples);
    const auto g9 = zaremba::oscillation_profile(2, 9, samples);
    const auto g15 = zaremba::oscillation_profile(2, 15, samples);
    const auto g16 = zaremba::oscillation_profile(2, 16, samples);
    double gap89 = 0.0;
    double gap1516 = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        gap89 = std::max(gap89, std::abs(g8[i].g - g9[i].g));
        gap1516 = std::max(gap1516, std::abs(g15[i].g - g16[i].g));
    }
    if (!(gap1516 < gap89)) {
        detail = "profile gaps not converging: " + std::to_string(gap1516) + " vs " +
                 std::to_string(gap89);
        return false;
    }

    const double tol = 1e-12;
    if (zaremba::takagi(0.0, tol).value != 0.0 ||
        std::abs(zaremba::takagi(0.5, tol).value - 0.5) >= tol ||
        std::abs(zaremba::takagi(1.0 / 3.0, tol).value - 2.0 / 3.0) >= tol) {
        detail = "takagi anchor values off";
        return false;
    }
    std::mt19937_64 rng(20240229);
    for (int i = 0; i < 1000; ++i) {
        const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double tx = zaremba::takagi(x, tol).value;
        if (std::abs(tx - zaremba::takagi(1.0 - x, tol).value) > 2.0 * tol) {
            detail = "takagi symmetry broken at x=" + std::to_string(x);
            return false;
        }
        const double dist = std::min(x, 1.0 - x);
        const double two_x = 2.0 * x;
        const double frac = two_x - std::floor(two_x);
        if (std::abs(tx - (dist + zaremba::takagi(frac, tol).value / 2.0)) > 2.0 * tol) {
            detail = "takagi self-affinity broken at x=" + std::to_string(x);
            return false;
        }
    }
    detail = "prefix sums exact to 2^22; normalized in frozen band; profile gaps shrink; takagi checks";
    return true;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, CriterionFn>> criteria = {
        {"three-way oracle agreement", criterion_three_way},
        {"functional equations exact", criterion_functional_equations},
        {"spectrum", criterion_spectrum},
        {"dyadic extremal facts", criterion_growth},
        {"omega table", criterion_omega},
        {"radial asymptotics", criterion_radial},
        {"relation probe", criterion_probe},
        {"sums and takagi", criterion_sums_takagi},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].second(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu: %s — %s: %s (%.2f s)\n", i + 1, ok ? "PASS" : "FAIL",
                    criteria[i].first.c_str(), detail.c_str(), secs);
        std::fflush(stdout);
        failures += ok ? 0 : 1;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
