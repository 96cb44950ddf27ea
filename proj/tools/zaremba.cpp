// Command line front end: exact continuant-sequence computations, functional
// equation checks, spectral and radial reports, and plot-data exports.
//
// Exit codes: 0 success, 1 failed mathematical check (or runtime failure),
// 2 usage error.

#include "zaremba/errors.hpp"
#include "zaremba/io.hpp"
#include "zaremba/kappa.hpp"
#include "zaremba/linrep.hpp"
#include "zaremba/omega.hpp"
#include "zaremba/series.hpp"
#include "zaremba/spectrum.hpp"
#include "zaremba/sums.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

json base_report(const std::string& command) {
    json j;
    j["schema_version"] = 1;
    j["command"] = command;
    return j;
}

// Artifact writer honoring the output format choice: CSV keeps the
// per-module column contract, JSON stores the report (which carries the
// same rows) as a schema-versioned document.
void write_artifact(const std::string& path, const std::string& format, const std::string& csv,
                    const json& report) {
    if (format == "json") {
        zaremba::io::atomic_write_text(path, report.dump() + "\n");
    } else {
        zaremba::io::atomic_write_text(path, csv);
    }
}

void emit(const json& report, bool as_json, const std::string& text) {
    if (as_json) {
        std::cout << report.dump() << '\n';
    } else if (!text.empty()) {
        std::cout << text;
    }
}

struct KappaOpts {
    std::string format = "csv";
    int k = 2;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> range;
    std::optional<int> growth;
    std::string out;
    bool as_json = false;
};

int run_kappa(const KappaOpts& opt) {
    json report = base_report("kappa");
    report["k"] = opt.k;
    std::string text;

    if (opt.n) {
        const zaremba::Int value = zaremba::eval_rep(zaremba::kappa_rep(opt.k), *opt.n);
        report["n"] = *opt.n;
        report["value"] = value.str();
        text = value.str() + "\n";
    } else if (opt.range) {
        const zaremba::KappaTable table = zaremba::kappa_range(opt.k, *opt.range);
        std::string csv = "n,kappa\n";
        json values = json::array();
        for (std::uint64_t i = 0; i < *opt.range; ++i) {
            const std::string v = table.value(i).str();
            csv += std::to_string(i) + "," + v + "\n";
            values.push_back(v);
        }
        report["values"] = std::move(values);
        if (!opt.out.empty()) {
            write_artifact(opt.out, opt.format, csv, report);
            text = "wrote " + opt.out + "\n";
        } else {
            text = csv;
        }
    } else if (opt.growth) {
        if (opt.k != 2) {
            throw std::invalid_argument("kappa --growth: the extremal report is defined for k = 2");
        }
        const zaremba::GrowthReport g = zaremba::growth_report(*opt.growth);
        json records = json::array();
        std::string csv = "m,argmax,max,ratio,exhaustive\n";
        for (const auto& r : g.records) {
            csv += std::to_string(r.m) + "," + std::to_string(r.argmax) + "," +
                   std::to_string(r.max_value) + "," + zaremba::io::format_double(r.ratio) + "," +
                   (r.exhaustive ? "1" : "0") + "\n";
            records.push_back({{"m", r.m},
                               {"argmax", r.argmax},
                               {"max", r.max_value},
                               {"ratio", r.ratio},
                               {"exhaustive", r.exhaustive}});
        }
        report["records"] = std::move(records);
        report["limit"] = g.limit;
        if (!opt.out.empty()) {
            write_artifact(opt.out, opt.format, csv, report);
            text = "wrote " + opt.out + "\n";
        } else {
            text = csv + "limit " + zaremba::io::format_double(g.limit) + "\n";
        }
    } else {
        throw std::invalid_argument("kappa: one of --n, --range, --growth is required");
    }
    emit(report, opt.as_json, text);
    return exit_ok;
}

struct SeriesCheckOpts {
    int k = 2;
    std::uint64_t order = 10000;
    std::uint64_t hom_order = 1000;
    bool as_json = false;
};

int run_series_check(const SeriesCheckOpts& opt) {
    json report = base_report("series-check");
    report["k"] = opt.k;
    report["order"] = opt.order;
    report["homogeneous_order"] = opt.hom_order;

    const zaremba::IntSeries mfe = zaremba::check_mfe(opt.k, opt.order);
    const zaremba::IntSeries hom = zaremba::check_homogeneous(opt.k, opt.hom_order);
    const bool mfe_zero = mfe.is_zero();
    const bool hom_zero = hom.is_zero();
    report["mfe_zero"] = mfe_zero;
    report["homogeneous_zero"] = hom_zero;

    std::string text;
    if (mfe_zero) {
        text += "MFE residual: 0 (order " + std::to_string(opt.order) + ")\n";
    } else {
        const std::size_t at = mfe.first_nonzero();
        report["mfe_first_nonzero"] = {{"index", at}, {"value", mfe[at].str()}};
        text += "MFE residual: nonzero at z^" + std::to_string(at) + " = " + mfe[at].str() + "\n";
    }
    if (hom_zero) {
        text += "homogeneous residual: 0 (order " + std::to_string(opt.hom_order) + ")\n";
    } else {
        const std::size_t at = hom.first_nonzero();
        report["homogeneous_first_nonzero"] = {{"index", at}, {"value", hom[at].str()}};
        text += "homogeneous residual: nonzero at z^" + std::to_string(at) + " = " + hom[at].str() + "\n";
    }
    emit(report, opt.as_json, text);
    return (mfe_zero && hom_zero) ? exit_ok : exit_check_failed;
}

struct SpectrumOpts {
    std::string format = "csv";
    int k = 2;
    int j_max = 12;
    std::string out;
    bool as_json = false;
};

int run_spectrum(const SpectrumOpts& opt) {
    json report = base_report("spectrum");
    const zaremba::SpectrumReport s = zaremba::char_poly(opt.k);
    report["k"] = opt.k;
    report["lead"] = s.lead.str();
    json chi = json::array();
    for (const auto& c : s.chi_monic) {
        chi.push_back(c.str());
    }
    report["chi_monic_ascending"] = std::move(chi);
    report["expansion_consistent"] = s.expansion_consistent;
    report["alpha"] = s.alpha;
    report["minor_root"] = s.minor_root;
    report["gamma"] = s.gamma;

    std::string text = "chi(x) = " + s.lead.str() + " * (x^3";
    text += (s.chi_monic[2] >= 0 ? " + " : " - ") + zaremba::Int(abs(s.chi_monic[2])).str() + " x^2";
    text += (s.chi_monic[1] >= 0 ? " + " : " - ") + zaremba::Int(abs(s.chi_monic[1])).str() + " x";
    text += (s.chi_monic[0] >= 0 ? " + " : " - ") + zaremba::Int(abs(s.chi_monic[0])).str() + ")\n";
    text += "roots: 1, " + zaremba::io::format_double(s.alpha) + ", " +
            zaremba::io::format_double(s.minor_root) + "\n";
    text += "alpha = " + zaremba::io::format_double(s.alpha) +
            ", gamma = " + zaremba::io::format_double(s.gamma) + "\n";

    const zaremba::RadialProfile profile = zaremba::radial_profile(opt.k, opt.j_max);
    json points = json::array();
    for (const auto& p : profile.points) {
        points.push_back({{"j", p.j},
                          {"z", p.z},
                          {"order", p.order},
                          {"K", p.value},
                          {"C_est", p.c_estimate}});
    }
    report["radial"] = std::move(points);
    if (!opt.out.empty()) {
        write_artifact(opt.out, opt.format, zaremba::to_csv(profile), report);
        text += "wrote " + opt.out + "\n";
    } else {
        text += zaremba::to_csv(profile);
    }
    if (!s.expansion_consistent) {
        emit(report, opt.as_json, text);
        return exit_check_failed;
    }
    emit(report, opt.as_json, text);
    return exit_ok;
}

struct OmegaOpts {
    std::string format = "csv";
    int k = 2;
    int depth = 5;
    double fe_tol = 1e-10;
    std::string out;
    bool as_json = false;
};

int run_omega(const OmegaOpts& opt) {
    json report = base_report("omega");
    report["k"] = opt.k;
    report["depth"] = opt.depth;

    const zaremba::OmegaTable table = zaremba::build_omega(opt.k, opt.depth);
    const zaremba::FeResidual residual = zaremba::check_omega_fe_detail(table);
    const zaremba::WeightCheck weights = zaremba::check_weight_identity(opt.k);
    report["fe_max_residual"] = residual.max;
    report["fe_argmax"] = {{"m", residual.argmax.level}, {"j", residual.argmax.index}};
    report["fe_tol"] = opt.fe_tol;
    report["weight_identity"] = weights.holds;
    report["weight_variant"] = weights.variant_holds;

    std::string text = "omega table: depth " + std::to_string(opt.depth) + ", " +
                       std::to_string(table.size()) + " roots\n";
    text += "functional equation max residual: " + zaremba::io::format_double(residual.max) +
            " at root (m=" + std::to_string(residual.argmax.level) +
            ", j=" + std::to_string(residual.argmax.index) + ")\n";
    text += std::string("weight identity: ") + (weights.holds ? "ok" : "FAILED") +
            "; alternative form: " + (weights.variant_holds ? "unexpectedly holds" : "rejected") + "\n";
    if (!opt.out.empty()) {
        if (opt.format == "json") {
            // mirror the CSV columns in the report before writing it out
            json roots = json::array();
            for (int m = 0; m <= table.depth(); ++m) {
                std::uint64_t den = 1;
                for (int i = 0; i < m; ++i) {
                    den *= static_cast<std::uint64_t>(opt.k);
                }
                for (std::uint64_t j = 0; j < den; ++j) {
                    if (m > 0 && j % static_cast<std::uint64_t>(opt.k) == 0) {
                        continue;
                    }
                    const auto v = table.value(zaremba::RootIndex{m, j});
                    roots.push_back({{"m", m}, {"j", j}, {"re", v.real()}, {"im", v.imag()}});
                }
            }
            report["roots"] = std::move(roots);
        }
        write_artifact(opt.out, opt.format, zaremba::to_csv(table), report);
        text += "wrote " + opt.out + "\n";
    }
    emit(report, opt.as_json, text);
    const bool ok = residual.max <= opt.fe_tol && weights.holds && !weights.variant_holds;
    return ok ? exit_ok : exit_check_failed;
}

struct SumsOpts {
    std::string format = "csv";
    int k = 2;
    std::uint64_t n_max = 1 << 16;
    std::uint64_t lo = 1;
    std::string out;
    std::optional<int> profile_level;
    std::size_t samples = 1024;
    std::string profile_out;
    bool as_json = false;
};

int run_sums(const SumsOpts& opt) {
    json report = base_report("sums");
    report["k"] = opt.k;
    report["n_max"] = opt.n_max;

    const zaremba::SumProfile profile = zaremba::partial_sums_window(opt.k, opt.lo, opt.n_max);
    double lo = profile.entries.front().normalized;
    double hi = lo;
    for (const auto& e : profile.entries) {
        lo = std::min(lo, e.normalized);
        hi = std::max(hi, e.normalized);
    }
    report["gamma"] = profile.gamma;
    report["normalized_min"] = lo;
    report["normalized_max"] = hi;
    report["last_S"] = profile.entries.back().s;

    std::string text = "S(" + std::to_string(opt.n_max) + ") = " + std::to_string(profile.entries.back().s) +
                       ", normalized in [" + zaremba::io::format_double(lo) + ", " +
                       zaremba::io::format_double(hi) + "]\n";
    if (!opt.out.empty()) {
        if (opt.format == "json") {
            json entries = json::array();
            for (const auto& e : profile.entries) {
                entries.push_back({{"N", e.n}, {"S", std::to_string(e.s)}, {"normalized", e.normalized}});
            }
            report["entries"] = std::move(entries);
        }
        write_artifact(opt.out, opt.format, zaremba::to_csv(profile), report);
        text += "wrote " + opt.out + "\n";
    }
    if (opt.profile_level) {
        const auto pts = zaremba::oscillation_profile(opt.k, *opt.profile_level, opt.samples);
        report["profile_level"] = *opt.profile_level;
        report["profile_samples"] = pts.size();
        if (!opt.profile_out.empty()) {
            zaremba::io::atomic_write_text(opt.profile_out, zaremba::to_csv(pts));
            text += "wrote " + opt.profile_out + "\n";
        }
    }
    emit(report, opt.as_json, text);
    return exit_ok;
}

struct TakagiOpts {
    std::string format = "csv";
    std::optional<double> x;
    double tol = 1e-12;
    std::optional<std::size_t> grid;
    std::string out;
    bool as_json = false;
};

int run_takagi(const TakagiOpts& opt) {
    json report = base_report("takagi");
    report["tol"] = opt.tol;
    std::string text;
    if (opt.x) {
        const zaremba::TakagiSample s = zaremba::takagi(*opt.x, opt.tol);
        report["x"] = s.x;
        report["value"] = s.value;
        report["terms"] = s.terms;
        text = zaremba::io::format_double(s.value) + "\n";
    } else if (opt.grid) {
        const auto grid = zaremba::takagi_grid(*opt.grid, opt.tol);
        report["samples"] = grid.size();
        const std::string csv = zaremba::to_csv(grid);
        if (!opt.out.empty()) {
            if (opt.format == "json") {
                json rows = json::array();
                for (const auto& s : grid) {
                    rows.push_back({{"x", s.x}, {"tau", s.value}});
                }
                report["grid"] = std::move(rows);
            }
            write_artifact(opt.out, opt.format, csv, report);
            text = "wrote " + opt.out + "\n";
        } else {
            text = csv;
        }
    } else {
        throw std::invalid_argument("takagi: one of --x, --grid is required");
    }
    emit(report, opt.as_json, text);
    return exit_ok;
}

struct ProbeOpts {
    int k = 2;
    int deg = 2;
    int poly_deg = 8;
    std::uint64_t order = 200;
    bool control = false;
    bool as_json = false;
};

int run_probe(const ProbeOpts& opt) {
    json report = base_report("probe");
    report["k"] = opt.k;

    if (opt.control) {
        const int d = std::max(opt.poly_deg, opt.k * opt.k - 1);
        const auto basis = zaremba::mfe_control_probe(opt.k, d, opt.order);
        const bool recovered = zaremba::mfe_control_recovered(opt.k, d, opt.order);
        report["control"] = true;
        report["relations_found"] = basis.size();
        report["recovered_functional_equation"] = recovered;
        std::string text = "relations found: " + std::to_string(basis.size()) + "\n";
        text += std::string("functional equation recovered up to scalar: ") + (recovered ? "yes" : "NO") + "\n";
        emit(report, opt.as_json, text);
        return recovered ? exit_ok : exit_check_failed;
    }

    const zaremba::RelationBasis basis = zaremba::relation_probe(opt.k, opt.deg, opt.poly_deg, opt.order);
    report["degree_bound"] = opt.deg;
    report["poly_degree"] = opt.poly_deg;
    report["order"] = opt.order;
    report["relations_found"] = basis.basis.size();
    std::string text = "relations found: " + std::to_string(basis.basis.size()) + "\n";
    if (opt.as_json) {
        report["basis"] = json::parse(zaremba::to_json(basis))["basis"];
    } else if (!basis.basis.empty()) {
        text += "first relation: " + zaremba::to_json(basis) + "\n";
    }
    emit(report, opt.as_json, text);
    return basis.basis.empty() ? exit_ok : exit_check_failed;
}

struct CompareOpts {
    std::string format = "csv";
    int k = 2;
    int level = 15;
    std::size_t samples = 1024;
    double tol = 1e-12;
    std::string out = "comparison.csv";
    bool as_json = false;
};

int run_compare(const CompareOpts& opt) {
    json report = base_report("compare");
    report["k"] = opt.k;
    report["level"] = opt.level;
    report["samples"] = opt.samples;

    const auto profile = zaremba::oscillation_profile(opt.k, opt.level, opt.samples);
    const auto grid = zaremba::takagi_grid(opt.samples, opt.tol);
    if (opt.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            rows.push_back({{"x", grid[i].x}, {"norm_sum", profile[i].g}, {"takagi", grid[i].value}});
        }
        report["rows"] = std::move(rows);
        zaremba::io::atomic_write_text(opt.out, report.dump() + "\n");
    } else {
        zaremba::export_comparison(profile, grid, opt.out);
    }
    report["out"] = opt.out;
    emit(report, opt.as_json, "wrote " + opt.out + "\n");
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuant sequence toolkit: exact kappa tables, functional equation checks,\n"
                 "spectral data, oscillation values on roots of unity, and plot-data exports"};
    app.require_subcommand(1);

    KappaOpts kappa_opts;
    auto* kappa_cmd = app.add_subcommand("kappa", "evaluate kappa or dyadic growth statistics");
    kappa_cmd->add_option("--k", kappa_opts.k, "base (>= 2)")->capture_default_str();
    kappa_cmd->add_option("--n", kappa_opts.n, "print kappa(n)");
    kappa_cmd->add_option("--range", kappa_opts.range, "emit kappa(0..N-1) as CSV");
    kappa_cmd->add_option("--growth", kappa_opts.growth, "growth report up to block exponent m (k=2)");
    kappa_cmd->add_option("--out", kappa_opts.out, "output path (atomic write)");
    kappa_cmd->add_option("--format", kappa_opts.format, "artifact format")
        ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    kappa_cmd->add_flag("--json", kappa_opts.as_json, "machine-readable report");

    SeriesCheckOpts series_opts;
    auto* series_cmd = app.add_subcommand("series-check", "verify the functional equations exactly");
    series_cmd->add_option("--k", series_opts.k, "base (>= 2)")->capture_default_str();
    series_cmd->add_option("--order", series_opts.order, "truncation order")->capture_default_str();
    series_cmd->add_option("--homogeneous-order", series_opts.hom_order, "order for the four-iterate check")
        ->capture_default_str();
    series_cmd->add_flag("--json", series_opts.as_json, "machine-readable report");

    SpectrumOpts spectrum_opts;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "characteristic polynomial and radial profile");
    spectrum_cmd->add_option("--k", spectrum_opts.k, "base (>= 2)")->capture_default_str();
    spectrum_cmd->add_option("--j-max", spectrum_opts.j_max, "finest radius 1 - 2^-j")->capture_default_str();
    spectrum_cmd->add_option("--out", spectrum_opts.out, "radial profile CSV path");
    spectrum_cmd->add_option("--format", spectrum_opts.format, "artifact format")
        ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    spectrum_cmd->add_flag("--json", spectrum_opts.as_json, "machine-readable report");

    OmegaOpts omega_opts;
    auto* omega_cmd = app.add_subcommand("omega", "oscillation values on k^m-th roots of unity");
    omega_cmd->add_option("--k", omega_opts.k, "base (>= 2)")->capture_default_str();
    omega_cmd->add_option("--depth", omega_opts.depth, "max level m (<= 8)")->capture_default_str();
    omega_cmd->add_option("--fe-tol", omega_opts.fe_tol, "residual gate")->capture_default_str();
    omega_cmd->add_option("--out", omega_opts.out, "table CSV path");
    omega_cmd->add_option("--format", omega_opts.format, "artifact format")
        ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    omega_cmd->add_flag("--json", omega_opts.as_json, "machine-readable report");

    SumsOpts sums_opts;
    auto* sums_cmd = app.add_subcommand("sums", "partial sums and the oscillation profile");
    sums_cmd->add_option("--k", sums_opts.k, "base (>= 2)")->capture_default_str();
    sums_cmd->add_option("--n-max", sums_opts.n_max, "largest N")->capture_default_str();
    sums_cmd->add_option("--lo", sums_opts.lo, "window start")->capture_default_str();
    sums_cmd->add_option("--out", sums_opts.out, "sums CSV path");
    sums_cmd->add_option("--profile-level", sums_opts.profile_level, "resample level m (>= 4)");
    sums_cmd->add_option("--samples", sums_opts.samples, "profile sample count")->capture_default_str();
    sums_cmd->add_option("--profile-out", sums_opts.profile_out, "profile CSV path");
    sums_cmd->add_option("--format", sums_opts.format, "artifact format")
        ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sums_cmd->add_flag("--json", sums_opts.as_json, "machine-readable report");

    TakagiOpts takagi_opts;
    auto* takagi_cmd = app.add_subcommand("takagi", "evaluate the Takagi function");
    takagi_cmd->add_option("--x", takagi_opts.x, "point in [0, 1]");
    takagi_cmd->add_option("--tol", takagi_opts.tol, "tail tolerance")->capture_default_str();
    takagi_cmd->add_option("--grid", takagi_opts.grid, "sample count over [0, 1]");
    takagi_cmd->add_option("--out", takagi_opts.out, "grid CSV path");
    takagi_cmd->add_option("--format", takagi_opts.format, "artifact format")
        ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    takagi_cmd->add_flag("--json", takagi_opts.as_json, "machine-readable report");

    ProbeOpts probe_opts;
    auto* probe_cmd = app.add_subcommand("probe", "search for polynomial relations among iterates");
    probe_cmd->add_option("--k", probe_opts.k, "base (>= 2)")->capture_default_str();
    probe_cmd->add_option("--deg", probe_opts.deg, "total degree bound in the unknowns")->capture_default_str();
    probe_cmd->add_option("--poly-deg", probe_opts.poly_deg, "polynomial coefficient degree bound")
        ->capture_default_str();
    probe_cmd->add_option("--order", probe_opts.order, "truncation order")->capture_default_str();
    probe_cmd->add_flag("--control", probe_opts.control, "positive control: recover the functional equation");
    probe_cmd->add_flag("--json", probe_opts.as_json, "machine-readable report");

    CompareOpts compare_opts;
    auto* compare_cmd = app.add_subcommand("compare", "side-by-side profile and Takagi CSV");
    compare_cmd->add_option("--k", compare_opts.k, "base (>= 2)")->capture_default_str();
    compare_cmd->add_option("--level", compare_opts.level, "resample level m")->capture_default_str();
    compare_cmd->add_option("--samples", compare_opts.samples, "grid length")->capture_default_str();
    compare_cmd->add_option("--tol", compare_opts.tol, "Takagi tail tolerance")->capture_default_str();
    compare_cmd->add_option("--out", compare_opts.out, "output CSV path")->capture_default_str();
    compare_cmd->add_option("--format", compare_opts.format, "artifact format")
        ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    compare_cmd->add_flag("--json", compare_opts.as_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << app.help() << std::flush;
        return exit_usage;
    }

    try {
        if (kappa_cmd->parsed()) {
            return run_kappa(kappa_opts);
        }
        if (series_cmd->parsed()) {
            return run_series_check(series_opts);
        }
        if (spectrum_cmd->parsed()) {
            return run_spectrum(spectrum_opts);
        }
        if (omega_cmd->parsed()) {
            return run_omega(omega_opts);
        }
        if (sums_cmd->parsed()) {
            return run_sums(sums_opts);
        }
        if (takagi_cmd->parsed()) {
            return run_takagi(takagi_opts);
        }
        if (probe_cmd->parsed()) {
            return run_probe(probe_opts);
        }
        if (compare_cmd->parsed()) {
            return run_compare(compare_opts);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n' << app.help() << std::flush;
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}
