// chaoskit — experiment CLI over the discrete Clark-Ocone toolkit.
// Subcommands write CSV artifacts plus a rerunnable manifest; exit codes:
// 0 success, 2 validation error, 3 numerical-guard failure.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chaoskit/asymptotics.hpp"
#include "chaoskit/clark_ocone.hpp"
#include "chaoskit/clt_lab.hpp"
#include "chaoskit/functionals.hpp"
#include "chaoskit/gaussian_space.hpp"
#include "chaoskit/io.hpp"

namespace fs = std::filesystem;
using namespace chaoskit;

namespace {

struct CommonOpts {
    std::string payoff = "power:2";
    double T = 1.0;
    std::string n_list = "2,4,8,16";
    long long N = 0;
    int n_max = 0;  // 0 = per-payoff default
    long long k_max = 2001;
    int quad_order = 64;
    int p_max = 1;
    long long samples = 100000;
    long long seed = 7;
    int grid_points = 257;
    std::string method = "spread";
    std::string out = "out";
};

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->option_defaults()->always_capture_default(true);
    sub->add_option("--payoff", o.payoff, "Payoff grammar: heaviside | call:<K> | power:<p> | sin");
    sub->add_option("--T", o.T, "Time horizon");
    sub->add_option("--N-list", o.n_list, "Comma list or geometric doubling range a..b");
    sub->add_option("--N", o.N, "Single N (overrides --N-list)");
    sub->add_option("--n-max", o.n_max, "Chaos truncation degree (0 = payoff default)");
    sub->add_option("--k-max", o.k_max, "Occupation chaos cutoff");
    sub->add_option("--quad-order", o.quad_order, "Gauss-Hermite order");
    sub->add_option("--p-max", o.p_max, "Highest error level");
    sub->add_option("--samples", o.samples, "Monte Carlo sample count");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--grid-points", o.grid_points, "Trapezoid nodes for limit variances");
    sub->add_option("--method", o.method, "chaos projection: spread | quad");
    sub->add_option("--out", o.out, "Output directory");
}

std::vector<long long> n_values(const CommonOpts& o) {
    if (o.N > 0) return {o.N};
    return parse_n_list(o.n_list);
}

void write_manifest(CLI::App* sub, const CommonOpts& o, double wall_ms) {
    std::ofstream m(fs::path(o.out) / "manifest.txt");
    m << "# chaoskit " << kVersion << " manifest\n";
    m << "# command: " << sub->get_name() << "\n";
    m << "# wall-time-ms: " << wall_ms << "\n";
    m << "[" << sub->get_name() << "]\n";
    m << sub->config_to_str(true, false);
}

int default_n_max(const Payoff& p) {
    switch (p.kind) {
        case Payoff::Kind::power: return static_cast<int>(p.param);
        case Payoff::Kind::sine: return 60;
        default: return 400;
    }
}

void write_fit(const std::string& path, const ErrorReport& rep) {
    CsvWriter fit(path);
    fit.header({"scope", "slope", "intercept", "max_residual"});
    fit.field(std::string("half")).field(rep.slope).field(rep.intercept).field(rep.max_residual);
    fit.endrow();
    fit.field(std::string("full"))
        .field(rep.slope_full)
        .field(rep.intercept_full)
        .field(rep.max_residual_full);
    fit.endrow();
}

void run_chaos(const CommonOpts& o) {
    Payoff payoff = parse_payoff(o.payoff);
    long long N = o.N > 0 ? o.N : n_values(o).front();
    TimeGrid grid(static_cast<int>(N), o.T);
    int n_max = o.n_max > 0 ? o.n_max : std::min(default_n_max(payoff), 8);
    ChaosSpectrum spec =
        o.method == "quad"
            ? project_chaos(FunctionalSpec::terminal(payoff), grid, n_max, o.quad_order)
            : terminal_spectrum(payoff, grid, n_max);
    std::ofstream f(fs::path(o.out) / "spectrum.csv");
    f << spec.to_csv();
    std::cout << "spectrum: " << spec.size() << " coefficients, |X|^2 = " << spec.l2_squared()
              << "\n";
}

void run_error_rate(const CommonOpts& o) {
    Payoff payoff = parse_payoff(o.payoff);
    std::vector<RatePoint> pts;
    for (long long N : n_values(o)) {
        ErrorNorm1d e;
        if (payoff.kind == Payoff::Kind::heaviside && o.n_max == 0) {
            e = heaviside_error_norm_1d(static_cast<int>(N), 0.01);
        } else {
            int n_max = o.n_max > 0 ? o.n_max : default_n_max(payoff);
            OneDimCoeffs a = coeffs_1d(payoff, o.T, n_max, o.quad_order);
            e = error_norm_1d(a, static_cast<int>(N));
        }
        // nan marks a truncated-but-uncertified tail in the CSV
        pts.push_back({N, e.value,
                       e.certified ? e.tail_bound : std::numeric_limits<double>::quiet_NaN()});
    }
    CsvWriter rate((fs::path(o.out) / "rate.csv").string());
    rate.header({"N", "err_sq", "tail_bound"});
    for (const auto& p : pts) {
        rate.field(p.N).field(p.err_sq).field(p.tail_bound);
        rate.endrow();
    }
    if (pts.size() >= 3) {
        ErrorReport rep = rate_fit(pts);
        write_fit((fs::path(o.out) / "fit.csv").string(), rep);
        std::cout << "slope (largest half): " << rep.slope << "  slope (full): " << rep.slope_full
                  << "\n";
    }
}

void run_occupation(const CommonOpts& o) {
    std::vector<RatePoint> pts;
    CsvWriter ztab((fs::path(o.out) / "z_table.csv").string());
    ztab.header({"N", "k", "z", "bound"});
    for (long long N : n_values(o)) {
        OccupationError e = occupation_error_norm(static_cast<int>(N), o.T, o.k_max);
        pts.push_back({N, e.value, e.tail_bound});
        for (long long k = 2; k <= o.k_max; ++k) {
            ztab.field(N)
                .field(k)
                .field(z_nk(static_cast<int>(N), static_cast<int>(k), o.T))
                .field(9.0 * o.T * o.T / N);
            ztab.endrow();
        }
    }
    CsvWriter rate((fs::path(o.out) / "occupation.csv").string());
    rate.header({"N", "err_sq", "tail_bound"});
    for (const auto& p : pts) {
        rate.field(p.N).field(p.err_sq).field(p.tail_bound);
        rate.endrow();
    }
    if (pts.size() >= 3) {
        ErrorReport rep = rate_fit(pts);
        write_fit((fs::path(o.out) / "fit.csv").string(), rep);
        std::cout << "occupation slope (largest half): " << rep.slope
                  << "  slope (full): " << rep.slope_full << "\n";
    }
}

void run_alpha(const CommonOpts& o) {
    int n_hi = o.n_max > 0 ? o.n_max : 8;
    CsvWriter csv((fs::path(o.out) / "alpha.csv").string());
    csv.header({"N", "n", "alpha"});
    for (long long N : n_values(o)) {
        for (int n = 2; n <= n_hi; ++n) {
            csv.field(N).field(static_cast<long long>(n)).field(
                alpha_index(occupation_A(static_cast<int>(N), n), n));
            csv.endrow();
        }
    }
}

void run_clt(const CommonOpts& o) {
    Payoff payoff = parse_payoff(o.payoff);
    long long N = o.N > 0 ? o.N : n_values(o).front();
    TimeGrid grid(static_cast<int>(N), o.T);

    const int cols = o.p_max + 2;  // one extra level for the cross-covariances
    SampleMatrix samples =
        sample_errors(payoff, grid, cols - 1, o.samples, static_cast<std::uint64_t>(o.seed));
    std::vector<double> limits(cols);
    for (int p = 0; p < cols; ++p) {
        LimitVariance lv = limit_variance(payoff, o.T, p, o.grid_points, o.quad_order);
        limits[p] = lv.divergent ? std::numeric_limits<double>::quiet_NaN() : lv.value;
    }
    CltReport rep = clt_report(samples, limits);

    CsvWriter csv((fs::path(o.out) / "clt.csv").string());
    csv.header({"p", "sample_var", "se", "limit_var", "z"});
    for (int p = 0; p < cols; ++p) {
        const CltLevel& l = rep.levels[p];
        csv.field(static_cast<long long>(p)).field(l.sample_var).field(l.se).field(l.limit_var).field(l.z);
        csv.endrow();
        if (p <= o.p_max)
            std::cout << "level " << p << ": sample_var=" << l.sample_var
                      << " limit=" << l.limit_var << " z=" << l.z << "\n";
    }

    CsvWriter cross((fs::path(o.out) / "clt_cross.csv").string());
    cross.header({"p", "q", "cov", "se", "z"});
    for (const auto& x : rep.cross) {
        cross.field(static_cast<long long>(x.p))
            .field(static_cast<long long>(x.q))
            .field(x.cov)
            .field(x.se)
            .field(x.z);
        cross.endrow();
    }

    CsvWriter walk((fs::path(o.out) / "walk.csv").string());
    walk.header({"p", "var", "se", "kurtosis", "kurtosis_se"});
    for (int p = 0; p <= 2; ++p) {
        WalkStats w = scaled_walk_stats(grid, p, o.samples, static_cast<std::uint64_t>(o.seed));
        walk.field(static_cast<long long>(p)).field(w.var).field(w.se).field(w.kurtosis).field(
            w.kurtosis_se);
        walk.endrow();
    }

    CsvWriter dump((fs::path(o.out) / "samples.csv").string());
    std::vector<std::string> names{"sample_id"};
    for (int p = 0; p <= o.p_max; ++p) names.push_back("err_" + std::to_string(p));
    dump.header(names);
    for (long long i = 0; i < samples.M; ++i) {
        dump.field(i);
        for (int p = 0; p <= o.p_max; ++p) dump.field(samples.at(i, p));
        dump.endrow();
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete Clark-Ocone martingale-representation toolkit"};
    app.require_subcommand(1);
    app.fallthrough(true);  // lets `chaoskit <cmd> --config f` reach the app-level option
    app.set_config("--config", "", "key = value config; a run manifest reruns verbatim");
    app.allow_config_extras(true);

    CommonOpts opts[5];
    CLI::App* chaos = app.add_subcommand("chaos", "Project a payoff spectrum and dump it as CSV");
    CLI::App* rate = app.add_subcommand("error-rate", "Exact 1-Mart.Err rates for a terminal payoff");
    CLI::App* occ = app.add_subcommand("occupation", "Occupation-time error norms and Z_{N,k} tables");
    CLI::App* alpha = app.add_subcommand("alpha", "Finite-dimensionality index tables");
    CLI::App* clt = app.add_subcommand("clt", "Monte Carlo second-moment check of the error CLT");
    add_common(chaos, opts[0]);
    add_common(rate, opts[1]);
    add_common(occ, opts[2]);
    add_common(alpha, opts[3]);
    add_common(clt, opts[4]);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CLI::App* subs[5] = {chaos, rate, occ, alpha, clt};
    void (*runners[5])(const CommonOpts&) = {run_chaos, run_error_rate, run_occupation, run_alpha,
                                             run_clt};
    for (int i = 0; i < 5; ++i) {
        if (!subs[i]->parsed()) continue;
        auto t0 = std::chrono::steady_clock::now();
        try {
            fs::create_directories(opts[i].out);
            runners[i](opts[i]);
        } catch (const FeasibilityError& e) {
            std::cerr << "numerical guard: " << e.what() << "\n";
            return 3;
        } catch (const std::invalid_argument& e) {
            std::cerr << "invalid arguments: " << e.what() << "\n";
            return 2;
        } catch (const std::domain_error& e) {
            std::cerr << "invalid arguments: " << e.what() << "\n";
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        double wall =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        write_manifest(subs[i], opts[i], wall);
    }
    return 0;
}
