// Command-line front end: necklace enumeration, identity verification,
// spectral solving, and smoothed density comparison, with JSON/CSV outputs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "raysplit/identities.hpp"
#include "raysplit/necklaces.hpp"
#include "raysplit/serialize.hpp"
#include "raysplit/spectral.hpp"
#include "raysplit/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Accepts "0.4" as well as exact fractions like "8/9" (avoids representation
/// drift when reproducing rational-geometry configurations).
double parse_real(const std::string& text) {
    const auto slash = text.find('/');
    std::size_t pos = 0;
    if (slash != std::string::npos) {
        const double num = std::stod(text.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument("malformed fraction: " + text);
        const double den = std::stod(text.substr(slash + 1), &pos);
        if (pos != text.size() - slash - 1 || den == 0.0)
            throw std::invalid_argument("malformed fraction: " + text);
        return num / den;
    }
    const double value = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("malformed number: " + text);
    return value;
}

std::string iso_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string default_outdir() {
    const char* env = std::getenv("RAYSPLIT_OUTDIR");
    return env != nullptr ? std::string(env) : std::string(".");
}

void append_manifest(const fs::path& dir, const std::string& command, const json& parameters,
                     const std::vector<std::string>& outputs) {
    json entry{{"command", command},
               {"parameters", parameters},
               {"tool_version", raysplit::kVersion},
               {"timestamp", iso_timestamp()},
               {"outputs", outputs}};
    std::ofstream out(dir / "manifest.jsonl", std::ios::app);
    out << entry.dump() << '\n';
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path.string());
    out << content;
}

struct NecklacesArgs {
    int length = 1;
    bool count_only = false;
    bool prime_only = false;
    bool stats = false;
    std::string format = "json";
};

int run_necklaces(const NecklacesArgs& args) {
    using namespace raysplit;
    if (args.count_only) {
        const BigInt count =
            args.prime_only ? count_prime_necklaces(args.length) : count_necklaces(args.length);
        std::cout << count.str() << '\n';
        return 0;
    }
    if (args.stats) {
        const auto rows = necklace_table(args.length, args.prime_only);
        if (args.format == "csv")
            std::cout << necklace_table_csv(rows);
        else
            std::cout << necklace_table_json(rows).dump(2) << '\n';
        return 0;
    }
    std::vector<std::string> words;
    if (args.prime_only) {
        for_each_prime_necklace(args.length, [&](std::string_view w) { words.emplace_back(w); });
    } else {
        for_each_necklace(args.length, [&](std::string_view w) { words.emplace_back(w); });
    }
    if (args.format == "csv") {
        std::cout << "w\n";
        for (const auto& w : words) std::cout << w << '\n';
    } else {
        std::cout << json(words).dump(2) << '\n';
    }
    return 0;
}

struct VerifyArgs {
    std::string identity;
    std::optional<int> m;
    std::optional<int> s;
    std::string expect;  // optional override of the right-hand side (CI pinning)
};

int run_verify(const VerifyArgs& args) {
    using namespace raysplit;
    if (args.s && args.identity != "weighted")
        throw std::invalid_argument("only verify weighted takes a refinement index s");
    std::vector<IdentityReport> reports;
    if (args.identity == "parity") {
        if (!args.m) throw std::invalid_argument("verify parity needs the necklace length");
        reports.push_back(parity_report(*args.m));
    } else if (args.identity == "binomial") {
        if (!args.m) throw std::invalid_argument("verify binomial needs m");
        reports = verify_binomial_identity(*args.m);
    } else if (args.identity == "weighted-sum") {
        if (!args.m) throw std::invalid_argument("verify weighted-sum needs m");
        reports.push_back(weighted_sum_report(*args.m));
    } else if (args.identity == "weighted") {
        if (!args.m) throw std::invalid_argument("verify weighted needs m");
        if (args.s) {
            reports.push_back(verify_weighted_identity(*args.m, *args.s));
        } else {
            for (int s = 0; s <= *args.m; ++s) reports.push_back(verify_weighted_identity(*args.m, s));
        }
    } else if (args.identity == "poisson") {
        if (args.m) throw std::invalid_argument("verify poisson takes no parameters");
        reports.push_back(poisson_case_check());
    } else {
        throw std::invalid_argument("unknown identity: " + args.identity +
                                    " (expected parity|binomial|weighted-sum|weighted|poisson)");
    }

    if (!args.expect.empty()) {
        if (reports.size() != 1)
            throw std::invalid_argument("--expect applies to single-report verifications only");
        const json expected = json::parse(args.expect);
        IdentityReport& rep = reports.front();
        rep.rhs = rep.scalar ? Polynomial::constant(rational_from_str(expected.get<std::string>()))
                             : polynomial_from_json(expected);
        rep.verified = rep.lhs == rep.rhs;
    }

    bool all_verified = true;
    json out = json::array();
    for (const auto& rep : reports) {
        all_verified = all_verified && rep.verified;
        out.push_back(report_json(rep));
    }
    std::cout << (reports.size() == 1 ? out.front().dump(2) : out.dump(2)) << '\n';
    if (!all_verified) {
        for (const auto& rep : reports)
            if (!rep.verified)
                std::cerr << "FALSIFIED " << identity_name(rep.id)
                          << ": lhs = " << rep.lhs.str() << ", rhs = " << rep.rhs.str() << '\n';
        return 1;
    }
    return 0;
}

struct SpectrumArgs {
    std::string a_text, lambda_text;
    double k_max = 10.0;
    std::string method = "scan";
    std::optional<int> p, q;
    std::string outdir = default_outdir();
};

int run_spectrum(const SpectrumArgs& args) {
    using namespace raysplit;
    const WellConfig config = make_config(parse_real(args.a_text), parse_real(args.lambda_text));
    Spectrum spectrum;
    if (args.method == "scan") {
        spectrum = solve_spectrum_scan(config, args.k_max);
    } else if (args.method == "chebyshev") {
        if (!args.p || !args.q)
            throw std::invalid_argument("chebyshev method needs --p and --q");
        const double omega = config.omega1 / static_cast<double>(*args.p);
        spectrum = solve_spectrum_chebyshev(*args.p, *args.q, config.r, omega, args.k_max);
        spectrum.config = config;
    } else {
        throw std::invalid_argument("unknown method: " + args.method);
    }

    fs::create_directories(args.outdir);
    const fs::path csv_path = fs::path(args.outdir) / "spectrum.csv";
    const fs::path json_path = fs::path(args.outdir) / "spectrum.json";
    const json spec_json = spectrum_json(spectrum);
    write_file(csv_path, spectrum_csv(spectrum));
    write_file(json_path, spec_json.dump(2) + "\n");

    json params{{"a", args.a_text},       {"lambda", args.lambda_text}, {"k_max", args.k_max},
                {"method", args.method}};
    if (args.p) params["p"] = *args.p;
    if (args.q) params["q"] = *args.q;
    append_manifest(args.outdir, "spectrum", params, {csv_path.string(), json_path.string()});

    json summary{{"count", spectrum.roots.size()},
                 {"max_residual", spec_json["max_residual"]},
                 {"outputs", {csv_path.string(), json_path.string()}}};
    std::cout << summary.dump(2) << '\n';
    return 0;
}

struct DensityArgs {
    std::string a_text, lambda_text;
    double k_min = 5.0, k_max = 50.0;
    double sigma = 0.3;
    int max_length = 0;  // 0 = choose from the truncation-bound target
    double amp_cutoff = 1e-12;
    double grid_step = 0.0;  // 0 = sigma / 5
    double bound_target = 1e-3;
    std::string outdir = default_outdir();
};

int run_density(const DensityArgs& args) {
    using namespace raysplit;
    const WellConfig config = make_config(parse_real(args.a_text), parse_real(args.lambda_text));
    if (!(args.sigma > 0.0)) throw std::invalid_argument("sigma_smooth must be > 0");
    if (args.k_min < 5.0 * args.sigma)
        throw std::invalid_argument("k_min must be at least 5 * sigma_smooth");
    if (!(args.k_max > args.k_min)) throw std::invalid_argument("k_max must exceed k_min");

    int max_length = args.max_length;
    if (max_length == 0) {
        max_length = choose_trace_length(config, args.sigma, args.bound_target, 30);
        if (max_length == 0)
            throw std::invalid_argument("cannot reach the requested truncation bound with length <= 30");
    }

    const double step = args.grid_step > 0.0 ? args.grid_step : args.sigma / 5.0;
    std::vector<double> grid;
    for (double k = args.k_min; k <= args.k_max + 1e-12; k += step) grid.push_back(k);

    const Spectrum spectrum = solve_spectrum_scan(config, args.k_max + 10.0 * args.sigma);
    const auto exact = exact_density_smoothed(spectrum, grid, args.sigma);
    const TraceDensity trace =
        trace_density_smoothed(config, grid, args.sigma, max_length, args.amp_cutoff);

    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        num += (trace.density[i] - exact[i]) * (trace.density[i] - exact[i]);
        den += exact[i] * exact[i];
    }
    const double rel_error = std::sqrt(num / den);

    fs::create_directories(args.outdir);
    const fs::path csv_path = fs::path(args.outdir) / "density.csv";
    const fs::path summary_path = fs::path(args.outdir) / "density_summary.json";
    write_file(csv_path, density_csv(grid, exact, trace.density));
    json summary{{"l2_relative_error", rel_error},
                 {"truncation_bound", trace.truncation_bound},
                 {"max_length", max_length},
                 {"sigma_smooth", args.sigma},
                 {"rho_bar", mean_density(config)},
                 {"grid_points", grid.size()},
                 {"spectrum_roots", spectrum.roots.size()}};
    write_file(summary_path, summary.dump(2) + "\n");

    append_manifest(args.outdir, "density",
                    json{{"a", args.a_text},
                         {"lambda", args.lambda_text},
                         {"k_min", args.k_min},
                         {"k_max", args.k_max},
                         {"sigma_smooth", args.sigma},
                         {"max_length", max_length}},
                    {csv_path.string(), summary_path.string()});
    std::cout << summary.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary necklace combinatorics and ray-splitting well spectra"};
    app.set_version_flag("--version", raysplit::kVersion);
    app.require_subcommand(1);

    NecklacesArgs neck;
    CLI::App* cmd_neck = app.add_subcommand("necklaces", "Enumerate binary necklaces");
    cmd_neck->add_option("length", neck.length, "necklace bead length")->required()->check(CLI::PositiveNumber);
    auto* count_flag = cmd_neck->add_flag("--count-only", neck.count_only, "print only the count");
    cmd_neck->add_flag("--prime-only", neck.prime_only, "restrict to aperiodic necklaces");
    cmd_neck->add_flag("--stats", neck.stats, "full statistics table")->excludes(count_flag);
    cmd_neck->add_option("--format", neck.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    VerifyArgs verify;
    CLI::App* cmd_verify = app.add_subcommand("verify", "Verify a combinatorial identity");
    cmd_verify->add_option("identity", verify.identity, "parity|binomial|weighted-sum|weighted|poisson")
        ->required();
    int verify_m = 0, verify_s = 0;
    auto* opt_m = cmd_verify->add_option("m", verify_m, "identity order (necklace length for parity)");
    auto* opt_s = cmd_verify->add_option("s", verify_s, "refinement index")->needs(opt_m);
    cmd_verify->add_option("--expect", verify.expect,
                           "override the right-hand side with a JSON value and compare");

    SpectrumArgs spec;
    CLI::App* cmd_spec = app.add_subcommand("spectrum", "Solve the quantization condition");
    cmd_spec->add_option("a", spec.a_text, "step position in (0, 1], decimal or fraction")->required();
    cmd_spec->add_option("lambda", spec.lambda_text, "scaling strength in [0, 1), decimal or fraction")
        ->required();
    cmd_spec->add_option("k_max", spec.k_max, "scan ceiling")->required();
    cmd_spec->add_option("--method", spec.method, "scan|chebyshev")
        ->check(CLI::IsMember({"scan", "chebyshev"}));
    int spec_p = 0, spec_q = 0;
    auto* opt_p = cmd_spec->add_option("--p", spec_p, "frequency ratio numerator");
    auto* opt_q = cmd_spec->add_option("--q", spec_q, "frequency ratio denominator");
    cmd_spec->add_option("--out", spec.outdir, "output directory (default $RAYSPLIT_OUTDIR or .)");

    DensityArgs dens;
    CLI::App* cmd_dens = app.add_subcommand("density", "Compare exact and trace-formula densities");
    cmd_dens->add_option("a", dens.a_text)->required();
    cmd_dens->add_option("lambda", dens.lambda_text)->required();
    cmd_dens->add_option("k_min", dens.k_min)->required();
    cmd_dens->add_option("k_max", dens.k_max)->required();
    cmd_dens->add_option("sigma_smooth", dens.sigma)->required();
    cmd_dens->add_option("max_length", dens.max_length, "0 chooses the shortest length under the bound target");
    cmd_dens->add_option("--amp-cutoff", dens.amp_cutoff);
    cmd_dens->add_option("--grid-step", dens.grid_step);
    cmd_dens->add_option("--bound-target", dens.bound_target);
    cmd_dens->add_option("--out", dens.outdir, "output directory (default $RAYSPLIT_OUTDIR or .)");

    try {
        app.parse(argc, argv);
        if (cmd_neck->parsed()) return run_necklaces(neck);
        if (cmd_verify->parsed()) {
            if (opt_m->count() > 0) verify.m = verify_m;
            if (opt_s->count() > 0) verify.s = verify_s;
            return run_verify(verify);
        }
        if (cmd_spec->parsed()) {
            if (opt_p->count() > 0) spec.p = spec_p;
            if (opt_q->count() > 0) spec.q = spec_q;
            return run_spectrum(spec);
        }
        if (cmd_dens->parsed()) return run_density(dens);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
