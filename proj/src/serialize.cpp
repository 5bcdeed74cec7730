#include "raysplit/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace raysplit {

namespace {

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

/// Scalar reports carry plain numbers; polynomial reports carry coefficient arrays.
nlohmann::json value_json(const Polynomial& p, bool scalar) {
    if (scalar) return p.is_zero() ? std::string("0") : rational_str(p.coeff(0));
    return polynomial_json(p);
}

}  // namespace

nlohmann::json stats_json(const NecklaceStats& st) {
    return nlohmann::json{{"n_L", st.n_L},     {"n_R", st.n_R},   {"n", st.n},
                          {"alpha", st.alpha}, {"beta", st.beta}, {"gamma", st.gamma},
                          {"chi", st.chi}};
}

nlohmann::json polynomial_json(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(rational_str(p.coeff(i)));
    return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) coeffs.push_back(rational_from_str(item.get<std::string>()));
    return Polynomial(std::move(coeffs));
}

nlohmann::json report_json(const IdentityReport& rep) {
    return nlohmann::json{{"identity", identity_name(rep.id)},
                          {"params", rep.params},
                          {"lhs", value_json(rep.lhs, rep.scalar)},
                          {"rhs", value_json(rep.rhs, rep.scalar)},
                          {"verified", rep.verified},
                          {"term_count", rep.term_count},
                          {"contributors", rep.contributors}};
}

std::vector<NecklaceRow> necklace_table(int length, bool prime_only) {
    std::vector<NecklaceRow> rows;
    for_each_necklace_period(length, [&](std::string_view beads, int period) {
        if (prime_only && period != length) return;
        NecklaceRow row;
        row.w = std::string(beads);
        row.primitive = std::string(beads.substr(0, static_cast<std::size_t>(period)));
        row.nu = length / period;
        row.stats = compute_stats(row.primitive);
        rows.push_back(std::move(row));
    });
    return rows;
}

nlohmann::json necklace_table_json(const std::vector<NecklaceRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json j = stats_json(row.stats);
        j["w"] = row.w;
        j["primitive"] = row.primitive;
        j["nu"] = row.nu;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string necklace_table_csv(const std::vector<NecklaceRow>& rows) {
    std::string out = "w,primitive,nu,n_L,n_R,n,alpha,beta,gamma,chi\n";
    for (const auto& row : rows) {
        out += row.w + ',' + row.primitive + ',' + std::to_string(row.nu) + ',' +
               std::to_string(row.stats.n_L) + ',' + std::to_string(row.stats.n_R) + ',' +
               std::to_string(row.stats.n) + ',' + std::to_string(row.stats.alpha) + ',' +
               std::to_string(row.stats.beta) + ',' + std::to_string(row.stats.gamma) + ',' +
               std::to_string(row.stats.chi) + '\n';
    }
    return out;
}

nlohmann::json spectrum_json(const Spectrum& spectrum) {
    nlohmann::json j;
    j["method"] = spectrum.method == SolveMethod::DirectScan ? "scan" : "chebyshev";
    j["k_max"] = spectrum.k_max;
    j["params"] = {{"omega1", spectrum.params.omega1},
                   {"omega2", spectrum.params.omega2},
                   {"r", spectrum.params.r}};
    if (spectrum.config) {
        j["config"] = {{"a", spectrum.config->a},
                       {"lambda", spectrum.config->lambda},
                       {"sigma_L", spectrum.config->sigma_L},
                       {"sigma_R", spectrum.config->sigma_R},
                       {"r", spectrum.config->r},
                       {"t", spectrum.config->t}};
    }
    j["count"] = spectrum.roots.size();
    j["roots"] = spectrum.roots;
    double max_residual = 0.0;
    for (double k : spectrum.roots) max_residual = std::max(max_residual, std::abs(secular(k, spectrum.params)));
    j["max_residual"] = max_residual;
    return j;
}

std::string spectrum_csv(const Spectrum& spectrum) {
    std::string out = "index,k,residual\n";
    for (std::size_t i = 0; i < spectrum.roots.size(); ++i) {
        const double k = spectrum.roots[i];
        out += std::to_string(i + 1) + ',' + fmt_double(k) + ',' +
               fmt_double(std::abs(secular(k, spectrum.params))) + '\n';
    }
    return out;
}

std::string density_csv(std::span<const double> k, std::span<const double> exact,
                        std::span<const double> trace) {
    std::string out = "k,exact,trace,diff\n";
    for (std::size_t i = 0; i < k.size(); ++i) {
        out += fmt_double(k[i]) + ',' + fmt_double(exact[i]) + ',' + fmt_double(trace[i]) + ',' +
               fmt_double(trace[i] - exact[i]) + '\n';
    }
    return out;
}

}  // namespace raysplit
