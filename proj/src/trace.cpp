#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "raysplit/spectral.hpp"

namespace raysplit {

namespace {

constexpr double kPi = std::numbers::pi;

double sq(double x) { return x * x; }

struct OrbitData {
    double action = 0.0;
    double amplitude = 0.0;
};

OrbitData orbit_data(const WellConfig& config, const NecklaceStats& st) {
    OrbitData d;
    d.action = 2.0 * (st.n_R * config.sigma_R + st.n_L * config.sigma_L);
    const double sign = st.chi % 2 == 0 ? 1.0 : -1.0;
    d.amplitude = sign * std::pow(config.r, st.alpha) * std::pow(config.t, st.beta);
    return d;
}

/// 2x2 transfer matrix over polynomials in x, where x marks L beads and the
/// entries carry |amplitude| factors per step: [[r x, t], [t x, r]].
/// tr(M^len) lists, per L-count j, the sum of r^alpha t^beta over all raw
/// cyclic words of that composition.
struct PolyMatrix {
    std::array<std::vector<double>, 4> e;  // row-major 2x2
};

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    auto mul = [](const std::vector<double>& p, const std::vector<double>& q) {
        std::vector<double> out(p.size() + q.size() - 1, 0.0);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
        return out;
    };
    auto add = [](std::vector<double> p, const std::vector<double>& q) {
        if (q.size() > p.size()) p.resize(q.size(), 0.0);
        for (std::size_t i = 0; i < q.size(); ++i) p[i] += q[i];
        return p;
    };
    PolyMatrix c;
    c.e[0] = add(mul(a.e[0], b.e[0]), mul(a.e[1], b.e[2]));
    c.e[1] = add(mul(a.e[0], b.e[1]), mul(a.e[1], b.e[3]));
    c.e[2] = add(mul(a.e[2], b.e[0]), mul(a.e[3], b.e[2]));
    c.e[3] = add(mul(a.e[2], b.e[1]), mul(a.e[3], b.e[3]));
    return c;
}

}  // namespace

std::vector<TraceTerm> prime_orbit_terms(const WellConfig& config, int max_length) {
    if (max_length < 1) throw std::invalid_argument("prime_orbit_terms: max_length must be >= 1");
    std::vector<TraceTerm> out;
    for (int n = 1; n <= max_length; ++n) {
        for_each_prime_necklace(n, [&](std::string_view beads) {
            const NecklaceStats st = compute_stats(beads);
            const OrbitData d = orbit_data(config, st);
            out.push_back(TraceTerm{NecklaceWord::trusted_canonical(std::string(beads)), d.action, d.amplitude});
        });
    }
    return out;
}

double trace_truncation_bound(const WellConfig& config, double sigma_smooth, int max_length) {
    if (!(sigma_smooth > 0.0))
        throw std::invalid_argument("trace_truncation_bound: sigma_smooth must be > 0");
    if (max_length < 1) throw std::invalid_argument("trace_truncation_bound: max_length must be >= 1");
    if (config.sigma_R == 0.0) return 0.0;  // collapsed comb: the length sum is a single family

    // Every neglected (prime w, nu) pair is a necklace of total length > max_length,
    // and a necklace sum is majorized by the raw-word sum of the same length:
    //   sum_{len > L} (1/len) sum_{words} S(word) |A(word)| exp(-(S sigma)^2/2),
    // with the word sum per L-bead count read off tr(M^len).
    const PolyMatrix step{{std::vector<double>{0.0, config.r}, std::vector<double>{config.t},
                           std::vector<double>{0.0, config.t}, std::vector<double>{config.r}}};
    PolyMatrix power = step;
    for (int len = 2; len <= max_length; ++len) power = poly_mat_mul(power, step);

    double bound = 0.0;
    int quiet = 0;
    for (int len = max_length + 1; len <= max_length + 600; ++len) {
        power = poly_mat_mul(power, step);
        std::vector<double> tr = power.e[0];
        if (power.e[3].size() > tr.size()) tr.resize(power.e[3].size(), 0.0);
        for (std::size_t i = 0; i < power.e[3].size(); ++i) tr[i] += power.e[3][i];

        double term = 0.0;
        for (std::size_t j = 0; j < tr.size(); ++j) {
            const double action =
                2.0 * (static_cast<double>(j) * config.sigma_L +
                       static_cast<double>(len - static_cast<int>(j)) * config.sigma_R);
            term += tr[j] * action * std::exp(-0.5 * sq(action * sigma_smooth));
        }
        term /= kPi * static_cast<double>(len);
        bound += term;
        if (term < 1e-16 * bound + 1e-280) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    return bound;
}

int choose_trace_length(const WellConfig& config, double sigma_smooth, double target, int cap) {
    for (int len = 2; len <= cap; ++len)
        if (trace_truncation_bound(config, sigma_smooth, len) < target) return len;
    return 0;
}

TraceDensity trace_density_smoothed(const WellConfig& config, std::span<const double> k_grid,
                                    double sigma_smooth, int max_length, double amp_cutoff) {
    if (!(sigma_smooth > 0.0))
        throw std::invalid_argument("trace_density_smoothed: sigma_smooth must be > 0");
    if (!(amp_cutoff > 0.0) || !(amp_cutoff < 1.0))
        throw std::invalid_argument("trace_density_smoothed: amp_cutoff must be in (0, 1)");
    if (max_length < 1) throw std::invalid_argument("trace_density_smoothed: max_length must be >= 1");

    TraceDensity result;
    result.max_length = max_length;
    result.density.assign(k_grid.size(), mean_density(config));

    // Coefficients of cos(S k), keyed by the repeated necklace's bead
    // composition (which fixes the total action S exactly).
    std::map<std::pair<int, int>, double> cos_coeff;
    double nu_tail = 0.0;

    // nu loop shared by both branches; amp is the primitive's amplitude.
    auto accumulate = [&](double action, double amp, int n_L, int n_R) {
        double apow = 1.0;
        for (int nu = 1;; ++nu) {
            apow *= amp;
            const double damp = std::exp(-0.5 * sq(nu * action * sigma_smooth));
            const double mag = std::abs(apow) * damp;
            if (mag < amp_cutoff) {
                // remaining nu terms shrink at least geometrically
                const double ratio =
                    std::abs(amp) * std::exp(-0.5 * (2.0 * nu + 1.0) * sq(action * sigma_smooth));
                nu_tail += action * mag / (kPi * std::max(1e-12, 1.0 - ratio));
                break;
            }
            cos_coeff[{nu * n_L, nu * n_R}] += action * 2.0 * apow * damp;
        }
    };

    if (config.sigma_R == 0.0) {
        // a = 1: every necklace is action-degenerate with a repetition of the
        // Newtonian orbit LR, and the collapsed repetition amplitudes sum to 1.
        accumulate(2.0 * config.sigma_L, 1.0, 1, 1);
        result.truncation_bound = nu_tail;
    } else {
        for (int n = 1; n <= max_length; ++n) {
            for_each_prime_necklace(n, [&](std::string_view beads) {
                const NecklaceStats st = compute_stats(beads);
                const OrbitData d = orbit_data(config, st);
                if (d.amplitude == 0.0) return;
                accumulate(d.action, d.amplitude, st.n_L, st.n_R);
            });
        }
        result.truncation_bound = trace_truncation_bound(config, sigma_smooth, max_length) + nu_tail;
    }

    for (const auto& [key, c] : cos_coeff) {
        const double action = 2.0 * (key.first * config.sigma_L + key.second * config.sigma_R);
        const double scale = c / (2.0 * kPi);
        for (std::size_t i = 0; i < k_grid.size(); ++i)
            result.density[i] += scale * std::cos(action * k_grid[i]);
    }
    return result;
}

std::vector<double> exact_density_smoothed(const Spectrum& spectrum, std::span<const double> k_grid,
                                           double sigma_smooth) {
    if (!(sigma_smooth > 0.0))
        throw std::invalid_argument("exact_density_smoothed: sigma_smooth must be > 0");
    if (k_grid.empty()) return {};

    const auto [lo_it, hi_it] = std::minmax_element(k_grid.begin(), k_grid.end());
    const double k_lo = *lo_it, k_hi = *hi_it;
    if (spectrum.k_max < k_hi + 5.0 * sigma_smooth)
        throw std::invalid_argument(
            "exact_density_smoothed: spectrum k_max must exceed the grid by at least 5 sigma");

    std::vector<double> out(k_grid.size(), 0.0);
    const double norm = 1.0 / (sigma_smooth * std::sqrt(2.0 * kPi));
    const double window = 10.0 * sigma_smooth;
    auto add_comb_line = [&](double root) {
        if (root < k_lo - window || root > k_hi + window) return;
        for (std::size_t i = 0; i < k_grid.size(); ++i)
            out[i] += norm * std::exp(-0.5 * sq((k_grid[i] - root) / sigma_smooth));
    };
    for (double root : spectrum.roots) {
        add_comb_line(root);
        if (-root >= k_lo - 5.0 * sigma_smooth) add_comb_line(-root);  // mirror image
    }
    return out;
}

}  // namespace raysplit
