#pragma once

#include <optional>
#include <span>
#include <vector>

#include "raysplit/necklaces.hpp"
#include "raysplit/polynomial.hpp"

namespace raysplit {

/**
 * Geometry and potential strength of the stepped well, plus every derived
 * quantity the secular equation needs. The step sits at x = a; the scaled
 * potential is lambda * E on (a, 1). Only the above-step regime 0 <= lambda < 1
 * is supported.
 */
struct WellConfig {
    double a = 1.0;        ///< step position, in (0, 1]
    double lambda = 0.0;   ///< scaling strength, in [0, 1)
    double eta = 1.0;      ///< sqrt(1 - lambda)
    double sigma_L = 1.0;  ///< a
    double sigma_R = 0.0;  ///< eta * (1 - a)
    double r = 0.0;        ///< reflection coefficient (1 - eta) / (1 + eta)
    double t = 1.0;        ///< transmission coefficient sqrt(1 - r^2)
    double omega1 = 1.0;   ///< sigma_L + sigma_R
    double omega2 = 1.0;   ///< |sigma_L - sigma_R| (mirror-normalized)
};

/// Validates ranges and fills the derived fields. Throws std::invalid_argument
/// when a is outside (0, 1] or lambda outside [0, 1) (the sub-barrier regime).
WellConfig make_config(double a, double lambda);

/// The physical config whose frequency ratio omega1/omega2 is p/q at the given
/// reflection coefficient: eta = (1-r)/(1+r) fixes lambda, and a is solved from
/// sigma_L/sigma_R = (p+q)/(p-q). p == q means sigma_R = 0, i.e. a = 1.
WellConfig config_from_ratio(int p, int q, double r);

/// (sigma_L + sigma_R) / pi, the average level density.
double mean_density(const WellConfig& config);

/// The secular function inputs: sin(omega1 k) - r sin(omega2 k).
struct SecularParams {
    double omega1 = 1.0;
    double omega2 = 0.0;
    double r = 0.0;
};

double secular(double k, const SecularParams& p);
double secular(double k, const WellConfig& config);
double secular_derivative(double k, const SecularParams& p);

enum class SolveMethod { DirectScan, ChebyshevFactor };

/**
 * Sorted positive roots of the secular equation up to k_max. `config` is set
 * when the spectrum came from a physical well; the Chebyshev route may be
 * driven by bare (p, q, r, omega) parameters instead.
 */
struct Spectrum {
    std::vector<double> roots;  ///< strictly increasing, all > 0
    double k_max = 0.0;
    SolveMethod method = SolveMethod::DirectScan;
    SecularParams params;
    std::optional<WellConfig> config;
};

/**
 * Finds every root in (0, k_max] by sign-change scanning with step
 * pi/(8 omega1), bisection to |dk| < 1e-12, and a local-minimum sweep that
 * catches tangencies and sub-step root pairs. k = 0 is always excluded.
 */
Spectrum solve_spectrum_scan(const WellConfig& config, double k_max);

/**
 * Chebyshev factorization for rationally related frequencies
 * omega1 = p omega, omega2 = q omega (p >= q >= 1 coprime): the union of the
 * sine family k = pi n / omega and, for each root x_j of
 * U_{p-1}(x) - r U_{q-1}(x) on [-1, 1], the families
 * k = (+-acos(x_j) + 2 pi n)/omega, de-duplicated within 1e-10.
 * The caller asserts rationality; no floating-point ratio detection happens.
 */
Spectrum solve_spectrum_chebyshev(int p, int q, double r, double omega, double k_max);

/// All real roots of the polynomial on [lo, hi] to ~1e-12, by recursive
/// monotonic-segment bisection (critical points from the derivative). Throws
/// std::invalid_argument for polynomials of degree < 1.
std::vector<double> polynomial_roots_on_interval(const Polynomial& poly, double lo, double hi);
std::vector<double> real_roots_in_interval(std::vector<double> coeffs, double lo, double hi);

/// One oscillatory contribution: a prime necklace with its action and amplitude.
struct TraceTerm {
    NecklaceWord necklace;
    double action = 0.0;     ///< S_w = 2 [n_R sigma_R + n_L sigma_L]
    double amplitude = 0.0;  ///< (-1)^chi r^alpha t^beta, |amplitude| <= 1
};

/// One term per prime necklace of bead length <= max_length, ordered by
/// (length, lexicographic).
std::vector<TraceTerm> prime_orbit_terms(const WellConfig& config, int max_length);

struct TraceDensity {
    std::vector<double> density;    ///< same layout as the input grid
    double truncation_bound = 0.0;  ///< sup-norm bound on everything left out
    int max_length = 0;
};

/**
 * Gaussian-smoothed periodic-orbit density on the grid:
 *   rho_bar + (1/2pi) sum_w S_w sum_{nu>=1} 2 A_w^nu cos(nu S_w k)
 *                                  exp(-(nu S_w sigma_smooth)^2 / 2),
 * prime necklaces truncated at max_length, the nu sum cut once the Gaussian
 * damping times |A_w|^nu falls below amp_cutoff. At sigma_R = 0 (a = 1) every
 * necklace collapses onto a repetition of LR, so the evaluator switches to the
 * single-family comb of that limit.
 */
TraceDensity trace_density_smoothed(const WellConfig& config, std::span<const double> k_grid,
                                    double sigma_smooth, int max_length, double amp_cutoff);

/// Sup-norm bound on the contribution of all prime necklaces longer than
/// max_length (the quantity trace_density_smoothed reports).
double trace_truncation_bound(const WellConfig& config, double sigma_smooth, int max_length);

/// Smallest max_length whose truncation bound is below `target`, capped.
/// Returns 0 if even the cap cannot reach the target.
int choose_trace_length(const WellConfig& config, double sigma_smooth, double target, int cap);

/**
 * The spectrum's delta comb broadened with the same Gaussian:
 * sum_n G(k - k_n; sigma) plus mirror images G(k + k_n) for roots within five
 * sigma of the grid. Requires spectrum.k_max >= max(grid) + 5 sigma.
 */
std::vector<double> exact_density_smoothed(const Spectrum& spectrum, std::span<const double> k_grid,
                                           double sigma_smooth);

/// Least-squares slope of the counting staircase (root index against k); the
/// sanity contract is agreement with mean_density within 2% once the spectrum
/// holds ~50+ levels. Throws for spectra with fewer than 10 roots.
double counting_function_check(const Spectrum& spectrum);

}  // namespace raysplit
