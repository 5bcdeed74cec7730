#include "raysplit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "raysplit/chebyshev.hpp"

namespace raysplit {

namespace {

constexpr double kPi = std::numbers::pi;

double horner(const std::vector<double>& coeffs, double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<double> derivative(const std::vector<double>& coeffs) {
    std::vector<double> d;
    d.reserve(coeffs.size() > 0 ? coeffs.size() - 1 : 0);
    for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(static_cast<double>(i) * coeffs[i]);
    return d;
}

double bisect(const std::vector<double>& coeffs, double lo, double hi, double flo) {
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = horner(coeffs, mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Roots via monotonic segments: between consecutive critical points the
// polynomial is monotonic, so a sign change pins down exactly one root.
// Critical points come from recursing on the derivative; a critical point with
// |p| ~ 0 is a tangential (even-multiplicity) root, reported once.
std::vector<double> poly_roots_impl(const std::vector<double>& coeffs, double lo, double hi) {
    const int deg = static_cast<int>(coeffs.size()) - 1;
    std::vector<double> roots;
    if (deg == 1) {
        const double x = -coeffs[0] / coeffs[1];
        if (x >= lo && x <= hi) roots.push_back(x);
        return roots;
    }

    std::vector<double> crit = poly_roots_impl(derivative(coeffs), lo, hi);
    std::vector<double> pts;
    pts.push_back(lo);
    for (double c : crit)
        if (c > lo && c < hi) pts.push_back(c);
    pts.push_back(hi);

    double scale = 0.0;
    for (double c : coeffs) scale += std::abs(c);
    const double tangent_tol = 1e-11 * scale;

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double u = pts[i], v = pts[i + 1];
        const double fu = horner(coeffs, u), fv = horner(coeffs, v);
        if (fu == 0.0) roots.push_back(u);
        if (fv == 0.0 && i + 2 == pts.size()) roots.push_back(v);
        if (fu != 0.0 && fv != 0.0 && (fu > 0.0) != (fv > 0.0)) roots.push_back(bisect(coeffs, u, v, fu));
    }
    for (double c : crit) {
        if (c < lo || c > hi) continue;
        const double fc = horner(coeffs, c);
        if (fc != 0.0 && std::abs(fc) <= tangent_tol) roots.push_back(c);
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)); }),
                roots.end());
    return roots;
}

void append_sorted_unique(std::vector<double>& roots, double dedup_tol) {
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [dedup_tol](double a, double b) { return std::abs(a - b) <= dedup_tol; }),
                roots.end());
}

}  // namespace

WellConfig make_config(double a, double lambda) {
    if (!(a > 0.0) || !(a <= 1.0))
        throw std::invalid_argument("make_config: a must be in (0, 1]");
    if (!(lambda >= 0.0) || !(lambda < 1.0))
        throw std::invalid_argument("make_config: lambda must be in [0, 1); lambda >= 1 is the sub-barrier regime");
    WellConfig c;
    c.a = a;
    c.lambda = lambda;
    c.eta = std::sqrt(1.0 - lambda);
    c.sigma_L = a;
    c.sigma_R = c.eta * (1.0 - a);
    c.r = (1.0 - c.eta) / (1.0 + c.eta);
    c.t = std::sqrt(1.0 - c.r * c.r);
    c.omega1 = c.sigma_L + c.sigma_R;
    c.omega2 = std::abs(c.sigma_L - c.sigma_R);
    return c;
}

WellConfig config_from_ratio(int p, int q, double r) {
    if (p < 1 || q < 1 || p < q) throw std::invalid_argument("config_from_ratio: need p >= q >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("config_from_ratio: p and q must be coprime");
    if (!(r >= 0.0) || !(r < 1.0)) throw std::invalid_argument("config_from_ratio: r must be in [0, 1)");
    const double eta = (1.0 - r) / (1.0 + r);
    const double lambda = 1.0 - eta * eta;
    if (p == q) return make_config(1.0, lambda);  // omega2 = 0
    const double rho = static_cast<double>(p + q) / static_cast<double>(p - q);
    const double a = rho * eta / (1.0 + rho * eta);
    return make_config(a, lambda);
}

double mean_density(const WellConfig& config) { return (config.sigma_L + config.sigma_R) / kPi; }

double secular(double k, const SecularParams& p) {
    return std::sin(p.omega1 * k) - p.r * std::sin(p.omega2 * k);
}

double secular(double k, const WellConfig& config) {
    return secular(k, SecularParams{config.omega1, config.omega2, config.r});
}

double secular_derivative(double k, const SecularParams& p) {
    return p.omega1 * std::cos(p.omega1 * k) - p.r * p.omega2 * std::cos(p.omega2 * k);
}

Spectrum solve_spectrum_scan(const WellConfig& config, double k_max) {
    if (!(k_max > 0.0)) throw std::invalid_argument("solve_spectrum_scan: k_max must be > 0");
    const SecularParams sp{config.omega1, config.omega2, config.r};
    auto f = [&](double k) { return secular(k, sp); };
    auto fp = [&](double k) { return secular_derivative(k, sp); };

    auto refine = [&](double lo, double hi, double flo) -> double {
        for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if (fm == 0.0) return mid;
            if ((fm > 0.0) == (flo > 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    std::vector<double> roots;
    const double h = kPi / (8.0 * sp.omega1);

    // f(0) = 0 is the trivial root; f > 0 throughout (0, h] because both sine
    // arguments stay below pi/8 there, so the scan starts at h.
    double prev_k = h;
    double prev_f = f(h);
    if (prev_f == 0.0) roots.push_back(h);  // cannot happen analytically, but keep the scan sound
    while (prev_k < k_max) {
        const double cur_k = std::min(prev_k + h, k_max);
        const double cur_f = f(cur_k);
        if (cur_f == 0.0) {
            roots.push_back(cur_k);
        } else if (prev_f != 0.0 && (prev_f > 0.0) != (cur_f > 0.0)) {
            roots.push_back(refine(prev_k, cur_k, prev_f));
        } else if (prev_f != 0.0) {
            // No sign change: look for an extremum dipping to (or through) zero.
            const double dp = fp(prev_k), dc = fp(cur_k);
            if (dp != 0.0 && dc != 0.0 && (dp > 0.0) != (dc > 0.0)) {
                double lo = prev_k, hi = cur_k, dlo = dp;
                for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double dm = fp(mid);
                    if (dm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if ((dm > 0.0) == (dlo > 0.0)) {
                        lo = mid;
                        dlo = dm;
                    } else {
                        hi = mid;
                    }
                }
                const double k_ext = 0.5 * (lo + hi);
                const double f_ext = f(k_ext);
                if (f_ext != 0.0 && (f_ext > 0.0) != (prev_f > 0.0)) {
                    // the extremum pokes through: two roots in this step
                    roots.push_back(refine(prev_k, k_ext, prev_f));
                    roots.push_back(refine(k_ext, cur_k, f_ext));
                } else if (std::abs(f_ext) < 1e-10 * (1.0 + std::abs(k_ext))) {
                    roots.push_back(k_ext);  // tangency: double root, reported once
                }
            }
        }
        prev_k = cur_k;
        prev_f = cur_f;
    }

    append_sorted_unique(roots, 1e-10);
    std::erase_if(roots, [&](double k) { return k <= 1e-9 || k > k_max; });

    Spectrum spec;
    spec.roots = std::move(roots);
    spec.k_max = k_max;
    spec.method = SolveMethod::DirectScan;
    spec.params = sp;
    spec.config = config;
    return spec;
}

Spectrum solve_spectrum_chebyshev(int p, int q, double r, double omega, double k_max) {
    if (p < 1 || q < 1 || p < q) throw std::invalid_argument("solve_spectrum_chebyshev: need p >= q >= 1");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("solve_spectrum_chebyshev: p and q must be coprime");
    if (!(r >= 0.0) || !(r < 1.0))
        throw std::invalid_argument("solve_spectrum_chebyshev: r must be in [0, 1)");
    if (!(omega > 0.0)) throw std::invalid_argument("solve_spectrum_chebyshev: omega must be > 0");
    if (!(k_max > 0.0)) throw std::invalid_argument("solve_spectrum_chebyshev: k_max must be > 0");

    const SecularParams sp{p * omega, q * omega, r};
    auto polish = [&](double k) {
        for (int it = 0; it < 3; ++it) {
            const double fk = secular(k, sp);
            const double dk = secular_derivative(k, sp);
            if (dk == 0.0) break;
            const double next = k - fk / dk;
            if (!(std::abs(secular(next, sp)) <= std::abs(fk))) break;
            k = next;
        }
        return k;
    };

    std::vector<double> roots;
    for (long long n = 1;; ++n) {
        const double k = static_cast<double>(n) * kPi / omega;
        if (k > k_max) break;
        roots.push_back(k);  // sin(omega k) factor of the factorized secular equation
    }

    if (p >= 2) {
        const Polynomial up = chebyshev_U(p - 1);
        const Polynomial uq = chebyshev_U(q - 1);
        std::vector<double> coeffs(static_cast<std::size_t>(p), 0.0);
        for (int i = 0; i < p; ++i)
            coeffs[static_cast<std::size_t>(i)] = to_double(up.coeff(i)) - r * to_double(uq.coeff(i));
        for (double x : real_roots_in_interval(coeffs, -1.0, 1.0)) {
            const double arc = std::acos(std::clamp(x, -1.0, 1.0));
            for (int sgn : {1, -1}) {
                for (long long n = 0;; ++n) {
                    const double k = (2.0 * kPi * static_cast<double>(n) + sgn * arc) / omega;
                    if (k > k_max) break;
                    if (k > 1e-9) roots.push_back(polish(k));
                }
            }
        }
    }

    append_sorted_unique(roots, 1e-10);

    Spectrum spec;
    spec.roots = std::move(roots);
    spec.k_max = k_max;
    spec.method = SolveMethod::ChebyshevFactor;
    spec.params = sp;
    return spec;
}

std::vector<double> real_roots_in_interval(std::vector<double> coeffs, double lo, double hi) {
    while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
    if (coeffs.size() < 2)
        throw std::invalid_argument("real_roots_in_interval: polynomial degree must be >= 1");
    if (!(lo <= hi)) throw std::invalid_argument("real_roots_in_interval: need lo <= hi");
    return poly_roots_impl(coeffs, lo, hi);
}

std::vector<double> polynomial_roots_on_interval(const Polynomial& poly, double lo, double hi) {
    if (poly.degree() < 1)
        throw std::invalid_argument("polynomial_roots_on_interval: polynomial degree must be >= 1");
    std::vector<double> coeffs;
    coeffs.reserve(static_cast<std::size_t>(poly.degree()) + 1);
    for (int i = 0; i <= poly.degree(); ++i) coeffs.push_back(to_double(poly.coeff(i)));
    return real_roots_in_interval(std::move(coeffs), lo, hi);
}

double counting_function_check(const Spectrum& spectrum) {
    const std::size_t n = spectrum.roots.size();
    if (n < 10)
        throw std::invalid_argument("counting_function_check: need at least 10 roots");
    double mean_k = 0.0, mean_i = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_k += spectrum.roots[i];
        mean_i += static_cast<double>(i + 1);
    }
    mean_k /= static_cast<double>(n);
    mean_i /= static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dk = spectrum.roots[i] - mean_k;
        num += dk * (static_cast<double>(i + 1) - mean_i);
        den += dk * dk;
    }
    return num / den;
}

}  // namespace raysplit
