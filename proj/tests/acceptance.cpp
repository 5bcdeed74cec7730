// Acceptance suite: exercises every contract end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "raysplit/identities.hpp"
#include "raysplit/necklaces.hpp"
#include "raysplit/numtheory.hpp"
#include "raysplit/spectral.hpp"

using namespace raysplit;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> linspace(double lo, double hi, double step) {
    std::vector<double> out;
    for (double k = lo; k <= hi + 1e-12; k += step) out.push_back(k);
    return out;
}

double rel_l2(const std::vector<double>& x, const std::vector<double>& ref) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - ref[i]) * (x[i] - ref[i]);
        den += ref[i] * ref[i];
    }
    return std::sqrt(num / den);
}

WellConfig equal_weight_config(double lambda) {
    const double eta = std::sqrt(1.0 - lambda);
    return make_config(eta / (1.0 + eta), lambda);
}

bool criterion_counts(std::string& detail) {
    bool ok = count_necklaces(1) == 2 && count_necklaces(2) == 3 && count_necklaces(4) == 6;
    for (int len = 1; len <= 16 && ok; ++len) {
        const auto oracle = oracles::all_necklaces(len);
        const auto produced = enumerate_necklaces(len);
        ok = BigInt(oracle.size()) == count_necklaces(len) && produced.size() == oracle.size();
        if (ok) {
            auto it = oracle.begin();
            for (const auto& w : produced) {
                if (w.str() != *it) {
                    ok = false;
                    break;
                }
                ++it;
            }
        }
        if (!ok) detail = "mismatch at length " + std::to_string(len);
    }
    return ok;
}

bool criterion_golden_tables(std::string& detail) {
    struct Row {
        const char *w, *primitive;
        int nu, n, alpha, beta, gamma, chi;
    };
    const std::vector<std::pair<int, std::vector<Row>>> tables = {
        {2,
         {{"LL", "L", 2, 1, 1, 0, 2, 1},
          {"LR", "LR", 1, 2, 0, 2, 3, 2},
          {"RR", "R", 2, 1, 1, 0, 1, 2}}},
        {4,
         {{"LLLL", "L", 4, 1, 1, 0, 2, 1},
          {"LLLR", "LLLR", 1, 4, 2, 2, 7, 4},
          {"LLRR", "LLRR", 1, 4, 2, 2, 6, 5},
          {"LRLR", "LR", 2, 2, 0, 2, 3, 2},
          {"LRRR", "LRRR", 1, 4, 2, 2, 5, 6},
          {"RRRR", "R", 4, 1, 1, 0, 1, 2}}}};
    for (const auto& [len, rows] : tables) {
        const auto necklaces = enumerate_necklaces(len);
        if (necklaces.size() != rows.size()) {
            detail = "row count mismatch at length " + std::to_string(len);
            return false;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto dec = primitive_decomposition(necklaces[i]);
            const NecklaceStats st = compute_stats(dec.primitive);
            const Row& e = rows[i];
            if (necklaces[i].str() != e.w || dec.primitive.str() != e.primitive || dec.nu != e.nu ||
                st.n != e.n || st.alpha != e.alpha || st.beta != e.beta || st.gamma != e.gamma ||
                st.chi != e.chi) {
                detail = std::string("row ") + e.w + " differs";
                return false;
            }
        }
    }
    return true;
}

bool criterion_parity(std::string& detail) {
    for (int len = 1; len <= 13; len += 2) {
        if (!parity_sum(len).is_zero()) {
            detail = "odd length " + std::to_string(len) + " not zero";
            return false;
        }
    }
    for (int len = 2; len <= 14; len += 2) {
        if (parity_sum(len) != Polynomial::constant(2)) {
            detail = "even length " + std::to_string(len) + " not 2";
            return false;
        }
    }
    return true;
}

bool criterion_binomial(std::string& detail) {
    for (int m = 1; m <= 7; ++m) {
        for (const auto& rep : verify_binomial_identity(m)) {
            if (!rep.verified) {
                detail = "m=" + std::to_string(m) + " s=" + std::to_string(rep.params[1]);
                return false;
            }
        }
    }
    // hand-checkable m=2, s=1 case, including the minus-sign term from LLRR
    const auto m2 = verify_binomial_identity(2);
    return m2[1].lhs == Polynomial::constant(2) &&
           m2[1].contributors == std::vector<std::string>{"LLLR", "LLRR", "LRRR"};
}

bool criterion_weighted_sum(std::string& detail) {
    if (weighted_sum_lhs(1) != Polynomial::monomial(1)) {
        detail = "m=1 is not the monomial r";
        return false;
    }
    for (int m = 1; m <= 10; ++m) {
        const Polynomial lhs = weighted_sum_lhs(m);
        if (lhs != weighted_sum_rhs(m) || lhs != weighted_sum_rhs_chebyshev(m)) {
            detail = "m=" + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool criterion_weighted_identity(std::string& detail) {
    const IdentityReport empty_case = verify_weighted_identity(1, 0);
    if (!empty_case.verified || !empty_case.lhs.is_zero() || empty_case.term_count != 0) {
        detail = "m=1 s=0 empty-sum case";
        return false;
    }
    const IdentityReport one_case = verify_weighted_identity(1, 1);
    if (!one_case.verified || one_case.lhs != Polynomial::constant(1)) {
        detail = "m=1 s=1 case";
        return false;
    }
    for (int m = 1; m <= 8; ++m) {
        for (int s = 0; s <= m; ++s) {
            if (!verify_weighted_identity(m, s).verified) {
                detail = "m=" + std::to_string(m) + " s=" + std::to_string(s);
                return false;
            }
        }
    }
    return true;
}

bool criterion_poisson(std::string& detail) {
    const WellConfig c = make_config(1.0, 0.5);
    const Spectrum s = solve_spectrum_scan(c, 100.0);
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
        if (std::abs(s.roots[i] - kPi * static_cast<double>(i + 1)) >= 1e-10) {
            detail = "root " + std::to_string(i + 1) + " off the comb";
            return false;
        }
    }
    if (s.roots.size() != 31) {
        detail = "expected 31 comb roots below 100";
        return false;
    }
    const double sigma = 0.1 * kPi;  // 0.1 of the mean spacing
    const auto grid = linspace(5.0, 50.0, sigma / 5.0);
    const auto exact = exact_density_smoothed(s, grid, sigma);
    const auto trace = trace_density_smoothed(c, grid, sigma, 10, 1e-14);
    const double err = rel_l2(trace.density, exact);
    std::ostringstream os;
    os << "L2 error " << err;
    detail = os.str();
    return err < 1e-3 && poisson_case_check().verified;
}

bool criterion_example1(std::string& detail) {
    std::vector<std::vector<double>> rescaled;
    for (double lambda : {0.3, 0.7}) {
        const WellConfig c = equal_weight_config(lambda);
        const Spectrum s = solve_spectrum_scan(c, 120.0);
        std::vector<double> scaled;
        for (std::size_t i = 0; i < s.roots.size(); ++i) {
            const double expected = kPi * static_cast<double>(i + 1) / (2.0 * c.a);
            if (std::abs(s.roots[i] - expected) >= 1e-9) {
                detail = "lambda=" + std::to_string(lambda) + ": root off pi n/(2a)";
                return false;
            }
            scaled.push_back(s.roots[i] * 2.0 * c.a);
        }
        rescaled.push_back(std::move(scaled));
    }
    // no r-dependence: the two spectra coincide after rescaling by a
    const std::size_t n = std::min(rescaled[0].size(), rescaled[1].size());
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(rescaled[0][i] - rescaled[1][i]) >= 1e-9) {
            detail = "rescaled spectra differ at index " + std::to_string(i);
            return false;
        }
    }
    return n >= 25;
}

bool criterion_example2(std::string& detail) {
    const WellConfig c = make_config(0.4, 8.0 / 9.0);  // r = 1/2
    if (std::abs(c.r - 0.5) > 1e-14) {
        detail = "reflection coefficient is not 1/2";
        return false;
    }
    const double k_max = 60.0;
    const Spectrum scan = solve_spectrum_scan(c, k_max);
    const Spectrum cheb = solve_spectrum_chebyshev(3, 1, c.r, c.omega1 / 3.0, k_max);
    if (scan.roots.size() != cheb.roots.size()) {
        detail = "method root counts differ";
        return false;
    }
    for (std::size_t i = 0; i < scan.roots.size(); ++i) {
        if (std::abs(scan.roots[i] - cheb.roots[i]) >= 1e-9) {
            detail = "methods disagree at index " + std::to_string(i);
            return false;
        }
    }
    // closed-form families (2j/a) acos(phi) + 2 pi n/a
    const double phi = std::sqrt(1.0 + c.r) / 2.0;
    std::vector<double> expected;
    for (int n = 0; n <= 20; ++n)
        for (int j : {-1, 0, 1}) {
            const double k = 2.0 * j / c.a * std::acos(phi) + 2.0 * kPi * n / c.a;
            if (k > 1e-9 && k <= k_max) expected.push_back(k);
        }
    std::sort(expected.begin(), expected.end());
    if (expected.size() != scan.roots.size()) {
        detail = "closed-form family count differs";
        return false;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (std::abs(scan.roots[i] - expected[i]) >= 1e-9) {
            detail = "closed-form mismatch at index " + std::to_string(i);
            return false;
        }
    }
    // r = 0 limit of the same ratio degenerates to the plain comb pi n
    const Spectrum comb = solve_spectrum_chebyshev(3, 1, 0.0, 1.0 / 3.0, 30.0);
    for (std::size_t i = 0; i < comb.roots.size(); ++i) {
        if (std::abs(comb.roots[i] - kPi * static_cast<double>(i + 1)) >= 1e-9) {
            detail = "r=0 limit is not the comb";
            return false;
        }
    }
    return true;
}

bool criterion_trace_exactness(std::string& detail) {
    std::ostringstream os;
    const std::vector<std::pair<const char*, WellConfig>> configs = {
        {"equal 0.3", equal_weight_config(0.3)},
        {"equal 0.7", equal_weight_config(0.7)},
        {"2:1 well", make_config(0.4, 8.0 / 9.0)},
    };
    for (const auto& [name, c] : configs) {
        const double sigma = 0.1 / mean_density(c);
        const int max_length = choose_trace_length(c, sigma, 1e-3, 30);
        if (max_length == 0) {
            detail = "no length meets the truncation target";
            return false;
        }
        const Spectrum s = solve_spectrum_scan(c, 50.0 + 10.0 * sigma);
        const auto grid = linspace(5.0, 50.0, sigma / 5.0);
        const auto exact = exact_density_smoothed(s, grid, sigma);
        const auto trace = trace_density_smoothed(c, grid, sigma, max_length, 1e-14);
        const double err = rel_l2(trace.density, exact);
        os << name << ": L2 " << err << ", bound " << trace.truncation_bound << ", length "
           << max_length << "; ";
        if (!(err < 0.02) || !(trace.truncation_bound < 1e-3)) {
            detail = os.str();
            return false;
        }
    }
    detail = os.str();
    return true;
}

bool criterion_mean_density(std::string& detail) {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> ua(0.15, 1.0), ul(0.0, 0.95);
    for (int trial = 0; trial < 10; ++trial) {
        const WellConfig c = make_config(ua(rng), ul(rng));
        const double rho = mean_density(c);
        const Spectrum s = solve_spectrum_scan(c, 100.0 / rho);
        const double slope = counting_function_check(s);
        if (std::abs(slope - rho) / rho >= 0.02) {
            std::ostringstream os;
            os << "a=" << c.a << " lambda=" << c.lambda << " slope " << slope << " vs " << rho;
            detail = os.str();
            return false;
        }
    }
    return true;
}

bool criterion_cross_method(std::string& detail) {
    for (auto [p, q] : {std::pair{3, 2}, std::pair{5, 3}}) {
        for (double r : {0.0, 0.3, 0.7}) {
            const WellConfig c = config_from_ratio(p, q, r);
            const double k_max = 200.0 / c.omega1;
            auto trim = [&](std::vector<double> roots) {
                while (!roots.empty() && roots.back() > k_max - 1e-6) roots.pop_back();
                return roots;
            };
            const auto scan = trim(solve_spectrum_scan(c, k_max).roots);
            const auto cheb =
                trim(solve_spectrum_chebyshev(p, q, c.r, c.omega1 / p, k_max).roots);
            std::ostringstream os;
            os << "p=" << p << " q=" << q << " r=" << r;
            if (scan.size() != cheb.size()) {
                detail = os.str() + ": counts differ";
                return false;
            }
            for (std::size_t i = 0; i < scan.size(); ++i) {
                if (std::abs(scan[i] - cheb[i]) >= 1e-9) {
                    detail = os.str() + ": mismatch at index " + std::to_string(i);
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        double time_limit_s;
        const char* label;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, 10.0, "necklace counts match brute force up to length 16", criterion_counts},
        {2, 1.0, "golden statistics tables (lengths 2 and 4)", criterion_golden_tables},
        {3, 60.0, "parity sum rules: zero (odd <= 13), two (even <= 14)", criterion_parity},
        {4, 60.0, "binomial identity for all s, m <= 7", criterion_binomial},
        {5, 30.0, "weighted sum rule equals both closed forms, m <= 10", criterion_weighted_sum},
        {6, 60.0, "weighted identity for all s, m <= 8", criterion_weighted_identity},
        {7, 10.0, "collapsed well: pi-comb roots and Poisson density", criterion_poisson},
        {8, 10.0, "equal-weight well: pi n/(2a) roots, no r dependence", criterion_example1},
        {9, 10.0, "2:1 well: scan/Chebyshev agreement and closed-form roots", criterion_example2},
        {10, 120.0, "trace formula matches the exact density (smoothed, < 2%)", criterion_trace_exactness},
        {11, 30.0, "counting slope within 2% of the mean density (10 configs)", criterion_mean_density},
        {12, 30.0, "cross-method agreement for ratios 3:2 and 5:3", criterion_cross_method},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed >= criterion.time_limit_s) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over the time limit");
        }
        std::printf("[%s] C%02d %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.label, elapsed, detail.empty() ? "" : " :: ", detail.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
