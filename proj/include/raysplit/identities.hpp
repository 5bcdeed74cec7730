#pragma once

#include <string>
#include <vector>

#include "raysplit/necklaces.hpp"
#include "raysplit/polynomial.hpp"

namespace raysplit {

enum class IdentityId {
    ParityOdd,        ///< odd-length necklace sum vanishes
    ParityEven,       ///< even-length necklace sum equals the constant 2
    BinomialExample1, ///< per-s refinement of the even sum: binomial coefficients
    WeightedSumRule,  ///< gamma-weighted prime-necklace sum equals the Chebyshev form
    WeightedExample2, ///< per-s refinement of the weighted sum rule
    PoissonCollapse,  ///< sigma_R = 0: all orbits collapse onto repetitions of LR
};

const char* identity_name(IdentityId id);

/**
 * Outcome of one identity verification. lhs/rhs are exact: polynomials in r,
 * or (when `scalar`) plain numbers stored as degree <= 0 polynomials.
 */
struct IdentityReport {
    IdentityId id = IdentityId::ParityOdd;
    std::vector<long long> params;  ///< e.g. {m, s}
    Polynomial lhs;
    Polynomial rhs;
    bool scalar = false;
    bool verified = false;
    long long term_count = 0;                ///< necklaces contributing to the sum
    std::vector<std::string> contributors;   ///< canonical forms, lexicographic
};

/**
 * Sum over all length-`length` necklaces (primitive w repeated nu times) of
 *   n(w) * [(-1)^chi(w) r^alpha(w) t^beta(w)]^nu
 * with t eliminated, as an exact polynomial in r. The trace-formula collapse
 * for equal path weights forces this to the zero polynomial for odd lengths
 * and to the constant 2 for even lengths.
 */
Polynomial parity_sum(int length);

/// parity_sum wrapped in a report against its contractual value.
IdentityReport parity_report(int length);

/**
 * Per-s refinement of the even-length sum: for each s in 0..m,
 *   (1/2) * sum over W_{2m} of n(w) (-1)^{nu chi(w)} restricted to
 *   nu*alpha(w)/2 == s   equals   C(m, s).
 * Terms with odd nu*alpha match no s and are dropped.
 */
std::vector<IdentityReport> verify_binomial_identity(int m);

/**
 * Weighted sum rule, left side: sum over prime necklaces w and nu >= 1 with
 * nu*gamma(w) == m of gamma(w) * [(-1)^chi r^alpha (1-r^2)^{beta/2}]^nu.
 * Only bead lengths <= m can contribute since gamma >= n.
 */
Polynomial weighted_sum_lhs(int m);

/**
 * Weighted sum rule, right side in closed form:
 *   1 + sum_{j=0}^{m} [2m (-1)^j / (2m-j)] C(2m-j, j) (1+r)^{m-j}.
 */
Polynomial weighted_sum_rhs(int m);

/// Independent route to the right side: 2 T_{2m}(phi) + 1 with phi^2 = (1+r)/4,
/// expanded through the even-power substitution.
Polynomial weighted_sum_rhs_chebyshev(int m);

/// lhs == rhs == Chebyshev route, all exact.
IdentityReport weighted_sum_report(int m);

/**
 * Per-power refinement of the weighted sum rule (L beads weigh twice as much
 * as R beads). For prime necklaces satisfying condition C
 * (gamma(w) | m and s - m*alpha(w)/gamma(w) even):
 *   sum of gamma(w) (-1)^{[2m chi + s gamma - m alpha]/[2 gamma]}
 *          C(m beta/(2 gamma), (s gamma - m alpha)/(2 gamma))
 *   == delta_{s,0} + sum_{j=0}^{m-s} [2m(-1)^j/(2m-j)] C(2m-j, j) C(m-j, s).
 * An empty sum counts as zero. Throws std::invalid_argument for s outside [0, m].
 */
IdentityReport verify_weighted_identity(int m, int s);

/**
 * Structural check of the sigma_R = 0 collapse: the LR amplitude reduces to
 * t^2 = 1 - r^2 (value 1 at r = 0), and at a = 1 every prime necklace's action
 * is the n_L-fold multiple of S_LR, so distinct necklaces degenerate into
 * repetitions of the single Newtonian orbit.
 */
IdentityReport poisson_case_check();

}  // namespace raysplit
