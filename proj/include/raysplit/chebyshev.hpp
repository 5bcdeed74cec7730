#pragma once

#include "raysplit/polynomial.hpp"

namespace raysplit {

/// Chebyshev polynomial of the first kind: T_n(cos x) = cos(n x).
/// T_0 = 1, T_1 = r, T_n = 2r T_{n-1} - T_{n-2}.
Polynomial chebyshev_T(int n);

/// Chebyshev polynomial of the second kind: sin((n+1)x) = sin(x) U_n(cos x).
/// U_0 = 1, U_1 = 2r, U_n = 2r U_{n-1} - U_{n-2}.
Polynomial chebyshev_U(int n);

/**
 * sign * r^alpha_exp * t^beta_exp with t eliminated through t^2 = 1 - r^2,
 * expanded as an exact polynomial in r.
 *
 * beta_exp must be even: the transmission count beta of a cyclic word is even,
 * and every power appearing in the sum rules is nu * beta. An odd exponent
 * signals a statistics bug upstream and raises std::invalid_argument.
 */
Polynomial reduce_rt_monomial(int alpha_exp, int beta_exp, int sign);

}  // namespace raysplit
