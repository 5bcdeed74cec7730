#include "raysplit/chebyshev.hpp"

#include <stdexcept>
#include <utility>

namespace raysplit {

namespace {

Polynomial chebyshev_recurrence(int n, Polynomial p0, Polynomial p1) {
    if (n == 0) return p0;
    if (n == 1) return p1;
    const Polynomial two_r = Polynomial::monomial(1, Rational(2));
    for (int i = 2; i <= n; ++i) {
        Polynomial next = two_r * p1 - p0;
        p0 = std::move(p1);
        p1 = std::move(next);
    }
    return p1;
}

}  // namespace

Polynomial chebyshev_T(int n) {
    if (n < 0) throw std::invalid_argument("chebyshev_T: n must be >= 0");
    return chebyshev_recurrence(n, Polynomial::constant(1), Polynomial::monomial(1));
}

Polynomial chebyshev_U(int n) {
    if (n < 0) throw std::invalid_argument("chebyshev_U: n must be >= 0");
    return chebyshev_recurrence(n, Polynomial::constant(1), Polynomial::monomial(1, Rational(2)));
}

Polynomial reduce_rt_monomial(int alpha_exp, int beta_exp, int sign) {
    if (alpha_exp < 0 || beta_exp < 0)
        throw std::invalid_argument("reduce_rt_monomial: exponents must be nonnegative");
    if (beta_exp % 2 != 0)
        throw std::invalid_argument("reduce_rt_monomial: beta exponent must be even");
    if (sign != 1 && sign != -1) throw std::invalid_argument("reduce_rt_monomial: sign must be +/-1");

    // (1 - r^2)^{beta/2}
    Polynomial t2{Rational(1), Rational(0), Rational(-1)};
    Polynomial result = t2.pow(static_cast<unsigned>(beta_exp / 2));
    result *= Polynomial::monomial(alpha_exp, Rational(sign));
    return result;
}

}  // namespace raysplit
