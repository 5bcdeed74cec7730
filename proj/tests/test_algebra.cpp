#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "raysplit/chebyshev.hpp"
#include "raysplit/numtheory.hpp"
#include "raysplit/polynomial.hpp"

using namespace raysplit;

TEST_CASE("totient basics and the divisor-sum identity") {
    CHECK(totient(1) == 1);
    CHECK(totient(2) == 1);
    CHECK(totient(3) == 2);
    CHECK(totient(4) == 2);
    CHECK(totient(12) == 4);  // frozen from the gcd-scan oracle
    CHECK_THROWS_AS(totient(0), std::invalid_argument);

    for (int n = 1; n <= 200; ++n) CHECK(totient(static_cast<std::uint64_t>(n)) == oracles::totient_scan(n));

    for (int n = 1; n <= 1000; ++n) {
        std::uint64_t sum = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) sum += totient(static_cast<std::uint64_t>(d));
        CHECK(sum == static_cast<std::uint64_t>(n));
    }
}

TEST_CASE("moebius against its defining sum") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK_THROWS_AS(moebius(0), std::invalid_argument);
    for (int n = 1; n <= 300; ++n) {
        int sum = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) sum += moebius(static_cast<std::uint64_t>(d));
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("binomial is total and matches Pascal's triangle") {
    CHECK(binomial(2, 1) == 2);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(20, 10) == 184756);  // frozen from the Pascal oracle
    CHECK(binomial(3, 7) == 0);
    CHECK(binomial(-2, 0) == 0);
    CHECK(binomial(0, 0) == 1);

    for (int n = 0; n <= 40; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == BigInt(oracles::pascal_binomial(n, k)));

    // Pascal recurrence as a property
    for (int n = 1; n <= 40; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("polynomial ring operations") {
    const Polynomial one_minus_r2{Rational(1), Rational(0), Rational(-1)};
    const Polynomial r2 = Polynomial::monomial(2);
    CHECK(one_minus_r2 + r2 == Polynomial::constant(1));

    const Polynomial r = Polynomial::monomial(1);
    CHECK(r * r == r2);

    const Polynomial u2{Rational(-1), Rational(0), Rational(4)};
    CHECK(u2.eval(Rational(1, 2)) == 0);
    CHECK(u2.eval(0.5) == doctest::Approx(0.0));

    CHECK(Polynomial().is_zero());
    CHECK(Polynomial{Rational(0), Rational(0)}.is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK((r2 - r2).is_zero());
    CHECK(r.pow(5) == Polynomial::monomial(5));
    CHECK(r.scaled(Rational(0)).is_zero());
    CHECK(Polynomial{Rational(1), Rational(1)}.pow(2) ==
          Polynomial{Rational(1), Rational(2), Rational(1)});
    CHECK((-r).coeff(1) == Rational(-1));
    CHECK(u2.coeff(5) == 0);
    CHECK(u2.str() == "4r^2 - 1");
}

TEST_CASE("Chebyshev polynomials of both kinds") {
    CHECK(chebyshev_U(0) == Polynomial::constant(1));
    CHECK(chebyshev_U(1) == Polynomial::monomial(1, Rational(2)));
    CHECK(chebyshev_U(2) == Polynomial{Rational(-1), Rational(0), Rational(4)});
    CHECK(chebyshev_T(0) == Polynomial::constant(1));
    CHECK(chebyshev_T(1) == Polynomial::monomial(1));
    CHECK(chebyshev_T(2) == Polynomial{Rational(-1), Rational(0), Rational(2)});
    CHECK(chebyshev_T(4) == Polynomial{Rational(1), Rational(0), Rational(-8), Rational(0), Rational(8)});
    CHECK_THROWS_AS(chebyshev_T(-1), std::invalid_argument);
    CHECK_THROWS_AS(chebyshev_U(-1), std::invalid_argument);

    // U_n(1) = n + 1, T_n(1) = 1
    for (int n = 0; n <= 12; ++n) {
        CHECK(chebyshev_U(n).eval(Rational(1)) == n + 1);
        CHECK(chebyshev_T(n).eval(Rational(1)) == 1);
    }
}

TEST_CASE("Pell-type identity T_n^2 - (r^2 - 1) U_{n-1}^2 = 1") {
    const Polynomial r2_minus_1{Rational(-1), Rational(0), Rational(1)};
    for (int n = 1; n <= 12; ++n) {
        const Polynomial t = chebyshev_T(n);
        const Polynomial u = chebyshev_U(n - 1);
        CHECK(t * t - r2_minus_1 * (u * u) == Polynomial::constant(1));
    }
}

TEST_CASE("sin-product check against the standard library") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> dist(1e-3, 3.14);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = dist(rng);
        for (int n = 1; n <= 10; ++n) {
            const double lhs = std::sin(n * x);
            const double rhs = std::sin(x) * chebyshev_U(n - 1).eval(std::cos(x));
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("rt-monomial reduction") {
    CHECK(reduce_rt_monomial(0, 2, 1) == Polynomial{Rational(1), Rational(0), Rational(-1)});
    CHECK(reduce_rt_monomial(1, 0, -1) == Polynomial::monomial(1, Rational(-1)));
    CHECK(reduce_rt_monomial(2, 2, 1) ==
          Polynomial{Rational(0), Rational(0), Rational(1), Rational(0), Rational(-1)});
    CHECK_THROWS_AS(reduce_rt_monomial(0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(reduce_rt_monomial(-1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(reduce_rt_monomial(0, 0, 2), std::invalid_argument);

    // (1 - r^2)^m expanded termwise against the binomial theorem
    for (int m = 0; m <= 10; ++m) {
        const Polynomial reduced = reduce_rt_monomial(0, 2 * m, 1);
        for (int k = 0; k <= m; ++k) {
            const Rational expected = Rational(binomial(m, k)) * (k % 2 == 0 ? 1 : -1);
            CHECK(reduced.coeff(2 * k) == expected);
            CHECK(reduced.coeff(2 * k + 1) == 0);
        }
    }
}
