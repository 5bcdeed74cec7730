#include "raysplit/numtheory.hpp"

#include <stdexcept>

namespace raysplit {

std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("totient: n must be >= 1");
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

int moebius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("moebius: n must be >= 1");
    int factors = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt acc(1);
    for (long long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;  // exact: C(n-k+i, i) is an integer at every step
    }
    return acc;
}

}  // namespace raysplit
