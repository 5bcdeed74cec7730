#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "raysplit/bignum.hpp"

namespace raysplit {

/**
 * A binary necklace: the equivalence class of a cyclic word over {L, R},
 * stored as its canonical representative (the lexicographically smallest
 * rotation under L < R).
 */
class NecklaceWord {
public:
    /// Canonicalizes an arbitrary rotation. Throws std::invalid_argument on an
    /// empty word or characters outside {L, R}.
    static NecklaceWord from_beads(std::string_view beads);

    /// Wraps a word that is already the minimal rotation (used by the
    /// enumerator, which emits canonical forms by construction).
    static NecklaceWord trusted_canonical(std::string beads) { return NecklaceWord(std::move(beads)); }

    const std::string& str() const { return beads_; }
    int length() const { return static_cast<int>(beads_.size()); }

    bool operator==(const NecklaceWord&) const = default;
    auto operator<=>(const NecklaceWord&) const = default;

private:
    explicit NecklaceWord(std::string canonical) : beads_(std::move(canonical)) {}
    std::string beads_;
};

/// Lexicographically minimal rotation of `beads` (validated {L,R}, nonempty).
NecklaceWord canonicalize(std::string_view beads);

/// Integer statistics of a cyclic word. All pair counts are cyclic: the n
/// ordered adjacent positions (i, i+1 mod n), so a 1-letter word pairs with
/// itself (alpha(R) = 1).
struct NecklaceStats {
    int n_L = 0;   ///< L beads
    int n_R = 0;   ///< R beads
    int n = 0;     ///< total length
    int alpha = 0; ///< cyclically adjacent equal pairs (LL or RR)
    int beta = 0;  ///< cyclically adjacent unequal pairs (LR or RL); always even
    int gamma = 0; ///< weighted length 2 n_L + n_R
    int chi = 0;   ///< n plus the number of cyclically adjacent RR pairs
};

/// Statistics of a raw (not necessarily canonical) word; rotation invariant.
NecklaceStats compute_stats(std::string_view beads);
NecklaceStats compute_stats(const NecklaceWord& w);

struct PrimitiveDecomposition {
    NecklaceWord primitive;
    int nu = 1;  ///< repetition count; nu == 1 iff the necklace is prime
};

/// Unique (primitive, nu) with w = primitive^nu as a necklace.
PrimitiveDecomposition primitive_decomposition(const NecklaceWord& w);

/// Number of binary necklaces of the given length:
/// (1/len) * sum over divisors d of totient(d) * 2^(len/d).
BigInt count_necklaces(int length);

/// Number of aperiodic necklaces: (1/len) * sum over divisors d of
/// moebius(d) * 2^(len/d).
BigInt count_prime_necklaces(int length);

/// All canonical necklaces of exactly this length, lexicographic order.
std::vector<NecklaceWord> enumerate_necklaces(int length);

/// The aperiodic (prime) necklaces of exactly this length, lexicographic order.
std::vector<NecklaceWord> enumerate_prime_necklaces(int length);

namespace detail {

/**
 * Fredricksen-Kiessig-Maier generation of length-n binary necklaces in
 * lexicographic order. Emits (beads, smallest_period); the emitted word is the
 * minimal rotation, and the necklace is prime iff smallest_period == n.
 */
template <class F>
void fkm_generate(int n, F&& emit) {
    std::string a(static_cast<std::size_t>(n) + 1, 'L');  // a[0] is a sentinel
    auto rec = [&](auto&& self, int t, int p) -> void {
        if (t > n) {
            if (n % p == 0) emit(std::string_view(a).substr(1), p);
            return;
        }
        a[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(t - p)];
        self(self, t + 1, p);
        if (a[static_cast<std::size_t>(t - p)] == 'L') {
            a[static_cast<std::size_t>(t)] = 'R';
            self(self, t + 1, t);
        }
    };
    rec(rec, 1, 1);
}

}  // namespace detail

/// Streams every canonical necklace of the given length in lexicographic
/// order. F is called with a std::string_view valid only during the call.
template <class F>
void for_each_necklace(int length, F&& f) {
    if (length < 1) throw std::invalid_argument("for_each_necklace: length must be >= 1");
    detail::fkm_generate(length, [&](std::string_view beads, int) { f(beads); });
}

/// Like for_each_necklace, but also hands over the smallest period, i.e. the
/// length of the primitive word (period == length for prime necklaces).
template <class F>
void for_each_necklace_period(int length, F&& f) {
    if (length < 1) throw std::invalid_argument("for_each_necklace_period: length must be >= 1");
    detail::fkm_generate(length, std::forward<F>(f));
}

/// Streams the prime necklaces only.
template <class F>
void for_each_prime_necklace(int length, F&& f) {
    if (length < 1) throw std::invalid_argument("for_each_prime_necklace: length must be >= 1");
    detail::fkm_generate(length, [&](std::string_view beads, int period) {
        if (period == length) f(beads);
    });
}

}  // namespace raysplit
