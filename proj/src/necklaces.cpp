#include "raysplit/necklaces.hpp"

#include <stdexcept>

#include "raysplit/numtheory.hpp"

namespace raysplit {

namespace {

void validate_beads(std::string_view beads) {
    if (beads.empty()) throw std::invalid_argument("necklace word must be nonempty");
    for (char c : beads)
        if (c != 'L' && c != 'R')
            throw std::invalid_argument("necklace word may contain only 'L' and 'R'");
}

std::string minimal_rotation(std::string_view beads) {
    const std::size_t n = beads.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            char cs = beads[(s + i) % n];
            char cb = beads[(best + i) % n];
            if (cs != cb) {
                if (cs < cb) best = s;
                break;
            }
        }
    }
    std::string out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(beads[(best + i) % n]);
    return out;
}

}  // namespace

NecklaceWord NecklaceWord::from_beads(std::string_view beads) {
    validate_beads(beads);
    return NecklaceWord(minimal_rotation(beads));
}

NecklaceWord canonicalize(std::string_view beads) { return NecklaceWord::from_beads(beads); }

NecklaceStats compute_stats(std::string_view beads) {
    validate_beads(beads);
    NecklaceStats s;
    const int n = static_cast<int>(beads.size());
    s.n = n;
    int rr_pairs = 0;
    for (int i = 0; i < n; ++i) {
        const char cur = beads[static_cast<std::size_t>(i)];
        const char next = beads[static_cast<std::size_t>((i + 1) % n)];
        if (cur == 'L')
            ++s.n_L;
        else
            ++s.n_R;
        if (cur == next) {
            ++s.alpha;
            if (cur == 'R') ++rr_pairs;
        } else {
            ++s.beta;
        }
    }
    s.gamma = 2 * s.n_L + s.n_R;
    s.chi = n + rr_pairs;
    return s;
}

NecklaceStats compute_stats(const NecklaceWord& w) { return compute_stats(w.str()); }

PrimitiveDecomposition primitive_decomposition(const NecklaceWord& w) {
    const std::string& beads = w.str();
    const int n = w.length();
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (int i = d; i < n && periodic; ++i)
            periodic = beads[static_cast<std::size_t>(i)] == beads[static_cast<std::size_t>(i % d)];
        if (periodic) {
            // The length-d prefix of a minimal rotation is itself minimal.
            return PrimitiveDecomposition{NecklaceWord::trusted_canonical(beads.substr(0, static_cast<std::size_t>(d))),
                                          n / d};
        }
    }
    return PrimitiveDecomposition{w, 1};  // unreachable: d = n always matches
}

BigInt count_necklaces(int length) {
    if (length < 1) throw std::invalid_argument("count_necklaces: length must be >= 1");
    BigInt sum(0);
    for (int d = 1; d <= length; ++d) {
        if (length % d != 0) continue;
        sum += BigInt(totient(static_cast<std::uint64_t>(d))) << (length / d);
    }
    return sum / length;
}

BigInt count_prime_necklaces(int length) {
    if (length < 1) throw std::invalid_argument("count_prime_necklaces: length must be >= 1");
    BigInt sum(0);
    for (int d = 1; d <= length; ++d) {
        if (length % d != 0) continue;
        sum += moebius(static_cast<std::uint64_t>(d)) * (BigInt(1) << (length / d));
    }
    return sum / length;
}

std::vector<NecklaceWord> enumerate_necklaces(int length) {
    std::vector<NecklaceWord> out;
    for_each_necklace(length, [&](std::string_view beads) {
        out.push_back(NecklaceWord::trusted_canonical(std::string(beads)));
    });
    return out;
}

std::vector<NecklaceWord> enumerate_prime_necklaces(int length) {
    std::vector<NecklaceWord> out;
    for_each_prime_necklace(length, [&](std::string_view beads) {
        out.push_back(NecklaceWord::trusted_canonical(std::string(beads)));
    });
    return out;
}

}  // namespace raysplit
