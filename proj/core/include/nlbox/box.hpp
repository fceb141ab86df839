#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nlbox/bitvec.hpp"
#include "nlbox/rational.hpp"

namespace nlbox {

// Joint outcome distribution of one box use: p_ab = P(alpha=a, beta=b | x, y).
struct BoxDistribution {
    BitVec x, y;
    Rational p00, p01, p10, p11;

    Rational prob(int alpha, int beta) const
    {
        return alpha == 0 ? (beta == 0 ? p00 : p01) : (beta == 0 ? p10 : p11);
    }
};

// The noiseless box: alpha xor beta = x.y, both outcome pairs consistent with
// that equation at probability 1/2 each. Requires an admissible input pair.
BoxDistribution perfect_box(BitVec x, BitVec y);

// The noisy box: alpha xor beta = x.y holds with probability p in [0, 1].
BoxDistribution imperfect_box(BitVec x, BitVec y, const Rational& p);

// E = P(alpha = beta) - P(alpha != beta) = (2p-1) * (-1)^(x.y).
Rational correlation_of(const BoxDistribution& d);

// True iff each party's marginal is exactly 1/2 for both of its outcomes,
// regardless of the other party's input.
bool no_signaling_check(const BoxDistribution& d);

// Draws outcome pairs from imperfect_box(x, y, p). Per trial, alpha is a fair
// engine bit and beta = alpha xor x.y unless the correctness draw fails.
// Deterministic for a given seed.
std::vector<std::pair<int, int>> sample_outcomes(BitVec x, BitVec y, const Rational& p,
                                                 std::uint64_t seed, std::uint64_t trials);

struct SampleReport {
    int n = 0;
    BitVec x, y;
    Rational p;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    Rational empirical_E; // (agreements - disagreements) / trials
    Rational exact_E;
};

// Runs sample_outcomes and summarizes it against the exact correlation.
SampleReport sample_correlation(BitVec x, BitVec y, const Rational& p, std::uint64_t seed,
                                std::uint64_t trials);

// Outcome parity of the three-party box:
// alpha xor beta xor gamma = x.y + x.z + y.z + x.c + y.c + z.c (mod 2),
// with c a fixed odd-parity offset vector.
int tripartite_parity(BitVec x, BitVec y, BitVec z, BitVec c);

} // namespace nlbox
