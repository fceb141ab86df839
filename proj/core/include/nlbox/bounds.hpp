#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "nlbox/bitvec.hpp"
#include "nlbox/rational.hpp"

namespace nlbox {

// Four measurement settings for the CHSH parameter: two per side.
struct SettingsQuad {
    BitVec x1;
    BitVec x2;
    BitVec y1;
    BitVec y2;
};

// Throws unless all four settings share one length and every (x_i, y_j)
// pair is admissible (which forces odd parity and even length).
void validate_quad(const SettingsQuad& q);

// CHSH combination S = |E11 - E12| + |E21 + E22| from four correlations.
// The double overload rejects |E| > 1.
double chsh_value(double e11, double e12, double e21, double e22);
Rational chsh_value(const Rational& e11, const Rational& e12,
                    const Rational& e21, const Rational& e22);

// S for a box of strength p evaluated on the quad, using the exact
// correlations (2p - 1) * (-1)^(x.y).
Rational chsh_of_settings(const SettingsQuad& q, const Rational& p);

// Probability that all symmetry relations hold between correct-outcome
// indicators (the W = 0 side): q = (1 + 3 E^4) / 4.
double q_w0(double e);
Rational q_w0(const Rational& e);

// Probability of the aligned double-pair outcome pattern (the W = 1 side):
// p = (1 + E^2)^2 / 4.
double p_w1(double e);
Rational p_w1(const Rational& e);

// Same two quantities written in the box strength p instead of E = 2p - 1.
// q = [p^2 + (1-p)^2]^3 + [1 - p^2 - (1-p)^2]^3 and
// p_w1 = p^4 + (1-p)^4 + 2 p^2 (1-p)^2.
Rational q_w0_from_noise(const Rational& p);
Rational p_w1_from_noise(const Rational& p);

// The squared correlation at which q_w0 + p_w1 = 1, extracted as the
// positive root of 2t^2 + t - 1 = 0. Exactly 1/2.
Rational threshold_squared();

// sqrt of the above as a double: the largest |E| consistent with both
// bounds saturating, 0.7071067811865476.
double consistency_threshold();

struct TradeoffPoint {
    Rational e;
    Rational q_w0;
    Rational p_w1;
    Rational sum;
};

// Exact trade-off curve sampled at steps >= 2 equally spaced E in [-1, 1].
std::vector<TradeoffPoint> tradeoff_curve(int steps);

struct McEstimate {
    Rational p;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    Rational q_hat;
    Rational p_hat;
    Rational q_exact;
    Rational p_exact;
    const char* algorithm = nullptr;
};

// Monte Carlo check of both closed forms at box strength p. Each q trial
// draws three independent pairs of correctness indicators and counts the
// event that every pair agrees or every pair disagrees. Each p trial draws
// four indicators (b11, b12, b21, b22) and counts the aligned patterns
// (cccc, iiii, ccii, iicc). The q pass consumes the generator stream first;
// draw order is part of the contract.
McEstimate monte_carlo_tradeoff(const Rational& p, std::uint64_t trials,
                                std::uint64_t seed);

struct MeanSquare {
    Rational mean_square;
    // S(T')^2 value -> number of translations producing it.
    std::map<std::int64_t, std::uint64_t> histogram;
};

// <S^2> of the CHSH combination under the uniform even-parity translation
// ensemble: E_ij(T') = (-1)^(x_i.y_j + (x_i^y_j).T'). Enumerates all
// 2^(n-1) even T'.
MeanSquare mean_square_chsh(const SettingsQuad& q);

struct Zeta {
    Rational g2;
    double zeta = 0.0;
};

// Fine-grained two-setting mean square <G^2> with
// G(T') = (-1)^(x.y1 + (x^y1).T') + (-1)^(x.y2 + (x^y2).T'),
// and the uncertainty figure zeta = 1/2 + sqrt(<G^2>)/4.
// Requires x.y1 = x.y2, else the pair has no common reference value.
Zeta fine_grained_zeta(const BitVec& x, const BitVec& y1, const BitVec& y2);

struct TripartiteSettings {
    BitVec x0;
    BitVec x1;
    BitVec y0;
    BitVec y1;
    BitVec z0;
    BitVec z1;
    BitVec c;
};

// The reference three-party setting family at n = 8.
TripartiteSettings default_tripartite_settings(int n);

// Throws unless all seven vectors share length n and have odd parity.
void validate_tripartite(const TripartiteSettings& s);

// Mermin-type combination I = E000 + E011 + E100 - E111 evaluated on the
// perfect three-party box (indices pick x_i, y_j, z_k).
int tripartite_bell_I(const TripartiteSettings& s);

struct TriMean {
    Rational mean_square;
    // False when the block phase is constant over T' and the enumeration
    // collapses to the trivial algebraic bound.
    bool symmetry_reduced = false;
};

// <I^2> under the even-parity translation ensemble, in the reduced
// pure-phase block form (|chi000 + chi011| + |chi100 + chi111|)^2 with
// chi_ijk = (-1)^((x_i ^ y_j ^ z_k ^ c).T'). The correlation signs of the
// maximally violating pattern are already absorbed into the blocks.
TriMean mean_square_tripartite_I(const TripartiteSettings& s);

// Svetlichny-type combination
// J = |E000 + E001 + E100 - E101 + E010 - E011 - E110 - E111|
// evaluated on the perfect three-party box.
int tripartite_J_algebraic(const TripartiteSettings& s);

// <J^2> with the actual box correlations kept inside the four two-term
// blocks |E(xi,yj,z0) +/- E(xi,yj,z1)|, translation-averaged over even T'.
TriMean mean_square_tripartite_J(const TripartiteSettings& s);

struct JSearchResult {
    TripartiteSettings best;
    Rational mean_square;
    double bound = 0.0;
    // True: the scan covered a documented candidate family, not all inputs.
    bool bounded_search = true;
    std::uint64_t candidates = 0;
};

// Maximizes <J^2> over x1, y1, z1 drawn from the odd-parity weight <= 3
// vectors (x0, y0, z0, c fixed to the reference family), enumerating the
// full translation ensemble for every candidate. Returns sqrt of the best
// mean square as the bound; expected 4 / sqrt(2) * 2 = 5.656854...
JSearchResult tripartite_bell_J_bound(int n);

}  // namespace nlbox
