#include "nlbox/box.hpp"

#include "nlbox/rng.hpp"
#include "nlbox/spaces.hpp"

namespace nlbox {

BoxDistribution perfect_box(BitVec x, BitVec y)
{
    return imperfect_box(x, y, Rational(1));
}

BoxDistribution imperfect_box(BitVec x, BitVec y, const Rational& p)
{
    if (!check_admissibility(x, y))
        throw AdmissibilityError("inadmissible input pair (" + x.str() + ", " + y.str() + ")");
    if (p < 0 || p > 1)
        throw RangeError("correctness probability must lie in [0, 1], got " + rational_str(p));
    Rational half_p = p / 2;
    Rational half_q = (1 - p) / 2;
    BoxDistribution d;
    d.x = x;
    d.y = y;
    if (inner_product(x, y) == 0) {
        d.p00 = d.p11 = half_p;
        d.p01 = d.p10 = half_q;
    } else {
        d.p01 = d.p10 = half_p;
        d.p00 = d.p11 = half_q;
    }
    return d;
}

Rational correlation_of(const BoxDistribution& d)
{
    return d.p00 + d.p11 - d.p01 - d.p10;
}

bool no_signaling_check(const BoxDistribution& d)
{
    Rational half(1, 2);
    return d.p00 + d.p01 == half && d.p10 + d.p11 == half && d.p00 + d.p10 == half &&
           d.p01 + d.p11 == half;
}

std::vector<std::pair<int, int>> sample_outcomes(BitVec x, BitVec y, const Rational& p,
                                                 std::uint64_t seed, std::uint64_t trials)
{
    if (!check_admissibility(x, y))
        throw AdmissibilityError("inadmissible input pair (" + x.str() + ", " + y.str() + ")");
    Bernoulli correct(p);
    Sampler sampler(seed);
    int target = inner_product(x, y);
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(trials));
    for (std::uint64_t t = 0; t < trials; ++t) {
        // Draw order is part of the contract: alpha word first, then the
        // correctness word, so streams stay comparable across tools.
        int alpha = sampler.next_bit();
        int beta = alpha ^ target ^ (correct.draw(sampler) ? 0 : 1);
        out.emplace_back(alpha, beta);
    }
    return out;
}

SampleReport sample_correlation(BitVec x, BitVec y, const Rational& p, std::uint64_t seed,
                                std::uint64_t trials)
{
    if (trials == 0)
        throw RangeError("trial count must be positive");
    auto outcomes = sample_outcomes(x, y, p, seed, trials);
    std::int64_t agree = 0;
    for (auto [a, b] : outcomes)
        agree += (a == b) ? 1 : -1;
    SampleReport r;
    r.n = x.n();
    r.x = x;
    r.y = y;
    r.p = p;
    r.trials = trials;
    r.seed = seed;
    r.empirical_E = Rational(agree, static_cast<std::int64_t>(trials));
    r.exact_E = correlation_of(imperfect_box(x, y, p));
    return r;
}

int tripartite_parity(BitVec x, BitVec y, BitVec z, BitVec c)
{
    // All four vectors are inputs and must lie in the odd-parity input space.
    for (const BitVec* v : {&x, &y, &z, &c})
        if (parity(*v) != 1)
            throw ParityError("tripartite inputs must have odd parity, got " + v->str());
    return inner_product(x, y) ^ inner_product(x, z) ^ inner_product(y, z) ^
           inner_product(x, c) ^ inner_product(y, c) ^ inner_product(z, c);
}

} // namespace nlbox
