#include "nlbox/bounds.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include "nlbox/box.hpp"
#include "nlbox/errors.hpp"
#include "nlbox/rng.hpp"
#include "nlbox/spaces.hpp"

namespace nlbox {

namespace {

// (-1)^bit as an integer.
int sign_of(int bit)
{
    return bit ? -1 : 1;
}

// The translated correlation exponent x.y + (x ^ y).T'.
int translated_exponent(const BitVec& x, const BitVec& y, const BitVec& t)
{
    return inner_product(x, y) ^ inner_product(x ^ y, t);
}

void require_enumerable(int n, const char* what)
{
    if (n > 16)
        throw FeasibilityError(std::string(what) + " enumerates 2^(n-1) translations, n = " +
                               std::to_string(n) + " is too large (max 16)");
}

// Calls fn(T') for every even-parity translation of length n.
template <typename Fn>
void for_each_even_translation(int n, Fn&& fn)
{
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t w = 0; w < limit; ++w) {
        if (std::popcount(w) & 1)
            continue;
        fn(BitVec(n, w));
    }
}

void require_probability(const Rational& p, const char* what)
{
    if (p < 0 || p > 1)
        throw RangeError(std::string(what) + " must lie in [0, 1], got " + rational_str(p));
}

void require_correlation(double e)
{
    if (std::abs(e) > 1.0)
        throw RangeError("correlation must lie in [-1, 1], got " + std::to_string(e));
}

void require_correlation(const Rational& e)
{
    if (e < -1 || e > 1)
        throw RangeError("correlation must lie in [-1, 1], got " + rational_str(e));
}

} // namespace

void validate_quad(const SettingsQuad& q)
{
    const BitVec* xs[2] = {&q.x1, &q.x2};
    const BitVec* ys[2] = {&q.y1, &q.y2};
    for (const BitVec* x : xs)
        for (const BitVec* y : ys)
            if (!check_admissibility(*x, *y))
                throw AdmissibilityError("settings pair (" + x->str() + ", " + y->str() +
                                         ") violates the admissibility relations");
}

double chsh_value(double e11, double e12, double e21, double e22)
{
    require_correlation(e11);
    require_correlation(e12);
    require_correlation(e21);
    require_correlation(e22);
    return std::abs(e11 - e12) + std::abs(e21 + e22);
}

Rational chsh_value(const Rational& e11, const Rational& e12,
                    const Rational& e21, const Rational& e22)
{
    require_correlation(e11);
    require_correlation(e12);
    require_correlation(e21);
    require_correlation(e22);
    return abs(e11 - e12) + abs(e21 + e22);
}

Rational chsh_of_settings(const SettingsQuad& q, const Rational& p)
{
    validate_quad(q);
    require_probability(p, "box strength p");
    const Rational e = 2 * p - 1;
    const BitVec* xs[2] = {&q.x1, &q.x2};
    const BitVec* ys[2] = {&q.y1, &q.y2};
    Rational corr[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            corr[i][j] = e * sign_of(inner_product(*xs[i], *ys[j]));
    return chsh_value(corr[0][0], corr[0][1], corr[1][0], corr[1][1]);
}

double q_w0(double e)
{
    require_correlation(e);
    const double e2 = e * e;
    return (1.0 + 3.0 * e2 * e2) / 4.0;
}

Rational q_w0(const Rational& e)
{
    require_correlation(e);
    const Rational e2 = e * e;
    return (1 + 3 * e2 * e2) / 4;
}

double p_w1(double e)
{
    require_correlation(e);
    const double f = 1.0 + e * e;
    return f * f / 4.0;
}

Rational p_w1(const Rational& e)
{
    require_correlation(e);
    const Rational f = 1 + e * e;
    return f * f / 4;
}

Rational q_w0_from_noise(const Rational& p)
{
    require_probability(p, "box strength p");
    // Probability that one indicator pair agrees.
    const Rational r = p * p + (1 - p) * (1 - p);
    return r * r * r + (1 - r) * (1 - r) * (1 - r);
}

Rational p_w1_from_noise(const Rational& p)
{
    require_probability(p, "box strength p");
    const Rational a = p * p;
    const Rational b = (1 - p) * (1 - p);
    return a * a + b * b + 2 * a * b;
}

Rational threshold_squared()
{
    // q_w0 + p_w1 = (1 + t + 2 t^2) / 2 with t = E^2, so the sum crosses 1
    // where 2 t^2 + t - 1 = 0. Extract the positive root exactly.
    const BigInt a = 2, b = 1, c = -1;
    const BigInt disc = b * b - 4 * a * c;
    const BigInt root = boost::multiprecision::sqrt(disc);
    if (root * root != disc)
        throw FeasibilityError("threshold discriminant is not a perfect square");
    return Rational(-b + root, 2 * a);
}

double consistency_threshold()
{
    return std::sqrt(to_double(threshold_squared()));
}

std::vector<TradeoffPoint> tradeoff_curve(int steps)
{
    if (steps < 2)
        throw RangeError("tradeoff curve needs at least 2 steps, got " + std::to_string(steps));
    std::vector<TradeoffPoint> curve;
    curve.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        TradeoffPoint pt;
        pt.e = Rational(2 * k - (steps - 1), steps - 1);
        pt.q_w0 = q_w0(pt.e);
        pt.p_w1 = p_w1(pt.e);
        pt.sum = pt.q_w0 + pt.p_w1;
        curve.push_back(pt);
    }
    return curve;
}

McEstimate monte_carlo_tradeoff(const Rational& p, std::uint64_t trials, std::uint64_t seed)
{
    require_probability(p, "box strength p");
    if (trials == 0)
        throw RangeError("Monte Carlo needs at least one trial");

    Sampler sampler(seed);
    const Bernoulli correct(p);

    // First pass: three independent indicator pairs per trial; the event is
    // that every pair agrees or every pair disagrees (the fourth relation is
    // determined by the other three).
    std::uint64_t q_count = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        int respected = 0;
        for (int pair = 0; pair < 3; ++pair) {
            const bool a = correct.draw(sampler);
            const bool b = correct.draw(sampler);
            respected += (a == b) ? 1 : 0;
        }
        if (respected == 3 || respected == 0)
            ++q_count;
    }

    // Second pass: four indicators per trial, one per setting pair; the event
    // is one of the four aligned patterns.
    std::uint64_t p_count = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const bool b11 = correct.draw(sampler);
        const bool b12 = correct.draw(sampler);
        const bool b21 = correct.draw(sampler);
        const bool b22 = correct.draw(sampler);
        const bool all_correct = b11 && b12 && b21 && b22;
        const bool all_incorrect = !b11 && !b12 && !b21 && !b22;
        const bool first_pair_only = b11 && b12 && !b21 && !b22;
        const bool second_pair_only = !b11 && !b12 && b21 && b22;
        if (all_correct || all_incorrect || first_pair_only || second_pair_only)
            ++p_count;
    }

    McEstimate est;
    est.p = p;
    est.trials = trials;
    est.seed = seed;
    est.q_hat = Rational(q_count, trials);
    est.p_hat = Rational(p_count, trials);
    est.q_exact = q_w0_from_noise(p);
    est.p_exact = p_w1_from_noise(p);
    est.algorithm = Sampler::kAlgorithm;
    return est;
}

MeanSquare mean_square_chsh(const SettingsQuad& q)
{
    validate_quad(q);
    const int n = q.x1.n();
    require_enumerable(n, "mean_square_chsh");

    MeanSquare out;
    BigInt total = 0;
    std::uint64_t count = 0;
    for_each_even_translation(n, [&](const BitVec& t) {
        const int e11 = sign_of(translated_exponent(q.x1, q.y1, t));
        const int e12 = sign_of(translated_exponent(q.x1, q.y2, t));
        const int e21 = sign_of(translated_exponent(q.x2, q.y1, t));
        const int e22 = sign_of(translated_exponent(q.x2, q.y2, t));
        const int s = std::abs(e11 - e12) + std::abs(e21 + e22);
        const std::int64_t s2 = static_cast<std::int64_t>(s) * s;
        total += s2;
        ++out.histogram[s2];
        ++count;
    });
    out.mean_square = Rational(total, count);
    return out;
}

Zeta fine_grained_zeta(const BitVec& x, const BitVec& y1, const BitVec& y2)
{
    if (!check_admissibility(x, y1))
        throw AdmissibilityError("settings pair (" + x.str() + ", " + y1.str() +
                                 ") violates the admissibility relations");
    if (!check_admissibility(x, y2))
        throw AdmissibilityError("settings pair (" + x.str() + ", " + y2.str() +
                                 ") violates the admissibility relations");
    if (inner_product(x, y1) != inner_product(x, y2))
        throw SettingsError("fine-grained pair requires x.y1 = x.y2, got x.y1 = " +
                            std::to_string(inner_product(x, y1)) + " and x.y2 = " +
                            std::to_string(inner_product(x, y2)));
    const int n = x.n();
    require_enumerable(n, "fine_grained_zeta");

    BigInt total = 0;
    std::uint64_t count = 0;
    for_each_even_translation(n, [&](const BitVec& t) {
        const int g = sign_of(translated_exponent(x, y1, t)) +
                      sign_of(translated_exponent(x, y2, t));
        total += static_cast<std::int64_t>(g) * g;
        ++count;
    });

    Zeta out;
    out.g2 = Rational(total, count);
    out.zeta = 0.5 + std::sqrt(to_double(out.g2)) / 4.0;
    return out;
}

TripartiteSettings default_tripartite_settings(int n)
{
    if (n != 8)
        throw FeasibilityError("reference three-party settings are defined for n = 8, got n = " +
                               std::to_string(n));
    TripartiteSettings s;
    s.x0 = BitVec::parse("10000000");
    s.x1 = BitVec::parse("10011000");
    s.y0 = BitVec::parse("01000000");
    s.y1 = BitVec::parse("00001000");
    s.z0 = BitVec::parse("00100000");
    s.z1 = BitVec::parse("00000100");
    s.c = BitVec::parse("00000010");
    return s;
}

void validate_tripartite(const TripartiteSettings& s)
{
    const BitVec* vs[7] = {&s.x0, &s.x1, &s.y0, &s.y1, &s.z0, &s.z1, &s.c};
    for (const BitVec* v : vs) {
        if (v->n() != s.x0.n())
            throw LengthError("three-party settings mix lengths " + std::to_string(s.x0.n()) +
                              " and " + std::to_string(v->n()));
        if (parity(*v) != 1)
            throw ParityError("three-party settings must have odd parity, got " + v->str());
    }
}

namespace {

int tri_sign(const TripartiteSettings& s, int i, int j, int k)
{
    const BitVec& x = i ? s.x1 : s.x0;
    const BitVec& y = j ? s.y1 : s.y0;
    const BitVec& z = k ? s.z1 : s.z0;
    return sign_of(tripartite_parity(x, y, z, s.c));
}

BitVec tri_phase_vector(const TripartiteSettings& s, int i, int j, int k)
{
    const BitVec& x = i ? s.x1 : s.x0;
    const BitVec& y = j ? s.y1 : s.y0;
    const BitVec& z = k ? s.z1 : s.z0;
    return x ^ y ^ z ^ s.c;
}

} // namespace

int tripartite_bell_I(const TripartiteSettings& s)
{
    validate_tripartite(s);
    return tri_sign(s, 0, 0, 0) + tri_sign(s, 0, 1, 1) + tri_sign(s, 1, 0, 0) -
           tri_sign(s, 1, 1, 1);
}

TriMean mean_square_tripartite_I(const TripartiteSettings& s)
{
    validate_tripartite(s);
    const int n = s.x0.n();
    require_enumerable(n, "mean_square_tripartite_I");

    const BitVec g000 = tri_phase_vector(s, 0, 0, 0);
    const BitVec g011 = tri_phase_vector(s, 0, 1, 1);
    const BitVec g100 = tri_phase_vector(s, 1, 0, 0);
    const BitVec g111 = tri_phase_vector(s, 1, 1, 1);

    BigInt total = 0;
    std::uint64_t count = 0;
    // Both blocks carry pure phase factors; the correlation signs of the
    // maximally violating pattern are absorbed, which is what makes the
    // second block a sum rather than a difference.
    for_each_even_translation(n, [&](const BitVec& t) {
        const int b1 = std::abs(sign_of(inner_product(g000, t)) + sign_of(inner_product(g011, t)));
        const int b2 = std::abs(sign_of(inner_product(g100, t)) + sign_of(inner_product(g111, t)));
        const std::int64_t v = b1 + b2;
        total += v * v;
        ++count;
    });

    TriMean out;
    out.mean_square = Rational(total, count);
    const BitVec delta = s.y0 ^ s.z0 ^ s.y1 ^ s.z1;
    out.symmetry_reduced =
        delta != BitVec::zero(n) && delta != BitVec::ones(n);
    return out;
}

int tripartite_J_algebraic(const TripartiteSettings& s)
{
    validate_tripartite(s);
    const int sum = tri_sign(s, 0, 0, 0) + tri_sign(s, 0, 0, 1) + tri_sign(s, 1, 0, 0) -
                    tri_sign(s, 1, 0, 1) + tri_sign(s, 0, 1, 0) - tri_sign(s, 0, 1, 1) -
                    tri_sign(s, 1, 1, 0) - tri_sign(s, 1, 1, 1);
    return std::abs(sum);
}

TriMean mean_square_tripartite_J(const TripartiteSettings& s)
{
    validate_tripartite(s);
    const int n = s.x0.n();
    require_enumerable(n, "mean_square_tripartite_J");

    // Four blocks, indexed by (i, j); within a block only z varies, so every
    // translated correlation in block (i, j) is sigma * (-1)^(g.T') with the
    // block's own sign pattern taken from the combination itself.
    int sigma[2][2][2];
    BitVec g[2][2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                sigma[i][j][k] = tri_sign(s, i, j, k);
                g[i][j][k] = tri_phase_vector(s, i, j, k);
            }

    BigInt total = 0;
    std::uint64_t count = 0;
    for_each_even_translation(n, [&](const BitVec& t) {
        int chi[2][2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    chi[i][j][k] = sigma[i][j][k] * sign_of(inner_product(g[i][j][k], t));
        const int b00 = std::abs(chi[0][0][0] + chi[0][0][1]);
        const int b10 = std::abs(chi[1][0][0] - chi[1][0][1]);
        const int b01 = std::abs(chi[0][1][0] - chi[0][1][1]);
        const int b11 = std::abs(chi[1][1][0] + chi[1][1][1]);
        const std::int64_t v = b00 + b10 + b01 + b11;
        total += v * v;
        ++count;
    });

    TriMean out;
    out.mean_square = Rational(total, count);
    const BitVec dz = s.z0 ^ s.z1;
    out.symmetry_reduced = dz != BitVec::zero(n) && dz != BitVec::ones(n);
    return out;
}

JSearchResult tripartite_bell_J_bound(int n)
{
    if (n != 8)
        throw FeasibilityError("the three-party bound search is defined for n = 8, got n = " +
                               std::to_string(n));
    const TripartiteSettings base = default_tripartite_settings(n);

    // Candidate second settings: odd parity, weight at most 3, ascending.
    std::vector<BitVec> candidates;
    for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
        const int weight = std::popcount(w);
        if ((weight & 1) && weight <= 3)
            candidates.push_back(BitVec(n, w));
    }

    JSearchResult result;
    result.bounded_search = true;
    result.candidates = 0;
    bool have_best = false;
    for (const BitVec& x1 : candidates)
        for (const BitVec& y1 : candidates)
            for (const BitVec& z1 : candidates) {
                TripartiteSettings cand = base;
                cand.x1 = x1;
                cand.y1 = y1;
                cand.z1 = z1;
                const TriMean m = mean_square_tripartite_J(cand);
                ++result.candidates;
                if (!have_best || m.mean_square > result.mean_square) {
                    have_best = true;
                    result.mean_square = m.mean_square;
                    result.best = cand;
                }
            }
    result.bound = std::sqrt(to_double(result.mean_square));
    return result;
}

}  // namespace nlbox
