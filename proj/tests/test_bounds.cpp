#include <cmath>

#include "doctest.h"

#include "nlbox/bounds.hpp"
#include "nlbox/rng.hpp"
#include "nlbox/spaces.hpp"
#include "nlbox/symmetry.hpp"

using namespace nlbox;

namespace {

SettingsQuad corrected_quad()
{
    return SettingsQuad{BitVec::parse("010000"), BitVec::parse("100000"),
                        BitVec::parse("011100"), BitVec::parse("000100")};
}

SettingsQuad printed_quad()
{
    return SettingsQuad{BitVec::parse("100000"), BitVec::parse("010000"),
                        BitVec::parse("011100"), BitVec::parse("000100")};
}

} // namespace

TEST_CASE("chsh_value and its domain")
{
    const Rational one(1);
    CHECK(chsh_value(one, -one, one, one) == 4);
    CHECK(chsh_value(one, one, one, -one) == 0);
    CHECK(chsh_value(Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(1, 2)) == 2);
    CHECK(chsh_value(0.5, -0.5, 0.5, 0.5) == doctest::Approx(2.0));
    CHECK_THROWS_AS(chsh_value(Rational(5, 4), one, one, one), RangeError);
    CHECK_THROWS_AS(chsh_value(1.0, 1.0, 1.01, 1.0), RangeError);
}

TEST_CASE("quad validation names the offending pair")
{
    CHECK_NOTHROW(validate_quad(corrected_quad()));
    SettingsQuad bad = corrected_quad();
    bad.y2 = BitVec::parse("110000"); // even parity
    CHECK_THROWS_WITH_AS(validate_quad(bad), doctest::Contains("110000"), AdmissibilityError);
}

TEST_CASE("closed forms agree between the correlation and noise routes")
{
    // Q(W=0) and P(W=1) are stated both in E and in the box strength p with
    // E = 2p - 1; the two routes must coincide exactly for rational inputs.
    for (int k = 0; k <= 40; ++k) {
        const Rational p(k, 40);
        const Rational e = 2 * p - 1;
        CHECK(q_w0(e) == q_w0_from_noise(p));
        CHECK(p_w1(e) == p_w1_from_noise(p));
    }
    CHECK(q_w0(Rational(1, 3)) == Rational(84, 324));
    CHECK(p_w1(Rational(1, 3)) == Rational(25, 81));
    CHECK_THROWS_AS(q_w0(Rational(9, 8)), RangeError);
    CHECK_THROWS_AS(p_w1(Rational(-9, 8)), RangeError);
}

TEST_CASE("double interfaces track the rational ones")
{
    for (int k = 0; k <= 20; ++k) {
        const Rational e = Rational(k, 10) - 1;
        const double ed = to_double(e);
        CHECK(q_w0(ed) == doctest::Approx(to_double(q_w0(e))).epsilon(1e-14));
        CHECK(p_w1(ed) == doctest::Approx(to_double(p_w1(e))).epsilon(1e-14));
    }
}

TEST_CASE("threshold is the exact root of 2t^2 + t - 1")
{
    const Rational t = threshold_squared();
    CHECK(t == Rational(1, 2));
    CHECK(2 * t * t + t - 1 == 0);
    // At the threshold the two closed forms sum to one exactly.
    const Rational q = (1 + 3 * t * t) / 4;
    const Rational p = (1 + t) * (1 + t) / 4;
    CHECK(q == Rational(7, 16));
    CHECK(p == Rational(9, 16));
    CHECK(q + p == 1);
    CHECK(consistency_threshold() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("trade-off curve endpoints, symmetry, and step structure")
{
    const auto curve = tradeoff_curve(101);
    CHECK(curve.size() == 101);
    CHECK(curve.front().e == -1);
    CHECK(curve.back().e == 1);
    CHECK(curve.front().q_w0 == 1);
    CHECK(curve.front().p_w1 == 1);
    CHECK(curve[50].e == 0);
    CHECK(curve[50].sum == Rational(1, 2));
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const auto& pt = curve[i];
        CHECK(pt.sum == pt.q_w0 + pt.p_w1);
        // Both forms are even in E.
        const auto& mirror = curve[curve.size() - 1 - i];
        CHECK(pt.q_w0 == mirror.q_w0);
        CHECK(pt.p_w1 == mirror.p_w1);
    }
    CHECK_THROWS_AS(tradeoff_curve(1), RangeError);
}

TEST_CASE("chsh_of_settings evaluates the standard combination")
{
    CHECK(chsh_of_settings(corrected_quad(), Rational(1)) == 4);
    CHECK(chsh_of_settings(printed_quad(), Rational(1)) == 0);
    // Linear in the correlation strength: S(p) = |2p-1| S(1) for this quad.
    CHECK(chsh_of_settings(corrected_quad(), Rational(3, 4)) == 2);
    CHECK(chsh_of_settings(corrected_quad(), Rational(1, 2)) == 0);
}

TEST_CASE("translation ensemble mean square of S")
{
    const MeanSquare corrected = mean_square_chsh(corrected_quad());
    CHECK(corrected.mean_square == 8);
    CHECK(corrected.histogram.size() == 2);
    CHECK(corrected.histogram.at(0) == 16);
    CHECK(corrected.histogram.at(16) == 16);

    // The misprinted ordering changes S itself but not the ensemble moment.
    const MeanSquare printed = mean_square_chsh(printed_quad());
    CHECK(printed.mean_square == 8);

    // Within one symmetry subset the moment collapses to the classical value.
    const Partition part = partition_by_symmetry(6);
    const auto& s0 = part.subsets.front();
    const SettingsQuad within{s0.X[1], s0.X[2], s0.Y[3], s0.Y[4]};
    CHECK(mean_square_chsh(within).mean_square == 4);
}

TEST_CASE("mean square against a direct translation average")
{
    // Oracle: average S(T')^2 over the even translations by rebuilding each
    // correlation from the translated box exponent directly.
    const SettingsQuad quad = corrected_quad();
    const auto translations = enumerate_translations(6);
    Rational total(0);
    for (const BitVec& t : translations) {
        auto corr = [&](const BitVec& x, const BitVec& y) {
            const int exp = inner_product(x, y) ^ inner_product(x ^ y, t);
            return exp == 0 ? 1 : -1;
        };
        const int e11 = corr(quad.x1, quad.y1);
        const int e12 = corr(quad.x1, quad.y2);
        const int e21 = corr(quad.x2, quad.y1);
        const int e22 = corr(quad.x2, quad.y2);
        const int s = std::abs(e11 - e12) + std::abs(e21 + e22);
        total += s * s;
    }
    CHECK(mean_square_chsh(quad).mean_square == total / int(translations.size()));
}

TEST_CASE("fine-grained bound")
{
    const BitVec x = BitVec::parse("100000");
    const BitVec y1 = BitVec::parse("010000");
    const BitVec y2 = BitVec::parse("001000");
    const Zeta z = fine_grained_zeta(x, y1, y2);
    CHECK(z.g2 == 2);
    CHECK(z.zeta == doctest::Approx(0.5 + std::sqrt(2.0) / 4.0).epsilon(1e-15));

    // Identical settings degenerate to the algebraic maximum.
    CHECK(fine_grained_zeta(x, y1, y1).g2 == 4);

    // The pair must probe the same relation value.
    CHECK_THROWS_WITH_AS(fine_grained_zeta(x, y1, BitVec::parse("111000")),
                         doctest::Contains("fine-grained pair requires x.y1 = x.y2"),
                         SettingsError);
}

TEST_CASE("monte carlo estimates are deterministic and mirror the draw contract")
{
    const Rational p(3, 4);
    const std::uint64_t trials = 20000;
    const std::uint64_t seed = 4242;

    const McEstimate a = monte_carlo_tradeoff(p, trials, seed);
    const McEstimate b = monte_carlo_tradeoff(p, trials, seed);
    CHECK(a.q_hat == b.q_hat);
    CHECK(a.p_hat == b.p_hat);
    CHECK(a.algorithm == std::string("mt19937_64"));
    CHECK(a.q_exact == q_w0_from_noise(p));
    CHECK(a.p_exact == p_w1_from_noise(p));

    // Oracle replay: same engine, same draw order, independent event logic.
    Sampler sampler(seed);
    const Bernoulli correct(p);
    std::uint64_t q_count = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const bool c1 = correct.draw(sampler) == correct.draw(sampler);
        const bool c2 = correct.draw(sampler) == correct.draw(sampler);
        const bool c3 = correct.draw(sampler) == correct.draw(sampler);
        if (c1 == c2 && c2 == c3)
            ++q_count;
    }
    std::uint64_t p_count = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const bool b11 = correct.draw(sampler);
        const bool b12 = correct.draw(sampler);
        const bool b21 = correct.draw(sampler);
        const bool b22 = correct.draw(sampler);
        if (b11 == b12 && b21 == b22)
            ++p_count;
    }
    CHECK(a.q_hat == Rational(q_count, trials));
    CHECK(a.p_hat == Rational(p_count, trials));

    CHECK_THROWS_AS(monte_carlo_tradeoff(Rational(5, 4), 10, 1), RangeError);
    CHECK_THROWS_AS(monte_carlo_tradeoff(p, 0, 1), RangeError);
}

TEST_CASE("monte carlo draw order: q replay alone diverges from a fresh stream")
{
    // The p pass consumes the stream after the q pass; feeding the same seed
    // to a p-only replay must not reproduce the library's p_hat in general.
    const McEstimate est = monte_carlo_tradeoff(Rational(2, 3), 5000, 77);
    Sampler sampler(77);
    const Bernoulli correct(Rational(2, 3));
    std::uint64_t p_count = 0;
    for (std::uint64_t t = 0; t < 5000; ++t) {
        const bool b11 = correct.draw(sampler);
        const bool b12 = correct.draw(sampler);
        const bool b21 = correct.draw(sampler);
        const bool b22 = correct.draw(sampler);
        if (b11 == b12 && b21 == b22)
            ++p_count;
    }
    CHECK(est.p_hat != Rational(p_count, 5000));
}

TEST_CASE("tripartite settings validation")
{
    const TripartiteSettings set = default_tripartite_settings(8);
    CHECK(set.x0 == BitVec::parse("10000000"));
    CHECK(set.c == BitVec::parse("00000010"));
    CHECK_NOTHROW(validate_tripartite(set));
    CHECK_THROWS_AS(default_tripartite_settings(6), FeasibilityError);

    TripartiteSettings bad = set;
    bad.y1 = BitVec::parse("11000000");
    CHECK_THROWS_AS(validate_tripartite(bad), ParityError);
    bad = set;
    bad.z0 = BitVec::parse("100000");
    CHECK_THROWS_AS(validate_tripartite(bad), LengthError);
}

TEST_CASE("tripartite combination I at the reference settings")
{
    const TripartiteSettings set = default_tripartite_settings(8);
    CHECK(tripartite_bell_I(set) == 4);
    const TriMean m = mean_square_tripartite_I(set);
    CHECK(m.mean_square == 8);
    CHECK(m.symmetry_reduced);
}

TEST_CASE("tripartite I degenerates when the y and z increments align")
{
    TripartiteSettings set = default_tripartite_settings(8);
    // Choose z1 so that y0 ^ z0 ^ y1 ^ z1 = 0; the block phases coincide and
    // the enumeration can no longer beat the algebraic square.
    set.z1 = set.z0 ^ set.y0 ^ set.y1;
    CHECK(parity(set.z1) == 1);
    const TriMean m = mean_square_tripartite_I(set);
    CHECK(m.mean_square == 16);
    CHECK_FALSE(m.symmetry_reduced);
}

TEST_CASE("tripartite combination J")
{
    const TripartiteSettings set = default_tripartite_settings(8);
    CHECK(tripartite_J_algebraic(set) == 4);
    CHECK(mean_square_tripartite_J(set).mean_square == 16);

    // Repeating a z setting collapses half the blocks; the moment drops to
    // the constant square.
    TripartiteSettings degenerate = set;
    degenerate.z1 = degenerate.z0;
    CHECK(mean_square_tripartite_J(degenerate).mean_square == 16);

    // A witness with all increment products aligned reaches the cap.
    TripartiteSettings witness = set;
    witness.x1 = BitVec::parse("00000001");
    witness.y1 = BitVec::parse("00000001");
    witness.z1 = BitVec::parse("00000001");
    CHECK(tripartite_J_algebraic(witness) == 8);
    CHECK(mean_square_tripartite_J(witness).mean_square == 32);
}
