#include "doctest.h"

#include "nlbox/box.hpp"
#include "nlbox/spaces.hpp"

using namespace nlbox;

TEST_CASE("perfect box puts half on each outcome pair satisfying the relation")
{
    const std::vector<BitVec> inputs = enumerate_inputs(6);
    for (const BitVec& x : inputs)
        for (const BitVec& y : inputs) {
            const BoxDistribution d = perfect_box(x, y);
            const Rational half(1, 2);
            if (inner_product(x, y) == 0) {
                CHECK(d.p00 == half);
                CHECK(d.p11 == half);
                CHECK(d.p01 == 0);
                CHECK(d.p10 == 0);
            } else {
                CHECK(d.p01 == half);
                CHECK(d.p10 == half);
                CHECK(d.p00 == 0);
                CHECK(d.p11 == 0);
            }
        }
}

TEST_CASE("box requires an admissible pair")
{
    CHECK_THROWS_AS(perfect_box(BitVec::parse("110000"), BitVec::parse("100000")),
                    AdmissibilityError);
    CHECK_THROWS_AS(imperfect_box(BitVec::parse("100000"), BitVec::parse("110000"),
                                  Rational(1, 2)),
                    AdmissibilityError);
    CHECK_THROWS_AS(imperfect_box(BitVec::parse("100000"), BitVec::parse("010000"),
                                  Rational(3, 2)),
                    RangeError);
}

TEST_CASE("imperfect box: distribution, correlation, and no-signaling stay exact")
{
    const std::vector<BitVec> inputs = enumerate_inputs(6);
    const std::vector<Rational> grid = {Rational(0), Rational(1, 4), Rational(1, 2),
                                        Rational(2, 3), Rational(1)};
    for (const BitVec& x : inputs)
        for (const BitVec& y : inputs)
            for (const Rational& p : grid) {
                const BoxDistribution d = imperfect_box(x, y, p);
                CHECK(d.p00 + d.p01 + d.p10 + d.p11 == 1);
                // E = (2p-1)(-1)^(x.y), both as the closed form and summed
                // from the distribution directly.
                const Rational closed =
                    (2 * p - 1) * (inner_product(x, y) == 0 ? 1 : -1);
                CHECK(correlation_of(d) == closed);
                CHECK(d.p00 + d.p11 - d.p01 - d.p10 == closed);
                // Marginals are exactly one half: the box cannot signal.
                CHECK(d.p00 + d.p01 == Rational(1, 2));
                CHECK(d.p10 + d.p11 == Rational(1, 2));
                CHECK(d.p00 + d.p10 == Rational(1, 2));
                CHECK(d.p01 + d.p11 == Rational(1, 2));
                CHECK(no_signaling_check(d));
            }
}

TEST_CASE("no_signaling_check detects a signaling distribution")
{
    BoxDistribution d = perfect_box(BitVec::parse("100000"), BitVec::parse("010000"));
    d.p00 = Rational(3, 4);
    d.p11 = Rational(1, 4);
    CHECK_FALSE(no_signaling_check(d));
}

TEST_CASE("outcome sampling is deterministic and respects the relation rate")
{
    const BitVec x = BitVec::parse("100000");
    const BitVec y = BitVec::parse("010000");
    const auto a = sample_outcomes(x, y, Rational(3, 4), 99, 2000);
    const auto b = sample_outcomes(x, y, Rational(3, 4), 99, 2000);
    CHECK(a == b);
    CHECK(a.size() == 2000);

    // At p = 1 the relation alpha xor beta = x.y holds in every trial.
    const int rel = inner_product(x, y);
    for (const auto& [alpha, beta] : sample_outcomes(x, y, Rational(1), 7, 500))
        CHECK((alpha ^ beta) == rel);

    const SampleReport r = sample_correlation(x, y, Rational(3, 4), 123, 40000);
    CHECK(r.exact_E == Rational(1, 2));
    // Loose three-sigma window: sigma ~ sqrt(1 - E^2)/sqrt(trials) < 0.005.
    CHECK(to_double(r.empirical_E - r.exact_E) < 0.015);
    CHECK(to_double(r.empirical_E - r.exact_E) > -0.015);
}

TEST_CASE("tripartite parity matches the six-term oracle")
{
    const BitVec c = BitVec::parse("00000010");
    const std::vector<BitVec> some = {BitVec::parse("10000000"), BitVec::parse("10011000"),
                                      BitVec::parse("01000000"), BitVec::parse("00001000"),
                                      BitVec::parse("00100000"), BitVec::parse("00000100")};
    for (const BitVec& x : some)
        for (const BitVec& y : some)
            for (const BitVec& z : some) {
                const int expect = inner_product(x, y) ^ inner_product(x, z) ^
                                   inner_product(y, z) ^ inner_product(x, c) ^
                                   inner_product(y, c) ^ inner_product(z, c);
                CHECK(tripartite_parity(x, y, z, c) == expect);
            }
}
