#include <algorithm>

#include "doctest.h"

#include "nlbox/spaces.hpp"

using namespace nlbox;

TEST_CASE("input space equals the brute-force odd-parity filter")
{
    for (int n : {2, 4, 6, 8}) {
        const std::vector<BitVec> inputs = enumerate_inputs(n);
        std::vector<BitVec> expect;
        for (Word w = 0; w < (Word(1) << n); ++w) {
            const BitVec v(n, w);
            if (parity(v) == 1)
                expect.push_back(v);
        }
        CHECK(inputs == expect); // same members, same lexicographic order
        CHECK(inputs.size() == (std::size_t(1) << (n - 1)));
        CHECK(std::is_sorted(inputs.begin(), inputs.end()));
    }
}

TEST_CASE("translation space equals the brute-force even-parity filter")
{
    for (int n : {2, 4, 6}) {
        const std::vector<BitVec> translations = enumerate_translations(n);
        std::vector<BitVec> expect;
        for (Word w = 0; w < (Word(1) << n); ++w) {
            const BitVec v(n, w);
            if (parity(v) == 0)
                expect.push_back(v);
        }
        CHECK(translations == expect);
        CHECK(translations.front() == BitVec::zero(n));
        CHECK(translations.back() == BitVec::ones(n));
    }
}

TEST_CASE("space enumeration rejects bad lengths")
{
    CHECK_THROWS_AS(enumerate_inputs(0), FeasibilityError);
    CHECK_THROWS_AS(enumerate_inputs(3), ParityError);
    CHECK_THROWS_AS(enumerate_inputs(18), FeasibilityError);
    CHECK(below_reference_regime(4));
    CHECK_FALSE(below_reference_regime(6));
}

TEST_CASE("admissibility relations reduce to odd parity on both sides")
{
    // The library evaluates the four literal relations; for even n they hold
    // exactly when both vectors have odd parity, which is the oracle here.
    for (int n : {4, 6}) {
        for (Word a = 0; a < (Word(1) << n); ++a)
            for (Word b = 0; b < (Word(1) << n); ++b) {
                const BitVec x(n, a), y(n, b);
                const bool expect = parity(x) == 1 && parity(y) == 1;
                CHECK(check_admissibility(x, y) == expect);
            }
    }
    CHECK_THROWS_AS(check_admissibility(BitVec::zero(4), BitVec::zero(6)), LengthError);
}

TEST_CASE("no pair is admissible at odd length")
{
    // The fourth relation x.y = reverse(x).reverse(y) fails for odd n, where
    // complementing flips exactly one side of the product.
    const int n = 3;
    for (Word a = 0; a < 8; ++a)
        for (Word b = 0; b < 8; ++b)
            CHECK_FALSE(check_admissibility(BitVec(n, a), BitVec(n, b)));
}

TEST_CASE("odd sum closure")
{
    CHECK(odd_sum_closure_check(enumerate_inputs(6), 200));
    // Dropping one member breaks closure: some triple XORs to the hole.
    std::vector<BitVec> holed = enumerate_inputs(6);
    holed.pop_back();
    CHECK_FALSE(odd_sum_closure_check(holed, 200));
    // Even-parity sets are not closed under odd sums of odd vectors; a set
    // with mixed parity fails immediately.
    std::vector<BitVec> mixed = enumerate_inputs(4);
    mixed.push_back(BitVec::zero(4));
    CHECK_FALSE(odd_sum_closure_check(mixed, 200));
}
