#include "doctest.h"

#include "nlbox/bitvec.hpp"
#include "nlbox/rng.hpp"

using namespace nlbox;

TEST_CASE("parse and str round trip")
{
    const BitVec v = BitVec::parse("011010");
    CHECK(v.n() == 6);
    CHECK(v.str() == "011010");
    CHECK(BitVec::parse("1").str() == "1");
    CHECK(BitVec::zero(4).str() == "0000");
    CHECK(BitVec::ones(4).str() == "1111");
    CHECK_THROWS_AS(BitVec::parse("01x0"), ParseError);
    CHECK_THROWS_AS(BitVec::parse(""), LengthError);
    CHECK_THROWS_AS(BitVec::parse(std::string(65, '0')), LengthError);
}

TEST_CASE("positions are 1-based and count from the left")
{
    const BitVec v = BitVec::parse("100000");
    CHECK(v.get(1) == 1);
    for (int k = 2; k <= 6; ++k)
        CHECK(v.get(k) == 0);
    CHECK(v.with(6, 1).str() == "100001");
    CHECK(v.with(1, 0).str() == "000000");
    CHECK_THROWS_AS(v.get(0), RangeError);
    CHECK_THROWS_AS(v.get(7), RangeError);
}

TEST_CASE("packed order equals text order")
{
    // The word layout is chosen so integer comparison and string comparison
    // agree; everything that sorts vectors relies on this.
    for (Word a = 0; a < 64; ++a)
        for (Word b = 0; b < 64; ++b) {
            const BitVec va(6, a), vb(6, b);
            CHECK((va < vb) == (va.str() < vb.str()));
        }
}

TEST_CASE("reverse is the componentwise complement")
{
    const BitVec v = BitVec::parse("011010");
    CHECK(reverse(v).str() == "100101");
    Sampler s(11);
    for (int t = 0; t < 100; ++t) {
        const BitVec r(8, s.next_word() & 0xff);
        CHECK(reverse(reverse(r)) == r);
        for (int k = 1; k <= 8; ++k)
            CHECK(reverse(r).get(k) == 1 - r.get(k));
    }
}

TEST_CASE("inner product against a per-position oracle")
{
    Sampler s(17);
    for (int t = 0; t < 200; ++t) {
        const BitVec a(10, s.next_word() & 0x3ff);
        const BitVec b(10, s.next_word() & 0x3ff);
        int expect = 0;
        for (int k = 1; k <= 10; ++k)
            expect ^= a.get(k) & b.get(k);
        CHECK(inner_product(a, b) == expect);
    }
    CHECK_THROWS_AS(inner_product(BitVec::zero(4), BitVec::zero(6)), LengthError);
}

TEST_CASE("inner product is bilinear")
{
    Sampler s(23);
    for (int t = 0; t < 200; ++t) {
        const BitVec a(12, s.next_word() & 0xfff);
        const BitVec b(12, s.next_word() & 0xfff);
        const BitVec c(12, s.next_word() & 0xfff);
        CHECK(inner_product(a ^ b, c) == (inner_product(a, c) ^ inner_product(b, c)));
    }
}

TEST_CASE("parity and xor_sum")
{
    CHECK(parity(BitVec::parse("011010")) == 1);
    CHECK(parity(BitVec::parse("011011")) == 0);
    CHECK(xor_sum(BitVec::parse("0110"), BitVec::parse("0101")) == BitVec::parse("0011"));
    const std::vector<BitVec> vs = {BitVec::parse("100"), BitVec::parse("010"),
                                    BitVec::parse("001")};
    CHECK(xor_sum(vs) == BitVec::parse("111"));
    CHECK_THROWS_AS(xor_sum(std::vector<BitVec>{}), RangeError);
}

TEST_CASE("matrix basics against manual expansion")
{
    const BitMatrix m = BitMatrix::parse("110\n011\n001");
    const BitVec x = BitVec::parse("101");
    // Component i of m x is row_i . x.
    BitVec expect = BitVec::zero(3);
    for (int i = 0; i < 3; ++i)
        expect = expect.with(i + 1, inner_product(m.row(i), x));
    CHECK(mat_apply(m, x) == expect);

    CHECK(mat_apply(BitMatrix::identity(3), x) == x);
    CHECK(mat_transpose(mat_transpose(m)) == m);

    Sampler s(31);
    for (int t = 0; t < 50; ++t) {
        auto random_matrix = [&]() {
            std::vector<BitVec> rows;
            for (int i = 0; i < 5; ++i)
                rows.emplace_back(5, s.next_word() & 0x1f);
            return BitMatrix(rows);
        };
        const BitMatrix a = random_matrix(), b = random_matrix();
        const BitVec v(5, s.next_word() & 0x1f);
        // (a b) v = a (b v) pins the multiplication convention.
        CHECK(mat_apply(mat_mul(a, b), v) == mat_apply(a, mat_apply(b, v)));
        // Transpose reverses products.
        CHECK(mat_transpose(mat_mul(a, b)) == mat_mul(mat_transpose(b), mat_transpose(a)));
    }
}

TEST_CASE("orthogonality predicate")
{
    CHECK(is_orthogonal(BitMatrix::identity(6)));
    // A permutation matrix is orthogonal.
    CHECK(is_orthogonal(BitMatrix::parse("010\n100\n001")));
    // An even row can never arise: it fails r.r = 1.
    CHECK_FALSE(is_orthogonal(BitMatrix::parse("110\n011\n001")));
    // Odd rows that are not pairwise orthogonal also fail.
    CHECK_FALSE(is_orthogonal(BitMatrix::parse("111\n010\n001")));
}
