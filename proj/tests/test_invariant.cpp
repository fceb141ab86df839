#include <cmath>
#include <vector>

#include "doctest.h"

#include "nlbox/invariant.hpp"
#include "nlbox/spaces.hpp"

using namespace nlbox;

namespace {
const double pi = std::acos(-1.0);
}

TEST_CASE("invariant correlation depends only on the angle difference")
{
    CHECK(invariant_E(0.0, 0.0) == -1.0);
    CHECK(invariant_E(0.0, pi) == 1.0);
    CHECK(invariant_E(1.3, 1.3) == -1.0);
    for (double d : {0.1, 0.7, 2.9})
        CHECK(invariant_E(0.4 + d, 0.4) == doctest::Approx(-std::cos(d)).epsilon(1e-15));
}

TEST_CASE("coefficient form reduces to the cosine law")
{
    // The library evaluates sin^2 and cos^2 weights on the two relation
    // branches; the oracle is the collapsed form -(-1)^(x.y) cos(theta).
    const BitVec x = BitVec::parse("100000");
    const std::vector<BitVec> ys = {BitVec::parse("010000"), BitVec::parse("100000"),
                                    BitVec::parse("111000"), BitVec::parse("101100"),
                                    BitVec::parse("111110")};
    for (const BitVec& y : ys)
        for (int k = 0; k <= 16; ++k) {
            const double theta = k * pi / 8.0;
            const double sign = inner_product(x, y) == 0 ? 1.0 : -1.0;
            CHECK(coefficient_form_E(x, y, theta) ==
                  doctest::Approx(-sign * std::cos(theta)).epsilon(1e-12));
        }
    CHECK_THROWS_AS(coefficient_form_E(x, BitVec::parse("110000"), 0.3), AdmissibilityError);
}

TEST_CASE("angle assignment pairs complements half a turn apart")
{
    const AngleAssignment a = default_angles(6);
    CHECK(a.n == 6);
    CHECK(a.inputs.size() == 32);
    CHECK(a.angle_of(BitVec::parse("000001")) == 0.0);
    for (const BitVec& x : a.inputs) {
        if (x < reverse(x)) {
            CHECK(a.angle_of(reverse(x)) ==
                  doctest::Approx(a.angle_of(x) + pi).epsilon(1e-15));
        }
    }
    CHECK_THROWS_AS(a.angle_of(BitVec::parse("110000")), RangeError);

    // Explicit assignment: 16 representative angles, first one must be zero.
    std::vector<double> angles(16, 0.0);
    for (int i = 0; i < 16; ++i)
        angles[static_cast<std::size_t>(i)] = i * 0.1;
    CHECK_NOTHROW(assign_angles(6, angles));
    CHECK_THROWS_AS(assign_angles(6, std::vector<double>(15, 0.0)), LengthError);
    angles[0] = 0.5;
    CHECK_THROWS_AS(assign_angles(6, angles), RangeError);
}

TEST_CASE("angle scan structure and grid validation")
{
    CHECK_THROWS_AS(scan_angles(7, [](const AngleScanRow&) {}), RangeError);
    CHECK_THROWS_AS(scan_angles(12, [](const AngleScanRow&) {}), RangeError);

    std::size_t rows = 0;
    double max_seen = 0.0;
    scan_angles(8, [&](const AngleScanRow& row) {
        ++rows;
        max_seen = std::max(max_seen, row.s);
        CHECK(row.s >= 0.0);
    });
    CHECK(rows == 8 * 8 * 8 * 8);
    CHECK(max_seen == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("maximum over the angle grid is the quantum bound")
{
    const AngleScanRow best = chsh_max_over_angles(8);
    CHECK(best.s == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-13));
    // First maximizer in scan order: x angles a quarter turn apart, y angles
    // interleaved between them.
    CHECK(best.tx1 == 0.0);
    CHECK(best.tx2 == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(best.ty1 == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(best.ty2 == doctest::Approx(3 * pi / 4).epsilon(1e-15));

    // A finer grid cannot exceed the bound.
    double max16 = 0.0;
    scan_angles(16, [&](const AngleScanRow& row) { max16 = std::max(max16, row.s); });
    CHECK(max16 <= 2.0 * std::sqrt(2.0) + 1e-12);
    CHECK(max16 == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-13));
}
