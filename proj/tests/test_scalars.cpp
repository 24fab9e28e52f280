#include "common.hpp"
#include "doctest.h"

using namespace octica;

TEST_CASE("gaussian integer arithmetic")
{
    GaussInt a(3, 4), b(1, -2);
    CHECK(a + b == GaussInt(4, 2));
    CHECK(a * b == GaussInt(11, -2));
    CHECK(a.conj() == GaussInt(3, -4));
    CHECK(a.norm() == 25);
    CHECK(GaussInt::i() * GaussInt::i() == GaussInt(-1));
    for (int k = 0; k < 4; ++k) CHECK(unit(k).is_unit());
    CHECK(unit(1) == GaussInt::i());
}

TEST_CASE("division by 1+i")
{
    CHECK(divisible_by_one_plus_i(GaussInt(2)));
    CHECK(divisible_by_one_plus_i(GaussInt(1, 1)));
    CHECK_FALSE(divisible_by_one_plus_i(GaussInt(1)));
    CHECK(div_one_plus_i(GaussInt(2)) == GaussInt(1, -1));
    CHECK(div_one_plus_i(GaussInt(2)) * GaussInt(1, 1) == GaussInt(2));
}

TEST_CASE("euclidean division and gcd")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        GaussInt z = testing::random_gauss(rng, 50), d = testing::random_gauss(rng, 9);
        if (d.is_zero()) continue;
        GaussInt q, r;
        divmod(z, d, q, r);
        CHECK(q * d + r == z);
        CHECK(2 * r.norm() <= d.norm());
        GaussInt g = gcd(z, d);
        CHECK(divides(g, z));
        CHECK(divides(g, d));
        CHECK(exact_div(z * d, d) == z);
    }
    CHECK(normalize_associate(GaussInt(0, -3)) == normalize_associate(GaussInt(3)));
}

TEST_CASE("gaussian rationals are canonical")
{
    GaussRat x(GaussInt(2, 4), Int(6));
    CHECK(x == GaussRat(GaussInt(1, 2), Int(3)));
    CHECK(x.den() == 3);
    CHECK(GaussRat(GaussInt(1), Int(-2)).den() == 2);
    CHECK(x * x.inverse() == GaussRat(1L));
    CHECK((x - x).is_zero());
    CHECK(x.conj() == GaussRat(GaussInt(1, -2), Int(3)));
    CHECK_THROWS(x.to_gauss_int());
    CHECK(GaussRat(GaussInt(3, 3), Int(3)).to_gauss_int() == GaussInt(1, 1));
}

TEST_CASE("extension by sqrt 2")
{
    ExtScalar s = ExtScalar::sqrt2();
    CHECK(s * s == ExtScalar(2L));
    CHECK(s.galois() == -s);
    ExtScalar x(GaussRat(GaussInt(1, 1)), GaussRat(3L));
    CHECK(x * x.inverse() == ExtScalar(1L));
    CHECK((x / x) == ExtScalar(1L));
    ExtScalar r;
    REQUIRE(sqrt_in_ext(Rat(2), r));
    CHECK(r * r == ExtScalar(2L));
    REQUIRE(sqrt_in_ext(Rat(1, 2), r));
    CHECK(r * r == ExtScalar(GaussRat(Rat(1, 2))));
    REQUIRE(sqrt_in_ext(Rat(9, 4), r));
    CHECK(r.in_base_field());
    CHECK_FALSE(sqrt_in_ext(Rat(3), r));
    CHECK_FALSE(sqrt_in_ext(Rat(-2), r));
}

TEST_CASE("integer square roots")
{
    for (long n = 0; n < 2000; ++n) {
        Int s = isqrt(Int(n));
        CHECK(s * s <= n);
        CHECK((s + 1) * (s + 1) > n);
    }
    CHECK(floor_rat(Rat(-7, 2)) == -4);
    CHECK(ceil_rat(Rat(-7, 2)) == -3);
    CHECK(floor_sqrt(Rat(9, 4)) == 1);
}
