#include "octica/matrix.hpp"

#include "common.hpp"
#include "doctest.h"

using namespace octica;

TEST_CASE("gaussian matrix basics")
{
    GMat a{{GaussInt(1), GaussInt(0, 1)}, {GaussInt(0), GaussInt(1)}};
    CHECK(det(a) == GaussInt(1));
    GMat inv = inverse_integral(a);
    CHECK(a * inv == GMat::identity(2));
    CHECK(adjoint(a) == conj(a).transpose());
    GMat sing{{GaussInt(2), GaussInt(0)}, {GaussInt(0), GaussInt(1)}};
    CHECK_THROWS(inverse_integral(sing));
}

TEST_CASE("determinants agree with cofactor expansion")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        GMat m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = testing::random_gauss(rng, 4);
        GaussInt cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                       m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                       m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        CHECK(det(m) == cof);
    }
}

TEST_CASE("linear solve with inconsistency certificate")
{
    RatMat A{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    RatMat b{{Rat(1)}, {Rat(3)}};
    auto s = solve_linear(A, b);
    REQUIRE_FALSE(s.consistent);
    REQUIRE(s.certificate.size() == 2);
    Rat yA0 = s.certificate[0] * A(0, 0) + s.certificate[1] * A(1, 0);
    Rat yb = s.certificate[0] * b(0, 0) + s.certificate[1] * b(1, 0);
    CHECK(yA0 == 0);
    CHECK(yb != 0);

    RatMat c{{Rat(1)}, {Rat(2)}};
    auto ok = solve_linear(A, c);
    REQUIRE(ok.consistent);
    CHECK(ok.kernel.size() == 1);
    CHECK(A * ok.particular == c);
}
