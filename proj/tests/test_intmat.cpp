#include "octica/intmat.hpp"

#include "common.hpp"
#include "doctest.h"

using namespace octica;

TEST_CASE("hermite basis and kernels")
{
    IntMat m{{Int(2), Int(4), Int(6)}, {Int(1), Int(2), Int(3)}};
    IntMat k = integer_kernel(m);
    CHECK(k.cols() == 2);
    CHECK(m * k == IntMat(2, 2));
    CHECK(rank_int(m) == 1);
    IntMat gens{{Int(2), Int(4)}, {Int(0), Int(6)}};
    IntMat h = hermite_basis(gens);
    CHECK(abs(det(h)) == 12);
    auto c = integral_coords(h, IntVec{Int(6), Int(6)});
    REQUIRE(c);
    CHECK(mul(h, *c) == IntVec{Int(6), Int(6)});
    CHECK_FALSE(integral_coords(h, IntVec{Int(1), Int(0)}));
}

TEST_CASE("signature by exact diagonalization")
{
    CHECK(signature(IntMat{{Int(1), Int(0)}, {Int(0), Int(-1)}}) == Signature{1, 1, 0});
    CHECK(signature(IntMat{{Int(0), Int(1)}, {Int(1), Int(0)}}) == Signature{1, 1, 0});
    CHECK(signature(IntMat{{Int(1), Int(1)}, {Int(1), Int(1)}}) == Signature{1, 0, 1});
    CHECK(signature(testing::data().gram(0)) == Signature{1, 5, 0});
}

TEST_CASE("short vectors match a box search")
{
    IntMat P{{Int(2), Int(1), Int(0)}, {Int(1), Int(2), Int(1)}, {Int(0), Int(1), Int(2)}};
    auto fast = short_vectors(P, Int(6));
    std::vector<IntVec> slow;
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            for (long c = -4; c <= 4; ++c) {
                IntVec x{Int(a), Int(b), Int(c)};
                if ((a || b || c) && bilinear(P, x, x) <= 6) slow.push_back(x);
            }
    std::sort(fast.begin(), fast.end());
    std::sort(slow.begin(), slow.end());
    CHECK(fast == slow);
    CHECK(content(IntVec{Int(4), Int(-6), Int(0)}) == 2);
}
