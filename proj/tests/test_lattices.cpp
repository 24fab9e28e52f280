#include "octica/lattices.hpp"

#include "common.hpp"
#include "doctest.h"

using namespace octica;

TEST_CASE("hermitian lattice construction")
{
    const auto& pd = testing::data();
    HermitianLattice lam = pd.lambda();
    CHECK(lam.rank() == 6);
    CHECK(lam.signature() == Signature{1, 5, 0});
    CHECK(signature(lam.real_form()) == Signature{2, 10, 0});
    CHECK(pd.lz().negative_definite());
    GMat bad{{GaussInt(1), GaussInt(0, 1)}, {GaussInt(0, 1), GaussInt(1)}};
    CHECK_THROWS_AS(HermitianLattice::make(bad), NonHermitian);
}

TEST_CASE("hermitian form axioms on random samples (oracle: direct sum formula)")
{
    const auto& pd = testing::data();
    HermitianLattice lam = pd.lambda();
    std::mt19937_64 rng(3);
    for (int t = 0; t < 1000; ++t) {
        GVec x = testing::random_gvec(rng, 6), y = testing::random_gvec(rng, 6);
        GaussInt s = testing::random_gauss(rng);
        GaussInt direct(0);
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = 0; b < 6; ++b) direct += x[a].conj() * lam.gram()(a, b) * y[b];
        REQUIRE(lam.inner(x, y) == direct);
        CHECK(lam.inner(x, y) == lam.inner(y, x).conj());
        GVec sy = y;
        for (auto& z : sy) z = s * z;
        CHECK(lam.inner(x, sy) == s * lam.inner(x, y));
        CHECK(lam.inner(x, x).is_real());
        CHECK(lam.q_norm(x) == lam.inner(x, x).re());
        IntVec rx = to_real(x), ry = to_real(y);
        CHECK(bilinear(lam.real_form(), rx, ry) == lam.inner(x, y).re());
        CHECK(from_real(rx) == x);
    }
}

TEST_CASE("anti-isometries compose as expected")
{
    const auto& pd = testing::data();
    HermitianLattice lam = pd.lambda();
    GMat cII = pd.chi_ii();
    REQUIRE(check_anti_involution(lam, cII));
    for (int i = 0; i < 5; ++i) {
        CHECK(check_isometry(lam, pd.iso(i)));
        CHECK(check_anti_involution(lam, pd.chi(i)));
        CHECK(compose_anti(pd.iso(i), cII) == pd.chi(i));
        GMat conjd = conjugate_anti(pd.iso(i), cII);
        CHECK(check_anti_involution(lam, conjd));
    }
    std::mt19937_64 rng(5);
    GVec x = testing::random_gvec(rng, 6);
    CHECK(apply_anti(cII, apply_anti(cII, x)) == x);
    CHECK(realify_anti(cII) * to_real(x) == to_real(apply_anti(cII, x)));
    GMat twice = GaussInt(2) * GMat::identity(6);
    CHECK_FALSE(check_isometry(lam, twice));
    CHECK_FALSE(check_anti_isometry(lam, twice));
}
