#include "octica/fixed_points.hpp"

#include "common.hpp"
#include "doctest.h"

using namespace octica;

TEST_CASE("fixed lattices of chi0..chi4 contain B_i with index 1")
{
    const auto& pd = testing::data();
    HermitianLattice lam = pd.lambda();
    for (int i = 0; i < 5; ++i) {
        CAPTURE(i);
        ZLattice F = fix_lattice(lam, pd.chi(i));
        CHECK(F.rank() == 6);
        CHECK(signature(F.gram) == Signature{1, 5, 0});
        CHECK(abs(det(F.gram)) == abs(det(pd.gram(i))));
        for (std::size_t j = 0; j < 6; ++j) {
            GVec v = F.embedding->col(j);
            CHECK(apply_anti(pd.chi(i), v) == v);
        }
        BasisReport rep = verify_basis(lam, pd.chi(i), pd.basis(i), pd.gram(i));
        CHECK(rep.ok());
        CHECK(rep.index == 1);
        CHECK(gram_of(lam, pd.basis(i)) == pd.gram(i));
    }
}

TEST_CASE("verify_basis reports each failure")
{
    const auto& pd = testing::data();
    HermitianLattice lam = pd.lambda();
    IntMat wrong = pd.gram(3);
    wrong(0, 0) -= 4;
    BasisReport r = verify_basis(lam, pd.chi(3), pd.basis(3), wrong);
    CHECK(r.fixed);
    CHECK_FALSE(r.gram_matches);
    REQUIRE_FALSE(r.problems.empty());

    GMat doubled = pd.basis(0);
    for (std::size_t i = 0; i < 6; ++i) doubled(i, 0) *= GaussInt(2);
    BasisReport s = verify_basis(lam, pd.chi(0), doubled, gram_of(lam, doubled));
    CHECK(s.fixed);
    CHECK_FALSE(s.full_index);
    CHECK(s.index == 2);

    BasisReport t = verify_basis(lam, pd.chi(1), pd.basis(0), pd.gram(0));
    CHECK_FALSE(t.ok());
}

TEST_CASE("fixed lattice rejects maps that are not involutive anti-isometries")
{
    const auto& pd = testing::data();
    GMat twice = GaussInt(2) * GMat::identity(6);
    CHECK_THROWS_AS(fix_lattice(pd.lambda(), twice), std::invalid_argument);
}

TEST_CASE("sublattice index")
{
    IntMat outer = IntMat::identity(2);
    IntMat inner{{Int(2), Int(0)}, {Int(0), Int(3)}};
    CHECK(sublattice_index(outer, inner) == 6);
}
