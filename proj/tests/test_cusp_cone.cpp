#include "octica/cusp_cone.hpp"

#include "common.hpp"
#include "doctest.h"

using namespace octica;

namespace {

struct Fixture {
    HermitianLattice lz = testing::data().lz();
    FiniteIsometryGroup G = enumerate_isometries(lz);
};

}  // namespace

TEST_CASE("isometry group of Lz")
{
    Fixture f;
    CHECK(f.G.order() == 96);
    CHECK(check_group_closure(f.G));
    for (const auto& a : f.G.elements) CHECK(check_isometry(f.lz, a));
    CHECK(max_entry_norm(f.G) == 2);
    CHECK_THROWS_AS(enumerate_isometries(testing::data().lambda()), std::invalid_argument);
    for (const auto& v : vectors_of_norm(f.lz, Int(-2))) CHECK(f.lz.q_norm(v) == -2);
    CHECK(vectors_of_norm(f.lz, Int(2)).empty());
}

TEST_CASE("anti-involutions and their classes (oracle: brute force)")
{
    Fixture f;
    const auto& pd = testing::data();
    auto antis = enumerate_anti_involutions(f.lz, f.G, pd.cusp_matrix("kappa1"));
    CHECK(antis.size() == 36);
    CHECK(anti_involutions_brute_force(f.lz, max_entry_norm(f.G)) == antis);
    auto classes = conjugacy_classes(f.G, antis);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].size() == 24);
    CHECK(classes[1].size() == 12);
    CHECK(class_of(classes, pd.cusp_matrix("kappa1")) == 0);
    CHECK(class_of(classes, pd.cusp_matrix("kappa3")) == 1);
    CHECK(class_of(classes, GMat::identity(2)) == 2);
}

TEST_CASE("wedges, gluing and the cone angle")
{
    Fixture f;
    const auto& pd = testing::data();
    auto w1 = wedge_quotient(f.lz, f.G, pd.cusp_matrix("kappa1"));
    auto w3 = wedge_quotient(f.lz, f.G, pd.cusp_matrix("kappa3"));
    CHECK(w1.dihedral);
    CHECK(w1.image_order == 4);
    CHECK(w1.angle == Rat(1, 2));
    CHECK(w3.image_order == 8);
    CHECK(w3.angle == Rat(1, 4));
    GVec u1 = pd.cusp_vector("u1"), u2 = pd.cusp_vector("u2"), v1 = pd.cusp_vector("v1"), v2 = pd.cusp_vector("v2");
    CHECK(gram_of(f.lz, GMat::from_columns({u1, u2})) == IntMat{{Int(-4), Int(0)}, {Int(0), Int(-2)}});
    CHECK(gram_of(f.lz, GMat::from_columns({v1, v2})) == IntMat{{Int(-2), Int(0)}, {Int(0), Int(-2)}});
    CHECK(cos2(f.lz, u1, u2) == *cos2_pi_over(2));
    CHECK(cos2(f.lz, v2, v1 + v2) == *cos2_pi_over(4));
    GluedCone c = glue_cone(f.G, w1, w3, u1, u2, v1, v2);
    REQUIRE(c.gluings.size() == 2);
    auto has = [&](const EdgeGluing& g, const GMat& a) {
        auto k = f.G.index_of(a);
        return k >= 0 && std::count(g.witnesses.begin(), g.witnesses.end(), static_cast<std::size_t>(k)) == 1;
    };
    CHECK(has(c.gluings[0], pd.cusp_matrix("A1")));
    CHECK(has(c.gluings[1], pd.cusp_matrix("A2")));
    CHECK(c.total_angle == Rat(3, 4));
    CHECK_FALSE(c.orbifold_point);
    CHECK(is_orbifold_angle(Rat(1, 3)));
    CHECK_FALSE(is_orbifold_angle(Rat(2, 3)));
    CHECK_FALSE(cos2_pi_over(5));
}
