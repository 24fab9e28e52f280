#include "octica/analysis.hpp"
#include "octica/stabilizer.hpp"

#include "common.hpp"
#include "doctest.h"

using namespace octica;

TEST_CASE("scale factors lie in Q(sqrt 2)")
{
    std::vector<Int> norms{-2, -4, -2, -4};
    std::vector<std::size_t> pairing{1, 0, 3, 2};
    auto mu = scale_factors(norms, pairing);
    REQUIRE(mu.size() == 4);
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(mu[j] * mu[j] * ExtScalar(GaussInt(norms[pairing[j]])) == ExtScalar(GaussInt(2 * norms[j])));
    CHECK_THROWS_AS(scale_factors({-2, -6}, {1, 0}), std::invalid_argument);
}

TEST_CASE("types of elements of the stabilizer")
{
    const auto& pd = testing::data();
    HermitianLattice lam = pd.lambda();
    for (int i = 0; i < 5; ++i) {
        GMat I = GMat::identity(6);
        CHECK(classify_stab_element(lam, pd.chi(i), I).type == StabType::I);
        CHECK(classify_stab_element(lam, pd.chi(i), GaussInt(-1) * I).type == StabType::I);
        StabElement e = classify_stab_element(lam, pd.chi(i), GaussInt::i() * I);
        CHECK(e.type == StabType::I);
        CHECK(e.beta == GaussInt(-1));
    }
}

TEST_CASE("chi2 has no type II element")
{
    const auto& pd = testing::data();
    AmbientRoots ar = ambient_from_data(pd, 2);
    auto inv = diagram_involutions(ar.diagram);
    REQUIRE(inv.size() == 1);
    TypeTwoResult r = solve_type_two(pd.lambda(), ar, inv[0]);
    CHECK_FALSE(r.witness);
    REQUIRE(r.attempts.size() == 2);
    for (const auto& a : r.attempts) {
        CHECK_FALSE(a.consistent);
        CHECK(a.relation == "2 r3 = r4");
        CHECK_FALSE(a.certificate.empty());
    }
    CHECK(stab_structure(pd.lambda(), ar).str() == "equal");
}

TEST_CASE("chi3 has a verified type II witness")
{
    const auto& pd = testing::data();
    HermitianLattice lam = pd.lambda();
    AmbientRoots ar = ambient_from_data(pd, 3);
    auto inv = diagram_involutions(ar.diagram);
    REQUIRE(inv.size() == 1);
    TypeTwoResult r = solve_type_two(lam, ar, inv[0]);
    REQUIRE(r.witness);
    const GMat& T = *r.witness;
    CHECK(check_isometry(lam, T));
    CHECK(verify_type_two_witness(lam, ar, inv[0], T, r.witness_sign));
    CHECK_FALSE(verify_type_two_witness(lam, ar, inv[0], GMat::identity(6), 1));
    CHECK(maps_fix_to_fix_i(pd.chi(3), T));
    CHECK(classify_stab_element(lam, pd.chi(3), T).type == StabType::II);
    GMat T2 = T * T;
    bool scalar = true;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
            if (T2(a, b) != (a == b ? T2(0, 0) : GaussInt(0))) scalar = false;
    CHECK(scalar);
    CHECK(stab_structure(lam, ar).semidirect);
}

TEST_CASE("structure verdicts and the discriminant wall")
{
    const auto& pd = testing::data();
    const char* want[5] = {"equal", "equal", "equal", "semidirect", "equal"};
    for (int i = 0; i < 5; ++i) {
        VinbergRun run = run_vinberg(pd, i);
        CHECK(stab_structure(pd.lambda(), ambient_roots(pd, i, run)).str() == want[i]);
        CHECK(stab_structure(pd.lambda(), ambient_from_run(run)).str() == want[i]);
        if (i == 4) {
            WallReport w = discriminant_walls(pd.lambda(), ambient_from_run(run).coords);
            CHECK(w.count == 1);
            REQUIRE(w.w.size() == 1);
            CHECK(pd.lambda().q_norm(w.w[0]) == -2);
        }
    }
}

TEST_CASE("relation strings")
{
    std::vector<std::string> labels{"r1", "r2", "r3"};
    CHECK(relation_str(IntVec{0, 2, -1}, labels) == "2 r2 = r3");
    CHECK(relation_str(IntVec{1, 1, -1}, labels) == "r1 + r2 = r3");
}
