#include "octica/mod2.hpp"

#include "common.hpp"
#include "doctest.h"

using namespace octica;

TEST_CASE("quadratic space of lambda")
{
    const auto& pd = testing::data();
    REQUIRE(check_q_well_defined(pd.lambda()));
    auto V = quadratic_space(pd.lambda());
    CHECK(V.dim == 6);
    CHECK(V.size() == 64);
    CHECK(V.count_norm_one() == 28);
    CHECK(check_polar_form(V));
    for (unsigned x = 0; x < 64; ++x) CHECK(reduce_vector(lift_vector(static_cast<F2Vec>(x), 6)) == x);
}

TEST_CASE("invariants of phi0..phi4 and the octic types")
{
    const auto& pd = testing::data();
    auto V = quadratic_space(pd.lambda());
    const InvolutionInvariants want[5] = {{6, 28}, {5, 16}, {4, 8}, {3, 4}, {4, 4}};
    for (int i = 0; i < 5; ++i) {
        CAPTURE(i);
        F2Map phi = induced_involution(pd.chi(i));
        CHECK(preserves_q(V, phi));
        CHECK(phi.compose(phi) == F2Map::identity(6));
        auto inv = involution_invariants(V, phi);
        CHECK(inv == want[i]);
        CHECK(static_cast<int>(classify_octic_type(inv)) == i);
    }
    CHECK_THROWS_AS(classify_octic_type(InvolutionInvariants{2, 0}), std::domain_error);
}

TEST_CASE("S8 table from cycle types (oracle: brute force on subsets)")
{
    for (int t = 0; t <= 4; ++t) {
        int fixed = 0;
        for (unsigned s = 0; s < 256; ++s) {
            if (popcount8(s) % 2) continue;
            unsigned img = s;
            for (int k = 0; k < t; ++k) {
                unsigned a = (s >> (2 * k)) & 1, b = (s >> (2 * k + 1)) & 1;
                img &= ~(3u << (2 * k));
                img |= (b << (2 * k)) | (a << (2 * k + 1));
            }
            if (img == s) ++fixed;
        }
        auto inv = s8_invariants(t);
        CHECK(inv.fixed_subsets == fixed);
    }
    CHECK(s8_invariants_from_cycle_type("(12)").fixed_subsets == 64);
    CHECK(s8_invariants_from_cycle_type("(12)").fixed_classes == 32);
    CHECK(s8_invariants_from_cycle_type("2,2,1,1,1,1").inv == s8_invariants(2).inv);
    CHECK(s8_invariants_from_cycle_type("(12)(34)(56)(78)").inv == InvolutionInvariants{4, 4});
    CHECK_THROWS(s8_invariants_from_cycle_type("(123)"));
}

TEST_CASE("W-model and O(V,q)")
{
    const auto& pd = testing::data();
    auto V = quadratic_space(pd.lambda());
    auto classes = all_w_classes();
    CHECK(classes.size() == 64);
    int ones = 0;
    for (auto c : classes) ones += w_q(c);
    CHECK(ones == 28);
    auto b = build_w_bijection(V);
    CHECK(check_w_bijection(V, b));
    auto r = o_vq_report(V);
    CHECK(r.order == 40320);
    CHECK(r.transported_order == 40320);
    CHECK(r.generators_preserve_q);
    CHECK(r.equal);
    for (const auto& t : transvections(V)) CHECK(preserves_q(V, t));
}

TEST_CASE("reduction is equivariant")
{
    const auto& pd = testing::data();
    for (int a = 0; a < 5; ++a) {
        F2Map ra = reduce_matrix(pd.iso(a));
        CHECK(ra.compose(inverse(ra)) == F2Map::identity(6));
        for (int k = 0; k < 5; ++k) {
            F2Map lhs = induced_involution(conjugate_anti(pd.iso(a), pd.chi(k)));
            F2Map rhs = ra.compose(induced_involution(pd.chi(k))).compose(inverse(ra));
            CHECK(lhs == rhs);
        }
    }
}
