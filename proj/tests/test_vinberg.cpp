#include "octica/analysis.hpp"
#include "octica/vinberg.hpp"

#include "common.hpp"
#include "doctest.h"

using namespace octica;

namespace {

ZLattice diag(std::initializer_list<long> d)
{
    IntMat g(d.size(), d.size());
    std::size_t k = 0;
    for (long x : d) g(k, k) = x, ++k;
    return make_zlattice(g);
}

}  // namespace

TEST_CASE("crystallographic roots")
{
    ZLattice L = diag({1, -1, -1});
    std::vector<Int> norms{-1, -2};
    CHECK(is_crystallographic_root(L, IntVec{0, 1, 0}, norms));
    CHECK(is_crystallographic_root(L, IntVec{0, 1, -1}, norms));
    CHECK_FALSE(is_crystallographic_root(L, IntVec{0, 2, 0}, norms));
    CHECK_FALSE(is_crystallographic_root(L, IntVec{1, 0, 0}, norms));
}

TEST_CASE("toy lattice I(1,2) gives the (2,4,inf) triangle")
{
    ZLattice L = diag({1, -1, -1});
    IntVec v0 = choose_v0(L);
    CHECK(v0 == IntVec{1, 0, 0});
    VinbergResult r = fundamental_roots(L, {Int(-1), Int(-2)}, v0, StopRule{});
    REQUIRE(r.finite_volume);
    REQUIRE(r.roots.size() == 3);
    CoxeterDiagram d = coxeter_diagram(L, r.roots);
    CHECK(d.count(Bond::Double) == 1);
    CHECK(d.count(Bond::Parallel) == 1);
    CHECK(d.count(Bond::Single) == 0);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b) CHECK(L.inner(r.roots[a].coords, r.roots[b].coords) >= 0);
}

TEST_CASE("finite volume criterion rejects incomplete diagrams")
{
    CoxeterDiagram one;
    one.resize(1);
    one.labels[0] = "r1";
    one.norms[0] = -2;
    CHECK_FALSE(finite_volume_check(one, 2));
    VolumeReport rep = finite_volume_report(one, 2);
    CHECK_FALSE(rep.finite);
    CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("catalog types")
{
    CoxeterDiagram d;
    d.resize(4);
    for (std::size_t k = 0; k < 4; ++k) d.labels[k] = "r" + std::to_string(k + 1), d.norms[k] = -2;
    d.set_bond(0, 1, Bond::Single);
    d.set_bond(1, 2, Bond::Single);
    d.set_bond(2, 3, Bond::Double);
    CHECK(connected_type(d, {0, 1, 2, 3}) == "B4");
    CHECK(connected_type(d, {0, 1, 2}) == "A3");
    CHECK(connected_type(d, {1, 2, 3}) == "B3");
    CHECK(classify_subdiagram(d, {0, 1, 2, 3}).kind == SubKind::Elliptic);
    CoxeterDiagram p;
    p.resize(2);
    p.labels = {"a", "b"};
    p.norms = {Int(-2), Int(-2)};
    p.set_bond(0, 1, Bond::Parallel);
    CHECK(classify_subdiagram(p, {0, 1}).kind == SubKind::Parabolic);
}

TEST_CASE("angle invariant to bond")
{
    CHECK(bond_for(Rat(0)) == Bond::None);
    CHECK(bond_for(Rat(1, 4)) == Bond::Single);
    CHECK(bond_for(Rat(1, 2)) == Bond::Double);
    CHECK(bond_for(Rat(3, 4)) == Bond::Triple);
    CHECK(bond_for(Rat(1)) == Bond::Parallel);
    CHECK(bond_for(Rat(2)) == Bond::Ultraparallel);
    CHECK_THROWS_AS(bond_for(Rat(2, 3)), IllegalAngle);
}

TEST_CASE("stop rules")
{
    CHECK(StopRule::parse("volume").kind == StopRule::Volume);
    CHECK(StopRule::parse("expected:7").expected == 7);
    CHECK(StopRule::parse("height:3/2").height == Rat(3, 2));
    CHECK_THROWS(StopRule::parse("expected:0"));
    CHECK_THROWS(StopRule::parse("bogus"));
    CHECK(StopRule::parse("height:2").str() == "height:2");
}

TEST_CASE("root enumeration agrees with the box oracle")
{
    const auto& pd = testing::data();
    for (int i : {0, 4}) {
        ZLattice L = embedded_lattice(pd, i);
        auto norms = allowed_norms(pd, i);
        IntVec v0 = choose_v0(L);
        auto fast = enumerate_roots(L, norms, Rat(1), v0);
        Int box = root_box_bound(L, norms, Rat(1), v0);
        auto slow = enumerate_roots_box(L, norms, Rat(1), v0, box.get_si());
        REQUIRE(fast.size() == slow.size());
        for (std::size_t k = 0; k < fast.size(); ++k) CHECK(fast[k].coords == slow[k].coords);
    }
}

TEST_CASE("diagrams of L0..L4 match the transcribed ones")
{
    const auto& pd = testing::data();
    const std::size_t counts[5] = {6, 7, 7, 8, 6};
    for (int i = 0; i < 5; ++i) {
        CAPTURE(i);
        VinbergRun run = run_vinberg(pd, i);
        CHECK(run.result.finite_volume);
        CHECK(run.result.roots.size() == counts[i]);
        CHECK(diagram_isomorphism(pd.diagram(i), run.diagram, true));
        auto sym = diagram_symmetries(run.diagram, true);
        CHECK(sym.size() == 1);
        std::size_t nontrivial = 0;
        for (const auto& s : diagram_symmetries(run.diagram, false))
            if (!s.is_identity()) {
                ++nontrivial;
                CHECK(s.is_involution());
            }
        CHECK(nontrivial == ((i == 2 || i == 3) ? 1u : 0u));
        SUBCASE("gram classification agrees with the catalog")
        {
            ZLattice L = run.lattice;
            const auto& roots = run.result.roots;
            for (std::size_t a = 0; a < roots.size(); ++a)
                for (std::size_t b = a + 1; b < roots.size(); ++b)
                    CHECK(classify_subdiagram(run.diagram, {a, b}).kind == classify_by_gram(L, roots, {a, b}));
        }
        AlignedDiagram al = align_to_data(pd, i, run);
        CHECK(al.aligned);
        CHECK(al.diagram == pd.diagram(i));
    }
}

TEST_CASE("stop rules cut the search")
{
    const auto& pd = testing::data();
    VinbergRun part = run_vinberg(pd, 3, StopRule::parse("expected:5"));
    CHECK(part.result.roots.size() == 5);
    CHECK(part.result.stopped);
    VinbergRun h0 = run_vinberg(pd, 3, StopRule::parse("height:0"));
    for (const auto& r : h0.result.roots) CHECK(r.height == 0);
}

TEST_CASE("rendering")
{
    const auto& pd = testing::data();
    CoxeterDiagram d = pd.diagram(1);
    std::string dot = render_dot(d, "L1");
    CHECK(dot.rfind("graph L1 {\n", 0) == 0);
    CHECK(dot.find("label=\"inf\"") != std::string::npos);
    CHECK(dot.find("color=\"black:black\"") != std::string::npos);
    CHECK(dot.back() == '\n');
    std::string ascii = render_ascii(d, "L1");
    CHECK(ascii.rfind("L1: 7 nodes, 6 bonds", 0) == 0);
    CHECK(diagram_from_json(diagram_to_json(d)) == d);
}
