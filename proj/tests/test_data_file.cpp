#include "octica/data_file.hpp"

#include "common.hpp"
#include "doctest.h"

using namespace octica;

TEST_CASE("bundled data loads with a stable checksum")
{
    const auto& pd = testing::data();
    CHECK(pd.checksum().size() == 16);
    CHECK(pd.checksum() == DataFile::load(DataFile::default_path()).checksum());
    for (const auto& n : DataFile::builtin_names()) CHECK(pd.has_builtin(n));
    CHECK_FALSE(pd.has_builtin("L5"));
    CHECK(DataFile::builtin_names().size() == 23);
    CHECK(pd.has_roots(2));
    CHECK(pd.has_roots(3));
}

TEST_CASE("errors are DataError")
{
    CHECK_THROWS_AS(DataFile::load("/nonexistent/paper_data.json"), DataError);
    CHECK_THROWS_AS(DataFile::parse("{not json"), DataError);
    CHECK_THROWS_AS(DataFile::parse("{\"format\": \"other\"}"), DataError);
    const auto& pd = testing::data();
    CHECK_THROWS(pd.chi(5));
    CHECK_THROWS(pd.cusp_matrix("kappa2"));
}

TEST_CASE("json encodings round-trip")
{
    GaussInt z(3, -4);
    CHECK(gauss_to_json(z) == nlohmann::json::parse("[3,-4]"));
    CHECK(gauss_from_json(gauss_to_json(z)) == z);
    GaussRat q(GaussInt(1, 2), Int(3));
    CHECK(gaussrat_to_json(q) == nlohmann::json::parse(R"({"num":[1,2],"den":3})"));
    CHECK(gaussrat_from_json(gaussrat_to_json(q)) == q);
    ExtScalar e(q, GaussRat(GaussInt(0, 1)));
    auto ej = ext_to_json(e);
    CHECK(ej.contains("a"));
    CHECK(ej.contains("b"));
    CHECK(ext_from_json(ej) == e);
    const auto& pd = testing::data();
    CHECK(gmat_from_json(gmat_to_json(pd.chi(3))) == pd.chi(3));
    CHECK(intmat_from_json(intmat_to_json(pd.gram(2))) == pd.gram(2));
    CHECK(diagram_from_json(diagram_to_json(pd.diagram(3))) == pd.diagram(3));
    GMat g = lattice_gram_from_json(nlohmann::json::parse(R"({"rank":2,"gram":[[2,[1,1]],[[1,-1],2]]})"));
    CHECK(g(0, 1) == GaussInt(1, 1));
    CHECK_THROWS_AS(lattice_gram_from_json(nlohmann::json::parse(R"({"rank":3,"gram":[[1]]})")), DataError);
    CHECK(bond_from_name(bond_name(Bond::Ultraparallel)) == Bond::Ultraparallel);
    CHECK_THROWS_AS(bond_from_name("quadruple"), DataError);
}

TEST_CASE("checksum is fnv1a-64")
{
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
}
