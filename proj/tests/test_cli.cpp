#include "octica/cli.hpp"

#include "common.hpp"
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace octica;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "octica");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string corrupted_data_file()
{
    auto j = nlohmann::json::parse(slurp(DataFile::default_path()));
    j["L3"]["gram"][0][0] = -10;
    auto path = std::filesystem::temp_directory_path() / "octica_corrupted_L3.json";
    std::ofstream(path) << j.dump();
    return path.string();
}

// Runs the installed binary through the shell and returns its exit status and stdout.
Run binary(const std::string& args)
{
    Run r;
    std::string cmd = std::string(OCTICA_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("dot output matches the golden files byte for byte")
{
    for (int i = 0; i < 5; ++i) {
        std::string name = "L" + std::to_string(i);
        CAPTURE(name);
        Run r = cli({"diagram", "--lattice", name, "--format", "dot"});
        REQUIRE(r.code == 0);
        CHECK(r.out == slurp(std::string(OCTICA_SOURCE_DIR) + "/tests/golden/" + name + ".dot"));
    }
}

TEST_CASE("ascii diagram of L0 has 6 nodes and one double bond")
{
    Run r = cli({"diagram", "--lattice", "L0", "--format", "ascii"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("L0: 6 nodes") != std::string::npos);
    std::size_t doubles = 0;
    for (std::size_t p = r.out.find(" double\n"); p != std::string::npos; p = r.out.find(" double\n", p + 1)) ++doubles;
    CHECK(doubles == 1);
}

TEST_CASE("json diagram re-ingests to the same diagram")
{
    for (const char* src : {"--transcribed", ""}) {
        std::vector<std::string> args{"diagram", "--lattice", "L2", "--format", "json"};
        if (*src) args.push_back(src);
        Run r = cli(args);
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("checksum") == testing::data().checksum());
        CHECK(diagram_from_json(j.at("diagram")) == testing::data().diagram(2));
    }
}

TEST_CASE("manual page is generated from the command definitions")
{
    std::string man = man_page();
    CHECK(man == slurp(std::string(OCTICA_SOURCE_DIR) + "/docs/octica.1"));
    Run help = cli({"--help"});
    for (const char* cmd : {"lattice", "fix", "vinberg", "diagram", "mod2", "s8-table", "type2", "cone-angle",
                            "verify-all"}) {
        CHECK(help.out.find(cmd) != std::string::npos);
        std::string escaped;
        for (const char* c = cmd; *c; ++c) escaped += *c == '-' ? std::string("\\-") : std::string(1, *c);
        CHECK(man.find(".SS \"" + escaped) != std::string::npos);
    }
    CHECK(man.find("\\-\\-threads") != std::string::npos);
    CHECK(cli({"--man"}).out == man);
}

TEST_CASE("every subcommand is deterministic and prints the checksum")
{
    const std::string sum = testing::data().checksum();
    std::vector<std::vector<std::string>> cmds{
        {"lattice", "show"},
        {"lattice", "show", "chi3", "--json"},
        {"fix", "--chi", "1"},
        {"fix", "--chi", "4", "--json"},
        {"vinberg", "--lattice", "L1", "--format", "json"},
        {"vinberg", "--lattice", "L3", "--stop", "height:1"},
        {"diagram", "--lattice", "L4", "--format", "ascii"},
        {"mod2", "--chi", "2"},
        {"mod2", "--chi", "0", "--json"},
        {"s8-table"},
        {"s8-table", "--json"},
        {"type2", "--chi", "3"},
        {"type2", "--chi", "2", "--json"},
        {"cone-angle"},
        {"cone-angle", "--json"},
        {"verify-all", "--only", "mod2,wall"},
        {"--json", "verify-all", "--only", "roots"},
    };
    for (const auto& c : cmds) {
        std::string line;
        for (const auto& a : c) line += a + " ";
        CAPTURE(line);
        Run a = cli(c), b = cli(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.find(sum) != std::string::npos);
    }
}

TEST_CASE("exit codes")
{
    CHECK(cli({"--data", "/nonexistent.json", "s8-table"}).code == ExitDataError);
    CHECK(cli({"fix", "--chi", "9"}).code == ExitDataError);
    CHECK(cli({"fix"}).code == ExitDataError);
    CHECK(cli({"vinberg", "--lattice", "L9"}).code == ExitDataError);
    CHECK(cli({"vinberg", "--lattice", "L0", "--stop", "sometime"}).code == ExitDataError);
    CHECK(cli({"diagram", "--lattice", "L0", "--format", "svg"}).code == ExitDataError);
    CHECK(cli({"verify-all", "--only", "nothing"}).code == ExitDataError);
    CHECK(cli({"lattice", "show", "omega"}).code == ExitDataError);
    Run missing = cli({"--data", "/nonexistent.json", "verify-all"});
    CHECK(missing.err.find("/nonexistent.json") != std::string::npos);
}

TEST_CASE("vinberg accepts a lattice file")
{
    auto path = std::filesystem::temp_directory_path() / "octica_i12.json";
    std::ofstream(path) << R"({"rank": 3, "gram": [[1, 0, 0], [0, -1, 0], [0, 0, -1]]})";
    Run r = cli({"vinberg", "--lattice", path.string(), "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("roots").size() == 3);
    CHECK(j.at("finite_volume") == true);
    Run n = cli({"vinberg", "--lattice", path.string(), "--norms", "-1,-2", "--format", "dot"});
    CHECK(n.code == 0);
    CHECK(n.out.find("graph lattice {") != std::string::npos);
    std::ofstream(path) << R"({"rank": 2, "gram": [[-1, 0], [0, -1]]})";
    CHECK(cli({"vinberg", "--lattice", path.string()}).code == ExitDataError);
}

TEST_CASE("corrupted L3 entry: verify-all exits 1 and names the failing check")
{
    std::string bad = corrupted_data_file();
    Run r = cli({"--data", bad, "verify-all"});
    CHECK(r.code == ExitCheckFailed);
    CHECK(r.out.find("FAIL fix.basis.L3") != std::string::npos);
    CHECK(r.out.find("Gram entry (1,1) is -6, expected -10") != std::string::npos);
    CHECK(r.out.find("FAIL fix.basis.L2") == std::string::npos);
    Run j = cli({"--data", bad, "--json", "verify-all", "--only", "fix"});
    CHECK(j.code == ExitCheckFailed);
    auto rep = nlohmann::json::parse(j.out);
    std::vector<std::string> failing;
    for (const auto& c : rep.at("checks"))
        if (!c.at("pass").get<bool>()) failing.push_back(c.at("id"));
    CHECK(failing == std::vector<std::string>{"fix.basis.L3"});
}

TEST_CASE("binary exit codes")
{
    Run ok = binary("verify-all --only cone");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("8/8 checks passed: PASS") != std::string::npos);
    CHECK(binary("--data /nonexistent.json verify-all").code == 2);
    CHECK(binary("--data " + corrupted_data_file() + " verify-all --only fix").code == 1);
    CHECK(binary("--help").code == 0);
}
