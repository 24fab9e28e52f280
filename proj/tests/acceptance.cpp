#include "octica/report.hpp"

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <map>

using namespace octica;

namespace {

std::string run_binary(const std::string& args, int& code)
{
    std::string cmd = std::string(OCTICA_BIN) + " " + args + " 2>&1";
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        code = -1;
        return out;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    code = pclose(p);
    return out;
}

// Byte-identical reruns of every subcommand of the real binary.
bool cli_deterministic(std::string& detail)
{
    const char* cmds[] = {"lattice show",
                          "fix --chi 3 --json",
                          "vinberg --lattice L2 --format json",
                          "diagram --lattice L1 --format dot",
                          "mod2 --chi 1",
                          "s8-table",
                          "type2 --chi 3 --json",
                          "cone-angle",
                          "verify-all --only fix,mod2,cone"};
    std::size_t same = 0, total = 0;
    for (const char* c : cmds) {
        int a = 0, b = 0;
        std::string x = run_binary(c, a), y = run_binary(c, b);
        ++total;
        if (a == 0 && b == 0 && x == y && !x.empty()) ++same;
    }
    detail = std::to_string(same) + "/" + std::to_string(total) + " subcommands byte-identical";
    return same == total;
}

}  // namespace

int main()
{
    const char* titles[] = {"",
                            "fixed lattices of chi0..chi4",
                            "Vinberg diagrams of L0..L4",
                            "root identity in the L2 chamber",
                            "mod-2 invariants",
                            "O(V,q) and the W-model",
                            "type II analysis",
                            "discriminant wall of L4",
                            "cuspidal cone angle",
                            "property suites"};
    const double budget[] = {0, 1, 300, 1, 1, 10, 30, 1, 120, 300};
    DataFile pd = DataFile::load(DataFile::default_path());
    std::cout << "data checksum: " << pd.checksum() << "\n";
    bool all = true;
    for (int k = 1; k <= 9; ++k) {
        const std::string& group = check_groups()[k - 1];
        auto t0 = std::chrono::steady_clock::now();
        Report r = run_checks(pd, {group}, 1);
        std::string extra;
        bool ok = r.pass();
        if (k == 9) ok = cli_deterministic(extra) && ok;
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ok = ok && s <= budget[k];
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << k << ": " << titles[k] << " (" << r.passed() << "/"
                  << r.checks.size() << " checks" << (extra.empty() ? "" : ", " + extra) << ", " << std::fixed
                  << std::setprecision(2) << s << " s of " << budget[k] << " s)\n";
        for (const auto& c : r.checks)
            if (!c.pass) std::cout << "      failed " << c.id << ": " << c.computed << "\n";
    }
    std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
    return all ? 0 : 1;
}
