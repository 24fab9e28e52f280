#pragma once

#include "octica/data_file.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace octica {

struct CheckResult {
    std::string id;
    std::string group;
    std::string topic;
    std::string expected;
    std::string computed;
    bool pass = false;
    double ms = 0;
};

struct Report {
    std::string checksum;
    std::vector<CheckResult> checks;

    bool pass() const;
    std::size_t passed() const;
    nlohmann::json to_json(bool timing = false) const;
    static Report from_json(const nlohmann::json& j);
    std::string text(bool timing = false) const;
};

// Groups in report order: fix, vinberg, roots, mod2, ovq, type2, wall, cone, props.
const std::vector<std::string>& check_groups();
// Acceptance criterion number (1..9) covered by a group.
int criterion_of(const std::string& group);

// Runs the checks of the selected groups (all when empty) on up to `threads` workers.
// Results are ordered by registration, independent of scheduling. Throws std::invalid_argument for unknown groups.
Report run_checks(const DataFile& pd, const std::vector<std::string>& groups = {}, unsigned threads = 1);

}  // namespace octica
