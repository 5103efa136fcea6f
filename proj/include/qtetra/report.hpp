#pragma once

// Check results shared by every verification suite, with the JSON shape
// {"suite", "params", "checks":[{"name","pass","detail"}], "elapsed_ms"}.

#include <json.hpp>

#include <string>
#include <vector>

namespace qtetra {

struct Check {
    std::string name;
    bool pass = false;
    nlohmann::json detail = nlohmann::json::object();
};

struct SuiteReport {
    std::string suite;
    nlohmann::json params = nlohmann::json::object();
    std::vector<Check> checks;
    double elapsed_ms = 0.0;

    bool passed() const;
    void add(Check c) { checks.push_back(std::move(c)); }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

}  // namespace qtetra
