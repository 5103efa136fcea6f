#include "qtetra/report.hpp"

#include <algorithm>
#include <sstream>

namespace qtetra {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json out;
    out["suite"] = suite;
    out["params"] = params;
    out["checks"] = nlohmann::json::array();
    for (const Check& c : checks) out["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out["elapsed_ms"] = elapsed_ms;
    return out;
}

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << ' ' << params.dump() << '\n';
    for (const Check& c : checks) {
        os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name;
        if (!c.detail.empty()) os << "  " << c.detail.dump();
        os << '\n';
    }
    std::size_t failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
    os << (failed == 0 ? "PASS" : "FAIL") << ' ' << (checks.size() - failed) << '/' << checks.size() << " checks, "
       << static_cast<long long>(elapsed_ms) << " ms\n";
    return os.str();
}

}  // namespace qtetra
