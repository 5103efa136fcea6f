#pragma once

// Named verification suites shared by the command line tool and the
// acceptance binary.

#include "qtetra/report.hpp"
#include "qtetra/tensorrep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtetra {

struct SuiteConfig {
    std::string suite;
    std::optional<int> N;
    std::optional<int> n;
    std::optional<int> degree;
    std::vector<int> gammas;
    std::optional<int> box_radius;
    std::optional<int> samples;
    std::uint64_t seed = 20130101;
    std::vector<Vertex> kills;
    std::string emit_trace;
    std::string replay;
};

/// Raised for configurations a suite cannot run (bad N, D, n ...).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& suite_names();
std::string suite_help();

/// Throws UsageError for an unknown suite or invalid parameters.
SuiteReport run_suite(const SuiteConfig& cfg);

/// Default truncation degree for identities in T_N.
int default_degree(int N);

}  // namespace qtetra
