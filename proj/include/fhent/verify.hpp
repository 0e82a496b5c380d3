#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fhent {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed;
    std::string detail;
};

// special, symbols, chain, groups, fh, painleve, pipeline
const std::vector<std::string_view>& verify_suites();

// Runs one suite, or every suite for "all". Throws ConfigError for unknown names.
std::vector<CheckResult> run_suite(std::string_view suite);

}  // namespace fhent
