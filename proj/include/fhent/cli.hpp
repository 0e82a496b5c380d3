#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace fhent {

struct RunConfig {
    std::string command;  // entropy, finite-chain, fh, painleve, group-average, verify
    std::map<std::string, std::string> values;
};

// Flat "key = value" lines; '#' starts a comment. Throws ConfigError.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> read_config_file(const std::string& path);

// Throws ConfigError for unknown commands or keys.
void validate(const RunConfig& config);

// Returns 0 on success, 1 on numerical failure, 2 on a config error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fhent
