#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fhent/cli.hpp"
#include "fhent/errors.hpp"

namespace {

struct Flag {
    const char* name;  // long flag without dashes
    const char* key;   // config key
    const char* help;
};

constexpr Flag kFlags[] = {
    {"model", "model", "xx, xy or custom"},
    {"alpha", "alpha", "coupling alpha"},
    {"gamma", "gamma", "anisotropy gamma"},
    {"a", "a", "lag map for A, e.g. \"{0: -2, 1: 1, -1: 1}\" (custom model)"},
    {"b", "b", "lag map for B (custom model)"},
    {"m", "m", "number of sites M"},
    {"class", "class", "unitary, o+even, sp, o-even, o+odd, o-odd (finite-chain also: general)"},
    {"n", "n", "N values: lo..hi (powers of two) or a,b,c"},
    {"route", "route", "symbol, finite-chain or painleve"},
    {"policy", "policy", "zero modes: drop, keep-plus, keep-minus"},
    {"jumps", "jumps", "jump positions theta_r, comma separated"},
    {"v0", "v0", "symbol value at theta = 0 (+1 or -1)"},
    {"lambda", "lambda", "spectral parameter (fh accepts a+bi)"},
    {"xi", "xi", "gap generating parameter"},
    {"phi", "phi", "arc angle"},
    {"n-max", "n_max", "largest N"},
    {"output", "output", "csv or json"},
    {"matrix", "matrix", "export a matrix as CSV (A, B, T or symbol)"},
    {"suite", "suite", "verify suite: all, special, symbols, chain, groups, fh, painleve, pipeline"},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement entropy of quadratic spin chains by symmetry class"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "flat key = value config file");

    std::map<std::string, std::string> flags;
    const char* commands[][2] = {
        {"entropy", "entropy curve, fit and comparison with the asymptotics"},
        {"finite-chain", "exact entropies of an M-site chain"},
        {"fh", "log determinants against the Fisher-Hartwig prediction"},
        {"painleve", "x_N and E_N from the recurrence"},
        {"group-average", "averages of prod (lambda - g) over a symmetry class"},
        {"verify", "check the module invariants"},
    };
    for (auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config_path, "flat key = value config file");
        for (const auto& f : kFlags) {
            std::string key = f.key;
            sub->add_option_function<std::string>(
                std::string("--") + f.name, [&flags, key](const std::string& v) { flags[key] = v; }, f.help);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    fhent::RunConfig config;
    config.command = app.get_subcommands().front()->get_name();
    try {
        if (!config_path.empty()) config.values = fhent::read_config_file(config_path);
    } catch (const fhent::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    for (const auto& [k, v] : flags) config.values[k] = v;
    return fhent::run(config, std::cout, std::cerr);
}
