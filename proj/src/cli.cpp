#include "fhent/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "fhent/entropy_pipeline.hpp"
#include "fhent/errors.hpp"
#include "fhent/finite_chain.hpp"
#include "fhent/fisher_hartwig.hpp"
#include "fhent/group_matrices.hpp"
#include "fhent/linalg.hpp"
#include "fhent/painleve.hpp"
#include "fhent/special_functions.hpp"
#include "fhent/verify.hpp"

namespace fhent {

namespace {

const std::set<std::string> kCommands = {"entropy", "finite-chain", "fh", "painleve", "group-average", "verify"};
const std::set<std::string> kKeys = {"model", "alpha", "gamma", "a",  "b",      "m",     "class",  "n",
                                     "route", "policy", "jumps", "v0", "lambda", "xi",   "phi",    "n_max",
                                     "output", "matrix", "suite"};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fmt12(double v) { return fmt::format("{:.12g}", v); }

class Table {
public:
    explicit Table(std::vector<std::string> cols) : cols_(std::move(cols)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void write(std::ostream& os, const std::string& format) const {
        if (format == "json") {
            nlohmann::ordered_json a = nlohmann::ordered_json::array();
            for (const auto& r : rows_) {
                nlohmann::ordered_json o;
                for (size_t i = 0; i < cols_.size(); ++i) o[cols_[i]] = cell(r[i]);
                a.push_back(o);
            }
            os << a.dump(2) << '\n';
            return;
        }
        for (size_t i = 0; i < cols_.size(); ++i) os << (i ? "," : "") << cols_[i];
        os << '\n';
        for (const auto& r : rows_) {
            for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
            os << '\n';
        }
    }

private:
    static nlohmann::ordered_json cell(const std::string& s) {
        if (s.empty()) return nullptr;
        char* end = nullptr;
        double v = std::strtod(s.c_str(), &end);
        if (end && *end == '\0') {
            if (s.find_first_of(".eE") == std::string::npos && s.find("inf") == std::string::npos &&
                s.find("nan") == std::string::npos)
                return std::stoll(s);
            return v;
        }
        return s;
    }

    std::vector<std::string> cols_;
    std::vector<std::vector<std::string>> rows_;
};

class Values {
public:
    explicit Values(const std::map<std::string, std::string>& kv) : kv_(kv) {}

    bool has(const std::string& k) const { return kv_.count(k) > 0; }
    std::string str(const std::string& k, const std::string& dflt) const { return has(k) ? kv_.at(k) : dflt; }

    double num(const std::string& k) const {
        if (!has(k)) throw ConfigError("missing value for '" + k + "'");
        return parse_double(kv_.at(k), k);
    }
    double num(const std::string& k, double dflt) const { return has(k) ? num(k) : dflt; }

    int integer(const std::string& k, int dflt) const {
        if (!has(k)) return dflt;
        double v = num(k);
        if (v != double(int(v))) throw ConfigError("'" + k + "' must be an integer");
        return int(v);
    }

    cplx complex(const std::string& k) const {
        if (!has(k)) throw ConfigError("missing value for '" + k + "'");
        std::string s = trim(kv_.at(k));
        if (s.empty() || s.back() != 'i') return parse_double(s, k);
        std::string body = s.substr(0, s.size() - 1);
        size_t split = std::string::npos;
        for (size_t i = 1; i < body.size(); ++i)
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') split = i;
        if (split == std::string::npos) {
            if (body.empty() || body == "+") return {0.0, 1.0};
            if (body == "-") return {0.0, -1.0};
            return {0.0, parse_double(body, k)};
        }
        std::string im = body.substr(split);
        double iv = im == "+" ? 1.0 : im == "-" ? -1.0 : parse_double(im, k);
        return {parse_double(body.substr(0, split), k), iv};
    }

    std::vector<double> list(const std::string& k) const {
        std::vector<double> out;
        std::stringstream ss(str(k, ""));
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(parse_double(item, k));
        return out;
    }

private:
    static double parse_double(const std::string& raw, const std::string& k) {
        std::string s = trim(raw);
        try {
            size_t used = 0;
            double v = std::stod(s, &used);
            if (used != s.size()) throw ConfigError("");
            return v;
        } catch (const std::exception&) {
            throw ConfigError("bad number '" + raw + "' for '" + k + "'");
        }
    }

    const std::map<std::string, std::string>& kv_;
};

std::string output_format(const Values& v) {
    std::string f = v.str("output", "csv");
    if (f != "csv" && f != "json") throw ConfigError("output must be csv or json");
    return f;
}

CouplingSpec coupling(const std::map<std::string, std::string>& kv) {
    std::map<std::string, std::string> sub;
    for (const char* k : {"model", "alpha", "gamma", "a", "b", "m"})
        if (kv.count(k)) sub[k] = kv.at(k);
    return coupling_from_config(sub);
}

EvenStepSymbol symbol(const Values& v, const std::map<std::string, std::string>& kv) {
    if (v.has("jumps")) {
        int v0 = v.integer("v0", 1);
        try {
            return make_step_symbol(v.list("jumps"), v0);
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
    }
    return find_jumps(coupling(kv));
}

SymmetryClass sym_class(const Values& v) { return parse_class(v.str("class", "unitary")); }

ChainClass chain_class(const Values& v) {
    std::string c = v.str("class", "general");
    if (c == "general") return std::nullopt;
    return parse_class(c);
}

ZeroModePolicy policy(const Values& v, ChainClass cls) {
    std::string p = v.str("policy", cls ? "drop" : "keep-plus");
    if (p == "drop") return ZeroModePolicy::Drop;
    if (p == "keep-plus") return ZeroModePolicy::KeepPlus;
    if (p == "keep-minus") return ZeroModePolicy::KeepMinus;
    throw ConfigError("policy must be drop, keep-plus or keep-minus");
}

void cmd_entropy(const Values& v, const std::map<std::string, std::string>& kv, std::ostream& out,
                 std::ostream& err) {
    auto cls = sym_class(v);
    auto Ns = parse_n_range(v.str("n", "64..512"));
    Route route = parse_route(v.str("route", "symbol"));
    std::string format = output_format(v);
    EntropyCurve curve;
    EvenStepSymbol sym;
    if (route == Route::FiniteChain) {
        if (v.has("jumps")) throw ConfigError("the finite-chain route needs a model, not jumps");
        auto spec = coupling(kv);
        if (spec.M <= 0) throw ConfigError("the finite-chain route needs m");
        curve = entropy_curve(spec, cls, Ns, route, policy(v, cls));
        sym = find_jumps(spec);
    } else {
        sym = symbol(v, kv);
        curve = entropy_curve(sym, cls, Ns, route);
    }
    CompareReport report;
    if (sym.R() > 0) {
        report = compare_report(curve, entropy_asymptotics(sym, cls));
    } else {
        for (const auto& r : curve.rows) report.rows.push_back({r.N, r.E_P, r.route, 0.0, r.E_P});
        report.trend = 0.0;
    }
    if (format == "json") write_json(out, report);
    else write_csv(out, report);
    if (curve.rows.size() >= 5) {
        auto f = fit_asymptotics(curve);
        err << fmt::format("fit: slope={} intercept={} residual={} N={}..{} points={}\n", fmt12(f.slope),
                           fmt12(f.intercept), fmt12(f.residual), f.N_min, f.N_max, f.points);
    } else {
        err << "fit: skipped, needs at least 5 values of N\n";
    }
    err << "trend: " << fmt12(report.trend) << '\n';
}

void cmd_finite_chain(const Values& v, const std::map<std::string, std::string>& kv, std::ostream& out) {
    auto spec = coupling(kv);
    if (spec.M <= 0) throw ConfigError("finite-chain needs m");
    auto cls = chain_class(v);
    auto pol = policy(v, cls);
    std::string matrix = v.str("matrix", "");
    if (!matrix.empty()) {
        auto h = build_matrices(spec, cls);
        if (matrix == "A") write_csv(out, h.A_bar);
        else if (matrix == "B") write_csv(out, h.B_bar);
        else if (matrix == "T") {
            auto Ns = parse_n_range(v.str("n", "16"));
            if (Ns.size() != 1) throw ConfigError("matrix T needs a single n");
            write_csv(out, restrict(correlation_matrix(diagonalize(h), pol), Ns[0]).T);
        } else throw ConfigError("matrix must be A, B or T");
        return;
    }
    auto Ns = parse_n_range(v.str("n", "1..16"));
    auto e = chain_entropies(spec, cls, Ns, pol);
    Table t({"N", "E_P"});
    for (size_t i = 0; i < Ns.size(); ++i) t.add({std::to_string(Ns[i]), fmt12(e[i])});
    t.write(out, output_format(v));
}

void cmd_fh(const Values& v, const std::map<std::string, std::string>& kv, std::ostream& out) {
    auto sym = symbol(v, kv);
    auto cls = sym_class(v);
    cplx lambda = v.complex("lambda");
    auto Ns = parse_n_range(v.str("n", "8..256"));
    auto pred = fh_lndet(jump_parametrization(sym, lambda), sym, cls);
    Table t({"N", "ln_det", "ln_det_im", "prediction", "prediction_im", "error"});
    for (int N : Ns) {
        auto m = build_symbol_matrix(sym, N, cls).entries;
        cplx d = log_characteristic_polynomial(m, lambda);
        cplx p = wrap_log(pred.at(N));
        cplx diff = d - p;
        diff = cplx(diff.real(), std::remainder(diff.imag(), 2 * kPi));
        t.add({std::to_string(N), fmt12(d.real()), fmt12(d.imag()), fmt12(p.real()), fmt12(p.imag()),
               fmt12(std::abs(diff))});
    }
    t.write(out, output_format(v));
}

void cmd_painleve(const Values& v, std::ostream& out) {
    double phi = v.num("phi");
    int n_max = v.integer("n_max", 10);
    if (v.has("xi") == v.has("lambda")) throw ConfigError("painleve needs exactly one of xi and lambda");
    double lambda = v.num("lambda", 0.0);
    double xi = v.has("xi") ? v.num("xi") : 2.0 / (lambda + 1.0);
    auto seq = recurrence_sequence(phi, xi, n_max);
    std::vector<std::string> cols = {"N", "x_N", "E_N"};
    if (v.has("lambda")) cols.push_back("ln_det");
    Table t(cols);
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::string> row = {std::to_string(n), fmt12(seq.x_at(n).real()), fmt12(seq.E(n).real())};
        if (v.has("lambda")) row.push_back(fmt12(n * std::log(lambda + 1.0) + seq.logE[n].real()));
        t.add(row);
    }
    t.write(out, output_format(v));
}

void cmd_group_average(const Values& v, const std::map<std::string, std::string>& kv, std::ostream& out) {
    auto sym = symbol(v, kv);
    auto cls = sym_class(v);
    auto Ns = parse_n_range(v.str("n", "1..16"));
    std::string matrix = v.str("matrix", "");
    if (!matrix.empty()) {
        if (matrix != "symbol") throw ConfigError("matrix must be symbol");
        if (Ns.size() != 1) throw ConfigError("matrix export needs a single n");
        write_csv(out, build_symbol_matrix(sym, Ns[0], cls).entries);
        return;
    }
    // <prod (lambda - g(theta_j))>; for the groups f(t) f(-t) = lambda^2 + 1 - 2 lambda g(t)
    double lambda = v.num("lambda");
    int n_top = *std::max_element(Ns.begin(), Ns.end());
    FourierCoefficients c = step_coefficients(sym, 2 * n_top + 2);
    double pre = 1.0;
    for (auto& x : c.c) x *= cls == SymmetryClass::Unitary ? -1.0 : -2.0 * lambda;
    c.c[c.l_max] += cls == SymmetryClass::Unitary ? lambda : lambda * lambda + 1.0;
    double f0 = lambda - sym.value_at_zero, fpi = lambda - sym.value_at_pi();
    switch (info(cls).prefactor) {
        case Prefactor::One: break;
        case Prefactor::FAtZero: pre = f0; break;
        case Prefactor::FAtPi: pre = fpi; break;
        case Prefactor::FAtZeroTimesFAtPi: pre = f0 * fpi; break;
    }
    Table t({"N", "average"});
    for (int N : Ns) {
        auto m = build_symbol_matrix(c, N, cls).entries;
        t.add({std::to_string(N), fmt12(pre * m.determinant())});
    }
    t.write(out, output_format(v));
}

int cmd_verify(const Values& v, std::ostream& out) {
    auto results = run_suite(v.str("suite", "all"));
    bool ok = true;
    if (output_format(v) == "json") {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            a.push_back({{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            ok = ok && r.passed;
        }
        out << a.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS" : "FAIL") << " [" << r.suite << "] " << r.name << ": " << r.detail << '\n';
            ok = ok && r.passed;
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find_first_of("=:");
        // lag maps contain ':' themselves, so only split on the first '=' if there is one
        if (line.find('=') != std::string::npos) eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(fmt::format("config line {}: expected key = value", lineno));
        std::string key = trim(line.substr(0, eq));
        std::replace(key.begin(), key.end(), '-', '_');
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(fmt::format("config line {}: empty key", lineno));
        if (kv.count(key)) throw ConfigError(fmt::format("config line {}: duplicate key '{}'", lineno, key));
        kv[key] = value;
    }
    return kv;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

void validate(const RunConfig& config) {
    if (!kCommands.count(config.command)) throw ConfigError("unknown command '" + config.command + "'");
    for (const auto& [k, v] : config.values)
        if (!kKeys.count(k)) throw ConfigError("unknown key '" + k + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        Values v(config.values);
        const auto& kv = config.values;
        const std::string& c = config.command;
        if (c == "entropy") cmd_entropy(v, kv, out, err);
        else if (c == "finite-chain") cmd_finite_chain(v, kv, out);
        else if (c == "fh") cmd_fh(v, kv, out);
        else if (c == "painleve") cmd_painleve(v, out);
        else if (c == "group-average") cmd_group_average(v, kv, out);
        else return cmd_verify(v, out);
        return 0;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace fhent
