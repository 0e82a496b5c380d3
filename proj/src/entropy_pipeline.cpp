#include "fhent/entropy_pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include <fmt/format.h>
#include <json.hpp>

#include "fhent/errors.hpp"
#include "fhent/group_matrices.hpp"
#include "fhent/painleve.hpp"

namespace fhent {

namespace {

double symbol_entropy(const EvenStepSymbol& sym, SymmetryClass cls, int N) {
    return entropy(nu_spectrum(build_symbol_matrix(sym, N, cls).entries));
}

void check_ns(const std::vector<int>& Ns) {
    for (int n : Ns)
        if (n < 1) throw DimensionError("entropy_curve: N must be positive");
}

// slope of y against x by least squares
std::pair<double, double> line_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = double(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return {slope, (sy - slope * sx) / n};
}

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError("bad integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

std::string_view route_name(Route r) {
    switch (r) {
        case Route::FiniteChain: return "finite-chain";
        case Route::SymbolMatrix: return "symbol";
        case Route::PainleveExact: return "painleve";
    }
    return "?";
}

Route parse_route(std::string_view name) {
    for (Route r : {Route::FiniteChain, Route::SymbolMatrix, Route::PainleveExact})
        if (route_name(r) == name) return r;
    throw ConfigError("unknown route '" + std::string(name) + "'");
}

EntropyCurve entropy_curve(const EvenStepSymbol& sym, SymmetryClass cls, const std::vector<int>& Ns, Route route) {
    check_ns(Ns);
    EntropyCurve c;
    switch (route) {
        case Route::SymbolMatrix:
            for (int N : Ns) c.rows.push_back({N, symbol_entropy(sym, cls, N), route});
            break;
        case Route::PainleveExact:
            if (cls != SymmetryClass::Unitary || sym.R() != 1)
                throw DomainError("entropy_curve: the Painleve route needs the unitary class and one jump");
            for (int N : Ns) c.rows.push_back({N, painleve_entropy(sym.jumps[0], sym.value_at_zero, N), route});
            break;
        case Route::FiniteChain:
            throw DomainError("entropy_curve: the finite-chain route needs a coupling spec");
    }
    return c;
}

EntropyCurve entropy_curve(const CouplingSpec& spec, SymmetryClass cls, const std::vector<int>& Ns, Route route,
                           ZeroModePolicy policy) {
    if (route != Route::FiniteChain) return entropy_curve(find_jumps(spec), cls, Ns, route);
    check_ns(Ns);
    EntropyCurve c;
    auto e = chain_entropies(spec, cls, Ns, policy);
    for (size_t i = 0; i < Ns.size(); ++i) c.rows.push_back({Ns[i], e[i], route});
    return c;
}

AsymptoticFit fit_asymptotics(const EntropyCurve& curve, int N_min) {
    std::vector<double> x, y;
    AsymptoticFit f{};
    f.N_min = 0;
    f.N_max = 0;
    for (const auto& r : curve.rows) {
        if (r.N < N_min) continue;
        x.push_back(std::log2(double(r.N)));
        y.push_back(r.E_P);
        f.N_min = f.points == 0 ? r.N : std::min(f.N_min, r.N);
        f.N_max = std::max(f.N_max, r.N);
        ++f.points;
    }
    if (f.points < 5) throw InsufficientDataError("fit_asymptotics: need at least 5 points");
    std::tie(f.slope, f.intercept) = line_fit(x, y);
    f.residual = 0.0;
    for (size_t i = 0; i < x.size(); ++i) f.residual = std::max(f.residual, std::abs(f.slope * x[i] + f.intercept - y[i]));
    return f;
}

CompareReport compare_report(const EntropyCurve& curve, const EntropyAsymptotics& asym) {
    CompareReport r{{}, 0.0};
    std::vector<double> x, y;
    for (const auto& row : curve.rows) {
        double pred = asym.slope * std::log2(double(row.N)) + asym.constant;
        r.rows.push_back({row.N, row.E_P, row.route, pred, row.E_P - pred});
        x.push_back(std::log2(double(row.N)));
        y.push_back(std::abs(row.E_P - pred));
    }
    if (x.size() >= 2) r.trend = line_fit(x, y).first;
    return r;
}

std::vector<int> parse_n_range(std::string_view text) {
    std::vector<int> out;
    auto dots = text.find("..");
    if (dots != std::string_view::npos) {
        int lo = parse_int(text.substr(0, dots)), hi = parse_int(text.substr(dots + 2));
        if (lo < 1 || hi < lo) throw ConfigError("bad N range '" + std::string(text) + "'");
        for (long p = 1; p <= hi; p *= 2)
            if (p >= lo) out.push_back(int(p));
        if (out.empty()) throw ConfigError("N range '" + std::string(text) + "' contains no power of two");
        return out;
    }
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        int v = parse_int(text.substr(start, comma - start));
        if (v < 1) throw ConfigError("N must be positive");
        out.push_back(v);
        start = comma + 1;
    }
    return out;
}

void write_csv(std::ostream& os, const CompareReport& r) {
    os << "N,E_P,route,prediction,deviation\n";
    for (const auto& row : r.rows)
        os << fmt::format("{},{:.12g},{},{:.12g},{:.12g}\n", row.N, row.E_P, route_name(row.route), row.prediction,
                          row.deviation);
}

void write_json(std::ostream& os, const CompareReport& r) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json o;
        o["N"] = row.N;
        o["E_P"] = std::stod(fmt::format("{:.12g}", row.E_P));
        o["route"] = std::string(route_name(row.route));
        o["prediction"] = std::stod(fmt::format("{:.12g}", row.prediction));
        o["deviation"] = std::stod(fmt::format("{:.12g}", row.deviation));
        a.push_back(o);
    }
    os << a.dump(2) << '\n';
}

}  // namespace fhent
