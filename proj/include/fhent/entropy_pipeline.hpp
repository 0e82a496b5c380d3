#pragma once

#include <ostream>
#include <string_view>
#include <vector>

#include "fhent/finite_chain.hpp"
#include "fhent/fisher_hartwig.hpp"
#include "fhent/symbols.hpp"
#include "fhent/symmetry.hpp"

namespace fhent {

enum class Route { FiniteChain, SymbolMatrix, PainleveExact };

std::string_view route_name(Route r);
Route parse_route(std::string_view name);  // finite-chain, symbol, painleve

struct EntropyRow {
    int N;
    double E_P;
    Route route;
};

struct EntropyCurve {
    std::vector<EntropyRow> rows;
};

// SymbolMatrix or PainleveExact (unitary, single jump).
EntropyCurve entropy_curve(const EvenStepSymbol& sym, SymmetryClass cls, const std::vector<int>& Ns, Route route);

// FiniteChain uses spec.M; the other routes locate the jumps of the spec first.
EntropyCurve entropy_curve(const CouplingSpec& spec, SymmetryClass cls, const std::vector<int>& Ns, Route route,
                           ZeroModePolicy policy = ZeroModePolicy::Drop);

struct AsymptoticFit {
    double slope;      // per log2 N
    double intercept;
    double residual;   // max |fit - data|
    int N_min;
    int N_max;
    int points;
};

// Least squares of E_P against log2 N over rows with N >= N_min.
// Throws InsufficientDataError with fewer than 5 such rows.
AsymptoticFit fit_asymptotics(const EntropyCurve& curve, int N_min = 1);

struct ReportRow {
    int N;
    double E_P;
    Route route;
    double prediction;
    double deviation;  // E_P - prediction
};

struct CompareReport {
    std::vector<ReportRow> rows;
    double trend;  // least-squares slope of |deviation| against log2 N
};

CompareReport compare_report(const EntropyCurve& curve, const EntropyAsymptotics& asym);

// Dyadic sweep 2^k for lo <= 2^k <= hi, or an explicit list "a,b,c", or "lo..hi".
std::vector<int> parse_n_range(std::string_view text);

void write_csv(std::ostream& os, const CompareReport& r);
void write_json(std::ostream& os, const CompareReport& r);

}  // namespace fhent
