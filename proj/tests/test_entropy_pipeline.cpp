#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "fhent/entropy_pipeline.hpp"
#include "fhent/errors.hpp"
#include "fhent/special_functions.hpp"

using namespace fhent;

namespace {

double e_bin(double x) {
    double s = 0.0;
    for (double p : {x, 1.0 - x})
        if (p > 0) s -= p * std::log2(p);
    return s;
}

}  // namespace

TEST_CASE("single-site entropy for one jump") {
    // T_1 = 2 theta/pi - 1, nu = 1/3 at theta = pi/3
    auto g = make_step_symbol({kPi / 3}, 1);
    auto c = entropy_curve(g, SymmetryClass::Unitary, {1}, Route::SymbolMatrix);
    double nu = 1.0 / 3.0;
    CHECK(c.rows[0].E_P == doctest::Approx(e_bin((1 + nu) / 2)).epsilon(1e-12));
    CHECK(c.rows[0].E_P == doctest::Approx(0.9183).epsilon(1e-4));
}

TEST_CASE("symbol and painleve routes agree") {
    std::vector<int> Ns;
    for (int n = 1; n <= 30; ++n) Ns.push_back(n);
    for (double th : {0.4, kPi / 3, 2.0}) {
        for (int v0 : {1, -1}) {
            auto g = make_step_symbol({th}, v0);
            auto a = entropy_curve(g, SymmetryClass::Unitary, Ns, Route::SymbolMatrix);
            auto b = entropy_curve(g, SymmetryClass::Unitary, Ns, Route::PainleveExact);
            for (size_t i = 0; i < Ns.size(); ++i) CHECK(std::abs(a.rows[i].E_P - b.rows[i].E_P) < 1e-8);
        }
    }
}

TEST_CASE("painleve route restrictions") {
    auto g2 = make_step_symbol({0.5, 2.0}, 1);
    CHECK_THROWS_AS(entropy_curve(g2, SymmetryClass::Unitary, {4}, Route::PainleveExact), DomainError);
    auto g1 = make_step_symbol({0.5}, 1);
    CHECK_THROWS_AS(entropy_curve(g1, SymmetryClass::Sp, {4}, Route::PainleveExact), DomainError);
    CHECK_THROWS_AS(entropy_curve(g1, SymmetryClass::Sp, {4}, Route::FiniteChain), DomainError);
    CHECK_THROWS_AS(entropy_curve(g1, SymmetryClass::Sp, {0}, Route::SymbolMatrix), DimensionError);
}

TEST_CASE("finite chain route tracks the symbol route") {
    auto spec = xx_preset(0.5, 1024);
    auto g = find_jumps(spec);
    std::vector<int> Ns = {4, 8, 16};
    for (auto cls : {SymmetryClass::Unitary, SymmetryClass::Sp, SymmetryClass::OPlusOdd}) {
        auto a = entropy_curve(spec, cls, Ns, Route::FiniteChain);
        auto b = entropy_curve(g, cls, Ns, Route::SymbolMatrix);
        for (size_t i = 0; i < Ns.size(); ++i) {
            CHECK(a.rows[i].route == Route::FiniteChain);
            CHECK(std::abs(a.rows[i].E_P - b.rows[i].E_P) < 5e-3);
            CHECK(a.rows[i].E_P == doctest::Approx(chain_entropy(spec, cls, Ns[i])).epsilon(1e-12));
        }
    }
}

TEST_CASE("fit recovers an exact line") {
    EntropyCurve c;
    for (int n : {8, 16, 32, 64, 128, 256}) c.rows.push_back({n, 0.25 * std::log2(double(n)) + 0.7, Route::SymbolMatrix});
    auto f = fit_asymptotics(c);
    CHECK(f.slope == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(f.intercept == doctest::Approx(0.7).epsilon(1e-13));
    CHECK(f.residual < 1e-13);
    CHECK(f.points == 6);
    CHECK(f.N_min == 8);
    CHECK(f.N_max == 256);
    CHECK_THROWS_AS(fit_asymptotics(c, 32), InsufficientDataError);
}

TEST_CASE("fitted slopes match R/3 and R/6") {
    std::vector<int> Ns = {64, 90, 128, 181, 256, 362, 512};
    auto g = make_step_symbol({kPi / 3}, 1);
    auto fu = fit_asymptotics(entropy_curve(g, SymmetryClass::Unitary, Ns, Route::SymbolMatrix));
    CHECK(std::abs(fu.slope - 1.0 / 3.0) < 1e-3);
    CHECK(std::abs(fu.intercept - 0.97832022) < 1e-3);
    auto fs = fit_asymptotics(entropy_curve(g, SymmetryClass::Sp, Ns, Route::SymbolMatrix));
    CHECK(std::abs(fs.slope - 1.0 / 6.0) < 5e-3);
    auto g2 = make_step_symbol({kPi / 4, 3 * kPi / 4}, 1);
    for (auto cls : kAllClasses) {
        auto f = fit_asymptotics(entropy_curve(g2, cls, Ns, Route::SymbolMatrix));
        double expect = cls == SymmetryClass::Unitary ? 2.0 / 3.0 : 1.0 / 3.0;
        CHECK(std::abs(f.slope - expect) < 5e-3);
    }
}

TEST_CASE("deviation from the asymptote shrinks") {
    std::vector<int> Ns = {8, 16, 32, 64, 128, 256, 512};
    auto g = make_step_symbol({kPi / 3}, 1);
    for (auto cls : kAllClasses) {
        auto r = compare_report(entropy_curve(g, cls, Ns, Route::SymbolMatrix), entropy_asymptotics(g, cls));
        CAPTURE(info(cls).name);
        CHECK(r.trend < 0);
        REQUIRE(r.rows.size() == Ns.size());
        for (const auto& row : r.rows) CHECK(row.deviation == doctest::Approx(row.E_P - row.prediction));
        // the parity subsequences decrease monotonically up to noise
        for (size_t i = 2; i < r.rows.size(); ++i)
            CHECK(std::abs(r.rows[i].deviation) <= std::abs(r.rows[i - 2].deviation) + 1e-3);
        CHECK(std::abs(r.rows.back().deviation) < 2e-3);
    }
    auto ru = compare_report(entropy_curve(g, SymmetryClass::Unitary, Ns, Route::SymbolMatrix),
                             entropy_asymptotics(g, SymmetryClass::Unitary));
    for (size_t i = 1; i < ru.rows.size(); ++i)
        CHECK(std::abs(ru.rows[i].deviation) < std::abs(ru.rows[i - 1].deviation));
}

TEST_CASE("N range parsing") {
    CHECK(parse_n_range("64..512") == std::vector<int>{64, 128, 256, 512});
    CHECK(parse_n_range("3..20") == std::vector<int>{4, 8, 16});
    CHECK(parse_n_range("5,7, 9") == std::vector<int>{5, 7, 9});
    CHECK(parse_n_range("12") == std::vector<int>{12});
    CHECK_THROWS_AS(parse_n_range("9..10"), ConfigError);
    CHECK_THROWS_AS(parse_n_range("x"), ConfigError);
    CHECK_THROWS_AS(parse_n_range("0,4"), ConfigError);
    CHECK(parse_route("symbol") == Route::SymbolMatrix);
    CHECK_THROWS_AS(parse_route("bogus"), ConfigError);
}

TEST_CASE("report serialization") {
    auto g = make_step_symbol({kPi / 3}, 1);
    auto r = compare_report(entropy_curve(g, SymmetryClass::Unitary, {16, 32}, Route::SymbolMatrix),
                            entropy_asymptotics(g, SymmetryClass::Unitary));
    std::ostringstream csv;
    write_csv(csv, r);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "N,E_P,route,prediction,deviation");
    std::getline(in, line);
    CHECK(line.rfind("16,", 0) == 0);
    CHECK(line.find(",symbol,") != std::string::npos);

    std::ostringstream js;
    write_json(js, r);
    auto j = nlohmann::json::parse(js.str());
    REQUIRE(j.size() == 2);
    CHECK(j[1]["N"] == 32);
    CHECK(j[1]["route"] == "symbol");
    CHECK(double(j[1]["E_P"]) == doctest::Approx(r.rows[1].E_P).epsilon(1e-11));
}

TEST_CASE("no jumps gives zero entropy") {
    EvenStepSymbol flat = make_step_symbol({}, 1);
    for (auto cls : kAllClasses) {
        auto c = entropy_curve(flat, cls, {1, 8, 64}, Route::SymbolMatrix);
        for (const auto& r : c.rows) CHECK(r.E_P < 1e-8);
    }
    auto chain = entropy_curve(xx_preset(0.5, 256), SymmetryClass::Unitary, {1, 8, 64}, Route::FiniteChain);
    for (const auto& r : chain.rows) CHECK(r.E_P < 1e-8);
}

TEST_CASE("exact data has zero deviation") {
    auto g = make_step_symbol({kPi / 3}, 1);
    auto a = entropy_asymptotics(g, SymmetryClass::Sp);
    EntropyCurve c;
    for (int n : {4, 16, 64}) c.rows.push_back({n, a.slope * std::log2(double(n)) + a.constant, Route::SymbolMatrix});
    auto r = compare_report(c, a);
    for (const auto& row : r.rows) CHECK(std::abs(row.deviation) < 1e-14);
    CHECK(std::abs(r.trend) < 1e-14);
}
