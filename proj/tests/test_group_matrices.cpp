#include <doctest.h>

#include <cmath>

#include "fhent/errors.hpp"
#include "fhent/group_matrices.hpp"
#include "fhent/special_functions.hpp"

using namespace fhent;

namespace {

double f_smooth(double t) { return 1.0 + 0.3 * std::cos(t) + 0.2 * std::cos(2 * t) - 0.1 * std::cos(3 * t); }
double f_exp(double t) { return std::exp(0.4 * std::cos(t) - 0.2 * std::cos(2 * t)); }

}  // namespace

TEST_CASE("class table") {
    CHECK(parse_class("sp") == SymmetryClass::Sp);
    CHECK(parse_class("o-odd") == SymmetryClass::OMinusOdd);
    CHECK_THROWS_AS(parse_class("so3"), ConfigError);
    CHECK(info(SymmetryClass::Unitary).w_G == 1);
    CHECK(info(SymmetryClass::OPlusOdd).sigma1 == -0.5);
    CHECK(info(SymmetryClass::OPlusOdd).sigma2 == 0.5);
}

TEST_CASE("group average equals the eigenvalue integral") {
    for (auto cls : kAllClasses) {
        for (int N = 1; N <= 3; ++N) {
            for (auto f : {f_smooth, f_exp}) {
                CAPTURE(info(cls).name);
                CAPTURE(N);
                double a = group_average(f, N, cls);
                double b = brute_force_average(f, N, cls);
                CHECK(a == doctest::Approx(b).epsilon(1e-10));
            }
        }
    }
    CHECK_THROWS_AS(brute_force_average(f_smooth, 4, SymmetryClass::Sp), CostError);
}

TEST_CASE("average of 1 is 1") {
    for (auto cls : kAllClasses) CHECK(group_average([](double) { return 1.0; }, 7, cls) == doctest::Approx(1.0));
}

TEST_CASE("intergroup identities") {
    for (int N : {1, 4, 9}) {
        auto r = intergroup_check(f_exp, N);
        CHECK(r.max_discrepancy < 1e-12);
        REQUIRE(r.sp_vs_ominus.has_value());
    }
    auto r = intergroup_check([](double t) { return 1.0 - std::cos(t); }, 3);
    CHECK(!r.sp_vs_ominus.has_value());
    CHECK(r.max_discrepancy < 1e-12);
}

TEST_CASE("symbol matrix needs enough coefficients") {
    auto c = smooth_fourier([](double t) { return cplx(f_smooth(t)); }, 5, 64);
    CHECK_NOTHROW(build_symbol_matrix(c, 2, SymmetryClass::Sp));
    CHECK_THROWS_AS(build_symbol_matrix(c, 3, SymmetryClass::Sp), MissingCoefficientError);
}

TEST_CASE("step symbol matrix matches numeric coefficients") {
    auto g = make_step_symbol({1.0, 2.2}, -1);
    auto c = step_coefficients(g, 30);
    for (auto cls : kAllClasses) {
        auto a = build_symbol_matrix(g, 12, cls).entries;
        auto b = build_symbol_matrix(c, 12, cls).entries;
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("characteristic polynomial") {
    Eigen::MatrixXd t(2, 2);
    t << 1, 2, 2, -1;
    cplx lam(0.5, 0.3);
    cplx want = (lam - 1.0) * (lam + 1.0) - 4.0;
    CHECK(std::abs(characteristic_polynomial(t, lam) - want) < 1e-14);
    cplx l = log_characteristic_polynomial(t, lam);
    CHECK(std::abs(std::exp(l) - want) < 1e-13);
    CHECK(l.imag() > -kPi);
    CHECK(l.imag() <= kPi);
    CHECK_THROWS_AS(log_characteristic_polynomial(t, std::sqrt(5.0)), NearSingularError);
}
