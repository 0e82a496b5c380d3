#pragma once

#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "fhent/symbols.hpp"
#include "fhent/symmetry.hpp"

namespace fhent {

struct SymbolMatrix {
    Eigen::MatrixXd entries;
    SymmetryClass cls;
};

// Needs coefficients up to lag 2N+2. Throws MissingCoefficientError otherwise.
SymbolMatrix build_symbol_matrix(const FourierCoefficients& g, int N, SymmetryClass cls);
SymbolMatrix build_symbol_matrix(const EvenStepSymbol& g, int N, SymmetryClass cls);

using EvenFunction = std::function<double(double)>;

// <prod f(theta_j)> over the group: prefactor times det of the symbol matrix of
// g(theta) = f(theta) f(-theta); the unitary case uses the Toeplitz matrix of f.
double group_average(const EvenFunction& f, int N, SymmetryClass cls);

// Direct N-fold quadrature of the eigenvalue integral, normalized by the same
// quadrature at f = 1. N <= 3.
double brute_force_average(const EvenFunction& f, int N, SymmetryClass cls, int quad_points = 200);

struct IntergroupReport {
    double odd_plus_vs_minus = 0.0;       // <f>_{O+(2N+1)} vs <f(pi - .)>_{O-(2N+1)}
    double odd_minus_vs_plus = 0.0;       // <f>_{O-(2N+1)} vs <f(pi - .)>_{O+(2N+1)}
    std::optional<double> sp_vs_ominus;   // empty when f(0) f(pi) = 0
    double unitary_factorization = 0.0;   // U(2N+1) vs O+(2N+2) x Sp(2N)
    double max_discrepancy = 0.0;
};

IntergroupReport intergroup_check(const EvenFunction& f, int N);

// det(lambda I - T).
cplx characteristic_polynomial(const Eigen::MatrixXd& t, cplx lambda);

// ln det(lambda I - T), imaginary part in (-pi, pi]. Throws NearSingularError
// when lambda is within ~1e-12 of the spectrum.
cplx log_characteristic_polynomial(const Eigen::MatrixXd& t, cplx lambda);

}  // namespace fhent
