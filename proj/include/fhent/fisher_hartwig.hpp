#pragma once

#include <complex>
#include <vector>

#include "fhent/symbols.hpp"
#include "fhent/symmetry.hpp"

namespace fhent {

// c_0 N + sum_{k=1}^{k_max} k c_k c_{-k}, with c the Fourier coefficients of ln g.
// Throws ConvergenceError if |c_k| near k_max is above 1e-12.
cplx szego_lndet(const FourierCoefficients& c, int N, int k_max);

// Parameters of the symbol lambda - g(theta) for an even step symbol g.
struct JumpParametrization {
    cplx lambda;
    cplx beta;                // ln((lambda+1)/(lambda-1)) / (2 pi i)
    std::vector<cplx> betas;  // beta_r = g(0) (-1)^r beta, r = 1..R
    cplx phi_const;           // exp(c0)
    cplx c0;                  // geometric mean of ln(lambda - g)
};

// Throws BranchCutError for lambda on [-1, 1].
JumpParametrization jump_parametrization(const EvenStepSymbol& sym, cplx lambda);

// d c0 / d lambda
cplx c0_derivative(const EvenStepSymbol& sym, cplx lambda);

struct FHPrediction {
    cplx linear_coeff;
    cplx log_coeff;
    cplx const_term;

    cplx at(int N) const { return linear_coeff * double(N) + log_coeff * std::log(double(N)) + const_term; }
};

// Asymptotics of ln det(lambda I - T_N) for the symbol matrix of the class.
// Imaginary parts are meaningful modulo 2 pi.
FHPrediction fh_lndet(const JumpParametrization& p, const EvenStepSymbol& sym, SymmetryClass cls);

enum class ContourIntegral { I1, I2, I3, I4 };

struct ContourResult {
    double value;         // extrapolated to eps -> 0
    double error;         // difference from the lower-order extrapolation
    std::vector<double> samples;  // raw values at eps = d, d/2, d/4
};

// Trapezoid rule on the ellipse lambda = cosh(rho + i t), cosh(rho) = 1 + eps/2,
// with the entropy function evaluated at x = 1 + eps. eps runs over {d, d/2, d/4}
// and the values are extrapolated in the basis {1, eps ln eps, eps}.
// points = 0 picks 60/sqrt(eps) + 64 nodes. Throws ConvergenceError if the
// extrapolation error exceeds tol.
ContourResult contour_integral(const EvenStepSymbol& sym, ContourIntegral which, double d = 1e-6,
                               int points = 0, double tol = 1e-6);

// Raw integral at a single eps.
cplx contour_integral_at(const EvenStepSymbol& sym, ContourIntegral which, double eps, int points);

inline constexpr double kI3Tabulated = 0.0221603;

struct EntropyAsymptotics {
    double slope;     // coefficient of log2 N
    double constant;
    int R;
    SymmetryClass cls;
    double K;
    double I2, I3, I4;
};

double k_constant(const EvenStepSymbol& sym);

// Throws DomainError for R = 0.
EntropyAsymptotics entropy_asymptotics(const EvenStepSymbol& sym, SymmetryClass cls, bool use_tabulated = true);

}  // namespace fhent
