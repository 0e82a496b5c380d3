#pragma once

#include <complex>
#include <vector>

namespace fhent {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kZetaPrimeMinus1 = -0.16542114370045092921391966024278064;

// ln Gamma(z), analytic in the plane cut along the non-positive real axis.
cplx log_gamma(cplx z);

// Digamma psi(z) = d/dz ln Gamma(z).
cplx digamma(cplx z);

// ln G(z) for the Barnes G-function, continued from the positive real axis
// so that ln G(z+1) = ln Gamma(z) + ln G(z). Throws PoleError at z = 0, -1, -2, ...
cplx log_barnes_g(cplx z);

// Upsilon(beta) = sum_{n>=1} beta^2 / (n (n^2 - beta^2)) by direct summation.
cplx upsilon(cplx beta, double tol = 1e-14);

// Same quantity from -( (psi(1+beta) + psi(1-beta))/2 + gamma_E ).
cplx upsilon_digamma(cplx beta);

// Orthonormal Chebyshev polynomials on [-1,1].
// first kind:  weight (1-x^2)^(-1/2), p_0 = 1/sqrt(pi), p_j = sqrt(2/pi) T_j(x)
// second kind: weight (1-x^2)^(+1/2), p_j = sqrt(2/pi) U_j(x)
double chebyshev_first(int j, double x);
double chebyshev_second(int j, double x);

// Gauss-Legendre rule on [a,b].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace fhent
