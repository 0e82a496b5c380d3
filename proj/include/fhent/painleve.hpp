#pragma once

#include <complex>
#include <vector>

namespace fhent {

using cplx = std::complex<double>;

// The three-term recurrence for x_N as printed has "-" inside both brackets and
// x_{N-1}^2 in the second denominator. Corrected uses "+" and x_{N-1}, which
// reproduces the Toeplitz determinants.
enum class Rec2Form { Corrected, AsPrinted };

// Gap probability generating function E_N(phi; xi) of the CUE for an arc of length phi.
struct PainleveSequence {
    double phi = 0.0;
    cplx xi;
    std::vector<cplx> x;     // x_{-1} .. x_{N_max}, stored at index n + 1
    std::vector<cplx> logE;  // ln E_0 .. ln E_{N_max}

    int n_max() const { return int(logE.size()) - 1; }
    cplx x_at(int n) const { return x.at(n + 1); }
    cplx E(int n) const { return std::exp(logE.at(n)); }
};

// Throws DomainError for phi outside (0, 2 pi) and RecurrenceBreakdownError when
// a divisor x_n or 1 - x_n^2 falls below 1e-13.
PainleveSequence recurrence_sequence(double phi, cplx xi, int N_max, Rec2Form form = Rec2Form::Corrected);

// [sqrt(2)|beta|, c1, 2^{1/3}|beta|^3] truncated to `orders` entries (<= 3), for
// x_N ~ c0/N + c1/N^2 + c2/N^3. c1 is a least-squares fit over N in [200, 400].
std::vector<double> xN_asymptotics(double phi, cplx lambda, int orders = 3);

// Normalized residual of the sigma-form Painleve VI equation (a = 0) for
// sigma(s) = (1+s^2) d/ds ln E_N, s = cot(phi/2), on a uniform phi grid.
// Derivatives use 7-point central differences; the residual is evaluated at the
// interior points and divided by the largest individual term.
// Throws StencilError for fewer than 7 points or a non-uniform grid.
double sigma_form_residual(const std::vector<double>& phi_grid, double xi, int N);

// Entropy of N sites for the single-jump symbol (jump theta1, g(0) = value_at_zero)
// from the gap probabilities, E_P = N + (1/2ln2) int_0^1 [ln E_N(2 theta1) +
// ln E_N(2 pi - 2 theta1) + 2N ln(1+u)] du/u^2 with xi = 2u/(1+u).
double painleve_entropy(double theta1, int value_at_zero, int N);

}  // namespace fhent
