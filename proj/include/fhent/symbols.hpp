#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fhent {

using cplx = std::complex<double>;

// Couplings of the chain: a(j) fills A-bar (even), b(j) fills B-bar (odd).
// alpha and gamma record the preset parameters; the matrices are built from a and b.
struct CouplingSpec {
    std::map<int, double> a;
    std::map<int, double> b;
    double alpha = 1.0;
    double gamma = 0.0;
    int M = 0;  // 0 means infinite chain

    double a_at(int j) const;
    double b_at(int j) const;
    int max_lag() const;
};

CouplingSpec xx_preset(double alpha, int M = 0);
CouplingSpec xy_preset(double alpha, double gamma, int M = 0);

// Throws DomainError if a is not even, b not odd, or gamma outside [0,1].
void validate(const CouplingSpec& spec);

// Parses a map literal like "{0: -2, 1: 2, -1: 2}".
std::map<int, double> parse_lag_map(const std::string& text);

// Builds a spec from flat key-value pairs (model, alpha, gamma, M, a, b).
CouplingSpec coupling_from_config(const std::map<std::string, std::string>& kv);

// Lambda(theta) = sum_j (a(j) - b(j)) e^{i j theta}.
std::function<cplx(double)> lambda_function(const CouplingSpec& spec);

// g(theta) = value_at_zero on (-theta_1, theta_1), flipping sign at each +-theta_r.
struct EvenStepSymbol {
    std::vector<double> jumps;
    int value_at_zero = 1;

    int R() const { return int(jumps.size()); }
    double operator()(double theta) const;
    double value_at_pi() const { return (R() % 2 == 0) ? value_at_zero : -value_at_zero; }
};

EvenStepSymbol make_step_symbol(std::vector<double> jumps, int value_at_zero);

EvenStepSymbol find_jumps(const CouplingSpec& spec, int grid_size = 4096);

double step_fourier(const EvenStepSymbol& sym, int l);

struct FourierCoefficients {
    int l_max = 0;
    std::vector<cplx> c;  // c[l + l_max]

    bool has(int l) const { return l >= -l_max && l <= l_max; }
    cplx operator[](int l) const;
    double real(int l) const { return (*this)[l].real(); }
};

FourierCoefficients smooth_fourier(const std::function<cplx(double)>& f, int l_max, int n_grid);

FourierCoefficients step_coefficients(const EvenStepSymbol& sym, int l_max);

}  // namespace fhent
