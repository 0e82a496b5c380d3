#include "fhent/fisher_hartwig.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "fhent/errors.hpp"
#include "fhent/special_functions.hpp"

namespace fhent {

namespace {

const cplx kI(0.0, 1.0);

cplx one_minus_exp(double t) { return 1.0 - std::polar(1.0, t); }

cplx beta_of(cplx lambda) { return std::log((lambda + 1.0) / (lambda - 1.0)) / (2.0 * kPi * kI); }

cplx beta_prime(cplx lambda) { return (1.0 / (lambda + 1.0) - 1.0 / (lambda - 1.0)) / (2.0 * kPi * kI); }

// sum_r g(0) (-1)^r theta_r
double signed_jump_sum(const EvenStepSymbol& sym) {
    double s = 0.0;
    for (int r = 1; r <= sym.R(); ++r) s += ((r % 2) ? -1.0 : 1.0) * sym.jumps[r - 1];
    return sym.value_at_zero * s;
}

// ln |(1 - e^{i(a-b)}) / (1 - e^{i(a+b)})|
double pair_log(double a, double b) { return std::log(std::abs(one_minus_exp(a - b)) / std::abs(one_minus_exp(a + b))); }

cplx log_g_pair(cplx b) { return log_barnes_g(1.0 + b) + log_barnes_g(1.0 - b); }

// e(x, lambda) continued to complex lambda
cplx entropy_fn(double x, cplx lam) {
    cplx a = 0.5 * (x + lam), b = 0.5 * (x - lam);
    return -(a * std::log(a) + b * std::log(b)) / std::log(2.0);
}

}  // namespace

cplx szego_lndet(const FourierCoefficients& c, int N, int k_max) {
    if (k_max < 0) throw DomainError("szego_lndet: negative k_max");
    for (int k = std::max(1, k_max - 2); k <= k_max; ++k)
        if (std::abs(c[k]) > 1e-12 || std::abs(c[-k]) > 1e-12)
            throw ConvergenceError("szego_lndet: Fourier tail above 1e-12 at k_max");
    cplx s = c[0] * double(N);
    for (int k = 1; k <= k_max; ++k) s += double(k) * c[k] * c[-k];
    return s;
}

JumpParametrization jump_parametrization(const EvenStepSymbol& sym, cplx lambda) {
    if (std::abs(lambda.imag()) < 1e-14 && std::abs(lambda.real()) <= 1.0)
        throw BranchCutError("jump_parametrization: lambda on [-1, 1]");
    JumpParametrization p;
    p.lambda = lambda;
    p.beta = beta_of(lambda);
    for (int r = 1; r <= sym.R(); ++r) p.betas.push_back(double(sym.value_at_zero * ((r % 2) ? -1 : 1)) * p.beta);
    p.c0 = std::log(lambda - double(sym.value_at_pi())) + 2.0 * kI * p.beta * signed_jump_sum(sym);
    p.phi_const = std::exp(p.c0);
    return p;
}

cplx c0_derivative(const EvenStepSymbol& sym, cplx lambda) {
    return 1.0 / (lambda - double(sym.value_at_pi())) + 2.0 * kI * beta_prime(lambda) * signed_jump_sum(sym);
}

FHPrediction fh_lndet(const JumpParametrization& p, const EvenStepSymbol& sym, SymmetryClass cls) {
    const int R = sym.R();
    const auto& th = sym.jumps;
    FHPrediction f;
    f.linear_coeff = p.c0;
    if (R == 0) {
        f.log_coeff = 0.0;
        f.const_term = 0.0;
        return f;
    }
    const cplx b = p.beta, b2 = b * b;
    if (cls == SymmetryClass::Unitary) {
        f.log_coeff = -2.0 * double(R) * b2;
        cplx c = 2.0 * double(R) * log_g_pair(b);
        for (int r = 0; r < R; ++r) c -= 2.0 * b2 * std::log(std::abs(one_minus_exp(2 * th[r])));
        for (int r = 0; r < R; ++r)
            for (int s = r + 1; s < R; ++s)
                c += 4.0 * b2 * (((r + s) % 2) ? -1.0 : 1.0) * pair_log(th[r], th[s]);
        f.const_term = c;
        return f;
    }
    const ClassInfo& ci = info(cls);
    f.log_coeff = -double(R) * b2;
    cplx lnF = 0.0, lnE = 0.0;
    for (int r = 0; r < R; ++r) {
        const cplx br = p.betas[r];
        const cplx ep = std::polar(1.0, th[r]), em = std::conj(ep);
        lnF += br * ((ci.sigma1 - 0.5) * (std::log(1.0 + ep) - std::log(1.0 + em)) +
                     (ci.sigma2 + 0.5) * (std::log(1.0 - ep) - std::log(1.0 - em)));
        lnE += -br * br * std::log(2.0) + log_g_pair(br) - br * br * std::log(std::abs(one_minus_exp(2 * th[r]))) +
               kI * kPi * br / 2.0;
    }
    for (int r = 0; r < R; ++r)
        for (int s = r + 1; s < R; ++s) lnE += 2.0 * p.betas[r] * p.betas[s] * pair_log(th[r], th[s]);
    f.const_term = lnF + lnE;
    return f;
}

cplx contour_integral_at(const EvenStepSymbol& sym, ContourIntegral which, double eps, int points) {
    if (!(eps > 0.0 && eps <= 0.5)) throw DomainError("contour_integral: eps outside (0, 0.5]");
    const int n = points > 0 ? points : int(60.0 / std::sqrt(eps)) + 64;
    const double rho = std::acosh(1.0 + 0.5 * eps);
    const double x = 1.0 + eps;
    cplx sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const cplx w(rho, 2.0 * kPi * k / n);
        const cplx lam = std::cosh(w);
        const cplx dlam = kI * std::sinh(w);
        const cplx e = entropy_fn(x, lam);
        cplx f;
        switch (which) {
            case ContourIntegral::I1:
                f = e * c0_derivative(sym, lam) / (2.0 * kPi * kI);
                break;
            case ContourIntegral::I2: {
                cplx b = beta_of(lam);
                f = e * b * beta_prime(lam) / (kPi * kI);
                break;
            }
            case ContourIntegral::I3: {
                cplx b = beta_of(lam);
                f = e * b * beta_prime(lam) * upsilon_digamma(b) / (kPi * kI);
                break;
            }
            case ContourIntegral::I4:
                f = e * beta_prime(lam) / (2.0 * kPi * kI);
                break;
        }
        sum += f * dlam;
    }
    return sum * (2.0 * kPi / n);
}

ContourResult contour_integral(const EvenStepSymbol& sym, ContourIntegral which, double d, int points, double tol) {
    const double eps[3] = {d, d / 2, d / 4};
    ContourResult r;
    for (double e : eps) r.samples.push_back(contour_integral_at(sym, which, e, points).real());
    Eigen::Matrix3d a;
    Eigen::Vector3d v;
    for (int i = 0; i < 3; ++i) {
        a.row(i) << 1.0, eps[i] * std::log(eps[i]), eps[i];
        v(i) = r.samples[i];
    }
    r.value = a.fullPivLu().solve(v)(0);
    Eigen::Matrix2d a2;
    a2 << 1.0, eps[1] * std::log(eps[1]), 1.0, eps[2] * std::log(eps[2]);
    double two = a2.fullPivLu().solve(Eigen::Vector2d(v(1), v(2)))(0);
    r.error = std::abs(r.value - two);
    if (r.error > tol)
        throw ConvergenceError("contour_integral: extrapolation error " + std::to_string(r.error) + " above tolerance");
    return r;
}

double k_constant(const EvenStepSymbol& sym) {
    const int R = sym.R();
    if (R == 0) throw DomainError("k_constant: symbol without jumps");
    double s = 0.0;
    for (int r = 0; r < R; ++r) s += std::log(std::abs(one_minus_exp(2 * sym.jumps[r])));
    for (int r = 0; r < R; ++r)
        for (int q = r + 1; q < R; ++q) s -= 2.0 * (((r + q) % 2) ? -1.0 : 1.0) * pair_log(sym.jumps[r], sym.jumps[q]);
    return 1.0 + kEulerGamma + s / R;
}

EntropyAsymptotics entropy_asymptotics(const EvenStepSymbol& sym, SymmetryClass cls, bool use_tabulated) {
    if (sym.R() == 0) throw DomainError("entropy_asymptotics: R = 0, the entropy saturates");
    EntropyAsymptotics a;
    a.R = sym.R();
    a.cls = cls;
    a.K = k_constant(sym);
    if (use_tabulated) {
        a.I2 = -1.0 / (6.0 * std::log(2.0));
        a.I3 = kI3Tabulated;
        a.I4 = 0.0;
    } else {
        a.I2 = contour_integral(sym, ContourIntegral::I2, 1e-6, 0, 1e-6).value;
        a.I3 = contour_integral(sym, ContourIntegral::I3, 1e-6, 0, 1e-6).value;
        a.I4 = contour_integral(sym, ContourIntegral::I4, 1e-6, 0, 1e-6).value;
    }
    const int wG = info(cls).w_G;
    const double ln2 = std::log(2.0);
    a.slope = std::pow(2.0, wG) * a.R / 6.0;
    if (wG == 1)
        a.constant = a.R / (3.0 * ln2) * (a.K - 6.0 * a.I3 * ln2);
    else
        a.constant = a.R / (6.0 * ln2) * (a.K - 6.0 * a.I3 * ln2 + ln2);
    return a;
}

}  // namespace fhent
