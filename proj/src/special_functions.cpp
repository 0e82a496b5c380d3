#include "fhent/special_functions.hpp"

#include <array>
#include <cmath>

#include <gsl/gsl_integration.h>

#include "fhent/errors.hpp"

namespace fhent {

namespace {

constexpr std::array<double, 12> kBernoulli2k = {
    1.0,  // B_0, unused
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
};

constexpr double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// Euler-Maclaurin with K = 20 and ten Bernoulli corrections.
constexpr double zeta_em(int s) {
    constexpr int K = 20;
    double sum = 0.0;
    for (int n = 1; n < K; ++n) sum += 1.0 / ipow(n, s);
    sum += 1.0 / ((s - 1) * ipow(K, s - 1));
    sum += 0.5 / ipow(K, s);
    double fact = 1.0;   // (2m)!
    double rising = 1.0; // s (s+1) ... (s+2m-2)
    for (int m = 1; m <= 10; ++m) {
        fact *= (2.0 * m - 1.0) * (2.0 * m);
        rising *= (m == 1) ? s : (s + 2.0 * m - 3.0) * (s + 2.0 * m - 2.0);
        sum += kBernoulli2k[m] / fact * rising / ipow(K, s + 2 * m - 1);
    }
    return sum;
}

constexpr int kZetaMax = 64;

constexpr std::array<double, kZetaMax + 1> make_zeta_table() {
    std::array<double, kZetaMax + 1> z{};
    for (int s = 2; s <= kZetaMax; ++s) z[s] = zeta_em(s);
    return z;
}

constexpr auto kZeta = make_zeta_table();

// Tail of the ln G(1+z) Taylor series beyond k = 64 at |z| = 1/2, with zeta(k) <= 2.
constexpr double taylor_tail_bound() {
    double t = 0.0;
    for (int k = kZetaMax + 1; k < 200; ++k) t += 2.0 * ipow(0.5, k + 1) / (k + 1);
    return t;
}
static_assert(taylor_tail_bound() < 1e-16);
static_assert(kZeta[2] > 1.6449340668482 && kZeta[2] < 1.6449340668483);

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

cplx log_g1_taylor(cplx z) {
    cplx sum = 0.0;
    cplx zp = z * z * z;
    for (int k = 2; k <= kZetaMax; ++k) {
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign * kZeta[k] * zp / double(k + 1);
        zp *= z;
    }
    return z * kHalfLog2Pi - 0.5 * (z + (1.0 + kEulerGamma) * z * z) + sum;
}

cplx log_g1_asymptotic(cplx w) {
    cplx lw = std::log(w);
    cplx w2 = w * w;
    cplx res = 0.5 * w2 * lw - 0.75 * w2 + w * kHalfLog2Pi - lw / 12.0 + kZetaPrimeMinus1;
    cplx winv2 = 1.0 / w2;
    cplx wp = winv2;
    for (int k = 1; k <= 10; ++k) {
        res += kBernoulli2k[k + 1] / (4.0 * k * (k + 1)) * wp;
        wp *= winv2;
    }
    return res;
}

// ln G(1+u)
cplx log_g1(cplx u) {
    if (std::abs(u) <= 0.5) return log_g1_taylor(u);
    double m = std::round(u.real());
    cplx v = u - m;
    if (std::abs(v) <= 0.5 && std::abs(u) < 12.0) {
        cplx res = log_g1_taylor(v);
        int mi = int(m);
        if (mi > 0) {
            for (int k = 1; k <= mi; ++k) res += log_gamma(v + double(k));
        } else {
            for (int k = mi + 1; k <= 0; ++k) res -= log_gamma(v + double(k));
        }
        return res;
    }
    int n = 0;
    cplx w = u;
    while (w.real() < 12.0 || std::abs(w) < 12.0) {
        w += 1.0;
        ++n;
    }
    cplx res = log_g1_asymptotic(w);
    for (int k = 1; k <= n; ++k) res -= log_gamma(u + double(k));
    return res;
}

}  // namespace

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
    cplx s = z;
    cplx shift = 0.0;
    while (s.real() < 10.0 || std::abs(s) < 15.0) {
        shift += std::log(s);
        s += 1.0;
    }
    cplx ls = std::log(s);
    cplx res = (s - 0.5) * ls - s + kHalfLog2Pi;
    cplx sinv = 1.0 / s;
    cplx sinv2 = sinv * sinv;
    cplx sp = sinv;
    for (int k = 1; k <= 11; ++k) {
        res += kBernoulli2k[k] / (2.0 * k * (2.0 * k - 1.0)) * sp;
        sp *= sinv2;
    }
    return res - shift;
}

cplx digamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("digamma: pole at non-positive integer");
    cplx s = z;
    cplx shift = 0.0;
    while (s.real() < 10.0 || std::abs(s) < 15.0) {
        shift += 1.0 / s;
        s += 1.0;
    }
    cplx sinv = 1.0 / s;
    cplx sinv2 = sinv * sinv;
    cplx res = std::log(s) - 0.5 * sinv;
    cplx sp = sinv2;
    for (int k = 1; k <= 11; ++k) {
        res -= kBernoulli2k[k] / (2.0 * k) * sp;
        sp *= sinv2;
    }
    return res - shift;
}

cplx log_barnes_g(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("log_barnes_g: G vanishes at non-positive integers");
    return log_g1(z - 1.0);
}

cplx upsilon(cplx beta, double tol) {
    double r = std::round(beta.real());
    if (r != 0.0 && std::abs(beta - r) < 1e-12)
        throw DomainError("upsilon: beta at a nonzero integer");
    const cplx b2 = beta * beta;
    const double ab2 = std::norm(beta);
    // Midpoint tail: sum_{n>N} f(n) = -1/2 ln(1 - beta^2/(N+1/2)^2) + e_N,
    // |e_N| ~ |beta|^2 / (8 N^4) once N >> |beta|.
    constexpr long kCap = 10000000;
    long N = 10000;
    while (N < 4.0 * std::abs(beta) + 4.0 || ab2 / (8.0 * std::pow(double(N), 4)) > tol) {
        N *= 2;
        if (N > kCap) throw ConvergenceError("upsilon: tail bound not met below hard cap");
    }
    cplx sum = 0.0;
    for (long n = N; n >= 1; --n) {
        double dn = double(n);
        sum += b2 / (dn * (dn * dn - b2));
    }
    double a = double(N) + 0.5;
    sum += -0.5 * std::log(1.0 - b2 / (a * a));
    return sum;
}

cplx upsilon_digamma(cplx beta) {
    if (beta == cplx(0.0)) return 0.0;
    return -(0.5 * (digamma(1.0 + beta) + digamma(1.0 - beta)) + kEulerGamma);
}

double chebyshev_first(int j, double x) {
    if (j < 0) throw DomainError("chebyshev_first: negative degree");
    if (!(std::abs(x) <= 1.0)) throw DomainError("chebyshev_first: |x| > 1");
    if (j == 0) return 1.0 / std::sqrt(kPi);
    return std::sqrt(2.0 / kPi) * std::cos(j * std::acos(x));
}

double chebyshev_second(int j, double x) {
    if (j < 0) throw DomainError("chebyshev_second: negative degree");
    if (!(std::abs(x) <= 1.0)) throw DomainError("chebyshev_second: |x| > 1");
    double u0 = 1.0, u1 = 2.0 * x;
    if (j == 0) return std::sqrt(2.0 / kPi);
    for (int k = 1; k < j; ++k) {
        double u2 = 2.0 * x * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    return std::sqrt(2.0 / kPi) * u1;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw DomainError("gauss_legendre: n < 1");
    gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(std::size_t(n));
    QuadratureRule q;
    q.nodes.resize(n);
    q.weights.resize(n);
    for (int i = 0; i < n; ++i)
        gsl_integration_glfixed_point(a, b, std::size_t(i), &q.nodes[i], &q.weights[i], t);
    gsl_integration_glfixed_table_free(t);
    if (n <= 100) return q;
    // GSL's large-n weights are good to ~1e-10 only; polish by Newton on P_n.
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        double x = (q.nodes[i] - c) / h, dp = 1.0;
        for (int it = 0; it < 2; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            x -= p1 / dp;
        }
        q.nodes[i] = c + h * x;
        q.weights[i] = h * 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return q;
}

}  // namespace fhent
