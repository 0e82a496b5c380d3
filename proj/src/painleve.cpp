#include "fhent/painleve.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fhent/errors.hpp"
#include "fhent/special_functions.hpp"

namespace fhent {

namespace {

constexpr double kGuard = 1e-13;

void guard(cplx v, int n, const char* what) {
    if (std::abs(v) < kGuard)
        throw RecurrenceBreakdownError(std::string("recurrence: ") + what + " vanishes at n = " + std::to_string(n));
}

double log_e_real(double phi, double xi, int N) {
    return recurrence_sequence(phi, xi, N).logE[N].real();
}

}  // namespace

PainleveSequence recurrence_sequence(double phi, cplx xi, int N_max, Rec2Form form) {
    if (!(phi > 0.0 && phi < 2.0 * kPi)) throw DomainError("recurrence_sequence: phi outside (0, 2 pi)");
    if (N_max < 0) throw DomainError("recurrence_sequence: negative N_max");
    PainleveSequence s;
    s.phi = phi;
    s.xi = xi;
    s.x.assign(N_max + 2, 0.0);
    s.logE.assign(N_max + 1, 0.0);
    s.x[1] = 1.0;
    if (N_max == 0 || xi == 0.0) return s;

    const cplx e1 = 1.0 - xi * phi / (2.0 * kPi);
    guard(e1, 1, "E_1");
    s.logE[1] = std::log(e1);
    s.x[2] = -(xi / kPi) * std::sin(phi / 2) / e1;
    auto x = [&](int n) -> cplx& { return s.x[n + 1]; };
    const double c = std::cos(phi / 2);
    for (int n = 1; n < N_max; ++n) {
        const cplx xn = x(n), xm = x(n - 1), xmm = x(n - 2);
        const cplx one_m = 1.0 - xn * xn;
        guard(xn, n, "x_n");
        guard(xm, n - 1, "x_n");
        guard(one_m, n, "1 - x_n^2");
        const cplx lhs = 2.0 * xn * xm - 2.0 * c;
        if (form == Rec2Form::Corrected) {
            cplx t2 = (1.0 - xm * xm) / xm * (double(n) * xn + double(n - 2) * xmm);
            x(n + 1) = ((lhs + t2) * xn / one_m - double(n - 1) * xm) / double(n + 1);
        } else {
            cplx t2 = (1.0 - xm * xm) / (xm * xm) * (double(n) * xn - double(n - 2) * xmm);
            x(n + 1) = ((lhs + t2) * xn / one_m + double(n - 1) * xm) / double(n + 1);
        }
        s.logE[n + 1] = 2.0 * s.logE[n] + std::log(one_m) - s.logE[n - 1];
    }
    return s;
}

std::vector<double> xN_asymptotics(double phi, cplx lambda, int orders) {
    if (orders < 0 || orders > 3) throw DomainError("xN_asymptotics: orders must be in 0..3");
    const double b = std::abs(std::log((lambda + 1.0) / (lambda - 1.0)) / (2.0 * kPi));
    std::vector<double> c = {std::sqrt(2.0) * b, 0.0, std::cbrt(2.0) * b * b * b};
    if (orders >= 2 && b > 0.0) {
        auto seq = recurrence_sequence(phi, 2.0 / (lambda + 1.0), 400);
        double sum = 0.0;
        int count = 0;
        for (int n = 200; n <= 400; ++n) {
            double xn = std::abs(seq.x_at(n));
            sum += double(n) * n * (xn - c[0] / n - c[2] / (double(n) * n * n));
            ++count;
        }
        c[1] = sum / count;
    }
    c.resize(orders);
    return c;
}

double sigma_form_residual(const std::vector<double>& phi_grid, double xi, int N) {
    const int n = int(phi_grid.size());
    if (n < 7) throw StencilError("sigma_form_residual: need at least 7 grid points");
    const double h = (phi_grid.back() - phi_grid.front()) / (n - 1);
    if (!(h > 0.0)) throw StencilError("sigma_form_residual: grid must be increasing");
    for (int i = 0; i < n; ++i)
        if (std::abs(phi_grid[i] - (phi_grid.front() + i * h)) > 1e-9 * std::max(1.0, std::abs(phi_grid[i])))
            throw StencilError("sigma_form_residual: grid is not uniform");
    if (N < 2) throw DomainError("sigma_form_residual: N >= 2 required");
    if (!(xi >= 0.0 && xi <= 1.0)) throw DomainError("sigma_form_residual: xi outside [0, 1]");
    if (xi == 0.0) return 0.0;

    std::vector<double> f(n);
    for (int i = 0; i < n; ++i) f[i] = log_e_real(phi_grid[i], xi, N);

    double worst = 0.0, scale = 0.0;
    for (int i = 3; i < n - 3; ++i) {
        const double* p = &f[i - 3];
        double l1 = (-p[0] + 9 * p[1] - 45 * p[2] + 45 * p[4] - 9 * p[5] + p[6]) / (60 * h);
        double l2 = (2 * p[0] - 27 * p[1] + 270 * p[2] - 490 * p[3] + 270 * p[4] - 27 * p[5] + 2 * p[6]) / (180 * h * h);
        double l3 = (p[0] - 8 * p[1] + 13 * p[2] - 13 * p[4] + 8 * p[5] - p[6]) / (8 * h * h * h);
        double s = 1.0 / std::tan(phi_grid[i] / 2);
        double q = 1.0 + s * s;
        double sig = -2.0 * l1;
        double sp = 4.0 * l2 / q;
        double spp = -8.0 * (l3 + s * l2) / (q * q);
        double terms[5] = {q * q * spp * spp, 4 * q * sp * sp * sp, -8 * s * sig * sp * sp, 4 * sig * sig * sp,
                           4.0 * N * N * sp * sp};
        double r = 0.0;
        for (double t : terms) {
            r += t;
            scale = std::max(scale, std::abs(t));
        }
        worst = std::max(worst, std::abs(r));
    }
    return scale > 0.0 ? worst / scale : 0.0;
}

double painleve_entropy(double theta1, int value_at_zero, int N) {
    if (!(theta1 > 0.0 && theta1 < kPi)) throw DomainError("painleve_entropy: jump outside (0, pi)");
    if (value_at_zero != 1 && value_at_zero != -1) throw DomainError("painleve_entropy: value_at_zero must be +-1");
    if (N < 1) throw DimensionError("painleve_entropy: N >= 1 required");
    // g(0) = -1 is the same spectrum as a jump at pi - theta1 with g(0) = +1
    const double th = value_at_zero == 1 ? theta1 : kPi - theta1;
    const double phi = 2.0 * th;
    auto integrand = [&](double u) {
        if (u <= 0.0) return 0.0;
        double xi = 2.0 * u / (1.0 + u);
        double v = log_e_real(phi, xi, N) + log_e_real(2.0 * kPi - phi, xi, N) + 2.0 * N * std::log1p(u);
        return v / (u * u);
    };
    auto gl = gauss_legendre(64, 0.0, 0.5);
    double lower = 0.0;
    for (size_t i = 0; i < gl.nodes.size(); ++i) lower += gl.weights[i] * integrand(gl.nodes[i]);
    boost::math::quadrature::tanh_sinh<double> ts;
    double upper = ts.integrate(integrand, 0.5, 1.0, 1e-13);
    return N + (lower + upper) / (2.0 * std::log(2.0));
}

}  // namespace fhent
