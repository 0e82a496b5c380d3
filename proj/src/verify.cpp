#include "fhent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <fmt/format.h>

#include "fhent/entropy_pipeline.hpp"
#include "fhent/errors.hpp"
#include "fhent/finite_chain.hpp"
#include "fhent/fisher_hartwig.hpp"
#include "fhent/group_matrices.hpp"
#include "fhent/linalg.hpp"
#include "fhent/painleve.hpp"
#include "fhent/special_functions.hpp"
#include "fhent/symbols.hpp"

namespace fhent {

namespace {

using Checks = std::vector<CheckResult>;

void add(Checks& out, std::string_view suite, std::string name, bool ok, std::string detail) {
    out.push_back({std::string(suite), std::move(name), ok, std::move(detail)});
}

std::string sci(double v) { return fmt::format("{:.3g}", v); }

const EvenStepSymbol& xx_symbol() {
    static const EvenStepSymbol g = make_step_symbol({kPi / 3}, 1);
    return g;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// ---------------------------------------------------------------- special

void special_suite(Checks& out) {
    const char* s = "special";
    {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        double worst = 0.0;
        for (int done = 0; done < 50;) {
            cplx z(u(rng), u(rng));
            if (std::abs(z) >= 2.0 || std::abs(z - std::round(z.real())) < 0.05) continue;
            cplx r = log_barnes_g(z + 1.0) - log_gamma(z) - log_barnes_g(z);
            worst = std::max(worst, std::abs(cplx(r.real(), std::remainder(r.imag(), 2 * kPi))));
            ++done;
        }
        add(out, s, "Barnes recurrence at 50 random points", worst < 1e-12, "max residual " + sci(worst));
    }
    {
        double worst = 0.0;
        bool positive = true;
        for (double y : {0.01, 0.1, 0.3, 1.0, 2.5}) {
            cplx v = log_barnes_g(cplx(1.0, y)) + log_barnes_g(cplx(1.0, -y));
            double im = std::remainder(v.imag(), 2 * kPi);
            worst = std::max(worst, std::abs(im));
            positive = positive && std::abs(v.imag() - im) < 1e-9 && std::abs(std::remainder(v.imag(), 2 * kPi)) < 1.0;
        }
        add(out, s, "G(1+b) G(1-b) real positive for imaginary b", worst < 1e-12 && positive,
            "max phase " + sci(worst));
    }
    {
        auto q = gauss_legendre(10000, 0.0, kPi);
        double worst = 0.0;
        for (int j = 0; j <= 8; ++j) {
            for (int k = 0; k <= 8; ++k) {
                double s1 = 0.0, s2 = 0.0;
                for (size_t i = 0; i < q.nodes.size(); ++i) {
                    double x = std::cos(q.nodes[i]), sn = std::sin(q.nodes[i]);
                    s1 += q.weights[i] * chebyshev_first(j, x) * chebyshev_first(k, x);
                    s2 += q.weights[i] * sn * sn * chebyshev_second(j, x) * chebyshev_second(k, x);
                }
                double d = j == k ? 1.0 : 0.0;
                worst = std::max({worst, std::abs(s1 - d), std::abs(s2 - d)});
            }
        }
        add(out, s, "Chebyshev orthonormality, both kinds, j,k <= 8", worst < 1e-10, "max error " + sci(worst));
    }
    {
        double worst = 0.0;
        for (double b : {0.1, 0.3, 0.49}) worst = std::max(worst, rel(upsilon(b), upsilon_digamma(b)));
        for (double y : {0.1, 0.5, 2.0}) worst = std::max(worst, rel(upsilon(cplx(0, y)), upsilon_digamma(cplx(0, y))));
        add(out, s, "Upsilon series equals digamma form", worst < 1e-10, "max rel error " + sci(worst));
    }
}

// ---------------------------------------------------------------- symbols

std::vector<CouplingSpec> test_specs() {
    CouplingSpec two;
    two.a = {{2, 0.5}, {-2, 0.5}};
    CouplingSpec three;
    three.a = {{0, 0.3}, {1, 0.5}, {-1, 0.5}, {3, 0.6}, {-3, 0.6}};
    return {xx_preset(2.0), xx_preset(3.0), two, three};
}

// Fourier coefficient of sign(Re Lambda) by independent bisection of Lambda.
std::vector<double> sign_coefficients(const CouplingSpec& spec, int l_max) {
    auto lam = lambda_function(spec);
    auto f = [&](double t) { return lam(t).real(); };
    const int n = 20000;
    std::vector<double> cuts = {0.0};
    double prev = f(0.0);
    for (int i = 1; i <= n; ++i) {
        double t = kPi * i / n, v = f(t);
        if ((v > 0) != (prev > 0)) {
            double a = kPi * (i - 1) / n, b = t;
            for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
                double m = 0.5 * (a + b);
                ((f(m) > 0) == (f(a) > 0) ? a : b) = m;
            }
            cuts.push_back(0.5 * (a + b));
        }
        prev = v;
    }
    cuts.push_back(kPi);
    std::vector<double> c(l_max + 1, 0.0);
    double sgn = f(1e-9) > 0 ? 1.0 : -1.0;
    for (size_t p = 0; p + 1 < cuts.size(); ++p, sgn = -sgn) {
        double a = cuts[p], b = cuts[p + 1];
        c[0] += sgn * (b - a) / kPi;
        for (int l = 1; l <= l_max; ++l) c[l] += sgn * (std::sin(l * b) - std::sin(l * a)) / (kPi * l);
    }
    return c;
}

void symbols_suite(Checks& out) {
    const char* s = "symbols";
    double worst = 0.0, biggest = 0.0, shift = 0.0;
    for (const auto& spec : test_specs()) {
        auto g = find_jumps(spec);
        auto c = sign_coefficients(spec, 64);
        for (int l = 0; l <= 64; ++l) worst = std::max(worst, std::abs(step_fourier(g, l) - c[l]));
        for (int l = 0; l <= 1024; ++l) biggest = std::max(biggest, std::abs(step_fourier(g, l)));
        auto fine = find_jumps(spec, 8192);
        if (fine.R() != g.R()) shift = 1.0;
        else
            for (int r = 0; r < g.R(); ++r) shift = std::max(shift, std::abs(fine.jumps[r] - g.jumps[r]));
    }
    add(out, s, "step coefficients equal those of sign(Lambda), |l| <= 64", worst < 1e-8, "max error " + sci(worst));
    add(out, s, "|g_l| <= 1", biggest <= 1.0, "max |g_l| " + sci(biggest));
    add(out, s, "jumps stable under grid doubling", shift <= 1e-10, "max shift " + sci(shift));
}

// ---------------------------------------------------------------- chain

void chain_suite(Checks& out) {
    const char* s = "chain";
    {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        bool sym = true, bounds = true;
        for (int trial = 0; trial < 100; ++trial) {
            Eigen::VectorXd nu(1 + trial % 20);
            for (auto& v : nu) v = u(rng);
            if (trial % 7 == 0) nu(0) = 1.0;
            double e = entropy(nu);
            sym = sym && e == entropy(-nu);
            bounds = bounds && e >= 0.0 && e <= double(nu.size());
        }
        add(out, s, "entropy(nu) = entropy(-nu)", sym, "100 random spectra");
        add(out, s, "0 <= E_P <= N", bounds, "100 random spectra");
    }
    {
        const int N = 16;
        bool ok = true;
        std::string detail;
        for (auto cls : kAllClasses) {
            double sym = entropy(nu_spectrum(build_symbol_matrix(xx_symbol(), N, cls).entries));
            for (int M : {512, 1024, 2048, 4096}) {
                double d = std::abs(chain_entropy(xx_preset(2.0, M), cls, N) - sym);
                ok = ok && d * M < 2.0;
                if (M == 4096) detail += fmt::format("{} {} ", info(cls).name, sci(d));
            }
        }
        add(out, s, "finite chain approaches the symbol route (|d| < 2/M, N = 16)", ok, "M=4096: " + detail);
    }
    {
        double worst = 0.0;
        auto spec = xx_preset(0.5, 512);
        for (auto cls : kAllClasses) {
            auto e = chain_entropies(spec, cls, {1, 4, 16, 64});
            for (double v : e) worst = std::max(worst, std::abs(v));
        }
        add(out, s, "no entanglement for alpha = 0.5", worst < 1e-10, "max E_P " + sci(worst));
    }
    {
        double worst = 0.0;
        auto check = [&](const HamiltonianMatrices& h) {
            auto m = diagonalize(h);
            Eigen::MatrixXd p = h.A_bar + h.B_bar, q = h.A_bar - h.B_bar;
            Eigen::MatrixXd r1 = p * m.phis - m.psis * m.lambdas.asDiagonal();
            Eigen::MatrixXd r2 = q * m.psis - m.phis * m.lambdas.asDiagonal();
            worst = std::max({worst, r1.cwiseAbs().maxCoeff(), r2.cwiseAbs().maxCoeff()});
        };
        check(build_matrices(xy_preset(1.5, 0.5, 64), SymmetryClass::Unitary));
        check(build_matrices(xy_preset(0.7, 1.0, 63), std::nullopt));
        for (auto cls : kAllClasses) check(build_matrices(xx_preset(2.0, 64), cls));
        add(out, s, "mode equations hold after diagonalization", worst < 1e-8, "max residual " + sci(worst));
    }
}

// ---------------------------------------------------------------- groups

double g1(double t) { return 1.0 + 0.3 * std::cos(t) + 0.2 * std::cos(2 * t) - 0.1 * std::cos(3 * t); }
double g2(double t) { return std::exp(0.4 * std::cos(t) - 0.2 * std::cos(2 * t)); }
double g3(double t) { return 2.0 - std::cos(t) + 0.5 * std::sin(t) * std::sin(t); }

void groups_suite(Checks& out) {
    const char* s = "groups";
    std::vector<EvenStepSymbol> steps = {xx_symbol(), make_step_symbol({kPi / 4, 3 * kPi / 4}, 1),
                                         make_step_symbol({0.4, 1.5, 2.6}, -1)};
    {
        double worst = 0.0;
        for (const auto& g : steps)
            for (auto cls : kAllClasses) {
                auto nu = symmetric_eigenvalues(build_symbol_matrix(g, 64, cls).entries);
                worst = std::max(worst, nu.cwiseAbs().maxCoeff() - 1.0);
            }
        add(out, s, "symbol matrix eigenvalues in [-1, 1]", worst <= 1e-8, "max |nu| - 1 = " + sci(worst));
    }
    {
        double worst = 0.0;
        for (EvenFunction f : {EvenFunction(g1), EvenFunction(g2), EvenFunction(g3)})
            for (auto cls : kAllClasses)
                for (int N = 1; N <= 3; ++N)
                    worst = std::max(worst, std::abs(rel(group_average(f, N, cls), brute_force_average(f, N, cls))));
        add(out, s, "determinant = eigenvalue integral, N <= 3", worst < 1e-7, "max rel error " + sci(worst));
    }
    {
        double worst = 0.0;
        for (EvenFunction f : {EvenFunction(g1), EvenFunction(g2), EvenFunction(g3)})
            for (int N = 1; N <= 6; ++N) worst = std::max(worst, intergroup_check(f, N).max_discrepancy);
        add(out, s, "inter-group identities and U(2N+1) factorization", worst < 1e-10, "max rel error " + sci(worst));
    }
    {
        bool exact = true;
        for (const auto& g : steps) {
            auto t = build_symbol_matrix(g, 40, SymmetryClass::Unitary).entries;
            exact = exact && t == t.transpose();
        }
        add(out, s, "unitary matrix of an even symbol is symmetric", exact, "exact comparison");
    }
    {
        bool ok = true;
        std::string detail;
        for (auto cls : kAllClasses) {
            auto frac = [&](int N) {
                auto nu = symmetric_eigenvalues(build_symbol_matrix(xx_symbol(), N, cls).entries);
                return double((nu.array().abs() > 0.99).count()) / N;
            };
            double a = frac(32), b = frac(128);
            ok = ok && b > a;
            detail += fmt::format("{} {:.3f}->{:.3f} ", info(cls).name, a, b);
        }
        add(out, s, "fraction of |nu| > 0.99 grows from N=32 to 128", ok, detail);
    }
}

// ---------------------------------------------------------------- fh

void fh_suite(Checks& out) {
    const char* s = "fh";
    const auto& g = xx_symbol();
    auto p = jump_parametrization(g, 3.0);
    {
        auto u = fh_lndet(p, g, SymmetryClass::Unitary);
        double worst = 0.0;
        for (auto cls : kAllClasses) {
            auto f = fh_lndet(p, g, cls);
            worst = std::max({worst, std::abs(f.linear_coeff - u.linear_coeff),
                              std::abs(f.log_coeff * std::pow(2.0, 1 - info(cls).w_G) - u.log_coeff)});
        }
        add(out, s, "linear term shared, log term scales by 2^w_G", worst < 1e-14, "max mismatch " + sci(worst));
    }
    {
        // fit ln det - linear N = a ln N + c over N = 256..2048
        auto fitted = [&](SymmetryClass cls) {
            auto f = fh_lndet(p, g, cls);
            std::vector<int> Ns = {256, 362, 512, 724, 1024, 1448, 2048};
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (int N : Ns) {
                double x = std::log(double(N));
                double y = (log_characteristic_polynomial(build_symbol_matrix(g, N, cls).entries, 3.0) -
                            f.linear_coeff * double(N)).real();
                sx += x, sy += y, sxx += x * x, sxy += x * y;
            }
            double n = double(Ns.size());
            return (n * sxy - sx * sy) / (n * sxx - sx * sx);
        };
        double a_u = fitted(SymmetryClass::Unitary), worst = 0.0;
        for (auto cls : kAllClasses)
            if (cls != SymmetryClass::Unitary) worst = std::max(worst, std::abs(a_u / fitted(cls) - 2.0));
        add(out, s, "fitted log coefficient of U is twice that of the groups", worst < 0.02,
            "max |ratio - 2| " + sci(worst));
    }
    {
        double worst = 0.0;
        for (double lam : {1.5, 3.0, 10.0}) {
            auto q = jump_parametrization(g, lam);
            for (auto cls : kAllClasses)
                for (int N : {10, 100, 1000}) worst = std::max(worst, std::abs(fh_lndet(q, g, cls).at(N).imag()));
        }
        add(out, s, "prediction real for real lambda > 1", worst < 1e-10, "max |Im| " + sci(worst));
    }
    {
        bool ok = true;
        std::string detail;
        for (auto cls : kAllClasses) {
            auto f = fh_lndet(p, g, cls);
            std::vector<double> err;
            for (int N : {32, 64, 128, 256})
                err.push_back(std::abs(log_characteristic_polynomial(build_symbol_matrix(g, N, cls).entries, 3.0) - f.at(N)));
            for (size_t i = 0; i < err.size(); ++i) ok = ok && err[i] < 1.0 / (32 << i);
            ok = ok && err.back() < err.front();
            detail += fmt::format("{} {} ", info(cls).name, sci(err.back()));
        }
        add(out, s, "error envelope |ln det - FH| < 1/N, N = 32..256", ok, "N=256: " + detail);
    }
    {
        const double ln2 = std::log(2.0);
        double i1 = std::abs(contour_integral(g, ContourIntegral::I1).value);
        double i2 = std::abs(contour_integral(g, ContourIntegral::I2).value + 1.0 / (6 * ln2));
        double i3 = std::abs(contour_integral(g, ContourIntegral::I3).value - kI3Tabulated);
        double i4 = std::abs(contour_integral(g, ContourIntegral::I4).value);
        add(out, s, "contour integrals I1..I4", i1 < 1e-6 && i2 < 1e-4 && i3 < 1e-4 && i4 < 1e-6,
            fmt::format("errors {} {} {} {}", sci(i1), sci(i2), sci(i3), sci(i4)));
    }
}

// ---------------------------------------------------------------- painleve

void painleve_suite(Checks& out) {
    const char* s = "painleve";
    {
        double worst = 0.0;
        for (double th : {0.4, kPi / 3, 2.0}) {
            auto t = build_symbol_matrix(make_step_symbol({th}, 1), 30, SymmetryClass::Unitary).entries;
            for (cplx lam : {cplx(3.0), cplx(2.0, 1.0), cplx(1.5, 0.5)}) {
                auto seq = recurrence_sequence(2 * th, 2.0 / (lam + 1.0), 30);
                for (int N = 1; N <= 30; ++N) {
                    cplx lhs = double(N) * std::log(lam + 1.0) + seq.logE[N];
                    cplx rhs = log_characteristic_polynomial(t.topLeftCorner(N, N), lam);
                    cplx d = lhs - rhs;
                    d = cplx(d.real(), std::remainder(d.imag(), 2 * kPi));
                    worst = std::max(worst, std::abs(std::exp(d) - 1.0));
                }
            }
        }
        add(out, s, "(lambda+1)^N E_N = det(lambda - T_N), N <= 30", worst < 1e-8, "max rel error " + sci(worst));
    }
    {
        bool ok = true, mono = true;
        for (double phi = 0.1; phi < kPi; phi += 0.3) {
            auto a = recurrence_sequence(phi, 1.0, 20);
            auto b = recurrence_sequence(phi, 1.0 - 1e-6, 20);
            for (int n = 1; n <= 20; ++n) {
                double e = a.E(n).real();
                ok = ok && e > 0.0 && e < 1.0;
                mono = mono && (b.E(n).real() - e) / 1e-6 >= -1e-8;
            }
        }
        add(out, s, "E_N(phi; 1) in (0, 1)", ok, "phi in (0, pi), N <= 20");
        add(out, s, "-dE/dxi >= 0 at xi = 1", mono, "phi in (0, pi), N <= 20");
    }
    {
        auto grid = [](double h) {
            std::vector<double> g;
            for (int i = 0; 0.5 + i * h <= 2.5 + 1e-12; ++i) g.push_back(0.5 + i * h);
            return g;
        };
        bool ok = true;
        std::string detail;
        for (int N : {2, 5})
            for (double xi : {0.7, 1.0}) {
                double r1 = sigma_form_residual(grid(0.1), xi, N);
                double r2 = sigma_form_residual(grid(0.05), xi, N);
                double r3 = sigma_form_residual(grid(0.025), xi, N);
                ok = ok && r3 < 1e-3 && r2 < r1 && r3 < r2;
                detail += fmt::format("N={} xi={}: {} ", N, xi, sci(r3));
            }
        add(out, s, "sigma-form residual small and shrinking with h", ok, detail);
    }
    {
        const double b = std::log(2.0) / (2 * kPi);
        auto c = xN_asymptotics(2 * kPi / 3, 3.0, 3);
        auto seq = recurrence_sequence(2 * kPi / 3, 0.5, 200);
        double d = std::abs(200.0 * std::abs(seq.x_at(200)) - std::sqrt(2.0) * b);
        bool ok = d < 0.05 && std::abs(c[2] - std::cbrt(2.0) * b * b * b) < 1e-14;
        add(out, s, "N x_N near sqrt(2)|beta| at N = 200", ok, "deviation " + sci(d));
    }
}

// ---------------------------------------------------------------- pipeline

void pipeline_suite(Checks& out) {
    const char* s = "pipeline";
    {
        std::vector<int> Ns = {8, 16, 32, 64, 128, 256, 512};
        bool ok = true;
        std::string detail;
        for (auto cls : kAllClasses) {
            auto r = compare_report(entropy_curve(xx_symbol(), cls, Ns, Route::SymbolMatrix),
                                    entropy_asymptotics(xx_symbol(), cls));
            for (size_t i = 2; i < r.rows.size(); ++i)
                ok = ok && std::abs(r.rows[i].deviation) <= std::abs(r.rows[i - 2].deviation) + 1e-3;
            ok = ok && r.trend < 0;
            detail += fmt::format("{} {} ", info(cls).name, sci(r.rows.back().deviation));
        }
        add(out, s, "|E_P - asymptote| decreases along each parity of log2 N", ok, "N=512: " + detail);
    }
    {
        std::vector<int> Ns;
        for (int n = 1; n <= 30; ++n) Ns.push_back(n);
        double worst = 0.0;
        for (double th : {0.4, kPi / 3, 2.0}) {
            auto g = make_step_symbol({th}, 1);
            auto a = entropy_curve(g, SymmetryClass::Unitary, Ns, Route::SymbolMatrix);
            auto b = entropy_curve(g, SymmetryClass::Unitary, Ns, Route::PainleveExact);
            for (size_t i = 0; i < Ns.size(); ++i) worst = std::max(worst, std::abs(a.rows[i].E_P - b.rows[i].E_P));
        }
        add(out, s, "symbol and Painleve routes agree, N <= 30", worst < 1e-8, "max difference " + sci(worst));
    }
}

using SuiteFn = void (*)(Checks&);

const std::vector<std::pair<std::string_view, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string_view, SuiteFn>> r = {
        {"special", special_suite}, {"symbols", symbols_suite},   {"chain", chain_suite},
        {"groups", groups_suite},   {"fh", fh_suite},             {"painleve", painleve_suite},
        {"pipeline", pipeline_suite}};
    return r;
}

}  // namespace

const std::vector<std::string_view>& verify_suites() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> v;
        for (const auto& [n, f] : registry()) v.push_back(n);
        return v;
    }();
    return names;
}

std::vector<CheckResult> run_suite(std::string_view suite) {
    Checks out;
    for (const auto& [name, fn] : registry())
        if (suite == "all" || suite == name) fn(out);
    if (out.empty()) throw ConfigError("unknown suite '" + std::string(suite) + "'");
    return out;
}

}  // namespace fhent
