#include "fhent/group_matrices.hpp"

#include <algorithm>
#include <cmath>

#include "fhent/errors.hpp"
#include "fhent/kernels.hpp"
#include "fhent/linalg.hpp"
#include "fhent/special_functions.hpp"

namespace fhent {

namespace {

constexpr ClassInfo kInfo[] = {
    {"unitary", "U(N)", 0.0, 0.0, 1, Prefactor::One},
    {"o+even", "O+(2N)", -0.5, -0.5, 0, Prefactor::One},
    {"sp", "Sp(2N)", 0.5, 0.5, 0, Prefactor::One},
    {"o-even", "O-(2N+2)", 0.5, 0.5, 0, Prefactor::FAtZeroTimesFAtPi},
    {"o+odd", "O+(2N+1)", -0.5, 0.5, 0, Prefactor::FAtZero},
    {"o-odd", "O-(2N+1)", 0.5, -0.5, 0, Prefactor::FAtPi},
};

double prefactor(const EvenFunction& f, SymmetryClass cls) {
    switch (info(cls).prefactor) {
        case Prefactor::One: return 1.0;
        case Prefactor::FAtZero: return f(0.0);
        case Prefactor::FAtPi: return f(kPi);
        case Prefactor::FAtZeroTimesFAtPi: return f(0.0) * f(kPi);
    }
    return 1.0;
}

double det_real(const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return 1.0;
    return Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
}

template <class Coef>
Eigen::MatrixXd fill(int N, SymmetryClass cls, Coef g) {
    Eigen::MatrixXd a(N, N);
    const double r2 = std::sqrt(2.0);
    for (int j = 0; j < N; ++j) {
        for (int k = 0; k < N; ++k) {
            double v = 0.0;
            switch (cls) {
                case SymmetryClass::Unitary:
                    v = g(j - k);
                    break;
                case SymmetryClass::OPlusEven:
                    if (j == 0 && k == 0) v = g(0);
                    else if (j == 0 || k == 0) v = r2 * g(j + k);
                    else v = g(j - k) + g(j + k);
                    break;
                case SymmetryClass::Sp:
                case SymmetryClass::OMinusEven:
                    v = g(j - k) - g(j + k + 2);
                    break;
                case SymmetryClass::OPlusOdd:
                    v = g(j - k) - g(j + k + 1);
                    break;
                case SymmetryClass::OMinusOdd:
                    v = g(j - k) + g(j + k + 1);
                    break;
            }
            a(j, k) = v;
        }
    }
    return a;
}

double rel_diff(double a, double b) {
    double s = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / s;
}

}  // namespace

const ClassInfo& info(SymmetryClass c) { return kInfo[static_cast<int>(c)]; }

SymmetryClass parse_class(std::string_view name) {
    for (auto c : kAllClasses)
        if (info(c).name == name) return c;
    throw ConfigError("unknown symmetry class '" + std::string(name) + "'");
}

SymbolMatrix build_symbol_matrix(const FourierCoefficients& g, int N, SymmetryClass cls) {
    if (N < 0) throw DimensionError("build_symbol_matrix: negative N");
    return {fill(N, cls, [&](int l) { return g.real(l); }), cls};
}

SymbolMatrix build_symbol_matrix(const EvenStepSymbol& g, int N, SymmetryClass cls) {
    if (N < 0) throw DimensionError("build_symbol_matrix: negative N");
    std::vector<double> c(2 * N + 3);
    for (int l = 0; l < int(c.size()); ++l) c[l] = step_fourier(g, l);
    return {fill(N, cls, [&](int l) { return c[std::abs(l)]; }), cls};
}

double group_average(const EvenFunction& f, int N, SymmetryClass cls) {
    if (N < 0) throw DimensionError("group_average: negative N");
    const int l_max = 2 * N + 2;
    const int n_grid = std::max(2048, 16 * l_max);
    FourierCoefficients c;
    if (cls == SymmetryClass::Unitary) {
        c = smooth_fourier([&](double t) { return cplx(f(t)); }, l_max, n_grid);
    } else {
        c = smooth_fourier([&](double t) { return cplx(f(t) * f(-t)); }, l_max, n_grid);
    }
    return prefactor(f, cls) * det_real(build_symbol_matrix(c, N, cls).entries);
}

double brute_force_average(const EvenFunction& f, int N, SymmetryClass cls, int quad_points) {
    if (N > 3) throw CostError("brute_force_average: N > 3 is too expensive");
    if (N < 0) throw DimensionError("brute_force_average: negative N");
    if (N == 0) return prefactor(f, cls);
    const int Q = quad_points;
    std::vector<double> meas(Q), weighted(Q);
    Eigen::MatrixXd P(Q, Q);
    if (cls == SymmetryClass::Unitary) {
        std::vector<double> th(Q);
        for (int i = 0; i < Q; ++i) {
            th[i] = -kPi + 2.0 * kPi * i / Q;
            meas[i] = 2.0 * kPi / Q;
            weighted[i] = meas[i] * f(th[i]);
        }
        for (int i = 0; i < Q; ++i)
            for (int j = 0; j < Q; ++j) P(i, j) = 2.0 - 2.0 * std::cos(th[i] - th[j]);
    } else {
        const ClassInfo& ci = info(cls);
        QuadratureRule q = gauss_legendre(Q, 0.0, kPi);
        std::vector<double> x(Q);
        for (int i = 0; i < Q; ++i) {
            double t = q.nodes[i];
            x[i] = std::cos(t);
            meas[i] = q.weights[i] * std::pow(1.0 + x[i], ci.sigma1 + 0.5) * std::pow(1.0 - x[i], ci.sigma2 + 0.5);
            weighted[i] = meas[i] * f(t) * f(-t);
        }
        for (int i = 0; i < Q; ++i)
            for (int j = 0; j < Q; ++j) P(i, j) = (x[i] - x[j]) * (x[i] - x[j]);
    }
    auto integral = [&](const std::vector<double>& w) {
        const double* wp = w.data();
        double s = 0.0;
        if (N == 1) {
            for (double v : w) s += v;
        } else if (N == 2) {
            for (int i = 0; i < Q; ++i) s += wp[i] * kernels::dot(wp, P.col(i).data(), Q);
        } else {
            for (int i = 0; i < Q; ++i)
                for (int j = 0; j < Q; ++j)
                    s += wp[i] * wp[j] * P(i, j) * kernels::dot3(wp, P.col(i).data(), P.col(j).data(), Q);
        }
        return s;
    };
    return prefactor(f, cls) * integral(weighted) / integral(meas);
}

IntergroupReport intergroup_check(const EvenFunction& f, int N) {
    IntergroupReport r;
    EvenFunction fr = [&](double t) { return f(kPi - t); };
    r.odd_plus_vs_minus = rel_diff(group_average(f, N, SymmetryClass::OPlusOdd),
                                   group_average(fr, N, SymmetryClass::OMinusOdd));
    r.odd_minus_vs_plus = rel_diff(group_average(f, N, SymmetryClass::OMinusOdd),
                                   group_average(fr, N, SymmetryClass::OPlusOdd));
    double f0 = f(0.0), fpi = f(kPi);
    if (std::abs(f0) > 1e-12 && std::abs(fpi) > 1e-12) {
        r.sp_vs_ominus = rel_diff(group_average(f, N, SymmetryClass::Sp),
                                  group_average(f, N, SymmetryClass::OMinusEven) / (f0 * fpi));
    }
    EvenFunction g = [&](double t) { return f(t) * f(-t); };
    r.unitary_factorization =
        rel_diff(group_average(g, 2 * N + 1, SymmetryClass::Unitary),
                 group_average(f, N + 1, SymmetryClass::OPlusEven) * group_average(f, N, SymmetryClass::Sp));
    r.max_discrepancy = std::max({r.odd_plus_vs_minus, r.odd_minus_vs_plus, r.unitary_factorization,
                                  r.sp_vs_ominus.value_or(0.0)});
    return r;
}

cplx characteristic_polynomial(const Eigen::MatrixXd& t, cplx lambda) {
    if (t.rows() != t.cols()) throw DimensionError("characteristic_polynomial: matrix not square");
    const Eigen::Index n = t.rows();
    if (n == 0) return 1.0;
    Eigen::MatrixXcd m = -t.cast<cplx>();
    m.diagonal().array() += lambda;
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
}

cplx log_characteristic_polynomial(const Eigen::MatrixXd& t, cplx lambda) {
    if (t.rows() != t.cols()) throw DimensionError("log_characteristic_polynomial: matrix not square");
    Eigen::MatrixXcd m = -t.cast<cplx>();
    m.diagonal().array() += lambda;
    return log_det(m);
}

}  // namespace fhent
