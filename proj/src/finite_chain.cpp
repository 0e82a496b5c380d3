#include "fhent/finite_chain.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <vector>

#include "fhent/errors.hpp"
#include "fhent/linalg.hpp"

namespace fhent {

namespace {

std::vector<double> reduce_mod(const std::map<int, double>& lags, int M) {
    std::vector<double> r(M, 0.0);
    for (auto& [j, v] : lags) r[((j % M) + M) % M] += v;
    return r;
}

bool is_hankel(ChainClass c) { return c && *c != SymmetryClass::Unitary; }

// Mirror image of site j and the sign of the combination.
std::pair<int, int> mirror(SymmetryClass c, int j, int M) {
    switch (c) {
        case SymmetryClass::OPlusEven: return {(M - j) % M, +1};
        case SymmetryClass::Sp:
        case SymmetryClass::OMinusEven: return {M - 2 - j, -1};
        case SymmetryClass::OPlusOdd: return {M - 1 - j, -1};
        case SymmetryClass::OMinusOdd: return {M - 1 - j, +1};
        case SymmetryClass::Unitary: break;
    }
    return {j, +1};
}

}  // namespace

HamiltonianMatrices build_matrices(const CouplingSpec& spec, ChainClass cls) {
    validate(spec);
    const int M = spec.M;
    if (M < 2) throw DimensionError("build_matrices: need M >= 2");
    const bool has_b = std::any_of(spec.b.begin(), spec.b.end(), [](auto& p) { return p.second != 0.0; });
    if (is_hankel(cls) && (spec.gamma != 0.0 || has_b))
        throw ClassConstraintError("build_matrices: Hankel classes require gamma = 0");
    auto a = reduce_mod(spec.a, M);
    auto b = reduce_mod(spec.b, M);
    auto am = [&](int d) { return a[((d % M) + M) % M]; };
    auto bm = [&](int d) { return b[((d % M) + M) % M]; };

    HamiltonianMatrices h{Eigen::MatrixXd(M, M), Eigen::MatrixXd::Zero(M, M), cls};
    for (int j = 0; j < M; ++j) {
        for (int l = 0; l < M; ++l) {
            double v = am(j - l);
            if (cls) {
                switch (*cls) {
                    case SymmetryClass::Unitary: break;
                    case SymmetryClass::OPlusEven: v += am(j + l); break;
                    case SymmetryClass::Sp:
                    case SymmetryClass::OMinusEven: v -= am(j + l + 2); break;
                    case SymmetryClass::OPlusOdd: v -= am(j + l + 1); break;
                    case SymmetryClass::OMinusOdd: v += am(j + l + 1); break;
                }
            }
            h.A_bar(j, l) = v;
            if (!is_hankel(cls)) h.B_bar(j, l) = bm(j - l);
        }
    }
    return h;
}

HamiltonianMatrices general_matrices(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw DimensionError("general_matrices: shape mismatch");
    double scale = 1.0 + a.cwiseAbs().maxCoeff() + b.cwiseAbs().maxCoeff();
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-14 * scale)
        throw DomainError("general_matrices: A is not symmetric");
    if ((b + b.transpose()).cwiseAbs().maxCoeff() > 1e-14 * scale)
        throw DomainError("general_matrices: B is not antisymmetric");
    return {a, b, std::nullopt};
}

ModeDecomposition diagonalize(const HamiltonianMatrices& h) {
    ModeDecomposition m;
    m.cls = h.cls;
    if (h.B_bar.cwiseAbs().maxCoeff() == 0.0) {
        Eigen::VectorXd w;
        symmetric_eigensystem(h.A_bar, w, m.phis);
        m.signed_lambdas = w;
        m.lambdas = w.cwiseAbs();
        m.psis = m.phis;
        for (Eigen::Index k = 0; k < w.size(); ++k)
            if (w(k) < 0.0) m.psis.col(k) *= -1.0;
    } else {
        Eigen::MatrixXd d = h.A_bar + h.B_bar;
        svd(d, m.psis, m.lambdas, m.phis);
    }
    return m;
}

CorrelationMatrix correlation_matrix(const ModeDecomposition& modes, ZeroModePolicy policy) {
    const Eigen::Index M = modes.phis.rows();
    Eigen::MatrixXd psi = modes.psis;
    for (Eigen::Index k = 0; k < modes.lambdas.size(); ++k) {
        if (modes.lambdas(k) >= kZeroModeTol) continue;
        switch (policy) {
            case ZeroModePolicy::Drop: psi.col(k).setZero(); break;
            case ZeroModePolicy::KeepPlus: psi.col(k) = modes.phis.col(k); break;
            case ZeroModePolicy::KeepMinus: psi.col(k) = -modes.phis.col(k); break;
        }
    }
    CorrelationMatrix c{Eigen::MatrixXd(M, M), modes.cls, 0, modes.signed_lambdas.size() > 0};
    c.T.noalias() = psi * modes.phis.transpose();

    std::vector<double> nz;
    for (Eigen::Index k = 0; k < modes.lambdas.size(); ++k)
        if (modes.lambdas(k) >= kZeroModeTol) nz.push_back(modes.lambdas(k));
    std::sort(nz.begin(), nz.end());
    for (size_t i = 1; i < nz.size(); ++i)
        if (nz[i] - nz[i - 1] < kZeroModeTol) ++c.degenerate_pairs;
    return c;
}

Eigen::MatrixXd leading_block(const Eigen::MatrixXd& t, int N) {
    if (N < 1 || N > t.rows()) throw DimensionError("restrict: need 1 <= N <= M");
    return t.topLeftCorner(N, N);
}

Eigen::MatrixXd restriction_basis(ChainClass cls, int M, int N) {
    if (N < 1 || N > M) throw DimensionError("restrict: need 1 <= N <= M");
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(M, N);
    if (!is_hankel(cls)) {
        e.topRows(N).setIdentity();
        return e;
    }
    if (2 * N + 2 > M) throw DimensionError("restrict: reflection-symmetric chains need M >= 2N + 2");
    const double r = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < N; ++j) {
        auto [m, s] = mirror(*cls, j, M);
        if (m == j) {
            e(j, j) = 1.0;
        } else {
            e(j, j) = r;
            e(m, j) = s * r;
        }
    }
    return e;
}

CorrelationMatrix restrict(const CorrelationMatrix& t, int N) {
    const int M = int(t.T.rows());
    if (!is_hankel(t.cls)) return {leading_block(t.T, N), t.cls, t.degenerate_pairs, t.symmetric};
    Eigen::MatrixXd e = restriction_basis(t.cls, M, N);
    return {e.transpose() * t.T * e, t.cls, t.degenerate_pairs, t.symmetric};
}

namespace {

Eigen::VectorXd checked_nu(const Eigen::MatrixXd& t_n, bool symmetric) {
    if (t_n.rows() != t_n.cols()) throw DimensionError("nu_spectrum: matrix not square");
    if (t_n.rows() == 0) return {};
    Eigen::VectorXd nu = symmetric ? symmetric_eigenvalues(0.5 * (t_n + t_n.transpose())) : singular_values(t_n);
    for (Eigen::Index i = 0; i < nu.size(); ++i) {
        if (!(std::abs(nu(i)) <= 1.0 + 1e-10))
            throw SpectrumRangeError("nu_spectrum: |nu| = " + std::to_string(std::abs(nu(i))) + " exceeds 1");
        nu(i) = std::clamp(nu(i), -1.0, 1.0);
    }
    return nu;
}

}  // namespace

Eigen::VectorXd nu_spectrum(const Eigen::MatrixXd& t_n) {
    if (t_n.rows() != t_n.cols()) throw DimensionError("nu_spectrum: matrix not square");
    double scale = t_n.size() ? std::max(1.0, t_n.cwiseAbs().maxCoeff()) : 1.0;
    bool symmetric = t_n.size() == 0 || (t_n - t_n.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale;
    return checked_nu(t_n, symmetric);
}

Eigen::VectorXd nu_spectrum(const CorrelationMatrix& t_n) { return checked_nu(t_n.T, t_n.symmetric); }

double binary_entropy(double x, double nu) {
    auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
    return term(0.5 * (x + nu)) + term(0.5 * (x - nu));
}

double entropy(const Eigen::VectorXd& nus) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < nus.size(); ++i) s += binary_entropy(1.0, std::clamp(nus(i), -1.0, 1.0));
    return s;
}

std::vector<double> chain_entropies(const CouplingSpec& spec, ChainClass cls, const std::vector<int>& Ns,
                                    ZeroModePolicy policy) {
    // Same as restrict(correlation_matrix(...), N) without forming the M x M matrix.
    auto modes = diagonalize(build_matrices(spec, cls));
    std::vector<double> out;
    for (int N : Ns) {
        Eigen::MatrixXd e = restriction_basis(cls, spec.M, N);
        Eigen::MatrixXd p = modes.phis.transpose() * e;
        Eigen::MatrixXd q = modes.psis.transpose() * e;
        for (Eigen::Index k = 0; k < modes.lambdas.size(); ++k) {
            if (modes.lambdas(k) >= kZeroModeTol) continue;
            switch (policy) {
                case ZeroModePolicy::Drop: q.row(k).setZero(); break;
                case ZeroModePolicy::KeepPlus: q.row(k) = p.row(k); break;
                case ZeroModePolicy::KeepMinus: q.row(k) = -p.row(k); break;
            }
        }
        out.push_back(entropy(checked_nu(q.transpose() * p, modes.signed_lambdas.size() > 0)));
    }
    return out;
}

double chain_entropy(const CouplingSpec& spec, ChainClass cls, int N, ZeroModePolicy policy) {
    return chain_entropies(spec, cls, {N}, policy)[0];
}

void write_csv(std::ostream& os, const Eigen::MatrixXd& m) {
    auto old = os.precision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j);
        }
        os << '\n';
    }
    os.precision(old);
}

}  // namespace fhent
