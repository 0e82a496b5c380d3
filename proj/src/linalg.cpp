#include "fhent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <lapacke.h>

#include "fhent/errors.hpp"
#include "fhent/special_functions.hpp"

namespace fhent {

namespace {

void check_info(lapack_int info, const char* what) {
    if (info != 0) throw ConvergenceError(std::string(what) + " failed, info=" + std::to_string(info));
}

}  // namespace

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a) {
    const lapack_int n = lapack_int(a.rows());
    if (a.cols() != a.rows()) throw DimensionError("symmetric_eigenvalues: matrix not square");
    Eigen::VectorXd w(n);
    if (n == 0) return w;
    Eigen::MatrixXd work = a;
    check_info(LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'U', n, work.data(), n, w.data()), "dsyevd");
    return w;
}

void symmetric_eigensystem(const Eigen::MatrixXd& a, Eigen::VectorXd& w, Eigen::MatrixXd& v) {
    const lapack_int n = lapack_int(a.rows());
    if (a.cols() != a.rows()) throw DimensionError("symmetric_eigensystem: matrix not square");
    v = a;
    w.resize(n);
    if (n == 0) return;
    check_info(LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n, v.data(), n, w.data()), "dsyevd");
}

void svd(const Eigen::MatrixXd& a, Eigen::MatrixXd& u, Eigen::VectorXd& s, Eigen::MatrixXd& v) {
    const lapack_int m = lapack_int(a.rows());
    const lapack_int n = lapack_int(a.cols());
    const lapack_int k = std::min(m, n);
    Eigen::MatrixXd work = a;
    u.resize(m, k);
    s.resize(k);
    Eigen::MatrixXd vt(k, n);
    if (k == 0) {
        v.resize(n, 0);
        return;
    }
    check_info(LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'S', m, n, work.data(), m, s.data(), u.data(), m,
                              vt.data(), k),
               "dgesdd");
    v = vt.transpose();
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& a) {
    const lapack_int m = lapack_int(a.rows());
    const lapack_int n = lapack_int(a.cols());
    Eigen::VectorXd s(std::min(m, n));
    if (s.size() == 0) return s;
    Eigen::MatrixXd work = a;
    check_info(LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', m, n, work.data(), m, s.data(), nullptr, 1,
                              nullptr, 1),
               "dgesdd");
    return s;
}

cplx log_det(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) throw DimensionError("log_det: matrix not square");
    const Eigen::Index n = a.rows();
    if (n == 0) return 0.0;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
    const Eigen::MatrixXcd& f = lu.matrixLU();
    double scale = f.cwiseAbs().maxCoeff();
    cplx acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        cplx d = f(i, i);
        if (!(std::abs(d) > 1e-13 * std::max(scale, 1.0)))
            throw NearSingularError("log_det: vanishing pivot");
        acc += std::log(d);
    }
    if (lu.permutationP().determinant() < 0) acc += cplx(0.0, kPi);
    return wrap_log(acc);
}

cplx wrap_log(cplx z) {
    double im = std::remainder(z.imag(), 2.0 * kPi);
    if (im <= -kPi) im += 2.0 * kPi;
    return {z.real(), im};
}

}  // namespace fhent
