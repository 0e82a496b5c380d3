#pragma once

#include <complex>

#include <Eigen/Dense>

namespace fhent {

using cplx = std::complex<double>;

// Eigenvalues of a real symmetric matrix, ascending (LAPACK dsyevd).
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a);

// Full symmetric eigendecomposition a = V diag(w) V^T, w ascending.
void symmetric_eigensystem(const Eigen::MatrixXd& a, Eigen::VectorXd& w, Eigen::MatrixXd& v);

// Singular value decomposition a = U diag(s) V^T, s descending (LAPACK dgesdd).
void svd(const Eigen::MatrixXd& a, Eigen::MatrixXd& u, Eigen::VectorXd& s, Eigen::MatrixXd& v);

Eigen::VectorXd singular_values(const Eigen::MatrixXd& a);

// ln det by LU with partial pivoting. Imaginary part is defined modulo 2 pi.
// Throws NearSingularError when a pivot vanishes.
cplx log_det(const Eigen::MatrixXcd& a);

// Wraps the imaginary part into (-pi, pi].
cplx wrap_log(cplx z);

}  // namespace fhent
