#pragma once

#include <optional>
#include <ostream>

#include <Eigen/Dense>

#include "fhent/symbols.hpp"
#include "fhent/symmetry.hpp"

namespace fhent {

// A class tag of nullopt means a general chain.
using ChainClass = std::optional<SymmetryClass>;

struct HamiltonianMatrices {
    Eigen::MatrixXd A_bar;  // symmetric
    Eigen::MatrixXd B_bar;  // antisymmetric
    ChainClass cls;
};

// M sites taken from spec.M; lags are reduced mod M.
// Throws ClassConstraintError if gamma != 0 (or b != 0) with a non-unitary class.
HamiltonianMatrices build_matrices(const CouplingSpec& spec, ChainClass cls);

// Throws DomainError if a is not symmetric or b not antisymmetric.
HamiltonianMatrices general_matrices(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

struct ModeDecomposition {
    Eigen::MatrixXd phis;            // columns phi_k
    Eigen::MatrixXd psis;            // columns psi_k
    Eigen::VectorXd lambdas;         // |Lambda_k|
    Eigen::VectorXd signed_lambdas;  // empty unless B_bar = 0
    ChainClass cls;
};

// (A+B) phi_k = |Lambda_k| psi_k. Uses the symmetric eigensolver when B_bar = 0,
// otherwise the SVD of A+B.
ModeDecomposition diagonalize(const HamiltonianMatrices& h);

enum class ZeroModePolicy { Drop, KeepPlus, KeepMinus };

inline constexpr double kZeroModeTol = 1e-10;

struct CorrelationMatrix {
    Eigen::MatrixXd T;
    ChainClass cls;
    int degenerate_pairs = 0;  // nonzero |Lambda| colliding within 1e-10
    bool symmetric = true;     // false when B_bar != 0
};

// T = sum_k psi_k phi_k^T over the modes kept by the policy.
CorrelationMatrix correlation_matrix(const ModeDecomposition& modes, ZeroModePolicy policy = ZeroModePolicy::Drop);

// First N sites. For the reflection-symmetric classes the block is taken in the
// basis of even/odd combinations of site j and its mirror image, which is the
// basis the symbol matrices are written in. Throws DimensionError.
CorrelationMatrix restrict(const CorrelationMatrix& t, int N);

// Columns span the N-site block used by restrict.
Eigen::MatrixXd restriction_basis(ChainClass cls, int M, int N);

// Plain leading N x N block.
Eigen::MatrixXd leading_block(const Eigen::MatrixXd& t, int N);

// Eigenvalues if T is symmetric, singular values otherwise.
// Throws SpectrumRangeError if some |nu| > 1 + 1e-8; smaller excursions are clamped.
Eigen::VectorXd nu_spectrum(const Eigen::MatrixXd& t_n);
// Singular values whenever the chain has B_bar != 0, including N = 1.
Eigen::VectorXd nu_spectrum(const CorrelationMatrix& t_n);

// e(x, nu) with base-2 logs and 0 log 0 = 0.
double binary_entropy(double x, double nu);

double entropy(const Eigen::VectorXd& nus);

// Exact entropy of the first N sites of an M-site chain.
double chain_entropy(const CouplingSpec& spec, ChainClass cls, int N, ZeroModePolicy policy = ZeroModePolicy::Drop);
std::vector<double> chain_entropies(const CouplingSpec& spec, ChainClass cls, const std::vector<int>& Ns,
                                    ZeroModePolicy policy = ZeroModePolicy::Drop);

void write_csv(std::ostream& os, const Eigen::MatrixXd& m);

}  // namespace fhent
