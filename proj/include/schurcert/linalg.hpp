#ifndef SCHURCERT_LINALG_HPP
#define SCHURCERT_LINALG_HPP

#include <vector>

#include "schurcert/dense_matrix.hpp"
#include "schurcert/tolerances.hpp"

namespace schurcert {

/// Eigen-decomposition of a symmetric matrix. Values ascending, vectors[k]
/// is the eigenvector column for values[k].
struct SymEig {
  std::vector<double> values;
  DenseMatrix vectors;  // column k pairs with values[k]
};

/// Sweep cap for the cyclic Jacobi iteration; exceeding it raises
/// NoConvergence. Quadratic convergence makes ~10 sweeps typical at the
/// supported orders (<= ~200).
inline constexpr int kMaxJacobiSweeps = 64;

/// Full symmetric eigen-decomposition by cyclic Jacobi rotations, sweeping
/// the strict upper triangle in row order. Deterministic: fixed rotation
/// order, no pivot search. Input with relative asymmetry beyond sym_tol is
/// rejected; within it, the matrix is symmetrized as (M + M^T)/2 first.
SymEig sym_eig(const DenseMatrix& m, const Tolerances& tol);

/// Smallest eigenvalue of the symmetrized input.
double sym_eig_min(const DenseMatrix& m, const Tolerances& tol);

/// Singular values (descending), computed as sqrt of the eigenvalues of
/// M^T M. Adequate at the precision the invertibility gate needs.
std::vector<double> singular_values(const DenseMatrix& m, const Tolerances& tol);

/// Result of the invertibility gate: smallest/largest singular-value ratio
/// against inv_tol.
struct InvertGate {
  bool pass = false;
  double ratio = 0.0;
};

InvertGate invert_gate(const DenseMatrix& m, const Tolerances& tol);

/// Inverse by Gauss-Jordan elimination with partial pivoting (largest
/// magnitude, lowest row index on ties). Throws NumericallySingular when the
/// singular-value gate fails; `unit` names the operand in the message.
DenseMatrix invert(const DenseMatrix& m, const Tolerances& tol,
                   const std::string& unit = "M");

/// Outcome of a scalar-block sign check.
struct LeafCheck {
  bool verdict = false;
  double lambda_min = 0.0;
};

/// lambda_min > pd_eps * max(1, max_abs(M)).
LeafCheck is_pd_leaf(const DenseMatrix& m, const Tolerances& tol);

/// lambda_min >= -nn_tol * max(1, max_abs(M)).
LeafCheck is_nn_leaf(const DenseMatrix& m, const Tolerances& tol);

/// Unique positive-semidefinite square root via eigen-decomposition.
/// Requires the input to be positive definite under pd_eps (so the inverse
/// square root below is defined as well).
DenseMatrix sqrt_psd(const DenseMatrix& m, const Tolerances& tol);
DenseMatrix inv_sqrt_psd(const DenseMatrix& m, const Tolerances& tol);

}  // namespace schurcert

#endif
