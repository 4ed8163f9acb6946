#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace mucos {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kDefaultCondLimit = 1e12;
inline constexpr double kDefaultJointDiagTol = 1e-11;
inline constexpr int kDefaultMaxSweeps = 100;

CMatrix adjoint(const CMatrix& x);
double frobenius(const CMatrix& x);
double off_diagonal_norm(const CMatrix& x);
double commutator_norm(const CMatrix& a, const CMatrix& b);

struct HermitianEig {
  Eigen::VectorXd eigenvalues;  // ascending
  CMatrix vectors;              // unitary, columns match eigenvalues
};

// Requires ||X - X*||_F <= tol * max(1, ||X||_F); throws ContractViolation otherwise.
HermitianEig hermitian_eig(const CMatrix& x, double tol = 1e-12);

struct JointDiagResult {
  CMatrix unitary;
  std::vector<CVector> diagonals;  // diag(U* X U) per input, U's column order
  double off_diag_residual = 0.0;  // max_X ||offdiag(U* X U)||_F
  int sweeps = 0;
};

// Simultaneous unitary diagonalization of a commuting family of normal matrices.
//
// Every normal X splits into the commuting hermitian pair (X + X*)/2 and (X - X*)/2i, and by
// Fuglede's theorem the whole split family still commutes. Cyclic Jacobi sweeps then apply 2x2
// unitary rotations, each chosen to minimize the combined off-diagonal mass of the split family
// on its (p, q) plane. Pairs whose off-diagonal mass is already at rounding level are skipped, so
// degenerate joint eigenspaces keep whatever basis they reach first.
//
// Throws ContractViolation for non-normal or non-commuting input and ConvergenceError when the
// residual exceeds tol * (1 + max ||X||_F) after max_sweeps.
JointDiagResult joint_diagonalize(std::span<const CMatrix> family, double tol = kDefaultJointDiagTol,
                                  int max_sweeps = kDefaultMaxSweeps);

// Smallest eigenvalue of (X + X*)/2; X must be hermitian to herm_tol (relative).
double psd_min_eigenvalue(const CMatrix& x, double herm_tol);

// 2-norm condition number; +inf for singular input.
double condition_number(const CMatrix& x);

// Throws SingularMatrixError when cond(X) > cond_limit.
CMatrix inverse(const CMatrix& x, double cond_limit = kDefaultCondLimit);

}  // namespace mucos
