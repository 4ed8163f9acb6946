#include "mucos/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "mucos/error.hpp"

namespace mucos {

namespace {

void require_square(const CMatrix& x, const char* what) {
  if (x.rows() != x.cols() || x.rows() == 0) throw StructuralError(std::string(what) + ": matrix must be square and non-empty");
}

// Jacobi thresholds: a pair is considered done once its off-diagonal mass is this far below the
// family norm, and a rotation whose sine is below kNegligibleSine does not count as progress.
constexpr double kRelativeOffFloor = 1e-14;
constexpr double kNegligibleSine = 1e-14;

}  // namespace

CMatrix adjoint(const CMatrix& x) { return x.adjoint(); }

double frobenius(const CMatrix& x) { return x.norm(); }

double off_diagonal_norm(const CMatrix& x) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (i != j) sum += std::norm(x(i, j));
    }
  }
  return std::sqrt(sum);
}

double commutator_norm(const CMatrix& a, const CMatrix& b) { return (a * b - b * a).norm(); }

HermitianEig hermitian_eig(const CMatrix& x, double tol) {
  require_square(x, "hermitian_eig");
  const double skew = (x - x.adjoint()).norm();
  if (skew > tol * std::max(1.0, x.norm())) {
    throw ContractViolation("hermitian_eig: input is not hermitian, ||X - X*||_F = " + std::to_string(skew), skew);
  }
  const CMatrix h = 0.5 * (x + x.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw ConvergenceError("hermitian_eig: eigensolver failed", skew);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

JointDiagResult joint_diagonalize(std::span<const CMatrix> family, double tol, int max_sweeps) {
  if (family.empty()) throw StructuralError("joint_diagonalize: empty family");
  const Eigen::Index n = family.front().rows();
  double max_norm = 0.0;
  for (const auto& x : family) {
    require_square(x, "joint_diagonalize");
    if (x.rows() != n) throw StructuralError("joint_diagonalize: matrices differ in size");
    max_norm = std::max(max_norm, x.norm());
  }

  for (const auto& x : family) {
    const double defect = commutator_norm(x, x.adjoint());
    if (defect > tol * std::max(1.0, x.squaredNorm())) {
      throw ContractViolation("joint_diagonalize: non-normal member, ||XX* - X*X||_F = " + std::to_string(defect), defect);
    }
  }
  double worst = 0.0;
  double worst_scale = 1.0;
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      const double c = commutator_norm(family[a], family[b]);
      const double scale = std::max(1.0, family[a].norm() * family[b].norm());
      if (c / scale > worst / worst_scale) {
        worst = c;
        worst_scale = scale;
      }
    }
  }
  if (worst > tol * worst_scale) {
    throw ContractViolation("joint_diagonalize: family does not commute, worst commutator " + std::to_string(worst), worst);
  }

  std::vector<CMatrix> parts;
  parts.reserve(2 * family.size());
  const Complex i_unit(0.0, 1.0);
  double total = 0.0;
  for (const auto& x : family) {
    parts.push_back(0.5 * (x + x.adjoint()));
    parts.push_back((x - x.adjoint()) / (2.0 * i_unit));
    total += x.squaredNorm();
  }
  const double pair_floor = kRelativeOffFloor * kRelativeOffFloor * std::max(total, 1e-300);

  CMatrix v = CMatrix::Identity(n, n);
  int sweeps = 0;
  for (; sweeps < max_sweeps; ++sweeps) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
        double pair_mass = 0.0;
        for (const auto& h : parts) {
          const Complex hpq = h(p, q);
          pair_mass += std::norm(hpq);
          const Eigen::Vector3d row(std::real(h(p, p) - h(q, q)), 2.0 * hpq.real(), 2.0 * hpq.imag());
          g.noalias() += row * row.transpose();
        }
        if (pair_mass <= pair_floor) continue;

        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(g);
        Eigen::Vector3d angles = es.eigenvectors().col(2);
        if (angles(0) < 0.0) angles = -angles;
        const double c = std::sqrt(0.5 + 0.5 * angles(0));
        const Complex s = 0.5 * Complex(angles(1), -angles(2)) / c;
        if (std::abs(s) <= kNegligibleSine) continue;
        rotated = true;

        // G = [c, -conj(s); s, c]; X <- G* X G on the (p, q) plane.
        const Complex sc = std::conj(s);
        for (auto& h : parts) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex hp = h(k, p);
            const Complex hq = h(k, q);
            h(k, p) = c * hp + s * hq;
            h(k, q) = -sc * hp + c * hq;
          }
          for (Eigen::Index k = 0; k < n; ++k) {
            const Complex hp = h(p, k);
            const Complex hq = h(q, k);
            h(p, k) = c * hp + sc * hq;
            h(q, k) = -s * hp + c * hq;
          }
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vp = v(k, p);
          const Complex vq = v(k, q);
          v(k, p) = c * vp + s * vq;
          v(k, q) = -sc * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  JointDiagResult result;
  result.unitary = v;
  result.sweeps = sweeps;
  result.diagonals.reserve(family.size());
  for (const auto& x : family) {
    const CMatrix d = v.adjoint() * x * v;
    result.diagonals.push_back(d.diagonal());
    result.off_diag_residual = std::max(result.off_diag_residual, off_diagonal_norm(d));
  }
  if (result.off_diag_residual > tol * (1.0 + max_norm)) {
    throw ConvergenceError("joint_diagonalize: residual " + std::to_string(result.off_diag_residual) + " after " +
                               std::to_string(sweeps) + " sweeps",
                           result.off_diag_residual);
  }
  return result;
}

double psd_min_eigenvalue(const CMatrix& x, double herm_tol) {
  require_square(x, "psd_min_eigenvalue");
  const double skew = (x - x.adjoint()).norm();
  if (skew > herm_tol * std::max(1.0, x.norm())) {
    throw ContractViolation("psd_min_eigenvalue: input is not hermitian, ||X - X*||_F = " + std::to_string(skew), skew);
  }
  const CMatrix h = 0.5 * (x + x.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double condition_number(const CMatrix& x) {
  require_square(x, "condition_number");
  Eigen::JacobiSVD<CMatrix> svd(x);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (!(smallest > 0.0)) return std::numeric_limits<double>::infinity();
  return sv(0) / smallest;
}

CMatrix inverse(const CMatrix& x, double cond_limit) {
  require_square(x, "inverse");
  const double cond = condition_number(x);
  if (!std::isfinite(cond) || cond > cond_limit) {
    throw SingularMatrixError("inverse: condition estimate " + std::to_string(cond) + " exceeds limit " +
                                  std::to_string(cond_limit),
                              cond);
  }
  return x.fullPivLu().inverse();
}

}  // namespace mucos
