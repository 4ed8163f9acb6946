#include "mucos/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mucos/error.hpp"

namespace mucos {

namespace {

void require_total(const GroupSpec& spec, const ScalarTable& f) {
  if (f.size() != spec.order()) {
    throw StructuralError("scalar table has " + std::to_string(f.size()) + " entries, group order is " +
                          std::to_string(spec.order()));
  }
}

double gram_residual(const CMatrix& features, const CMatrix& gram) {
  return (features * features.adjoint() - gram).cwiseAbs().maxCoeff();
}

void require_psd(const KernelTable& k, double psd_tol) {
  const PsdReport psd = psd_check(k, psd_tol);
  if (!psd.is_psd) {
    throw ContractViolation("rkhs_realize: kernel is not positive semidefinite, min eigenvalue " +
                                std::to_string(psd.min_eigenvalue),
                            psd.min_eigenvalue);
  }
}

}  // namespace

KernelTable build_kernel(const GroupSpec& spec, const Character& mu, const ScalarTable& f) {
  require_total(spec, f);
  validate(spec, mu);
  const auto t = index_tables(spec);
  const ScalarTable mu_values = char_table(spec, mu);
  const auto n = static_cast<Eigen::Index>(t.order);
  CMatrix gram(n, n);
  for (std::size_t x = 0; x < t.order; ++x) {
    for (std::size_t y = 0; y < t.order; ++y) {
      gram(x, y) = 0.5 * (f[t.sub(x, y)] + mu_values[x] * f[t.neg(t.add(y, x))]);
    }
  }
  return KernelTable{spec, mu, std::move(gram), f};
}

ParitySplit parity_split(const GroupSpec& spec, const Character& mu, const ScalarTable& f) {
  require_total(spec, f);
  const auto t = index_tables(spec);
  const ScalarTable mu_values = char_table(spec, mu);
  ParitySplit out{ScalarTable(t.order), ScalarTable(t.order)};
  for (std::size_t x = 0; x < t.order; ++x) {
    const Complex reflected = mu_values[x] * f[t.neg(x)];
    out.plus[x] = 0.5 * (f[x] + reflected);
    // f - plus rather than (f - reflected) / 2, so that plus + minus reproduces f
    out.minus[x] = f[x] - out.plus[x];
  }
  return out;
}

BoundaryReport kernel_boundary_checks(const KernelTable& k, double tol) {
  const auto t = index_tables(k.spec);
  const ScalarTable mu_values = char_table(k.spec, k.mu);
  const ScalarTable plus = parity_split(k.spec, k.mu, k.source_f).plus;
  BoundaryReport r;
  for (std::size_t x = 0; x < t.order; ++x) {
    const std::size_t nx = t.neg(x);
    for (std::size_t y = 0; y < t.order; ++y) {
      r.reflection_residual = std::max(r.reflection_residual, std::abs(k.gram(nx, y) - mu_values[nx] * k.gram(x, y)));
    }
    r.column_residual = std::max(r.column_residual, std::abs(k.gram(0, nx) - k.source_f[x]));
    r.row_residual = std::max(r.row_residual, std::abs(k.gram(x, 0) - plus[x]));
  }
  r.passed = r.reflection_residual <= tol && r.column_residual <= tol && r.row_residual <= tol;
  return r;
}

PsdReport psd_check(const KernelTable& k, double tol) {
  PsdReport r;
  r.min_eigenvalue = psd_min_eigenvalue(k.gram, tol);
  r.is_psd = r.min_eigenvalue >= -tol * std::max(1.0, k.gram.norm());
  return r;
}

RkhsRealization rkhs_realize(const KernelTable& k, double rank_tol, double psd_tol) {
  require_psd(k, psd_tol);
  const HermitianEig eig = hermitian_eig(k.gram, psd_tol);
  const Eigen::Index n = eig.eigenvalues.size();
  const double top = std::max(eig.eigenvalues(n - 1), 0.0);

  RkhsRealization out;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = n; i-- > 0;) {
    if (top > 0.0 && eig.eigenvalues(i) >= rank_tol * top) kept.push_back(i);
  }
  out.rank = static_cast<int>(kept.size());
  out.features.resize(n, out.rank);
  for (int c = 0; c < out.rank; ++c) {
    const double lambda = std::max(eig.eigenvalues(kept[c]), 0.0);
    out.features.col(c) = eig.vectors.col(kept[c]) * std::sqrt(lambda);
  }
  out.gram_residual = gram_residual(out.features, k.gram);
  return out;
}

RkhsRealization rkhs_realize_cholesky(const KernelTable& k, double rank_tol, double psd_tol) {
  require_psd(k, psd_tol);
  const CMatrix h = 0.5 * (k.gram + k.gram.adjoint());
  const Eigen::Index n = h.rows();
  Eigen::VectorXd residual_diag = h.diagonal().real();
  const double top = std::max(residual_diag.maxCoeff(), 0.0);

  CMatrix l = CMatrix::Zero(n, n);
  std::vector<bool> used(n, false);
  int rank = 0;
  for (; rank < n; ++rank) {
    Eigen::Index pivot = -1;
    double best = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!used[i] && residual_diag(i) > best) {
        best = residual_diag(i);
        pivot = i;
      }
    }
    if (pivot < 0 || top <= 0.0 || best < rank_tol * top) break;
    used[pivot] = true;
    const double root = std::sqrt(best);
    for (Eigen::Index i = 0; i < n; ++i) {
      Complex v = h(i, pivot);
      for (int c = 0; c < rank; ++c) v -= l(i, c) * std::conj(l(pivot, c));
      l(i, rank) = v / root;
    }
    for (Eigen::Index i = 0; i < n; ++i) residual_diag(i) -= std::norm(l(i, rank));
  }

  RkhsRealization out;
  out.rank = rank;
  out.features = l.leftCols(rank);
  out.gram_residual = gram_residual(out.features, k.gram);
  return out;
}

double reproducing_residual(const KernelTable& k, const RkhsRealization& t, const CVector& alpha) {
  if (alpha.size() != k.gram.rows()) throw StructuralError("reproducing_residual: coefficient length mismatch");
  // g(z) = sum_y alpha_y K(y, z); its feature vector is sum_y alpha_y T(y).
  const CVector values = k.gram.transpose() * alpha;
  const CVector g = t.features.transpose() * alpha;
  double worst = 0.0;
  for (Eigen::Index z = 0; z < k.gram.rows(); ++z) {
    // <g, T(z)> = sum_c g_c conj(T(z)_c)
    const Complex inner = t.features.row(z).transpose().dot(g);
    worst = std::max(worst, std::abs(values(z) - inner));
  }
  return worst;
}

ProcrustesResult unitary_procrustes(const CMatrix& from, const CMatrix& to) {
  if (from.rows() != to.rows()) throw StructuralError("unitary_procrustes: row counts differ");
  Eigen::JacobiSVD<CMatrix> svd(from.adjoint() * to, Eigen::ComputeThinU | Eigen::ComputeThinV);
  ProcrustesResult r;
  r.isometry = svd.matrixU() * svd.matrixV().adjoint();
  r.residual = (from * r.isometry - to).norm();
  return r;
}

OperatorFunction regular_representation(const GroupSpec& spec) {
  const auto t = index_tables(spec);
  const auto n = static_cast<Eigen::Index>(t.order);
  OperatorFunction r{spec, static_cast<int>(n), {}};
  r.table.reserve(t.order);
  for (std::size_t y = 0; y < t.order; ++y) {
    CMatrix p = CMatrix::Zero(n, n);
    for (std::size_t z = 0; z < t.order; ++z) p(z, t.add(z, y)) = 1.0;
    r.table.push_back(std::move(p));
  }
  return r;
}

double regular_representation_identity(const KernelTable& k) {
  const auto t = index_tables(k.spec);
  const OperatorFunction r = regular_representation(k.spec);
  const ScalarTable mu_values = char_table(k.spec, k.mu);
  CVector reflected(static_cast<Eigen::Index>(t.order));
  for (std::size_t z = 0; z < t.order; ++z) reflected(z) = k.source_f[t.neg(z)];

  double worst = 0.0;
  for (std::size_t x = 0; x < t.order; ++x) {
    const CVector section = 0.5 * (r.at(t.neg(x)) * reflected + mu_values[x] * (r.at(x) * reflected));
    for (std::size_t y = 0; y < t.order; ++y) worst = std::max(worst, std::abs(k.gram(x, y) - section(y)));
  }
  return worst;
}

}  // namespace mucos
