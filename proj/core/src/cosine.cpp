#include "mucos/cosine.hpp"

#include <algorithm>
#include <string>

#include "mucos/error.hpp"

namespace mucos {

double OperatorFunction::peak_norm() const {
  double peak = 0.0;
  for (const auto& m : table) peak = std::max(peak, m.norm());
  return peak;
}

void validate(const OperatorFunction& f) {
  if (f.dim < 1) throw StructuralError("operator function dimension must be >= 1");
  if (f.table.size() != f.spec.order()) {
    throw StructuralError("operator table has " + std::to_string(f.table.size()) + " entries, group order is " +
                          std::to_string(f.spec.order()));
  }
  for (const auto& m : f.table) {
    if (m.rows() != f.dim || m.cols() != f.dim) throw StructuralError("operator table entry has the wrong shape");
    if (!m.allFinite()) throw StructuralError("operator table entry is not finite");
  }
}

OperatorFunction constant_identity(const GroupSpec& spec, int dim) {
  return OperatorFunction{spec, dim, std::vector<CMatrix>(spec.order(), CMatrix::Identity(dim, dim))};
}

double multiplicative_residual(const OperatorFunction& m) {
  validate(m);
  const auto t = index_tables(m.spec);
  double worst = (m.at(0) - CMatrix::Identity(m.dim, m.dim)).norm();
  for (std::size_t i = 0; i < t.order; ++i) {
    for (std::size_t j = 0; j < t.order; ++j) {
      worst = std::max(worst, (m.at(t.add(i, j)) - m.at(i) * m.at(j)).norm());
    }
  }
  return worst;
}

OperatorFunction build_from_multiplicative(const OperatorFunction& m, const Character& mu, double tol) {
  validate(m);
  validate(m.spec, mu);
  const double residual = multiplicative_residual(m);
  const double peak = m.peak_norm();
  if (residual > tol * std::max(1.0, peak * peak)) {
    throw ContractViolation("build_from_multiplicative: input is not multiplicative, worst residual " +
                                std::to_string(residual),
                            residual);
  }
  const auto t = index_tables(m.spec);
  const ScalarTable mu_values = char_table(m.spec, mu);
  OperatorFunction phi{m.spec, m.dim, {}};
  phi.table.reserve(t.order);
  for (std::size_t i = 0; i < t.order; ++i) phi.table.push_back(0.5 * (m.at(i) + mu_values[i] * m.at(t.neg(i))));
  return phi;
}

OperatorFunction build_multiplicative(const GroupSpec& spec, const CMatrix& a, const std::vector<Character>& chars,
                                      double cond_limit) {
  if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != chars.size()) {
    throw StructuralError("build_multiplicative: change of basis must be square with one character per column");
  }
  const CMatrix a_inv = inverse(a, cond_limit);
  const int n = static_cast<int>(a.rows());
  std::vector<ScalarTable> values;
  values.reserve(chars.size());
  for (const auto& chi : chars) values.push_back(char_table(spec, chi));

  OperatorFunction m{spec, n, {}};
  m.table.reserve(spec.order());
  CVector diag(n);
  for (std::size_t x = 0; x < spec.order(); ++x) {
    for (int k = 0; k < n; ++k) diag(k) = values[k][x];
    m.table.push_back(a * diag.asDiagonal() * a_inv);
  }
  return m;
}

ScalarTable cosine_table(const GroupSpec& spec, const Character& chi, const Character& mu) {
  const ScalarTable c = char_table(spec, chi);
  const ScalarTable m = char_table(spec, mu);
  const auto t = index_tables(spec);
  ScalarTable f(spec.order());
  for (std::size_t x = 0; x < spec.order(); ++x) f[x] = 0.5 * (c[x] + m[x] * c[t.neg(x)]);
  return f;
}

VerificationReport verify_mu_cosine(const OperatorFunction& phi, const Character& mu, double tol) {
  validate(phi);
  validate(phi.spec, mu);
  const auto t = index_tables(phi.spec);
  const ScalarTable mu_values = char_table(phi.spec, mu);
  const CMatrix id = CMatrix::Identity(phi.dim, phi.dim);

  VerificationReport r;
  r.tol = tol;
  r.peak_norm = phi.peak_norm();
  r.max_identity_residual = (phi.at(0) - id).norm();
  for (std::size_t x = 0; x < t.order; ++x) {
    const CMatrix& px = phi.at(x);
    const std::size_t nx = t.neg(x);
    r.max_parity_residual = std::max(r.max_parity_residual, (phi.at(nx) - mu_values[nx] * px).norm());
    r.max_hermitian_residual = std::max(r.max_hermitian_residual, (px.adjoint() - phi.at(nx)).norm());
    for (std::size_t y = 0; y < t.order; ++y) {
      const CMatrix& py = phi.at(y);
      const CMatrix prod = px * py;
      const CMatrix lhs = phi.at(t.add(x, y)) + mu_values[y] * phi.at(t.sub(x, y));
      r.max_equation_residual = std::max(r.max_equation_residual, (lhs - 2.0 * prod).norm());
      if (y > x) r.max_commutator = std::max(r.max_commutator, (prod - py * px).norm());
    }
  }
  const double linear = tol * std::max(1.0, r.peak_norm);
  const double quadratic = tol * std::max(1.0, r.peak_norm * r.peak_norm);
  r.equation_passed = r.max_equation_residual <= quadratic;
  r.identity_passed = r.max_identity_residual <= tol;
  r.parity_passed = r.max_parity_residual <= linear;
  r.commutator_passed = r.max_commutator <= quadratic;
  r.hermitian_passed = r.max_hermitian_residual <= linear;
  return r;
}

double verify_hermitian(const OperatorFunction& phi) {
  validate(phi);
  double worst = 0.0;
  for (std::size_t x = 0; x < phi.spec.order(); ++x) {
    const std::size_t nx = index_of(phi.spec, neg(phi.spec, element_at(phi.spec, x)));
    worst = std::max(worst, (phi.at(x).adjoint() - phi.at(nx)).norm());
  }
  return worst;
}

OperatorFunction conjugate_solution(const OperatorFunction& phi, const CMatrix& s, double cond_limit) {
  validate(phi);
  if (s.rows() != phi.dim || s.cols() != phi.dim) throw StructuralError("conjugate_solution: S has the wrong shape");
  const CMatrix s_inv = inverse(s, cond_limit);
  OperatorFunction out{phi.spec, phi.dim, {}};
  out.table.reserve(phi.table.size());
  for (const auto& m : phi.table) out.table.push_back(s * m * s_inv);
  return out;
}

ScalarTable scalar_slice(const OperatorFunction& phi, const CVector& xi) {
  validate(phi);
  if (xi.size() != phi.dim) {
    throw StructuralError("scalar_slice: xi has length " + std::to_string(xi.size()) + ", operators are " +
                          std::to_string(phi.dim) + "x" + std::to_string(phi.dim));
  }
  ScalarTable f;
  f.reserve(phi.table.size());
  for (const auto& m : phi.table) f.push_back(xi.dot(m * xi));  // Eigen's dot conjugates its left operand
  return f;
}

}  // namespace mucos
