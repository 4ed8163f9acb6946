#include "mucos/factor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "mucos/error.hpp"
#include "mucos/random.hpp"

namespace mucos {

namespace {

constexpr double kScalarDedupTol = 1e-12;
constexpr int kHermitianizeAttempts = 5;
// Eigenvalues of the random combination closer than this (relative to ||Z||) count as one
// cluster; clusters closer than kClusterSeparation are treated as a collision and retried.
constexpr double kClusterTol = 1e-7;
constexpr double kClusterSeparation = 1e-4;

double max_abs_diff(const ScalarTable& a, const ScalarTable& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

OperatorFunction as_scalar_function(const GroupSpec& spec, const ScalarTable& f) {
  OperatorFunction out{spec, 1, {}};
  out.table.reserve(f.size());
  for (const Complex& v : f) out.table.push_back(CMatrix::Constant(1, 1, v));
  return out;
}

double max_rebuild_error(const OperatorFunction& a, const OperatorFunction& b) {
  double worst = 0.0;
  for (std::size_t x = 0; x < a.table.size(); ++x) worst = std::max(worst, (a.at(x) - b.at(x)).norm());
  return worst;
}

void require_solution(const OperatorFunction& phi, const Character& mu, double tol, bool hermitian) {
  const VerificationReport report = verify_mu_cosine(phi, mu, tol);
  if (!report.solution_passed()) {
    throw NotASolution("input fails the mu-cosine verification (equation residual " +
                           std::to_string(report.max_equation_residual) + ")",
                       std::max(report.max_equation_residual, report.max_identity_residual));
  }
  if (hermitian && !report.hermitian_passed) {
    throw NotASolution("input is not hermitian (residual " + std::to_string(report.max_hermitian_residual) + ")",
                       report.max_hermitian_residual);
  }
}

std::vector<CharacterCount> count_groups(const std::vector<Character>& sorted) {
  std::vector<CharacterCount> groups;
  for (const auto& chi : sorted) {
    if (!groups.empty() && groups.back().chi == chi) {
      ++groups.back().multiplicity;
    } else {
      groups.push_back({chi, 1});
    }
  }
  return groups;
}

// Columns of P spanning the eigenspaces of z, one block per eigenvalue cluster. Empty when two
// clusters are too close to be told apart.
std::optional<CMatrix> eigenspace_basis(const CMatrix& z) {
  const Eigen::Index n = z.rows();
  Eigen::ComplexEigenSolver<CMatrix> solver(z, false);
  if (solver.info() != Eigen::Success) return std::nullopt;
  const CVector lambda = solver.eigenvalues();
  const double scale = std::max(1.0, z.norm());

  std::vector<std::vector<Eigen::Index>> clusters;
  std::vector<bool> taken(n, false);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (taken[i]) continue;
    clusters.push_back({i});
    taken[i] = true;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (!taken[j] && std::abs(lambda(j) - lambda(i)) <= kClusterTol * scale) {
        clusters.back().push_back(j);
        taken[j] = true;
      }
    }
  }
  std::vector<Complex> centers;
  for (const auto& c : clusters) {
    Complex sum = 0.0;
    for (Eigen::Index i : c) sum += lambda(i);
    centers.push_back(sum / static_cast<double>(c.size()));
  }
  for (std::size_t a = 0; a < centers.size(); ++a) {
    for (std::size_t b = a + 1; b < centers.size(); ++b) {
      if (std::abs(centers[a] - centers[b]) < kClusterSeparation * scale) return std::nullopt;
    }
  }

  CMatrix p(n, n);
  Eigen::Index col = 0;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const auto m = static_cast<Eigen::Index>(clusters[c].size());
    const CMatrix shifted = z - centers[c] * CMatrix::Identity(n, n);
    Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
    p.middleCols(col, m) = svd.matrixV().rightCols(m);
    col += m;
  }
  return p;
}

Hermitianization hermitianize_impl(const OperatorFunction& phi, const Character& mu, double tol, std::uint64_t seed) {
  require_solution(phi, mu, tol, false);
  const int n = phi.dim;
  const double peak = std::max(1.0, phi.peak_norm());
  Rng rng(seed);

  for (int attempt = 1; attempt <= kHermitianizeAttempts; ++attempt) {
    CMatrix z = CMatrix::Zero(n, n);
    for (const auto& m : phi.table) z += rng.complex_normal() * m;

    const auto p = eigenspace_basis(z);
    if (!p) continue;
    CMatrix basis = *p;
    for (int k = 0; k < n; ++k) basis.col(k).normalize();

    CMatrix s;
    try {
      s = inverse(basis);
    } catch (const SingularMatrixError&) {
      continue;
    }
    OperatorFunction psi = conjugate_solution(phi, s);
    const double cond = condition_number(s);
    // Rounding in P^{-1} Phi P grows with cond(P).
    const double diag_tol = tol * peak * std::max(1.0, cond);
    double off = 0.0;
    for (const auto& m : psi.table) off = std::max(off, off_diagonal_norm(m));
    if (off > diag_tol) continue;

    // Every channel must itself be a scalar mu-cosine solution.
    for (int k = 0; k < n; ++k) {
      ScalarTable channel(psi.table.size());
      for (std::size_t x = 0; x < psi.table.size(); ++x) channel[x] = psi.at(x)(k, k);
      const VerificationReport r = verify_mu_cosine(as_scalar_function(phi.spec, channel), mu, tol);
      if (!r.solution_passed()) {
        throw NotASolution("hermitianize: diagonal channel " + std::to_string(k) + " is not a scalar solution",
                           r.max_equation_residual);
      }
    }

    Hermitianization out;
    out.s = std::move(s);
    out.psi = std::move(psi);
    out.cond_s = cond;
    out.hermitian_residual = verify_hermitian(out.psi);
    out.seed = seed;
    out.attempts = attempt;
    if (out.hermitian_residual > 10.0 * tol * peak) {
      throw NotASolution("hermitianize: conjugated family is not hermitian (residual " +
                             std::to_string(out.hermitian_residual) + ")",
                         out.hermitian_residual);
    }
    return out;
  }
  throw ConvergenceError("hermitianize: family not simultaneously diagonalizable after " +
                             std::to_string(kHermitianizeAttempts) + " attempts",
                         0.0);
}

BoundedFactorization factor_bounded_impl(const OperatorFunction& phi, const Character& mu, double tol,
                                         std::uint64_t seed) {
  const Hermitianization h = hermitianize_impl(phi, mu, tol, seed);
  BoundedFactorization out;
  out.fact = factor_hermitian(h.psi, mu, tol);
  out.fact.seed = seed;
  out.s = inverse(h.s);
  out.cond_s = h.cond_s;
  const OperatorFunction rebuilt = conjugate_solution(rebuild(phi.spec, out.fact), out.s);
  out.end_to_end_residual = max_rebuild_error(rebuilt, phi);
  return out;
}

}  // namespace

Character canonical_character(const GroupSpec& spec, const Character& mu, const Character& chi) {
  Character partner = multiply(spec, mu, inverse(spec, chi));
  return std::min(chi, partner);
}

std::vector<Character> canonical_multiset(const GroupSpec& spec, const Character& mu, std::vector<Character> chars) {
  for (auto& chi : chars) chi = canonical_character(spec, mu, chi);
  std::sort(chars.begin(), chars.end());
  return chars;
}

ScalarSolutionSet enumerate_scalar_solutions(const GroupSpec& spec, const Character& mu) {
  validate(spec, mu);
  ScalarSolutionSet set;
  for (const auto& chi : enumerate_dual(spec)) {
    ScalarTable f = cosine_table(spec, chi, mu);
    bool merged = false;
    for (std::size_t i = 0; i < set.solutions.size(); ++i) {
      if (max_abs_diff(set.solutions[i], f) <= kScalarDedupTol) {
        set.provenance[i].push_back(chi);
        merged = true;
        break;
      }
    }
    if (merged) continue;
    const VerificationReport r = verify_mu_cosine(as_scalar_function(spec, f), mu, kScalarDedupTol);
    if (!r.equation_passed || !r.identity_passed) {
      throw NotASolution("enumerate_scalar_solutions: generated table fails the equation", r.max_equation_residual);
    }
    set.solutions.push_back(std::move(f));
    set.provenance.push_back({chi});
  }
  return set;
}

Character recover_character(const GroupSpec& spec, const Character& mu, const ScalarTable& f, double tol) {
  if (f.size() != spec.order()) throw StructuralError("recover_character: table does not cover the group");
  double closest = std::numeric_limits<double>::infinity();
  for (const auto& chi : enumerate_dual(spec)) {
    const double d = max_abs_diff(f, cosine_table(spec, chi, mu));
    if (d <= tol) return chi;
    closest = std::min(closest, d);
  }
  throw NotASolution("recover_character: not a mu-cosine solution (closest candidate at distance " +
                         std::to_string(closest) + ")",
                     closest);
}

Factorization factor_hermitian(const OperatorFunction& phi, const Character& mu, double tol) {
  require_solution(phi, mu, tol, true);
  const std::size_t order = phi.spec.order();
  const int n = phi.dim;

  const JointDiagResult jd = joint_diagonalize(phi.table, tol);

  std::vector<Character> chars(n);
  for (int k = 0; k < n; ++k) {
    ScalarTable channel(order);
    for (std::size_t x = 0; x < order; ++x) channel[x] = jd.diagonals[x](k);
    const VerificationReport r = verify_mu_cosine(as_scalar_function(phi.spec, channel), mu, tol);
    if (!r.solution_passed()) {
      throw NotASolution("factor_hermitian: diagonal channel " + std::to_string(k) + " violates the scalar equation",
                         r.max_equation_residual);
    }
    chars[k] = canonical_character(phi.spec, mu, recover_character(phi.spec, mu, channel, tol));
  }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return chars[a] < chars[b]; });

  Factorization fact;
  fact.mu = mu;
  fact.a.resize(n, n);
  fact.chars.reserve(n);
  for (int k = 0; k < n; ++k) {
    fact.a.col(k) = jd.unitary.col(perm[k]);
    fact.chars.push_back(chars[perm[k]]);
  }
  fact.groups = count_groups(fact.chars);
  fact.reconstruction_residual = max_rebuild_error(rebuild(phi.spec, fact), phi);
  if (fact.reconstruction_residual > 10.0 * tol) {
    throw NotASolution("factor_hermitian: reconstruction residual " + std::to_string(fact.reconstruction_residual) +
                           " exceeds 10 * tol",
                       fact.reconstruction_residual);
  }
  return fact;
}

Factorization factor_to_characters(const OperatorFunction& phi, const Character& mu, double tol) {
  // factor_hermitian already sorts channels by canonical character, so groups are contiguous.
  return factor_hermitian(phi, mu, tol);
}

OperatorFunction rebuild(const GroupSpec& spec, const Factorization& fact) {
  const int n = static_cast<int>(fact.a.rows());
  const CMatrix a_inv = inverse(fact.a);
  std::vector<ScalarTable> channels;
  channels.reserve(fact.chars.size());
  for (const auto& chi : fact.chars) channels.push_back(cosine_table(spec, chi, fact.mu));

  OperatorFunction out{spec, n, {}};
  out.table.reserve(spec.order());
  CVector diag(n);
  for (std::size_t x = 0; x < spec.order(); ++x) {
    for (int k = 0; k < n; ++k) diag(k) = channels[k][x];
    out.table.push_back(fact.a * diag.asDiagonal() * a_inv);
  }
  return out;
}

OperatorFunction multiplicative_part(const GroupSpec& spec, const Factorization& fact) {
  return build_multiplicative(spec, fact.a, fact.chars);
}

Hermitianization hermitianize(const OperatorFunction& phi, double tol, std::uint64_t seed) {
  return hermitianize_impl(phi, trivial_character(phi.spec), tol, seed);
}

Hermitianization hermitianize_experimental(const OperatorFunction& phi, const Character& mu, double tol,
                                           std::uint64_t seed) {
  return hermitianize_impl(phi, mu, tol, seed);
}

BoundedFactorization factor_bounded(const OperatorFunction& phi, double tol, std::uint64_t seed) {
  return factor_bounded_impl(phi, trivial_character(phi.spec), tol, seed);
}

BoundedFactorization factor_bounded_experimental(const OperatorFunction& phi, const Character& mu, double tol,
                                                 std::uint64_t seed) {
  return factor_bounded_impl(phi, mu, tol, seed);
}

}  // namespace mucos
