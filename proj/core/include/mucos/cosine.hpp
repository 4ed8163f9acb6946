#pragma once

#include <vector>

#include "mucos/group.hpp"
#include "mucos/numerics.hpp"

namespace mucos {

// Total map G -> M_n(C), one matrix per element in canonical order. Holds cosine functions as
// well as multiplicative operators and the regular representation.
struct OperatorFunction {
  GroupSpec spec;
  int dim = 1;
  std::vector<CMatrix> table;

  const CMatrix& at(std::size_t index) const { return table[index]; }
  const CMatrix& at(const GroupElement& x) const { return table[index_of(spec, x)]; }
  // max_x ||table(x)||_F
  double peak_norm() const;
};

// Throws StructuralError for a short table or mis-sized entries.
void validate(const OperatorFunction& f);

OperatorFunction constant_identity(const GroupSpec& spec, int dim);

// max(||M(e) - I||_F, max_{x,y} ||M(x+y) - M(x)M(y)||_F)
double multiplicative_residual(const OperatorFunction& m);

// Phi(x) = (M(x) + mu(x) M(-x)) / 2. M must be multiplicative to tol * max(1, peak^2).
OperatorFunction build_from_multiplicative(const OperatorFunction& m, const Character& mu, double tol = 1e-9);

// M(x) = A diag(chi_1(x), ..., chi_n(x)) A^{-1}.
OperatorFunction build_multiplicative(const GroupSpec& spec, const CMatrix& a, const std::vector<Character>& chars,
                                      double cond_limit = kDefaultCondLimit);

// Scalar solution (chi(x) + mu(x) chi(-x)) / 2.
ScalarTable cosine_table(const GroupSpec& spec, const Character& chi, const Character& mu);

struct VerificationReport {
  double max_equation_residual = 0.0;
  double max_identity_residual = 0.0;
  double max_parity_residual = 0.0;
  double max_commutator = 0.0;
  double max_hermitian_residual = 0.0;
  // Quadratic clauses are judged against tol * max(1, peak^2), linear ones against
  // tol * max(1, peak), the identity clause against tol.
  double peak_norm = 0.0;
  double tol = 0.0;

  bool equation_passed = false;
  bool identity_passed = false;
  bool parity_passed = false;
  bool commutator_passed = false;
  bool hermitian_passed = false;

  // Every clause that follows from the equation and Phi(e) = I. Hermitian symmetry is reported
  // alongside but is not part of being a solution.
  bool solution_passed() const { return equation_passed && identity_passed && parity_passed && commutator_passed; }
};

// All-pairs check of Phi(x+y) + mu(y) Phi(x-y) = 2 Phi(x) Phi(y). Never throws on a mathematical
// failure; every clause is measured.
VerificationReport verify_mu_cosine(const OperatorFunction& phi, const Character& mu, double tol);

// max_x ||Phi(x)* - Phi(-x)||_F
double verify_hermitian(const OperatorFunction& phi);

// x -> S Phi(x) S^{-1}
OperatorFunction conjugate_solution(const OperatorFunction& phi, const CMatrix& s, double cond_limit = kDefaultCondLimit);

// f(x) = <Phi(x) xi, xi> with <u, v> = sum_k u_k conj(v_k).
ScalarTable scalar_slice(const OperatorFunction& phi, const CVector& xi);

}  // namespace mucos
