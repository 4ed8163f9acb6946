#pragma once

#include <cstdint>
#include <vector>

#include "mucos/cosine.hpp"
#include "mucos/group.hpp"
#include "mucos/numerics.hpp"

namespace mucos {

struct CharacterCount {
  Character chi;
  int multiplicity = 0;
  friend bool operator==(const CharacterCount&, const CharacterCount&) = default;
};

// Phi(x) = A (E(x) + mu(x) E(-x)) / 2 A^{-1}, E = diag(chi_1, ..., chi_n).
struct Factorization {
  CMatrix a;
  std::vector<Character> chars;  // canonical, sorted; column k of A carries chars[k]
  Character mu;
  double reconstruction_residual = 0.0;  // max_x ||rebuilt(x) - Phi(x)||_F
  std::vector<CharacterCount> groups;    // distinct chars with multiplicities, same order
  std::uint64_t seed = 0;
};

struct ScalarSolutionSet {
  std::vector<ScalarTable> solutions;
  std::vector<std::vector<Character>> provenance;  // every dual element producing solutions[i]
};

// chi and mu * conj(chi) give the same cosine; the lexicographically smaller tuple represents both.
Character canonical_character(const GroupSpec& spec, const Character& mu, const Character& chi);
std::vector<Character> canonical_multiset(const GroupSpec& spec, const Character& mu, std::vector<Character> chars);

ScalarSolutionSet enumerate_scalar_solutions(const GroupSpec& spec, const Character& mu);

// Smallest chi (lexicographic) with max_x |f(x) - (chi(x) + mu(x) chi(-x))/2| <= tol.
// Throws NotASolution when nothing matches.
Character recover_character(const GroupSpec& spec, const Character& mu, const ScalarTable& f, double tol);

// Joint unitary diagonalization of a hermitian solution; A is unitary.
// Throws NotASolution if Phi fails verification (or hermitian symmetry) at tol, ConvergenceError
// if the joint diagonalization stalls.
Factorization factor_hermitian(const OperatorFunction& phi, const Character& mu, double tol);

// factor_hermitian with `groups` filled; equal characters are reported with multiplicity.
Factorization factor_to_characters(const OperatorFunction& phi, const Character& mu, double tol);

// A (E + mu E~) / 2 A^{-1}
OperatorFunction rebuild(const GroupSpec& spec, const Factorization& fact);
// The multiplicative operator M(x) = A E(x) A^{-1} behind a factorization.
OperatorFunction multiplicative_part(const GroupSpec& spec, const Factorization& fact);

struct Hermitianization {
  CMatrix s;  // Psi = S Phi S^{-1}
  OperatorFunction psi;
  double cond_s = 1.0;
  double hermitian_residual = 0.0;
  std::uint64_t seed = 0;
  int attempts = 0;
};

// Finds invertible S with S Phi(.) S^{-1} hermitian, for a trivial-mu solution.
//
// Z = sum_x c_x Phi(x) with seeded random c; the eigenspaces of Z are joint eigenspaces of the
// family unless two channels collide, which is detected (non-diagonal P^{-1} Phi P or clustered
// eigenvalues) and retried with fresh coefficients. Each eigenspace basis comes from the right
// singular vectors of Z - lambda I, so repeated channels do not depend on the eigensolver's
// handling of defective-looking clusters.
Hermitianization hermitianize(const OperatorFunction& phi, double tol, std::uint64_t seed = 0);

// Same algorithm for nontrivial mu, where a hermitian similar solution is not known to exist.
Hermitianization hermitianize_experimental(const OperatorFunction& phi, const Character& mu, double tol,
                                           std::uint64_t seed = 0);

struct BoundedFactorization {
  CMatrix s;          // Phi(x) = S (M(x) + M(-x)) / 2 S^{-1}
  Factorization fact; // factorization of S^{-1} Phi S
  double end_to_end_residual = 0.0;
  double cond_s = 1.0;
};

// hermitianize, then factor_hermitian on the hermitian conjugate.
BoundedFactorization factor_bounded(const OperatorFunction& phi, double tol, std::uint64_t seed = 0);
BoundedFactorization factor_bounded_experimental(const OperatorFunction& phi, const Character& mu, double tol,
                                                 std::uint64_t seed = 0);

}  // namespace mucos
