#pragma once

#include "mucos/cosine.hpp"
#include "mucos/group.hpp"
#include "mucos/numerics.hpp"

namespace mucos {

inline constexpr double kDefaultRankTol = 1e-10;

// gram(x, y) = K_f(x, y) = (f(x - y) + mu(x) f(-y - x)) / 2, canonical element order.
struct KernelTable {
  GroupSpec spec;
  Character mu;
  CMatrix gram;
  ScalarTable source_f;
};

KernelTable build_kernel(const GroupSpec& spec, const Character& mu, const ScalarTable& f);

struct ParitySplit {
  ScalarTable plus;   // (f(x) + mu(x) f(-x)) / 2
  ScalarTable minus;  // (f(x) - mu(x) f(-x)) / 2
};
ParitySplit parity_split(const GroupSpec& spec, const Character& mu, const ScalarTable& f);

// Algebraic identities that hold for every f; each residual should sit at rounding level.
struct BoundaryReport {
  double reflection_residual = 0.0;  // max |K(-x, y) - mu(-x) K(x, y)|
  double column_residual = 0.0;      // max |K(e, -y) - f(y)|
  double row_residual = 0.0;         // max |K(x, e) - f+(x)|
  bool passed = false;
};
BoundaryReport kernel_boundary_checks(const KernelTable& k, double tol);

struct PsdReport {
  double min_eigenvalue = 0.0;
  bool is_psd = false;
};
// Throws ContractViolation when the gram is not hermitian to tol (relative to its norm).
PsdReport psd_check(const KernelTable& k, double tol);

// Finite-dimensional feature map T with <T(x), T(y)> = K(x, y); row x of `features` is T(x).
struct RkhsRealization {
  int rank = 0;
  CMatrix features;  // |G| x rank
  double gram_residual = 0.0;  // max_{x,y} |<T(x), T(y)> - K(x, y)|
};

// Eigen route: gram = V diag(l) V*, keep l >= rank_tol * l_max, T = V diag(sqrt(l)).
// Throws ContractViolation if the gram is not PSD to psd_tol (relative).
RkhsRealization rkhs_realize(const KernelTable& k, double rank_tol = kDefaultRankTol, double psd_tol = 1e-9);

// Pivoted Cholesky route; same kernel, generally a different (unitarily related) feature basis.
RkhsRealization rkhs_realize_cholesky(const KernelTable& k, double rank_tol = kDefaultRankTol, double psd_tol = 1e-9);

// For g = sum_y alpha_y K(y, .), represented in feature space by sum_y alpha_y T(y), returns
// max_z |g(z) - <g, T(z)>|.
double reproducing_residual(const KernelTable& k, const RkhsRealization& t, const CVector& alpha);

struct ProcrustesResult {
  CMatrix isometry;  // cols(from) x cols(to), orthonormal rows when cols(from) <= cols(to)
  double residual = 0.0;  // ||from * isometry - to||_F
};
// argmin_W ||from W - to||_F over W with W W* = I.
ProcrustesResult unitary_procrustes(const CMatrix& from, const CMatrix& to);

// Left translations (R_y h)(z) = h(z + y) as permutation matrices on C^|G|.
OperatorFunction regular_representation(const GroupSpec& spec);

// max_{x,y} |K(x, y) - ((R_{-x} f~)(y) + mu(x) (R_x f~)(y)) / 2| with f~(z) = f(-z).
double regular_representation_identity(const KernelTable& k);

}  // namespace mucos
