#pragma once

#include <cstdint>
#include <random>

#include "mucos/group.hpp"
#include "mucos/numerics.hpp"

namespace mucos {

// Seeded source whose output depends only on the seed (not on the standard library's
// distribution implementations), so generated instances are byte-stable across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  Complex complex_normal();
  std::size_t below(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

// Haar-distributed unitary (QR of a complex Gaussian matrix with phase-fixed R).
CMatrix random_unitary(int n, Rng& rng);

// U1 * diag(sigma) * U2 with sigma log-uniform in [1, max_cond], so cond <= max_cond.
CMatrix random_invertible(int n, double max_cond, Rng& rng);

CVector random_vector(int n, Rng& rng);
Character random_character(const GroupSpec& spec, Rng& rng);
ScalarTable random_table(const GroupSpec& spec, Rng& rng);

}  // namespace mucos
