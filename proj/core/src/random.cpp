#include "mucos/random.hpp"

#include <cmath>
#include <numbers>

namespace mucos {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  // Box-Muller; 1 - u keeps the log argument in (0, 1].
  const double u = 1.0 - uniform();
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::size_t Rng::below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }

CMatrix random_unitary(int n, Rng& rng) {
  CMatrix z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) z(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

CMatrix random_invertible(int n, double max_cond, Rng& rng) {
  const CMatrix left = random_unitary(n, rng);
  const CMatrix right = random_unitary(n, rng);
  Eigen::VectorXd sigma(n);
  const double span = std::log(max_cond);
  for (int i = 0; i < n; ++i) sigma(i) = std::exp(span * rng.uniform());
  return left * sigma.cast<Complex>().asDiagonal() * right;
}

CVector random_vector(int n, Rng& rng) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v;
}

Character random_character(const GroupSpec& spec, Rng& rng) {
  Character chi{std::vector<int>(spec.rank())};
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    chi.exponents[j] = static_cast<int>(rng.below(static_cast<std::size_t>(spec.moduli()[j])));
  }
  return chi;
}

ScalarTable random_table(const GroupSpec& spec, Rng& rng) {
  ScalarTable f(spec.order());
  for (auto& v : f) v = rng.complex_normal();
  return f;
}

}  // namespace mucos
