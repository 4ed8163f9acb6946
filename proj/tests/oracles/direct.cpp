#include "oracles/direct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mucos::oracle {

Exponents decode(const std::vector<int>& moduli, std::size_t index) {
  Exponents c(moduli.size());
  for (std::size_t j = moduli.size(); j-- > 0;) {
    c[j] = static_cast<int>(index % moduli[j]);
    index /= moduli[j];
  }
  return c;
}

std::size_t encode(const std::vector<int>& moduli, const Exponents& coords) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < moduli.size(); ++j) i = i * moduli[j] + static_cast<std::size_t>(coords[j]);
  return i;
}

std::size_t order_of(const std::vector<int>& moduli) {
  std::size_t n = 1;
  for (int m : moduli) n *= m;
  return n;
}

std::size_t add_index(const std::vector<int>& moduli, std::size_t a, std::size_t b) {
  Exponents x = decode(moduli, a);
  const Exponents y = decode(moduli, b);
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = (x[j] + y[j]) % moduli[j];
  return encode(moduli, x);
}

std::size_t neg_index(const std::vector<int>& moduli, std::size_t a) {
  Exponents x = decode(moduli, a);
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = (moduli[j] - x[j]) % moduli[j];
  return encode(moduli, x);
}

Cx character_value(const std::vector<int>& moduli, const Exponents& m, std::size_t x) {
  const Exponents c = decode(moduli, x);
  double turns = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) turns += static_cast<double>(m[j] * c[j] % moduli[j]) / moduli[j];
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

double equation_residual(const std::vector<int>& moduli, const std::vector<Mat>& t, const Exponents& mu) {
  double worst = 0.0;
  const std::size_t n = order_of(moduli);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t sum = add_index(moduli, x, y);
      const std::size_t diff = add_index(moduli, x, neg_index(moduli, y));
      const Mat r = t[sum] + character_value(moduli, mu, y) * t[diff] - 2.0 * t[x] * t[y];
      worst = std::max(worst, r.norm());
    }
  }
  return worst;
}

double multiplicative_residual(const std::vector<int>& moduli, const std::vector<Mat>& t) {
  double worst = 0.0;
  const std::size_t n = order_of(moduli);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) worst = std::max(worst, (t[add_index(moduli, x, y)] - t[x] * t[y]).norm());
  }
  return worst;
}

double hermitian_residual(const std::vector<int>& moduli, const std::vector<Mat>& t) {
  double worst = 0.0;
  for (std::size_t x = 0; x < t.size(); ++x) worst = std::max(worst, (t[x].adjoint() - t[neg_index(moduli, x)]).norm());
  return worst;
}

double table_distance(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, (a[i] - b[i]).norm());
  return worst;
}

namespace {

template <typename Diag>
std::vector<Mat> conjugated_diagonal(const std::vector<int>& moduli, const Mat& a, std::size_t k, Diag diag) {
  const Mat a_inv = a.fullPivLu().inverse();
  std::vector<Mat> out;
  for (std::size_t x = 0; x < order_of(moduli); ++x) {
    Eigen::VectorXcd d(static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < k; ++i) d(static_cast<Eigen::Index>(i)) = diag(i, x);
    out.push_back(a * d.asDiagonal() * a_inv);
  }
  return out;
}

}  // namespace

std::vector<Mat> diagonal_rebuild(const std::vector<int>& moduli, const Mat& a, const std::vector<Exponents>& chars,
                                  const Exponents& mu) {
  return conjugated_diagonal(moduli, a, chars.size(), [&](std::size_t i, std::size_t x) {
    const Cx c = character_value(moduli, chars[i], x);
    return 0.5 * (c + character_value(moduli, mu, x) * std::conj(c));
  });
}

std::vector<Mat> multiplicative_rebuild(const std::vector<int>& moduli, const Mat& a, const std::vector<Exponents>& chars) {
  return conjugated_diagonal(moduli, a, chars.size(),
                             [&](std::size_t i, std::size_t x) { return character_value(moduli, chars[i], x); });
}

Mat kernel_gram(const std::vector<int>& moduli, const std::vector<Cx>& f, const Exponents& mu) {
  const auto n = static_cast<Eigen::Index>(order_of(moduli));
  Mat k(n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index y = 0; y < n; ++y) {
      const auto ux = static_cast<std::size_t>(x);
      const auto uy = static_cast<std::size_t>(y);
      const std::size_t minus_y = neg_index(moduli, uy);
      k(x, y) = 0.5 * (f[add_index(moduli, ux, minus_y)] +
                       character_value(moduli, mu, ux) * f[add_index(moduli, minus_y, neg_index(moduli, ux))]);
    }
  }
  return k;
}

std::vector<std::pair<Exponents, Exponents>> swap_classes(const std::vector<int>& moduli, const Exponents& mu,
                                                          const std::vector<Exponents>& chars) {
  std::vector<std::pair<Exponents, Exponents>> out;
  for (const Exponents& chi : chars) {
    Exponents partner(chi.size());
    for (std::size_t j = 0; j < chi.size(); ++j) partner[j] = ((mu[j] - chi[j]) % moduli[j] + moduli[j]) % moduli[j];
    out.emplace_back(std::min(chi, partner), std::max(chi, partner));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mucos::oracle
