#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <complex>

namespace mucos::oracle {

using Cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Exponents = std::vector<int>;

// Plain mixed-radix bookkeeping, first coordinate most significant. Nothing here calls the
// library's group code.
Exponents decode(const std::vector<int>& moduli, std::size_t index);
std::size_t encode(const std::vector<int>& moduli, const Exponents& coords);
std::size_t order_of(const std::vector<int>& moduli);
std::size_t add_index(const std::vector<int>& moduli, std::size_t a, std::size_t b);
std::size_t neg_index(const std::vector<int>& moduli, std::size_t a);

Cx character_value(const std::vector<int>& moduli, const Exponents& m, std::size_t x);

// max_{x,y} ||F(x+y) + mu(y) F(x-y) - 2 F(x) F(y)||_F
double equation_residual(const std::vector<int>& moduli, const std::vector<Mat>& table, const Exponents& mu);
// max_{x,y} ||M(x+y) - M(x) M(y)||_F
double multiplicative_residual(const std::vector<int>& moduli, const std::vector<Mat>& table);
// max_x ||F(x)* - F(-x)||_F
double hermitian_residual(const std::vector<int>& moduli, const std::vector<Mat>& table);
double table_distance(const std::vector<Mat>& a, const std::vector<Mat>& b);

// x -> A diag((chi_k(x) + mu(x) conj chi_k(x)) / 2) A^{-1}
std::vector<Mat> diagonal_rebuild(const std::vector<int>& moduli, const Mat& a, const std::vector<Exponents>& chars,
                                  const Exponents& mu);
// x -> A diag(chi_k(x)) A^{-1}
std::vector<Mat> multiplicative_rebuild(const std::vector<int>& moduli, const Mat& a, const std::vector<Exponents>& chars);

// K(x, y) = (f(x-y) + mu(x) f(-y-x)) / 2
Mat kernel_gram(const std::vector<int>& moduli, const std::vector<Cx>& f, const Exponents& mu);

// Each character paired with its partner mu * conj(chi), as a sorted multiset of sorted pairs.
std::vector<std::pair<Exponents, Exponents>> swap_classes(const std::vector<int>& moduli, const Exponents& mu,
                                                          const std::vector<Exponents>& chars);

}  // namespace mucos::oracle
