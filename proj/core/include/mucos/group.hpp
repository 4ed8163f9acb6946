#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mucos {

using Complex = std::complex<double>;

// Scalar function on a group, indexed in canonical element order.
using ScalarTable = std::vector<Complex>;

// Z_{n1} x ... x Z_{nk}. The empty product is not allowed; use "1" for the trivial group.
class GroupSpec {
 public:
  GroupSpec() : GroupSpec(std::vector<int>{1}) {}
  explicit GroupSpec(std::vector<int> moduli);

  // Parses "n1xn2x...xnk", e.g. "4x2".
  static GroupSpec parse(std::string_view text);

  const std::vector<int>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  std::size_t order() const noexcept { return order_; }
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<int> moduli_;
  std::size_t order_;
};

struct GroupElement {
  std::vector<int> coords;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// chi(x) = exp(2 pi i sum_j m_j x_j / n_j).
struct Character {
  std::vector<int> exponents;
  friend auto operator<=>(const Character&, const Character&) = default;
};

// Throws StructuralError unless x has one reduced coordinate per factor.
void validate(const GroupSpec& spec, const GroupElement& x);
void validate(const GroupSpec& spec, const Character& chi);

GroupElement identity(const GroupSpec& spec);
GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& spec, const GroupElement& a);
GroupElement sub(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);

// All elements, lexicographic in coords (first coordinate most significant).
std::vector<GroupElement> enumerate_elements(const GroupSpec& spec);

// Position of x in canonical order, and its inverse.
std::size_t index_of(const GroupSpec& spec, const GroupElement& x);
GroupElement element_at(const GroupSpec& spec, std::size_t index);

// Index-level group law used by the all-pairs loops. Both tables are |G| (or |G|^2) long.
struct IndexTables {
  std::size_t order = 0;
  std::vector<std::size_t> sum;  // sum[i * order + j] = index(x_i + x_j)
  std::vector<std::size_t> negation;

  std::size_t add(std::size_t i, std::size_t j) const { return sum[i * order + j]; }
  std::size_t sub(std::size_t i, std::size_t j) const { return sum[i * order + negation[j]]; }
  std::size_t neg(std::size_t i) const { return negation[i]; }
};
IndexTables index_tables(const GroupSpec& spec);

Character trivial_character(const GroupSpec& spec);
Complex char_eval(const GroupSpec& spec, const Character& chi, const GroupElement& x);
// chi evaluated on every element, canonical order.
ScalarTable char_table(const GroupSpec& spec, const Character& chi);
std::vector<Character> enumerate_dual(const GroupSpec& spec);

// Pointwise product and inverse in the dual group.
Character multiply(const GroupSpec& spec, const Character& a, const Character& b);
Character inverse(const GroupSpec& spec, const Character& a);
bool is_trivial(const Character& chi);

bool is_multiplicative_scalar(const GroupSpec& spec, const ScalarTable& f, double tol);

}  // namespace mucos
