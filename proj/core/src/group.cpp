#include "mucos/group.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "mucos/error.hpp"

namespace mucos {

namespace {

int reduce(long long value, int modulus) {
  long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

// exp(2 pi i k / period), exact on quarter turns.
Complex root_of_unity(long long k, long long period) {
  k %= period;
  if (k < 0) k += period;
  if ((4 * k) % period == 0) {
    switch ((4 * k) / period) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(period);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

GroupSpec::GroupSpec(std::vector<int> moduli) : moduli_(std::move(moduli)), order_(1) {
  if (moduli_.empty()) throw StructuralError("group needs at least one cyclic factor");
  for (int n : moduli_) {
    if (n < 1) throw StructuralError("cyclic factor order must be >= 1, got " + std::to_string(n));
    order_ *= static_cast<std::size_t>(n);
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<int> moduli;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find('x', start);
    const std::string_view token = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw StructuralError("malformed group string '" + std::string(text) + "'");
    }
    moduli.push_back(value);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return GroupSpec(std::move(moduli));
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (j) out += 'x';
    out += std::to_string(moduli_[j]);
  }
  return out;
}

void validate(const GroupSpec& spec, const GroupElement& x) {
  if (x.coords.size() != spec.rank()) {
    throw StructuralError("element has " + std::to_string(x.coords.size()) + " coordinates, group has " +
                          std::to_string(spec.rank()) + " factors");
  }
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    if (x.coords[j] < 0 || x.coords[j] >= spec.moduli()[j]) throw StructuralError("element coordinate out of range");
  }
}

void validate(const GroupSpec& spec, const Character& chi) {
  if (chi.exponents.size() != spec.rank()) {
    throw StructuralError("character has " + std::to_string(chi.exponents.size()) + " exponents, group has " +
                          std::to_string(spec.rank()) + " factors");
  }
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    if (chi.exponents[j] < 0 || chi.exponents[j] >= spec.moduli()[j]) {
      throw StructuralError("character exponent out of range");
    }
  }
}

GroupElement identity(const GroupSpec& spec) { return GroupElement{std::vector<int>(spec.rank(), 0)}; }

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  validate(spec, a);
  validate(spec, b);
  GroupElement out{std::vector<int>(spec.rank())};
  for (std::size_t j = 0; j < spec.rank(); ++j) out.coords[j] = reduce(a.coords[j] + b.coords[j], spec.moduli()[j]);
  return out;
}

GroupElement neg(const GroupSpec& spec, const GroupElement& a) {
  validate(spec, a);
  GroupElement out{std::vector<int>(spec.rank())};
  for (std::size_t j = 0; j < spec.rank(); ++j) out.coords[j] = reduce(-a.coords[j], spec.moduli()[j]);
  return out;
}

GroupElement sub(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  return add(spec, a, neg(spec, b));
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  out.reserve(spec.order());
  for (std::size_t i = 0; i < spec.order(); ++i) out.push_back(element_at(spec, i));
  return out;
}

std::size_t index_of(const GroupSpec& spec, const GroupElement& x) {
  validate(spec, x);
  std::size_t index = 0;
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    index = index * static_cast<std::size_t>(spec.moduli()[j]) + static_cast<std::size_t>(x.coords[j]);
  }
  return index;
}

GroupElement element_at(const GroupSpec& spec, std::size_t index) {
  if (index >= spec.order()) throw StructuralError("element index out of range");
  GroupElement out{std::vector<int>(spec.rank())};
  for (std::size_t j = spec.rank(); j-- > 0;) {
    const auto n = static_cast<std::size_t>(spec.moduli()[j]);
    out.coords[j] = static_cast<int>(index % n);
    index /= n;
  }
  return out;
}

IndexTables index_tables(const GroupSpec& spec) {
  const std::size_t order = spec.order();
  const auto elements = enumerate_elements(spec);
  IndexTables t;
  t.order = order;
  t.sum.resize(order * order);
  t.negation.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    t.negation[i] = index_of(spec, neg(spec, elements[i]));
    for (std::size_t j = 0; j < order; ++j) t.sum[i * order + j] = index_of(spec, add(spec, elements[i], elements[j]));
  }
  return t;
}

Character trivial_character(const GroupSpec& spec) { return Character{std::vector<int>(spec.rank(), 0)}; }

Complex char_eval(const GroupSpec& spec, const Character& chi, const GroupElement& x) {
  validate(spec, chi);
  validate(spec, x);
  long long period = 1;
  for (int n : spec.moduli()) period = std::lcm(period, static_cast<long long>(n));
  long long k = 0;
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    k += static_cast<long long>(chi.exponents[j]) * x.coords[j] * (period / spec.moduli()[j]);
    k %= period;
  }
  return root_of_unity(k, period);
}

ScalarTable char_table(const GroupSpec& spec, const Character& chi) {
  ScalarTable out;
  out.reserve(spec.order());
  for (const auto& x : enumerate_elements(spec)) out.push_back(char_eval(spec, chi, x));
  return out;
}

std::vector<Character> enumerate_dual(const GroupSpec& spec) {
  // The dual of a product of cyclic groups has the same shape; exponent tuples enumerate like elements.
  std::vector<Character> out;
  out.reserve(spec.order());
  for (auto& x : enumerate_elements(spec)) out.push_back(Character{std::move(x.coords)});
  return out;
}

Character multiply(const GroupSpec& spec, const Character& a, const Character& b) {
  validate(spec, a);
  validate(spec, b);
  Character out{std::vector<int>(spec.rank())};
  for (std::size_t j = 0; j < spec.rank(); ++j) out.exponents[j] = reduce(a.exponents[j] + b.exponents[j], spec.moduli()[j]);
  return out;
}

Character inverse(const GroupSpec& spec, const Character& a) {
  validate(spec, a);
  Character out{std::vector<int>(spec.rank())};
  for (std::size_t j = 0; j < spec.rank(); ++j) out.exponents[j] = reduce(-a.exponents[j], spec.moduli()[j]);
  return out;
}

bool is_trivial(const Character& chi) {
  for (int m : chi.exponents) {
    if (m != 0) return false;
  }
  return true;
}

bool is_multiplicative_scalar(const GroupSpec& spec, const ScalarTable& f, double tol) {
  if (f.size() != spec.order()) {
    throw StructuralError("scalar table has " + std::to_string(f.size()) + " entries, group order is " +
                          std::to_string(spec.order()));
  }
  if (std::abs(f[0] - 1.0) > tol) return false;
  const auto t = index_tables(spec);
  for (std::size_t i = 0; i < t.order; ++i) {
    for (std::size_t j = 0; j < t.order; ++j) {
      if (std::abs(f[t.add(i, j)] - f[i] * f[j]) > tol) return false;
    }
  }
  return true;
}

}  // namespace mucos
